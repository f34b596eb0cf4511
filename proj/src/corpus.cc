#include "xfer/corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "xfer/error.h"
#include "xfer/hash.h"
#include "xfer/identifier.h"

namespace xfer {
namespace {

const std::vector<std::string>& default_background() {
  static const std::vector<std::string> words = {
      "value",     "result",    "data",      "index",     "count",     "items",
      "key",       "name",      "status",    "options",   "context",   "handler",
      "callback",  "buffer",    "offset",    "length",    "target",    "source",
      "params",    "config",    "state",     "entry",     "node",      "parent",
      "children",  "path",      "query",     "response",  "request",   "error",
      "message",   "timestamp", "payload",   "headers",   "client",    "server",
      "manager",   "factory",   "builder",   "helper",    "provider",  "listener",
      "getValue",  "setValue",  "toString",  "isEmpty",   "getName",   "getId",
      "hasNext",   "addItem",   "removeItem", "findById", "loadAll",   "saveAll",
      "parseInput", "formatOutput", "initState", "resetState", "onChange", "onError",
      "maxSize",   "minSize",   "defaultValue", "userName", "itemCount", "totalCount",
      "startTime", "endTime",   "retryCount", "errorCode", "resultSet", "fileName",
      "get_value", "set_value", "to_string", "is_empty",  "get_name",  "get_id",
      "has_next",  "add_item",  "remove_item", "find_by_id", "load_all", "save_all",
      "max_size",  "min_size",  "user_name", "item_count", "start_time", "end_time",
  };
  return words;
}

std::string format_day(int day_index) {
  // Days are counted from 2021-03-01; the window never leaves March-April.
  int month = 3;
  int day = 1 + day_index;
  while (day > 31 && month == 3) {
    day -= 31;
    month = 4;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "2021-%02d-%02d", month, day);
  return buf;
}

std::size_t partial_count(std::string_view token) {
  return std::max<std::size_t>(1, partial_spans(token).size());
}

// Frequency-weighted pool of identifiers over all documents.
struct FrequencyPool {
  std::vector<std::string> words;
  std::vector<double> cumulative;

  const std::string& draw(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> u(0.0, cumulative.back());
    const double x = u(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    if (it == cumulative.end()) --it;
    return words[static_cast<std::size_t>(it - cumulative.begin())];
  }
};

FrequencyPool frequency_pool(const std::vector<LexedSource>& lexed, int limit) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const LexedSource& l : lexed) {
    for (const Token& t : l.tokens) {
      if (t.kind == TokenKind::kIdentifier) ++counts[t.text];
    }
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(limit)) ranked.resize(limit);
  FrequencyPool pool;
  double acc = 0.0;
  for (auto& [w, c] : ranked) {
    acc += static_cast<double>(c);
    pool.words.push_back(std::move(w));
    pool.cumulative.push_back(acc);
  }
  return pool;
}

void check_role_fit(const SourceDocument& doc, DatasetRole role, Language language) {
  if (doc.language != language) {
    throw InvalidArgument("document '" + doc.path + "' is language " +
                          language_name(doc.language) + ", dataset wants " +
                          language_name(language));
  }
  Origin want = Origin::kCommit;
  switch (role) {
    case DatasetRole::kIde: want = Origin::kIdeSnapshot; break;
    case DatasetRole::kCommit: want = Origin::kCommit; break;
    case DatasetRole::kAutocompletion: want = Origin::kAcceptanceLog; break;
    case DatasetRole::kAll:
      throw InvalidArgument("role=all is built with union_all from autocompletion and ide datasets");
  }
  if (doc.origin != want) {
    throw InvalidArgument("document '" + doc.path + "' has origin " +
                          std::string(origin_name(doc.origin)) + ", which cannot feed a " +
                          std::string(role_name(role)) + " dataset");
  }
}

}  // namespace

std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::kIdeSnapshot: return "ide_snapshot";
    case Origin::kCommit: return "commit";
    case Origin::kAcceptanceLog: return "acceptance_log";
  }
  return "commit";
}

Origin parse_origin(std::string_view name) {
  if (name == "ide_snapshot") return Origin::kIdeSnapshot;
  if (name == "commit") return Origin::kCommit;
  if (name == "acceptance_log") return Origin::kAcceptanceLog;
  throw InvalidArgument("unknown origin: '" + std::string(name) + "'");
}

std::string_view role_name(DatasetRole role) {
  switch (role) {
    case DatasetRole::kAutocompletion: return "autocompletion";
    case DatasetRole::kIde: return "ide";
    case DatasetRole::kCommit: return "commit";
    case DatasetRole::kAll: return "all";
  }
  return "ide";
}

DatasetRole parse_role(std::string_view name) {
  if (name == "autocompletion") return DatasetRole::kAutocompletion;
  if (name == "ide") return DatasetRole::kIde;
  if (name == "commit") return DatasetRole::kCommit;
  if (name == "all") return DatasetRole::kAll;
  throw InvalidArgument("unknown dataset role: '" + std::string(name) + "'");
}

void validate_document(const SourceDocument& doc) {
  if (doc.cursor_offset && *doc.cursor_offset > doc.content.size()) {
    throw InvalidArgument("document '" + doc.path + "': cursor offset " +
                          std::to_string(*doc.cursor_offset) + " beyond content length " +
                          std::to_string(doc.content.size()));
  }
}

LexedSource lex(const SourceDocument& doc) {
  validate_document(doc);
  try {
    return lex(doc.content, doc.language);
  } catch (const LexError& e) {
    throw LexError(doc.path + ": " + e.what());
  }
}

void validate_event(const CompletionEvent& event) {
  if (event.context_tokens.empty()) {
    throw InvalidArgument("event " + event.id + ": empty context");
  }
  if (event.candidates.empty()) {
    throw InvalidArgument("event " + event.id + ": empty candidate list");
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& c : event.candidates) {
    if (!seen.insert(c).second) {
      throw InvalidArgument("event " + event.id + ": duplicate candidate '" + c + "'");
    }
  }
  if (!seen.contains(event.accepted)) {
    throw InvalidArgument("event " + event.id + ": accepted '" + event.accepted +
                          "' is not among the candidates");
  }
  if (!is_identifier(event.accepted, event.language)) {
    throw InvalidArgument("event " + event.id + ": accepted '" + event.accepted +
                          "' is not an identifier");
  }
}

const std::string& item_id(const DatasetItem& item) {
  return std::visit([](const auto& x) -> const std::string& { return x.id; }, item);
}

Language item_language(const DatasetItem& item) {
  return std::visit([](const auto& x) { return x.language; }, item);
}

std::size_t Dataset::event_count() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) {
    return std::holds_alternative<CompletionEvent>(i);
  }));
}

EventPolicy EventPolicy::for_language(Language language) {
  EventPolicy p;
  p.candidate_mean = language == Language::kA ? 99.5 : 26.3;
  return p;
}

bool is_eligible_site(const std::vector<Token>& tokens, std::size_t index, Language language) {
  if (index >= tokens.size() || tokens[index].kind != TokenKind::kIdentifier) return false;
  if (index == 0) return true;
  const Token& prev = tokens[index - 1];
  return !(prev.kind == TokenKind::kKeyword &&
           language_spec(language).declaration_keywords.contains(prev.text));
}

std::vector<CompletionEvent> synthesize_events(std::span<const SourceDocument> documents,
                                               const EventPolicy& policy,
                                               std::uint64_t seed) {
  std::vector<const SourceDocument*> docs;
  for (const SourceDocument& d : documents) docs.push_back(&d);
  std::stable_sort(docs.begin(), docs.end(),
                   [](const auto* a, const auto* b) { return a->path < b->path; });

  std::vector<LexedSource> lexed;
  lexed.reserve(docs.size());
  for (const SourceDocument* d : docs) lexed.push_back(lex(*d));
  const FrequencyPool pool = frequency_pool(lexed, policy.frequent_pool_size);
  const std::vector<std::string>& background =
      policy.background_identifiers.empty() ? default_background() : policy.background_identifiers;

  std::vector<CompletionEvent> events;
  for (std::size_t di = 0; di < docs.size(); ++di) {
    const SourceDocument& doc = *docs[di];
    const std::vector<Token>& tokens = lexed[di].tokens;
    const LanguageSpec& spec = language_spec(doc.language);

    // Sites, weighted by acceptance propensity.
    std::vector<std::size_t> sites;
    std::vector<double> weights;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!is_eligible_site(tokens, i, doc.language)) continue;
      const bool member = std::find(spec.member_operators.begin(), spec.member_operators.end(),
                                    tokens[i - 1].text) != spec.member_operators.end();
      double w = std::pow(static_cast<double>(partial_count(tokens[i].text)),
                          policy.length_exponent);
      if (member) w *= policy.member_site_boost;
      sites.push_back(i);
      weights.push_back(w);
    }
    if (sites.empty()) continue;

    std::mt19937_64 rng(keyed_hash(seed, doc.path));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Weighted sampling without replacement (exponential keys).
    std::vector<std::pair<double, std::size_t>> keys;
    keys.reserve(sites.size());
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const double u = std::max(unit(rng), 1e-300);
      keys.emplace_back(std::log(u) / weights[s], s);
    }
    const std::size_t take =
        std::min<std::size_t>(sites.size(), static_cast<std::size_t>(policy.max_events_per_document));
    std::partial_sort(keys.begin(), keys.begin() + take, keys.end(),
                      [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first : a.second < b.second;
                      });
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < take; ++k) chosen.push_back(sites[keys[k].second]);
    std::sort(chosen.begin(), chosen.end());

    std::vector<std::string> file_idents;
    {
      std::set<std::string> uniq;
      for (const Token& t : tokens) {
        if (t.kind == TokenKind::kIdentifier) uniq.insert(t.text);
      }
      file_idents.assign(uniq.begin(), uniq.end());
    }
    std::vector<std::size_t> offsets(tokens.size());
    {
      std::size_t off = 0;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        off += tokens[i].leading.size();
        offsets[i] = off;
        off += tokens[i].text.size();
      }
    }
    const std::uint64_t path_hash = fnv1a(doc.path);
    const std::string developer = [&] {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "dev-%03d",
                    static_cast<int>(path_hash % static_cast<std::uint64_t>(policy.developers)));
      return std::string(buf);
    }();

    for (std::size_t site : chosen) {
      CompletionEvent ev;
      ev.id = doc.path + ":" + std::to_string(offsets[site]);
      ev.language = doc.language;
      const std::size_t ctx_begin =
          site > static_cast<std::size_t>(policy.max_context_tokens)
              ? site - static_cast<std::size_t>(policy.max_context_tokens)
              : 0;
      for (std::size_t i = ctx_begin; i < site; ++i) ev.context_tokens.push_back(tokens[i].text);
      ev.accepted = tokens[site].text;
      ev.developer_id = developer;
      ev.day = format_day(static_cast<int>(splitmix64(path_hash ^ offsets[site]) %
                                           static_cast<std::uint64_t>(policy.days)));

      int size;
      if (policy.fixed_size) {
        size = *policy.fixed_size;
      } else {
        std::poisson_distribution<int> poisson(policy.candidate_mean);
        size = std::clamp(poisson(rng), policy.min_candidates, policy.max_candidates);
      }
      const int distractors = std::max(0, size - 1);
      const int same_target = static_cast<int>(std::lround(distractors * policy.same_file_share));

      std::unordered_set<std::string> taken = {ev.accepted};
      std::vector<std::string> cands = {ev.accepted};
      std::vector<std::string> local;
      for (const std::string& w : file_idents) {
        if (w != ev.accepted) local.push_back(w);
      }
      std::shuffle(local.begin(), local.end(), rng);
      for (const std::string& w : local) {
        if (static_cast<int>(cands.size()) - 1 >= same_target) break;
        if (taken.insert(w).second) cands.push_back(w);
      }
      int attempts = 0;
      const int max_attempts = 20 * std::max(1, distractors);
      while (static_cast<int>(cands.size()) - 1 < distractors && !pool.words.empty() &&
             attempts++ < max_attempts) {
        const std::string& w = pool.draw(rng);
        if (taken.insert(w).second) cands.push_back(w);
      }
      // Pools exhausted: top up from the remaining file identifiers, then the
      // background lexicon.
      for (const std::string& w : local) {
        if (static_cast<int>(cands.size()) - 1 >= distractors) break;
        if (taken.insert(w).second) cands.push_back(w);
      }
      for (const std::string& w : background) {
        if (static_cast<int>(cands.size()) - 1 >= distractors) break;
        if (is_identifier(w, doc.language) && taken.insert(w).second) cands.push_back(w);
      }
      std::shuffle(cands.begin(), cands.end(), rng);
      ev.candidates = std::move(cands);
      events.push_back(std::move(ev));
    }
  }
  return events;
}

Dataset build_dataset(std::span<const SourceDocument> documents, DatasetRole role,
                      Language language, const EventPolicy& policy, std::uint64_t seed) {
  for (const SourceDocument& d : documents) check_role_fit(d, role, language);
  if (role == DatasetRole::kAutocompletion) {
    return build_dataset(synthesize_events(documents, policy, seed), language);
  }
  Dataset ds;
  ds.role = role;
  ds.language_mix = {language};
  std::vector<const SourceDocument*> docs;
  for (const SourceDocument& d : documents) docs.push_back(&d);
  std::stable_sort(docs.begin(), docs.end(),
                   [](const auto* a, const auto* b) { return a->path < b->path; });
  for (const SourceDocument* d : docs) {
    SourceDocument view = *d;
    if (role == DatasetRole::kIde) {
      // The before-cursor fragment is what the decoder can see while authoring.
      view.content.resize(d->cursor_offset.value_or(d->content.size()));
    }
    TokenSequence seq;
    seq.id = d->path;
    seq.language = language;
    seq.tokens = lex(view).tokens;
    for (Token& t : seq.tokens) t.leading.clear();
    ds.items.emplace_back(std::move(seq));
  }
  return ds;
}

Dataset build_dataset(std::vector<CompletionEvent> events, Language language) {
  Dataset ds;
  ds.role = DatasetRole::kAutocompletion;
  ds.language_mix = {language};
  for (CompletionEvent& e : events) {
    if (e.language != language) {
      throw InvalidArgument("event " + e.id + " is language " + language_name(e.language));
    }
    validate_event(e);
    ds.items.emplace_back(std::move(e));
  }
  return ds;
}

Dataset union_all(const Dataset& autocompletion, const Dataset& ide) {
  if (autocompletion.role != DatasetRole::kAutocompletion || ide.role != DatasetRole::kIde) {
    throw InvalidArgument("union_all expects (autocompletion, ide), got (" +
                          std::string(role_name(autocompletion.role)) + ", " +
                          std::string(role_name(ide.role)) + ")");
  }
  Dataset ds;
  ds.role = DatasetRole::kAll;
  ds.language_mix = autocompletion.language_mix;
  ds.language_mix.insert(ide.language_mix.begin(), ide.language_mix.end());
  ds.items = autocompletion.items;
  ds.items.insert(ds.items.end(), ide.items.begin(), ide.items.end());
  return ds;
}

Dataset merge_datasets(std::span<const Dataset> parts, DatasetRole role) {
  Dataset ds;
  ds.role = role;
  for (const Dataset& p : parts) {
    ds.language_mix.insert(p.language_mix.begin(), p.language_mix.end());
    ds.items.insert(ds.items.end(), p.items.begin(), p.items.end());
  }
  return ds;
}

std::vector<Token> tag_language(const std::vector<Token>& sequence, Language language) {
  if (!sequence.empty() && sequence.front().kind == TokenKind::kControl) {
    throw InvalidArgument("sequence is already tagged with " + sequence.front().text);
  }
  std::vector<Token> out;
  out.reserve(sequence.size() + 1);
  out.push_back(Token{TokenKind::kControl, control_token(language), ""});
  out.insert(out.end(), sequence.begin(), sequence.end());
  return out;
}

namespace {

// Item indices ordered by keyed hash of their id (ties by position).
std::vector<std::size_t> hash_order(const Dataset& dataset, std::uint64_t seed) {
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(dataset.items.size());
  for (std::size_t i = 0; i < dataset.items.size(); ++i) {
    keyed.emplace_back(keyed_hash(seed, item_id(dataset.items[i])), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> order;
  order.reserve(keyed.size());
  for (const auto& k : keyed) order.push_back(k.second);
  return order;
}

Dataset with_items(const Dataset& like, const std::vector<bool>& keep, bool value, Split split) {
  Dataset out;
  out.role = like.role;
  out.language_mix = like.language_mix;
  out.split = split;
  for (std::size_t i = 0; i < like.items.size(); ++i) {
    if (keep[i] == value) out.items.push_back(like.items[i]);
  }
  return out;
}

}  // namespace

std::pair<Dataset, Dataset> split_holdout(const Dataset& dataset, double fraction,
                                          std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InvalidArgument("split fraction must lie in (0, 1)");
  }
  if (dataset.items.empty()) throw InvalidArgument("cannot split an empty dataset");
  const std::size_t n = dataset.items.size();
  const auto held = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  const std::vector<std::size_t> order = hash_order(dataset, seed ^ 0x5b1e7d0a11c3f00dULL);
  std::vector<bool> heldout(n, false);
  for (std::size_t k = 0; k < held; ++k) heldout[order[k]] = true;
  return {with_items(dataset, heldout, false, Split::kTrain),
          with_items(dataset, heldout, true, Split::kHeldout)};
}

Dataset subsample(const Dataset& dataset, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("subsample fraction must lie in (0, 1]");
  }
  const std::size_t n = dataset.items.size();
  const auto keep_n = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  const std::vector<std::size_t> order = hash_order(dataset, seed ^ 0x9d2c5680a2b4f1e7ULL);
  std::vector<bool> keep(n, false);
  for (std::size_t k = 0; k < keep_n; ++k) keep[order[k]] = true;
  return with_items(dataset, keep, true, dataset.split);
}

// --- Files -----------------------------------------------------------------

nlohmann::json event_to_json(const CompletionEvent& e) {
  return nlohmann::json{{"id", e.id},
                        {"language", language_name(e.language)},
                        {"context_tokens", e.context_tokens},
                        {"candidates", e.candidates},
                        {"accepted", e.accepted},
                        {"developer_id", e.developer_id},
                        {"day", e.day}};
}

CompletionEvent event_from_json(const nlohmann::json& j) {
  try {
    CompletionEvent e;
    e.id = j.at("id").get<std::string>();
    e.language = parse_language(j.at("language").get<std::string>());
    e.context_tokens = j.at("context_tokens").get<std::vector<std::string>>();
    e.candidates = j.at("candidates").get<std::vector<std::string>>();
    e.accepted = j.at("accepted").get<std::string>();
    e.developer_id = j.at("developer_id").get<std::string>();
    e.day = j.at("day").get<std::string>();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed completion event: ") + ex.what());
  }
}

nlohmann::json item_to_json(const DatasetItem& item, DatasetRole role) {
  if (const auto* e = std::get_if<CompletionEvent>(&item)) return event_to_json(*e);
  const auto& s = std::get<TokenSequence>(item);
  DatasetRole seq_role = role == DatasetRole::kAll ? DatasetRole::kIde : role;
  return nlohmann::json{{"id", s.id},
                        {"language", language_name(s.language)},
                        {"role", role_name(seq_role)},
                        {"tokens", token_texts(s.tokens)}};
}

DatasetItem item_from_json(const nlohmann::json& j) {
  if (j.contains("candidates")) return event_from_json(j);
  try {
    TokenSequence s;
    s.id = j.at("id").get<std::string>();
    s.language = parse_language(j.at("language").get<std::string>());
    s.tokens = tokens_from_texts(j.at("tokens").get<std::vector<std::string>>(), s.language);
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed sequence item: ") + ex.what());
  }
}

void write_jsonl(const Dataset& dataset, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const DatasetItem& item : dataset.items) {
    out << item_to_json(item, dataset.role).dump() << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

namespace {

std::vector<nlohmann::json> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<nlohmann::json> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) break;  // interrupted append
    ++line_no;
    const std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return out;
}

}  // namespace

Dataset read_jsonl(const std::filesystem::path& path) {
  Dataset ds;
  bool has_events = false;
  std::set<DatasetRole> seq_roles;
  for (const nlohmann::json& j : read_lines(path)) {
    DatasetItem item = item_from_json(j);
    if (std::holds_alternative<CompletionEvent>(item)) {
      has_events = true;
    } else {
      seq_roles.insert(parse_role(j.value("role", std::string("ide"))));
    }
    ds.language_mix.insert(item_language(item));
    ds.items.push_back(std::move(item));
  }
  if (has_events) {
    ds.role = seq_roles.empty() ? DatasetRole::kAutocompletion : DatasetRole::kAll;
  } else if (seq_roles.size() == 1) {
    ds.role = *seq_roles.begin();
  } else {
    ds.role = seq_roles.empty() ? DatasetRole::kIde : DatasetRole::kAll;
  }
  return ds;
}

std::vector<CompletionEvent> read_events(const std::filesystem::path& path) {
  std::vector<CompletionEvent> events;
  for (const nlohmann::json& j : read_lines(path)) events.push_back(event_from_json(j));
  return events;
}

std::vector<SourceDocument> load_tree(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw Error("not a directory: " + root.string());
  std::map<std::string, nlohmann::json> manifest;
  const fs::path manifest_path = root / "manifest.jsonl";
  if (fs::exists(manifest_path)) {
    for (nlohmann::json& j : read_lines(manifest_path)) {
      std::string key = j.at("path").get<std::string>();
      manifest[std::move(key)] = std::move(j);
    }
  }
  std::vector<SourceDocument> docs;
  for (const fs::directory_entry& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto language = language_for_extension(entry.path().extension().string());
    if (!language) continue;
    SourceDocument doc;
    doc.path = fs::relative(entry.path(), root).generic_string();
    doc.language = *language;
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    doc.content = buf.str();
    if (auto it = manifest.find(doc.path); it != manifest.end()) {
      const nlohmann::json& m = it->second;
      doc.origin = parse_origin(m.at("origin").get<std::string>());
      if (m.contains("language")) doc.language = parse_language(m["language"].get<std::string>());
      if (m.contains("cursor_offset")) doc.cursor_offset = m["cursor_offset"].get<std::size_t>();
    } else {
      doc.origin = Origin::kCommit;
      for (const auto& part : fs::path(doc.path)) {
        if (part == "ide") doc.origin = Origin::kIdeSnapshot;
        if (part == "accept") doc.origin = Origin::kAcceptanceLog;
      }
    }
    if (doc.origin == Origin::kIdeSnapshot && !doc.cursor_offset) {
      doc.cursor_offset = doc.content.size();
    }
    validate_document(doc);
    docs.push_back(std::move(doc));
  }
  std::sort(docs.begin(), docs.end(),
            [](const SourceDocument& a, const SourceDocument& b) { return a.path < b.path; });
  return docs;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("XFER_DATA_DIR"); env && *env) return env;
  return "data";
}

}  // namespace xfer
