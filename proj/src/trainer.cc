#include "xfer/trainer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "xfer/error.h"
#include "xfer/hash.h"
#include "xfer/tokenizer.h"

namespace xfer {

double default_learning_rate(PhaseKind kind) {
  return kind == PhaseKind::kPretrain ? kPretrainLearningRate : kFinetuneLearningRate;
}

std::size_t ExampleSet::target_count() const {
  std::size_t n = 0;
  for (const Example& e : examples) {
    for (int t : e.targets) n += t >= 0;
  }
  return n;
}

std::vector<Example> sequence_windows(const TokenSequence& sequence, const Vocabulary& vocab,
                                      int context_len) {
  std::span<const Token> tokens(sequence.tokens);
  if (!tokens.empty() && tokens.front().kind == TokenKind::kControl) tokens = tokens.subspan(1);
  const int ctrl = vocab.control_id(sequence.language);
  std::vector<Example> out;
  std::size_t begin = 0;
  while (begin < tokens.size()) {
    // [ctrl] + ids must fit in context_len + 1 so inputs fit in context_len.
    int width = 1;
    std::size_t end = begin;
    while (end < tokens.size()) {
      const int w = tokens[end].kind == TokenKind::kIdentifier ? 2 : 1;
      if (width + w > context_len + 1) break;
      width += w;
      ++end;
    }
    if (end == begin) break;  // context_len < 2 cannot hold any identifier
    const EncodedSequence enc = encode_sequence(tokens.subspan(begin, end - begin), vocab);
    std::vector<int> full{ctrl};
    full.insert(full.end(), enc.ids.begin(), enc.ids.end());
    Example ex;
    ex.ids.assign(full.begin(), full.end() - 1);
    ex.targets.assign(full.begin() + 1, full.end());
    out.push_back(std::move(ex));
    begin = end;
  }
  return out;
}

std::string_view event_loss_name(EventLoss loss) {
  return loss == EventLoss::kSequence ? "sequence" : "accepted";
}

EventLoss parse_event_loss(std::string_view name) {
  if (name == "sequence") return EventLoss::kSequence;
  if (name == "accepted") return EventLoss::kAcceptedToken;
  throw InvalidArgument("unknown event loss: " + std::string(name));
}

std::optional<Example> completion_example(const CompletionEvent& event, const Vocabulary& vocab,
                                          int context_len, EventLoss event_loss) {
  const std::vector<Token> context = tokens_from_texts(event.context_tokens, event.language);
  EncodedContext ctx = encode_context(context, event.language, vocab, context_len - 1);
  const std::array<int, 2> accepted = encode_identifier(event.accepted, vocab, ctx.copies);
  if (accepted[0] == vocab.unk_id() || accepted[1] == vocab.unk_id()) return std::nullopt;
  Example ex;
  ex.ids = ctx.ids;
  ex.ids.push_back(accepted[0]);
  ex.targets.assign(ex.ids.size(), -1);
  if (event_loss == EventLoss::kSequence) {
    std::copy(ex.ids.begin() + 1, ex.ids.end(), ex.targets.begin());
  }
  ex.targets[ex.ids.size() - 2] = accepted[0];
  ex.targets[ex.ids.size() - 1] = accepted[1];
  return ex;
}

ExampleSet make_examples(const Dataset& dataset, const Vocabulary& vocab, int context_len,
                         EventLoss event_loss) {
  ExampleSet set;
  for (const DatasetItem& item : dataset.items) {
    if (const auto* seq = std::get_if<TokenSequence>(&item)) {
      for (Example& e : sequence_windows(*seq, vocab, context_len)) {
        set.examples.push_back(std::move(e));
      }
    } else {
      auto ex = completion_example(std::get<CompletionEvent>(item), vocab, context_len, event_loss);
      if (ex) {
        set.examples.push_back(std::move(*ex));
      } else {
        ++set.skipped;
      }
    }
  }
  return set;
}

EarlyStopper::EarlyStopper(int patience, double min_delta)
    : patience_(patience), min_delta_(min_delta) {
  if (patience < 1) throw InvalidArgument("patience must be at least 1");
  if (min_delta < 0) throw InvalidArgument("min_delta must be non-negative");
}

bool EarlyStopper::update(int epoch, double loss) {
  if (loss < reference_ - min_delta_) {
    reference_ = loss;
    wait_ = 0;
  } else {
    ++wait_;
  }
  if (loss < best_loss_) {
    best_loss_ = loss;
    best_epoch_ = epoch;
    return true;
  }
  return false;
}

double TrainPhase::effective_learning_rate() const {
  return learning_rate.value_or(default_learning_rate(kind));
}

void TrainPhase::validate() const {
  if (!dataset) throw InvalidArgument("training phase has no dataset");
  if (!(effective_learning_rate() > 0)) throw InvalidArgument("learning rate must be positive");
  if (max_epochs < 1) throw InvalidArgument("max_epochs must be at least 1");
  if (patience < 1) throw InvalidArgument("patience must be at least 1");
  if (min_delta < 0) throw InvalidArgument("min_delta must be non-negative");
  if (batch_size < 1) throw InvalidArgument("batch_size must be at least 1");
  if (!(clip_norm > 0)) throw InvalidArgument("clip_norm must be positive");
}

double heldout_loss(const Transformer<float>& model, const ExampleSet& examples) {
  double total = 0;
  std::size_t count = 0;
  for (const Example& e : examples.examples) {
    int n = 0;
    total += model.loss_sum(e.ids, e.targets, n);
    count += static_cast<std::size_t>(n);
  }
  if (count == 0) throw InvalidArgument("no held-out targets");
  return total / static_cast<double>(count);
}

PhaseResult train_phase(const ModelCheckpoint& start, const TrainPhase& phase,
                        const EpochCallback& on_epoch) {
  phase.validate();
  if (phase.vocab_fingerprint && *phase.vocab_fingerprint != start.vocab.fingerprint()) {
    throw InvalidArgument("phase was prepared for a different vocabulary than the checkpoint");
  }
  if (start.config.vocab_size != start.vocab.size()) {
    throw InvalidArgument("checkpoint model has " + std::to_string(start.config.vocab_size) +
                          " embeddings for a vocabulary of " + std::to_string(start.vocab.size()));
  }
  if (phase.dataset->items.empty()) throw InvalidArgument("training dataset is empty");

  Dataset train_items;
  Dataset valid_items;
  if (phase.validation) {
    train_items = *phase.dataset;
    valid_items = *phase.validation;
  } else if (phase.dataset->items.size() >= 2) {
    std::tie(train_items, valid_items) = split_holdout(*phase.dataset, 0.10, phase.seed);
    if (valid_items.items.empty()) {
      // Fewer than five items: validate on the training data itself.
      valid_items = train_items;
    }
  } else {
    train_items = *phase.dataset;
    valid_items = *phase.dataset;
  }

  const int context_len = start.config.context_len;
  const ExampleSet train = make_examples(train_items, start.vocab, context_len, phase.event_loss);
  const ExampleSet valid = make_examples(valid_items, start.vocab, context_len, phase.event_loss);
  if (train.examples.empty()) throw InvalidArgument("training dataset yields no examples");
  if (valid.examples.empty()) throw InvalidArgument("validation dataset yields no examples");

  const double lr = phase.effective_learning_rate();
  Transformer<float> model = start.model();
  Parameters<float> grads(start.config);
  Adam<float> adam(model.params());
  EarlyStopper stopper(phase.patience, phase.min_delta);
  Parameters<float> best = model.params();

  PhaseReport report;
  report.train_examples = train.examples.size();
  report.heldout_examples = valid.examples.size();
  report.skipped = train.skipped + valid.skipped;

  std::vector<std::size_t> order(train.examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::uint64_t step = 0;
  for (int epoch = 1; epoch <= phase.max_epochs; ++epoch) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 shuffle_rng(derive_seed(phase.seed, static_cast<std::uint64_t>(epoch)));
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    double epoch_loss = 0;
    std::size_t epoch_count = 0;
    // The last batch may be short; every example is seen once per epoch.
    for (std::size_t b = 0; b < order.size(); b += static_cast<std::size_t>(phase.batch_size)) {
      const std::size_t e = std::min(order.size(), b + static_cast<std::size_t>(phase.batch_size));
      std::size_t batch_targets = 0;
      for (std::size_t k = b; k < e; ++k) {
        for (int t : train.examples[order[k]].targets) batch_targets += t >= 0;
      }
      grads.set_zero();
      const float scale = 1.0f / static_cast<float>(batch_targets);
      for (std::size_t k = b; k < e; ++k) {
        const Example& ex = train.examples[order[k]];
        int n = 0;
        const ForwardOptions opt{Mode::kTrain, derive_seed(phase.seed ^ 0xd1b54a32d192ed03ULL,
                                                           step * 4096 + (k - b))};
        epoch_loss += model.accumulate_gradients(ex.ids, ex.targets, scale, grads, n, opt);
      }
      epoch_count += batch_targets;
      clip_global_norm(grads, phase.clip_norm);
      adam.step(model.mutable_params(), grads, lr);
      ++step;
    }
    EpochLog log;
    log.epoch = epoch;
    log.train_loss = epoch_loss / static_cast<double>(epoch_count);
    log.heldout_loss = heldout_loss(model, valid);
    log.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.epochs.push_back(log);
    if (on_epoch) on_epoch(log);
    if (stopper.update(epoch, log.heldout_loss)) best = model.params();
    if (stopper.should_stop()) {
      report.early_stopped = epoch < phase.max_epochs;
      break;
    }
  }
  report.best_epoch = stopper.best_epoch();
  report.best_heldout_loss = stopper.best_loss();

  PhaseResult result{start, report};
  result.checkpoint.params = std::move(best);
  ProvenanceEntry p;
  p.phase = phase.kind;
  p.role = phase.dataset->role;
  p.languages.assign(phase.dataset->language_mix.begin(), phase.dataset->language_mix.end());
  p.examples = train.examples.size();
  p.epochs = static_cast<int>(report.epochs.size());
  p.best_epoch = report.best_epoch;
  p.learning_rate = lr;
  p.heldout_loss = report.best_heldout_loss;
  p.seed = phase.seed;
  p.event_loss = event_loss_name(phase.event_loss);
  result.checkpoint.provenance.push_back(p);
  return result;
}

// --- Experiment matrix -------------------------------------------------------

const Dataset& ExperimentData::by_role(DatasetRole role) const {
  switch (role) {
    case DatasetRole::kCommit: return commit;
    case DatasetRole::kIde: return ide;
    case DatasetRole::kAutocompletion: return autocompletion;
    case DatasetRole::kAll: return all;
  }
  throw InvalidArgument("unknown dataset role");
}

namespace {

// Holds out round(fraction * files) acceptance-log files, ranked by keyed hash
// of their path, and every event drawn from them.
std::pair<Dataset, Dataset> split_by_source(const Dataset& events,
                                            const std::vector<SourceDocument>& docs,
                                            double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InvalidArgument("split fraction must lie in (0, 1)");
  }
  std::vector<std::pair<std::uint64_t, std::string>> keyed;
  for (const auto& d : docs) keyed.emplace_back(keyed_hash(seed ^ 0x3c6ef372fe94f82bULL, d.path), d.path);
  std::sort(keyed.begin(), keyed.end());
  const auto held = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(keyed.size())));
  std::set<std::string> held_paths;
  for (std::size_t k = 0; k < held; ++k) held_paths.insert(keyed[k].second);
  Dataset train, test;
  for (Dataset* out : {&train, &test}) {
    out->role = events.role;
    out->language_mix = events.language_mix;
  }
  train.split = Split::kTrain;
  test.split = Split::kHeldout;
  for (const auto& item : events.items) {
    const auto& ev = std::get<CompletionEvent>(item);
    const std::string path = ev.id.substr(0, ev.id.rfind(':'));
    (held_paths.count(path) ? test : train).items.push_back(item);
  }
  if (train.items.empty() || test.items.empty()) {
    throw InvalidArgument("document split leaves an empty side; add acceptance-log files");
  }
  return {std::move(train), std::move(test)};
}

}  // namespace

ExperimentData prepare_experiment_data(const std::vector<SourceDocument>& documents,
                                       Language language, const DataOptions& options) {
  auto where = [&](Origin origin) {
    std::vector<SourceDocument> out;
    for (const auto& d : documents) {
      if (d.language == language && d.origin == origin) out.push_back(d);
    }
    return out;
  };
  ExperimentData data;
  data.language = language;
  const auto commit_docs = where(Origin::kCommit);
  const auto ide_docs = where(Origin::kIdeSnapshot);
  const auto accept_docs = where(Origin::kAcceptanceLog);
  if (accept_docs.empty()) {
    throw InvalidArgument("no acceptance-log documents for language " + language_name(language));
  }
  data.commit = build_dataset(commit_docs, DatasetRole::kCommit, language);
  data.ide = build_dataset(ide_docs, DatasetRole::kIde, language);
  const Dataset events = build_dataset(accept_docs, DatasetRole::kAutocompletion, language,
                                       EventPolicy::for_language(language), options.seed);
  auto [train, test] = options.split_by_document
                           ? split_by_source(events, accept_docs, options.test_fraction, options.seed)
                           : split_holdout(events, options.test_fraction, options.seed);
  if (options.finetune_events > 0 && options.finetune_events < train.items.size()) {
    train = subsample(train, static_cast<double>(options.finetune_events) /
                                 static_cast<double>(train.items.size()),
                      options.seed);
  }
  data.autocompletion = std::move(train);
  data.test = std::move(test);
  data.all = union_all(data.autocompletion, data.ide);
  const std::vector<Dataset> corpora{data.commit, data.ide, data.autocompletion};
  data.vocab = build_vocab(corpora, options.vocab_cutoff);
  return data;
}

namespace {

const std::vector<std::vector<DatasetRole>>& matrix_rows() {
  using R = DatasetRole;
  static const std::vector<std::vector<DatasetRole>> rows{
      {R::kCommit},
      {R::kAll},
      {R::kAutocompletion},
      {R::kCommit, R::kAll},
      {R::kCommit, R::kAutocompletion},
      {R::kAll, R::kAutocompletion},
      {R::kCommit, R::kAll, R::kAutocompletion},
  };
  return rows;
}

std::string row_name(const std::vector<DatasetRole>& roles) {
  std::string s;
  for (DatasetRole r : roles) {
    if (!s.empty()) s += ">";
    s += role_name(r);
  }
  return s;
}

template <typename V>
void set_optional(nlohmann::json& j, const char* key, const std::optional<V>& v) {
  if (v) j[key] = *v;
}

template <typename V>
std::optional<V> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<V>();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (id < 1 || id > 7) throw InvalidArgument("experiment id must be 1..7, got " + std::to_string(id));
  if (phases.empty()) throw InvalidArgument("experiment has no phases");
  std::vector<DatasetRole> roles;
  for (const auto& p : phases) roles.push_back(p.role);
  if (roles != matrix_rows()[static_cast<std::size_t>(id - 1)]) {
    throw InvalidArgument("experiment " + std::to_string(id) + " phases '" + row_name(roles) +
                          "' do not match the matrix row '" +
                          row_name(matrix_rows()[static_cast<std::size_t>(id - 1)]) + "'");
  }
  if (max_epochs < 1 || patience < 1 || batch_size < 1 || min_delta < 0) {
    throw InvalidArgument("experiment training settings out of range");
  }
}

ExperimentConfig ExperimentConfig::matrix_row(int id) {
  if (id < 1 || id > 7) throw InvalidArgument("experiment id must be 1..7, got " + std::to_string(id));
  ExperimentConfig c;
  c.id = id;
  const auto& roles = matrix_rows()[static_cast<std::size_t>(id - 1)];
  c.name = row_name(roles);
  for (DatasetRole r : roles) c.phases.push_back({r, std::nullopt});
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["name"] = name;
  nlohmann::json ph = nlohmann::json::array();
  for (const auto& p : phases) {
    nlohmann::json pj{{"dataset", role_name(p.role)}};
    set_optional(pj, "learning_rate", p.learning_rate);
    ph.push_back(pj);
  }
  j["phases"] = ph;
  j["model"] = model.to_json();
  j["language"] = language_name(language);
  j["seed"] = seed;
  set_optional(j, "pretrain_learning_rate", pretrain_learning_rate);
  set_optional(j, "finetune_learning_rate", finetune_learning_rate);
  j["max_epochs"] = max_epochs;
  j["patience"] = patience;
  j["min_delta"] = min_delta;
  j["batch_size"] = batch_size;
  j["event_loss"] = event_loss_name(event_loss);
  j["finetune_events"] = finetune_events;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.id = j.at("id").get<int>();
    c.name = j.value("name", std::string{});
    for (const auto& p : j.at("phases")) {
      c.phases.push_back({parse_role(p.at("dataset").get<std::string>()),
                          get_optional<double>(p, "learning_rate")});
    }
    if (j.contains("model")) {
      nlohmann::json m = j.at("model");
      if (!m.contains("vocab_size")) m["vocab_size"] = 0;
      c.model = ModelConfig::from_json(m);
    }
    c.language = parse_language(j.value("language", std::string("A")));
    c.seed = j.value("seed", std::uint64_t{0});
    c.pretrain_learning_rate = get_optional<double>(j, "pretrain_learning_rate");
    c.finetune_learning_rate = get_optional<double>(j, "finetune_learning_rate");
    c.max_epochs = j.value("max_epochs", 20);
    c.patience = j.value("patience", 3);
    c.min_delta = j.value("min_delta", 1e-3);
    c.batch_size = j.value("batch_size", 16);
    c.event_loss = parse_event_loss(j.value("event_loss", std::string("sequence")));
    c.finetune_events = j.value("finetune_events", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad experiment config: ") + e.what());
  }
  if (c.name.empty()) {
    std::vector<DatasetRole> roles;
    for (const auto& p : c.phases) roles.push_back(p.role);
    c.name = row_name(roles);
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<TrainPhase> phases_for(const ExperimentConfig& config, const ExperimentData& data) {
  config.validate();
  std::vector<TrainPhase> out;
  for (std::size_t i = 0; i < config.phases.size(); ++i) {
    const PhaseSpec& spec = config.phases[i];
    TrainPhase p;
    p.dataset = std::make_shared<const Dataset>(data.by_role(spec.role));
    p.kind = i == 0 ? PhaseKind::kPretrain : PhaseKind::kFinetune;
    p.learning_rate = spec.learning_rate;
    if (!p.learning_rate) {
      p.learning_rate = i == 0 ? config.pretrain_learning_rate : config.finetune_learning_rate;
    }
    p.max_epochs = config.max_epochs;
    p.patience = config.patience;
    p.min_delta = config.min_delta;
    p.batch_size = config.batch_size;
    p.seed = derive_seed(config.seed, i);
    p.vocab_fingerprint = data.vocab.fingerprint();
    p.event_loss = config.event_loss;
    out.push_back(std::move(p));
  }
  return out;
}

void append_jsonl(const std::filesystem::path& path, const nlohmann::json& row) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open " + path.string() + " for appending");
  out << row.dump() << '\n';
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

RunResult run_config(const ExperimentConfig& config, const ExperimentData& data,
                     const std::optional<std::filesystem::path>& out_dir,
                     const EpochCallback& on_epoch) {
  const std::vector<TrainPhase> phases = phases_for(config, data);
  ModelConfig mc = config.model;
  mc.seed = config.seed;
  RunResult result;
  result.checkpoint = ModelCheckpoint::fresh(mc, data.vocab);
  const std::string stem = "exp" + std::to_string(config.id) + "-seed" + std::to_string(config.seed);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    PhaseResult pr = train_phase(result.checkpoint, phases[i], on_epoch);
    result.checkpoint = std::move(pr.checkpoint);
    result.phases.push_back(std::move(pr.report));
    if (out_dir) {
      result.checkpoint.save(*out_dir / (stem + "-phase" + std::to_string(i + 1) + ".ckpt"));
    }
  }
  result.metrics = evaluate(result.checkpoint.model(), data.vocab, data.test).metrics;

  nlohmann::json row;
  row["config"] = config.id;
  row["name"] = config.name;
  row["seed"] = config.seed;
  row["language"] = language_name(config.language);
  nlohmann::json ph = nlohmann::json::array();
  for (std::size_t i = 0; i < phases.size(); ++i) {
    ph.push_back({{"dataset", role_name(phases[i].dataset->role)},
                  {"epochs", result.phases[i].epochs.size()},
                  {"best_epoch", result.phases[i].best_epoch},
                  {"learning_rate", phases[i].effective_learning_rate()},
                  {"heldout_loss", result.phases[i].best_heldout_loss},
                  {"examples", result.phases[i].train_examples}});
  }
  row["phases"] = ph;
  row["top1"] = result.metrics.top1;
  row["top3"] = result.metrics.top3;
  row["mrr3"] = result.metrics.mrr3;
  row["n"] = result.metrics.n;
  row["unscorable"] = result.metrics.unscorable;
  validate_result_row(row);
  result.row = row;
  if (out_dir) append_jsonl(*out_dir / "results.jsonl", row);
  return result;
}

void validate_result_row(const nlohmann::json& row) {
  auto need = [&](const nlohmann::json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key) || !pred(obj.at(key))) {
      throw FormatError(std::string("result row: '") + key + "' must be " + what);
    }
  };
  auto is_int = [](const nlohmann::json& v) { return v.is_number_integer(); };
  auto is_ratio = [](const nlohmann::json& v) {
    return v.is_number() && v.get<double>() >= 0 && v.get<double>() <= 1;
  };
  auto is_number = [](const nlohmann::json& v) { return v.is_number(); };
  auto is_string = [](const nlohmann::json& v) { return v.is_string(); };
  need(row, "config", [](const auto& v) { return v.is_number_integer() && v.template get<int>() >= 1 && v.template get<int>() <= 7; },
       "an integer 1..7");
  need(row, "name", is_string, "a string");
  need(row, "seed", is_int, "an integer");
  need(row, "top1", is_ratio, "a ratio");
  need(row, "top3", is_ratio, "a ratio");
  need(row, "mrr3", is_ratio, "a ratio");
  need(row, "n", is_int, "an integer");
  need(row, "phases", [](const auto& v) { return v.is_array() && !v.empty(); }, "a non-empty array");
  for (const auto& p : row.at("phases")) {
    need(p, "dataset", is_string, "a string");
    need(p, "epochs", is_int, "an integer");
    need(p, "learning_rate", is_number, "a number");
  }
}

// --- Sweeps --------------------------------------------------------------------

std::vector<SweepRow> summarize_sweep(const std::vector<SweepPoint>& points) {
  std::map<double, std::vector<const SweepPoint*>> by_fraction;
  for (const auto& p : points) by_fraction[p.fraction].push_back(&p);
  std::vector<SweepRow> rows;
  for (const auto& [fraction, ps] : by_fraction) {
    SweepRow r;
    r.fraction = fraction;
    const double n = static_cast<double>(ps.size());
    double ex = 0;
    for (const auto* p : ps) {
      r.pretrained_mean += p->pretrained.top1 / n;
      r.scratch_mean += p->scratch.top1 / n;
      ex += static_cast<double>(p->examples) / n;
    }
    r.examples = static_cast<std::size_t>(std::llround(ex));
    if (ps.size() > 1) {
      double vp = 0, vs = 0;
      for (const auto* p : ps) {
        vp += (p->pretrained.top1 - r.pretrained_mean) * (p->pretrained.top1 - r.pretrained_mean);
        vs += (p->scratch.top1 - r.scratch_mean) * (p->scratch.top1 - r.scratch_mean);
      }
      r.pretrained_std = std::sqrt(vp / (n - 1));
      r.scratch_std = std::sqrt(vs / (n - 1));
    }
    rows.push_back(r);
  }
  return rows;
}

SweepResult sweep_finetune_size(const ModelCheckpoint& base, const Dataset& finetune,
                                const Dataset& test, const SweepOptions& options,
                                const std::function<void(const SweepPoint&)>& on_point) {
  if (options.fractions.empty()) throw InvalidArgument("sweep needs at least one fraction");
  if (options.seeds.empty()) throw InvalidArgument("sweep needs at least one seed");
  for (double f : options.fractions) {
    if (!(f > 0 && f <= 1)) throw InvalidArgument("sweep fractions must lie in (0, 1]");
  }
  std::vector<double> fractions = options.fractions;
  std::sort(fractions.begin(), fractions.end());
  fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());

  SweepResult result;
  for (double f : fractions) {
    for (std::uint64_t seed : options.seeds) {
      auto subset = std::make_shared<const Dataset>(subsample(finetune, f, seed));
      if (subset->items.empty()) {
        std::ostringstream w;
        w << "fraction " << f << " selects no examples for seed " << seed << "; skipped";
        result.warnings.push_back(w.str());
        continue;
      }
      SweepPoint point;
      point.fraction = f;
      point.seed = seed;
      point.examples = subset->items.size();

      TrainPhase tuned = options.phase;
      tuned.dataset = subset;
      tuned.kind = PhaseKind::kFinetune;
      tuned.seed = derive_seed(seed, 1);
      const PhaseResult pre = train_phase(base, tuned);
      point.pretrained = evaluate(pre.checkpoint.model(), base.vocab, test).metrics;

      ModelConfig mc = base.config;
      mc.seed = seed;
      TrainPhase scratch = options.phase;
      scratch.dataset = subset;
      scratch.kind = PhaseKind::kPretrain;
      scratch.learning_rate = options.scratch_learning_rate.value_or(kPretrainLearningRate);
      scratch.seed = derive_seed(seed, 2);
      const PhaseResult fresh = train_phase(ModelCheckpoint::fresh(mc, base.vocab), scratch);
      point.scratch = evaluate(fresh.checkpoint.model(), base.vocab, test).metrics;

      if (on_point) on_point(point);
      result.points.push_back(point);
    }
  }
  result.rows = summarize_sweep(result.points);
  return result;
}

nlohmann::json sweep_point_to_json(const SweepPoint& point) {
  return {{"fraction", point.fraction},
          {"seed", point.seed},
          {"examples", point.examples},
          {"pretrained", point.pretrained.to_json()},
          {"scratch", point.scratch.to_json()}};
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << "fraction,examples,pretrained_mean,pretrained_std,scratch_mean,scratch_std\n";
  for (const auto& r : rows) {
    out << r.fraction << ',' << r.examples << ',' << r.pretrained_mean << ',' << r.pretrained_std
        << ',' << r.scratch_mean << ',' << r.scratch_std << '\n';
  }
}

void write_sweep_svg(const std::vector<SweepRow>& rows, const std::string& title,
                     const std::filesystem::path& path) {
  if (rows.empty()) throw InvalidArgument("nothing to plot");
  constexpr double kW = 640, kH = 400, kL = 60, kR = 20, kT = 40, kB = 50;
  double ymax = 0.05;
  for (const auto& r : rows) ymax = std::max({ymax, r.pretrained_mean, r.scratch_mean});
  ymax = std::min(1.0, std::ceil(ymax * 10 + 0.5) / 10);
  // Log-scaled fraction axis when the sweep spans more than a decade.
  const double fmin = rows.front().fraction, fmax = rows.back().fraction;
  const bool log_x = fmax / fmin > 10;
  auto x = [&](double f) {
    if (fmax == fmin) return kL + (kW - kL - kR) / 2;
    const double u = log_x ? std::log(f / fmin) / std::log(fmax / fmin) : (f - fmin) / (fmax - fmin);
    return kL + u * (kW - kL - kR);
  };
  auto y = [&](double v) { return kH - kB - v / ymax * (kH - kT - kB); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
    << "</text>\n";
  s << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR << "\" y2=\"" << kH - kB
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kH - kB
    << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = ymax * i / 5;
    s << "<text x=\"" << kL - 6 << "\" y=\"" << y(v) + 4 << "\" text-anchor=\"end\">" << std::lround(v * 100)
      << "%</text>\n";
  }
  for (const auto& r : rows) {
    s << "<text x=\"" << x(r.fraction) << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\">"
      << r.fraction * 100 << "%</text>\n";
  }
  s << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 10
    << "\" text-anchor=\"middle\">fine-tuning fraction</text>\n";
  s << "<text x=\"16\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 16 " << kH / 2
    << ")\" text-anchor=\"middle\">top-1 accuracy</text>\n";
  auto series = [&](auto value, const char* colour, const char* label, int slot) {
    s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (const auto& r : rows) s << x(r.fraction) << ',' << y(value(r)) << ' ';
    s << "\"/>\n";
    for (const auto& r : rows) {
      s << "<circle cx=\"" << x(r.fraction) << "\" cy=\"" << y(value(r)) << "\" r=\"3\" fill=\""
        << colour << "\"/>\n";
    }
    s << "<text x=\"" << kL + 10 << "\" y=\"" << kT + 14 * slot << "\" fill=\"" << colour << "\">"
      << label << "</text>\n";
  };
  series([](const SweepRow& r) { return r.pretrained_mean; }, "#1f77b4", "pretrained", 1);
  series([](const SweepRow& r) { return r.scratch_mean; }, "#d62728", "scratch", 2);
  s << "</svg>\n";

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << s.str();
}

}  // namespace xfer
