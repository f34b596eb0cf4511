#include "xfer/eval.h"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>

#include "xfer/error.h"
#include "xfer/hash.h"
#include "xfer/ranker.h"

namespace xfer {

nlohmann::json Metrics::to_json() const {
  return {{"n", n}, {"top1", top1}, {"top3", top3}, {"mrr3", mrr3}, {"unscorable", unscorable}};
}

Metrics Metrics::from_json(const nlohmann::json& j) {
  Metrics m;
  m.n = j.at("n").get<std::size_t>();
  m.top1 = j.at("top1").get<double>();
  m.top3 = j.at("top3").get<double>();
  m.mrr3 = j.at("mrr3").get<double>();
  m.unscorable = j.value("unscorable", std::size_t{0});
  return m;
}

namespace {

void check_ranks(std::span<const std::optional<int>> ranks, int k) {
  if (ranks.empty()) throw InvalidArgument("no events to score");
  if (k < 1) throw InvalidArgument("k must be at least 1");
  for (const auto& r : ranks) {
    if (r && *r < 1) throw InvalidArgument("ranks are 1-based; got " + std::to_string(*r));
  }
}

}  // namespace

double mrr_at_k(std::span<const std::optional<int>> ranks, int k) {
  check_ranks(ranks, k);
  double total = 0;
  for (const auto& r : ranks) {
    if (r && *r <= k) total += 1.0 / *r;
  }
  return total / static_cast<double>(ranks.size());
}

double top_k_accuracy(std::span<const std::optional<int>> ranks, int k) {
  check_ranks(ranks, k);
  std::size_t hits = 0;
  for (const auto& r : ranks) hits += r && *r <= k;
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

Metrics metrics_from_ranks(std::span<const std::optional<int>> ranks, std::size_t unscorable) {
  Metrics m;
  m.n = ranks.size();
  m.top1 = top_k_accuracy(ranks, 1);
  m.top3 = top_k_accuracy(ranks, 3);
  m.mrr3 = mrr_at_k(ranks, 3);
  m.unscorable = unscorable;
  return m;
}

template <typename T>
Evaluation evaluate(const Transformer<T>& model, const Vocabulary& vocab, const Dataset& heldout) {
  if (model.config().vocab_size != vocab.size()) {
    throw InvalidArgument("model vocabulary size " + std::to_string(model.config().vocab_size) +
                          " does not match the vocabulary (" + std::to_string(vocab.size()) + ")");
  }
  Evaluation out;
  std::vector<std::optional<int>> ranks;
  std::size_t unscorable = 0;
  for (const DatasetItem& item : heldout.items) {
    const auto* ev = std::get_if<CompletionEvent>(&item);
    if (!ev) continue;
    const std::vector<Token> context = tokens_from_texts(ev->context_tokens, ev->language);
    const RankedSuggestions ranked =
        rank_candidates<T>(model, vocab, ev->language, context, ev->candidates);
    EventRank er;
    er.event_id = ev->id;
    er.rank = ranked.rank_of(ev->accepted);
    er.candidates = ev->candidates.size();
    if (!er.rank) ++unscorable;
    ranks.push_back(er.rank);
    out.ranks.push_back(std::move(er));
  }
  if (ranks.empty()) throw InvalidArgument("held-out dataset contains no completion events");
  out.metrics = metrics_from_ranks(ranks, unscorable);
  return out;
}

template Evaluation evaluate<float>(const Transformer<float>&, const Vocabulary&, const Dataset&);
template Evaluation evaluate<double>(const Transformer<double>&, const Vocabulary&, const Dataset&);

namespace {

// Event ids are path:offset; quote them in case a path contains a comma.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

void write_audit_csv(const std::vector<EventRank>& ranks, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << "event_id,rank,candidates\n";
  for (const EventRank& r : ranks) {
    out << csv_field(r.event_id) << ',' << (r.rank ? std::to_string(*r.rank) : "") << ','
        << r.candidates << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

std::vector<EventRank> read_audit_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line != "event_id,rank,candidates") throw FormatError(path.string() + ": bad header");
  std::vector<EventRank> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != 3) throw FormatError(path.string() + ": bad row '" + line + "'");
    EventRank r;
    r.event_id = f[0];
    if (!f[1].empty()) r.rank = std::stoi(f[1]);
    r.candidates = std::stoul(f[2]);
    out.push_back(std::move(r));
  }
  return out;
}

// --- A/B ---------------------------------------------------------------------

nlohmann::json ABResult::to_json() const {
  return {{"mean_control", mean_control},
          {"mean_experiment", mean_experiment},
          {"std_control", std_control},
          {"std_experiment", std_experiment},
          {"n_control", n_control},
          {"n_experiment", n_experiment},
          {"unique_developers", {unique_developers_control, unique_developers_experiment}},
          {"improvement", improvement},
          {"t_statistic", t_statistic},
          {"degrees_of_freedom", degrees_of_freedom},
          {"p_value", p_value}};
}

void validate_observations(std::span<const ABObservation> observations) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const ABObservation& o : observations) {
    if (o.completions_accepted < 0) {
      throw InvalidArgument("negative completion count for " + o.developer_id + " on " + o.day);
    }
    if (!seen.emplace(o.developer_id, o.day).second) {
      throw InvalidArgument("duplicate observation for " + o.developer_id + " on " + o.day);
    }
  }
}

double improvement_ratio(double mean_control, double mean_experiment) {
  if (mean_control == 0) throw InvalidArgument("improvement is undefined for a zero control mean");
  return (mean_experiment - mean_control) / mean_control;
}

ABResult welch_test(std::span<const double> control, std::span<const double> experiment) {
  if (control.size() < 2 || experiment.size() < 2) {
    throw InvalidArgument("Welch's test needs at least two observations per group");
  }
  auto moments = [](std::span<const double> xs) {
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::pair{mean, ss / static_cast<double>(xs.size() - 1)};
  };
  const auto [mc, vc] = moments(control);
  const auto [me, ve] = moments(experiment);
  ABResult r;
  r.n_control = control.size();
  r.n_experiment = experiment.size();
  r.mean_control = mc;
  r.mean_experiment = me;
  r.std_control = std::sqrt(vc);
  r.std_experiment = std::sqrt(ve);
  r.improvement = mc != 0 ? improvement_ratio(mc, me) : 0.0;
  const double ac = vc / static_cast<double>(r.n_control);
  const double ae = ve / static_cast<double>(r.n_experiment);
  const double se2 = ac + ae;
  if (se2 == 0) {
    r.t_statistic = me == mc ? 0.0 : std::copysign(INFINITY, me - mc);
    r.degrees_of_freedom = static_cast<double>(r.n_control + r.n_experiment - 2);
    r.p_value = me == mc ? 1.0 : 0.0;
    return r;
  }
  r.t_statistic = (me - mc) / std::sqrt(se2);
  r.degrees_of_freedom =
      se2 * se2 /
      (ac * ac / static_cast<double>(r.n_control - 1) + ae * ae / static_cast<double>(r.n_experiment - 1));
  const boost::math::students_t dist(r.degrees_of_freedom);
  r.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t_statistic))));
  return r;
}

ABResult ab_compare(std::span<const ABObservation> control,
                    std::span<const ABObservation> experiment) {
  if (control.empty() || experiment.empty()) {
    throw InvalidArgument("ab_compare: both groups need observations");
  }
  validate_observations(control);
  validate_observations(experiment);
  std::vector<double> c, e;
  std::set<std::string> dc, de;
  for (const auto& o : control) {
    c.push_back(static_cast<double>(o.completions_accepted));
    dc.insert(o.developer_id);
  }
  for (const auto& o : experiment) {
    e.push_back(static_cast<double>(o.completions_accepted));
    de.insert(o.developer_id);
  }
  ABResult r = welch_test(c, e);
  r.unique_developers_control = dc.size();
  r.unique_developers_experiment = de.size();
  return r;
}

bool significance_gate(double p_value, double level) {
  if (!(level > 0 && level < 1)) throw InvalidArgument("significance level must lie in (0, 1)");
  // Tolerate representation error in 1 - level (1 - 0.95 is not exactly 0.05).
  return p_value <= (1.0 - level) + 1e-12;
}

bool significance_gate(const ABResult& result, double level) {
  return significance_gate(result.p_value, level);
}

void write_observations(std::span<const ABObservation> observations,
                        const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  for (const auto& o : observations) {
    out << nlohmann::json{{"developer_id", o.developer_id},
                          {"day", o.day},
                          {"completions_accepted", o.completions_accepted}}
               .dump()
        << '\n';
  }
}

std::vector<ABObservation> read_observations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<ABObservation> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back({j.at("developer_id").get<std::string>(), j.at("day").get<std::string>(),
                     j.at("completions_accepted").get<std::int64_t>()});
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

ABLogs simulate_ab(const ABSimulation& sim) {
  if (sim.developers_per_group < 1 || sim.days < 1 || sim.base_rate <= 0 || sim.rate_cv <= 0) {
    throw InvalidArgument("simulation needs positive developers, days, base rate and rate cv");
  }
  const double shape = 1.0 / (sim.rate_cv * sim.rate_cv);
  const double scale = sim.base_rate / shape;
  ABLogs logs;
  for (int group = 0; group < 2; ++group) {
    std::mt19937_64 rng(derive_seed(sim.seed, static_cast<std::uint64_t>(group)));
    std::gamma_distribution<double> rate_dist(shape, scale);
    const double factor = group == 1 ? 1.0 + sim.uplift : 1.0;
    auto& out = group == 0 ? logs.control : logs.experiment;
    for (int d = 0; d < sim.developers_per_group; ++d) {
      const double rate = rate_dist(rng) * factor;
      const std::string dev = (group == 0 ? "c" : "e") + std::to_string(d);
      for (int day = 0; day < sim.days; ++day) {
        std::poisson_distribution<std::int64_t> counts(std::max(rate, 1e-9));
        out.push_back({dev, "day-" + std::to_string(day), counts(rng)});
      }
    }
  }
  return logs;
}

}  // namespace xfer
