// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// fails. `--only a,b` restricts the run; `--list` prints the names.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.h"
#include "test_util.h"
#include "xfer/eval.h"
#include "xfer/hash.h"
#include "xfer/ranker.h"
#include "xfer/service.h"
#include "xfer/tokenizer.h"
#include "xfer/trainer.h"

using namespace xfer;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void log(const std::string& s) { std::cerr << "  " << s << std::endl; }

// Every Metrics produced during the run, for the ordering property.
std::vector<Metrics>& all_metrics() {
  static std::vector<Metrics> m;
  return m;
}

Metrics record(Metrics m) {
  all_metrics().push_back(m);
  return m;
}

ExperimentConfig experiment_template() {
  return ExperimentConfig::load(std::filesystem::path(XFER_SOURCE_DIR) / "configs" / "exp6.json");
}

ModelCheckpoint fresh_model(const Vocabulary& vocab, std::uint64_t seed) {
  ModelConfig c = experiment_template().model;
  c.seed = seed;
  return ModelCheckpoint::fresh(c, vocab);
}

TrainPhase phase_on(const Dataset& ds, PhaseKind kind, std::uint64_t seed) {
  const ExperimentConfig t = experiment_template();
  TrainPhase p;
  p.dataset = std::make_shared<const Dataset>(ds);
  p.kind = kind;
  p.max_epochs = t.max_epochs;
  p.patience = t.patience;
  p.min_delta = t.min_delta;
  p.batch_size = t.batch_size;
  p.seed = seed;
  p.learning_rate = kind == PhaseKind::kPretrain ? kPretrainLearningRate
                                                 : t.finetune_learning_rate.value_or(kFinetuneLearningRate);
  return p;
}

PhaseResult train_logged(const std::string& label, const ModelCheckpoint& start, const TrainPhase& p) {
  const auto t0 = Clock::now();
  PhaseResult r = train_phase(start, p);
  log(fmt("%s: %zu examples, %zu epochs, best %d, heldout loss %.4f, %.0f s", label.c_str(),
          r.report.train_examples, r.report.epochs.size(), r.report.best_epoch,
          r.report.best_heldout_loss, seconds_since(t0)));
  return r;
}

Metrics score(const std::string& label, const ModelCheckpoint& ck, const Dataset& test) {
  const Metrics m = record(evaluate(ck.model(), ck.vocab, test).metrics);
  log(fmt("%s: top1 %.4f top3 %.4f mrr3 %.4f (n=%zu)", label.c_str(), m.top1, m.top3, m.mrr3, m.n));
  return m;
}

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// --- Criteria ----------------------------------------------------------------

Outcome tokenizer_exactness() {
  const auto& docs = xfer::testing::sample_documents();
  std::vector<Dataset> parts;
  for (Language lang : {Language::kA, Language::kB}) {
    std::vector<SourceDocument> commit;
    for (const auto& d : docs) {
      if (d.language == lang && d.origin == Origin::kCommit) commit.push_back(d);
    }
    parts.push_back(build_dataset(commit, DatasetRole::kCommit, lang));
  }
  const Vocabulary vocab = build_vocab(parts);

  std::size_t identifiers = 0, two_ids = 0, tokens = 0, round_trip = 0;
  auto check = [&](const std::vector<Token>& seq) {
    const EncodedSequence enc = encode_sequence(seq, vocab);
    std::size_t expect = 0;
    for (const Token& t : seq) {
      if (t.kind == TokenKind::kIdentifier) ++identifiers;
      expect += t.kind == TokenKind::kIdentifier ? 2 : 1;
    }
    const auto decoded = decode(enc, vocab);
    tokens += seq.size();
    if (enc.ids.size() == expect) two_ids += seq.size();
    for (std::size_t i = 0; i < seq.size() && i < decoded.size(); ++i) {
      round_trip += decoded[i] == seq[i].text;
    }
  };
  for (const auto& d : docs) check(lex(d.content, d.language).tokens);

  std::mt19937_64 rng(2024);
  std::vector<Token> synthetic;
  std::size_t synthetic_ids = 0;
  while (synthetic_ids < 10000) {
    const std::string s = xfer::testing::random_identifier(rng);
    if (!is_identifier(s, Language::kB)) continue;
    synthetic.push_back(ident(s));
    ++synthetic_ids;
    if (synthetic.size() == 50) {
      check(synthetic);
      synthetic.clear();
    }
  }
  if (!synthetic.empty()) check(synthetic);

  std::unordered_map<std::string, std::int64_t> counts{{"fooBar", 5}, {"BazQuux", 5}, {"length", 5}};
  const Vocabulary small = Vocabulary::from_counts(counts, 1);
  const Bigram worked = bigram_encode("fooBarBazQuux", small);
  const Bigram whole = bigram_encode("length", small);
  const bool examples = worked.first == "fooBar" && worked.second == "BazQuux" &&
                        whole.first == "length" && whole.second == "</t>";

  const bool pass = docs.size() >= 200 && two_ids == tokens && round_trip == tokens && examples;
  return {pass, fmt("%zu files, %zu tokens (%zu identifiers incl. 10000 synthetic); "
                    "2-id rule %zu/%zu, round trip %zu/%zu, worked examples %s",
                    docs.size(), tokens, identifiers, two_ids, tokens, round_trip, tokens,
                    examples ? "ok" : "wrong")};
}

Outcome gradient_correctness() {
  ModelConfig c = oracle::tiny_config();
  c.d_model = 16;
  c.n_layers = 2;
  double worst = 0;
  std::string worst_name;
  std::size_t groups = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& r : oracle::check_gradients(c, seed)) {
      ++groups;
      if (r.relative_error >= worst) {
        worst = r.relative_error;
        worst_name = r.tensor;
      }
    }
  }
  return {worst < 1e-4, fmt("%zu tensor checks over 3 seeds, max relative error %.2e (%s)", groups,
                            worst, worst_name.c_str())};
}

Outcome ranker_oracle() {
  const auto& docs = xfer::testing::sample_documents();
  std::mt19937_64 rng(99);
  std::size_t instances = 0, ordered = 0, candidates_total = 0;
  double worst = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const Language lang = inst % 2 ? Language::kA : Language::kB;
    std::vector<const SourceDocument*> pool;
    for (const auto& d : docs) {
      if (d.language == lang) pool.push_back(&d);
    }
    const SourceDocument& doc = *pool[rng() % pool.size()];
    const auto tokens = lex(doc.content, lang).tokens;
    Dataset ds;
    ds.language_mix = {lang};
    ds.items.push_back(TokenSequence{doc.path, lang, tokens});
    const Vocabulary vocab = build_vocab(std::span(&ds, 1), 2);

    ModelConfig c = oracle::tiny_config();
    c.vocab_size = vocab.size();
    c.context_len = 48;
    c.seed = rng();
    Parameters<double> params = Parameters<double>::initialized(c);
    std::normal_distribution<double> noise(0.0, 0.3);
    for (std::size_t i = 0; i < params.count(); ++i) {
      auto& t = params.tensor(i);
      for (Eigen::Index k = 0; k < t.size(); ++k) t.data()[k] += noise(rng);
    }
    const Transformer<double> model(c, params);

    const std::size_t start = rng() % (tokens.size() / 2);
    const std::size_t len = 5 + rng() % 15;
    const std::vector<Token> context(tokens.begin() + static_cast<long>(start),
                                     tokens.begin() + static_cast<long>(std::min(tokens.size(), start + len)));
    std::set<std::string> names;
    for (const Token& t : tokens) {
      if (t.kind == TokenKind::kIdentifier) names.insert(t.text);
    }
    std::vector<std::string> all(names.begin(), names.end());
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 1 + rng() % 100));
    candidates_total += all.size();

    const auto tree = rank_candidates<double>(model, vocab, lang, context, all);
    const auto brute = oracle::brute_force_rank(model, vocab, lang, context, all);
    ++instances;
    bool same = tree.items.size() == brute.size();
    for (std::size_t i = 0; same && i < brute.size(); ++i) {
      same = tree.items[i].candidate == brute[i].candidate;
      worst = std::max(worst, std::abs(tree.items[i].score - brute[i].score));
    }
    ordered += same;
  }
  return {ordered == instances && worst <= 1e-6,
          fmt("%zu instances (%zu candidates), identical order %zu/%zu, max |diff| %.2e", instances,
              candidates_total, ordered, instances, worst)};
}

Outcome metric_oracle() {
  std::mt19937_64 rng(5);
  std::size_t exact = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 50);
    std::vector<std::optional<int>> ranks;
    std::vector<int> raw;
    for (int j = 0; j < n; ++j) {
      const int r = static_cast<int>(rng() % 7);
      raw.push_back(r);
      ranks.push_back(r == 0 ? std::nullopt : std::optional<int>(r));
    }
    const int k = 1 + static_cast<int>(rng() % 5);
    exact += mrr_at_k(ranks, k) == oracle::naive_mrr(raw, k);
    record(metrics_from_ranks(ranks));
  }
  const std::vector<std::optional<int>> example{1, 2, std::nullopt};
  const bool example_ok = mrr_at_k(example, 3) == 0.5;
  // Evaluations from the other criteria are checked again at the end of the run.
  std::size_t ordered = 0;
  for (const Metrics& m : all_metrics()) ordered += m.top1 <= m.mrr3 && m.mrr3 <= m.top3;
  return {exact == 1000 && example_ok && ordered == all_metrics().size(),
          fmt("exact matches %zu/1000, [1,2,none] -> %.4f, ordering %zu/%zu", exact,
              mrr_at_k(example, 3), ordered, all_metrics().size())};
}

Outcome task_transfer() {
  const auto& docs = xfer::testing::sample_documents();
  DataOptions opt;
  opt.finetune_events = 1000;
  const ExperimentData data = prepare_experiment_data(docs, Language::kA, opt);
  log(fmt("vocab %d, ide %zu sequences, %zu fine-tuning events, %zu test events", data.vocab.size(),
          data.ide.size(), data.autocompletion.size(), data.test.size()));
  std::vector<double> ft_only, pre_only, pre_ft;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const ModelCheckpoint fresh = fresh_model(data.vocab, seed);
    const auto a = train_logged(fmt("seed %d fine-tune only", int(seed)), fresh,
                                phase_on(data.autocompletion, PhaseKind::kPretrain, derive_seed(seed, 0)));
    ft_only.push_back(score("  fine-tune only", a.checkpoint, data.test).top1);
    const auto b = train_logged(fmt("seed %d pretrain on ide", int(seed)), fresh,
                                phase_on(data.ide, PhaseKind::kPretrain, derive_seed(seed, 0)));
    pre_only.push_back(score("  pretrain only", b.checkpoint, data.test).top1);
    const auto c = train_logged(fmt("seed %d fine-tune", int(seed)), b.checkpoint,
                                phase_on(data.autocompletion, PhaseKind::kFinetune, derive_seed(seed, 1)));
    pre_ft.push_back(score("  pretrain + fine-tune", c.checkpoint, data.test).top1);
  }
  const double both = mean(pre_ft), ft = mean(ft_only), pre = mean(pre_only);
  return {both - ft >= 0.02 && both - pre >= 0.02,
          fmt("mean top1 over 3 seeds: pretrain+fine-tune %.4f, fine-tune only %.4f (+%.2f pts), "
              "pretrain only %.4f (+%.2f pts)",
              both, ft, 100 * (both - ft), pre, 100 * (both - pre))};
}

SweepOptions sweep_options(std::vector<double> fractions) {
  SweepOptions o;
  o.fractions = std::move(fractions);
  o.seeds = {0, 1, 2};
  o.phase = phase_on(Dataset{}, PhaseKind::kFinetune, 0);
  o.phase.dataset.reset();
  return o;
}

void log_point(const SweepPoint& p) {
  log(fmt("fraction %.2f seed %d (%zu examples): pretrained %.4f, scratch %.4f", p.fraction,
          int(p.seed), p.examples, p.pretrained.top1, p.scratch.top1));
}

void log_sweep(const SweepResult& r) {
  for (const auto& p : r.points) {
    record(p.pretrained);
    record(p.scratch);
  }
  for (const auto& row : r.rows) {
    log(fmt("fraction %.2f (%zu examples): pretrained %.4f +- %.4f, scratch %.4f +- %.4f, gap %.2f pts",
            row.fraction, row.examples, row.pretrained_mean, row.pretrained_std, row.scratch_mean,
            row.scratch_std, 100 * row.gap()));
  }
  for (const auto& w : r.warnings) log("warning: " + w);
}

Outcome finetune_size() {
  const auto& docs = xfer::testing::sample_documents();
  const ExperimentData data = prepare_experiment_data(docs, Language::kA, {});
  log(fmt("vocab %d, commit %zu sequences, %zu fine-tuning events, %zu test events",
          data.vocab.size(), data.commit.size(), data.autocompletion.size(), data.test.size()));
  const auto base = train_logged("pretrain on commit", fresh_model(data.vocab, 0),
                                 phase_on(data.commit, PhaseKind::kPretrain, derive_seed(0, 0)));
  const SweepResult r = sweep_finetune_size(base.checkpoint, data.autocompletion, data.test,
                                            sweep_options({0.01, 0.10, 1.0}), log_point);
  log_sweep(r);
  if (r.rows.size() != 3) return {false, "sweep produced " + std::to_string(r.rows.size()) + " rows"};
  const double g1 = r.rows.front().gap(), g100 = r.rows.back().gap();
  return {g1 > g100 && g1 >= 0.05,
          fmt("top-1 gap pretrained vs scratch: %.2f pts at 1%%, %.2f pts at 10%%, %.2f pts at 100%%",
              100 * g1, 100 * r.rows[1].gap(), 100 * g100)};
}

Outcome cross_language() {
  const auto& docs = xfer::testing::sample_documents();
  DataOptions opt;
  opt.finetune_events = 2000;
  const ExperimentData a = prepare_experiment_data(docs, Language::kA, opt);
  const ExperimentData b = prepare_experiment_data(docs, Language::kB, {});
  const Vocabulary vocab = Vocabulary::union_of(a.vocab, b.vocab);
  log(fmt("union vocab %d; A all %zu items; B %zu fine-tuning events, %zu test events", vocab.size(),
          a.all.size(), b.autocompletion.size(), b.test.size()));
  const auto base = train_logged("pretrain on A", fresh_model(vocab, 0),
                                 phase_on(a.all, PhaseKind::kPretrain, derive_seed(0, 0)));
  score("  A-pretrained, no B data", base.checkpoint, b.test);
  const SweepResult r =
      sweep_finetune_size(base.checkpoint, b.autocompletion, b.test, sweep_options({0.10, 0.20}), log_point);
  log_sweep(r);
  if (r.rows.size() != 2) return {false, "sweep produced " + std::to_string(r.rows.size()) + " rows"};
  const SweepRow& f = r.rows[0];
  const SweepRow& f2 = r.rows[1];
  return {f.gap() >= 0.05 && f.pretrained_mean >= f2.scratch_mean - 0.01,
          fmt("10%% of B: pretrained %.4f vs scratch %.4f (+%.2f pts); half-data check: pretrained at "
              "10%% %.4f vs scratch at 20%% %.4f",
              f.pretrained_mean, f.scratch_mean, 100 * f.gap(), f.pretrained_mean, f2.scratch_mean)};
}

Outcome ab_statistics() {
  std::vector<std::string> failures;
  // Hand-computed Welch statistics.
  const std::vector<double> x{12, 15, 9, 22, 30, 18, 7, 14}, y{20, 25, 11, 28, 35, 19, 16, 24, 30};
  auto moments = [](const std::vector<double>& v) {
    double m = 0;
    for (double e : v) m += e;
    m /= static_cast<double>(v.size());
    double s = 0;
    for (double e : v) s += (e - m) * (e - m);
    return std::pair{m, s / static_cast<double>(v.size() - 1)};
  };
  const auto [mx, vx] = moments(x);
  const auto [my, vy] = moments(y);
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  const double se2 = vx / nx + vy / ny;
  const double t = (my - mx) / std::sqrt(se2);
  const double df = se2 * se2 / ((vx / nx) * (vx / nx) / (nx - 1) + (vy / ny) * (vy / ny) / (ny - 1));
  const ABResult w = welch_test(x, y);
  const double p_ref = 0.06372037072364431;  // scipy.stats.ttest_ind(equal_var=False)
  const double dt = std::abs(w.t_statistic - t), ddf = std::abs(w.degrees_of_freedom - df),
               dp = std::abs(w.p_value - p_ref);
  if (dt > 1e-10 || ddf > 1e-10 || dp > 1e-10) failures.push_back("welch");

  // Relative improvement. The printed means are rounded to 2 decimals, so
  // they pin the ratio only to an interval; group means consistent with
  // them reproduce the reported 0.0663.
  const double printed = improvement_ratio(18.14, 19.34);
  const double lo = improvement_ratio(18.145, 19.335), hi = improvement_ratio(18.135, 19.345);
  const std::vector<double> c{18.136, 18.136}, e{19.3385, 19.3385};
  const double from_groups = welch_test(c, e).improvement;
  const bool improvement_ok = lo <= 0.0663 && 0.0663 <= hi &&
                              std::abs(from_groups - 0.0663) < 5e-5 &&
                              std::round(18.136 * 100) / 100 == 18.14 &&
                              std::round(19.3385 * 100) / 100 == 19.34;
  if (!improvement_ok) failures.push_back("improvement");

  // Null calibration: iid observations from one overdispersed distribution.
  int rejections = 0, clustered = 0;
  const int sims = 1000;
  for (int s = 0; s < sims; ++s) {
    ABSimulation sim;
    sim.days = 1;
    sim.seed = static_cast<std::uint64_t>(s);
    const ABLogs logs = simulate_ab(sim);
    rejections += significance_gate(ab_compare(logs.control, logs.experiment));
  }
  for (int s = 0; s < 200; ++s) {
    ABSimulation sim;
    sim.developers_per_group = 100;
    sim.seed = 100000u + static_cast<std::uint64_t>(s);
    const ABLogs logs = simulate_ab(sim);
    clustered += significance_gate(ab_compare(logs.control, logs.experiment));
  }
  const double rate = static_cast<double>(rejections) / sims;
  if (std::abs(rate - 0.05) > 0.02) failures.push_back("calibration");

  const bool gate_ok = significance_gate(0.0238) && significance_gate(0.0494) && !significance_gate(0.06);
  if (!gate_ok) failures.push_back("gate");

  std::string detail = fmt(
      "welch |dt| %.1e |ddf| %.1e |dp| %.1e; improvement from printed means %.5f, interval "
      "[%.5f, %.5f], from means 18.136/19.3385 %.4f; null false-positive rate %.3f over %d iid "
      "simulations (14-day clustered logs, informational: %.3f); gate %s",
      dt, ddf, dp, printed, lo, hi, from_groups, rate, sims, clustered / 200.0, gate_ok ? "ok" : "wrong");
  for (const auto& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
}

Outcome latency() {
  const auto& docs = xfer::testing::sample_documents();
  const ExperimentData data = prepare_experiment_data(docs, Language::kA, {});
  const ModelConfig config = ModelConfig::desk_default(data.vocab.size());
  Service service;
  service.set_checkpoint(ModelCheckpoint::fresh(config, data.vocab));

  std::mt19937_64 rng(17);
  std::vector<double> ms;
  std::size_t i = 0;
  for (const DatasetItem& item : data.test.items) {
    if (ms.size() == 200) break;
    const auto& ev = std::get<CompletionEvent>(item);
    if (ev.candidates.size() < 100) continue;
    CompletionRequest req;
    req.language = Language::kA;
    std::string text;
    for (const auto& t : ev.context_tokens) text += t + " ";
    req.before_cursor = text;
    std::vector<std::string> cands(ev.candidates.begin(), ev.candidates.begin() + 100);
    req.candidates = cands;
    ms.push_back(service.complete(req).latency_ms);
    ++i;
  }
  if (ms.size() < 200) return {false, "not enough events with 100 candidates"};
  std::sort(ms.begin(), ms.end());
  const double p50 = ms[ms.size() / 2], p95 = ms[ms.size() * 95 / 100];
  return {p50 < 100, fmt("default model (d_model %d, %d layers, %d positions), 100 candidates, %zu "
                         "requests: p50 %.1f ms, p95 %.1f ms",
                         config.d_model, config.n_layers, config.context_len, ms.size(), p50, p95)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tokenizer", tokenizer_exactness},
      {"gradient", gradient_correctness},
      {"ranker-oracle", ranker_oracle},
      {"task-transfer", task_transfer},
      {"finetune-size", finetune_size},
      {"cross-language", cross_language},
      {"ab-statistics", ab_statistics},
      {"latency", latency},
      // Last, so the ordering property covers every evaluation above.
      {"metric-oracle", metric_oracle},
  };
  std::set<std::string> only;
  std::ofstream report;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--list") {
      for (const auto& [name, fn] : criteria) std::cout << name << '\n';
      return 0;
    }
    if (a == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string part;
      while (std::getline(ss, part, ',')) only.insert(part);
    }
    if (a == "--report" && i + 1 < argc) report.open(argv[++i], std::ios::trunc);
  }
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    std::cerr << name << std::endl;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    const std::string line = std::string(o.pass ? "PASS " : "FAIL ") + name + ": " + o.detail +
                             fmt(" [%.1f s]", seconds_since(t0));
    std::cout << line << std::endl;
    if (report) report << line << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
