#include <algorithm>
#include <fstream>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "xfer/error.h"
#include "xfer/hash.h"
#include "xfer/ranker.h"
#include "xfer/trainer.h"

using namespace xfer;

namespace {

ModelConfig small_model(int vocab_size = 0) {
  ModelConfig c;
  c.vocab_size = vocab_size;
  c.context_len = 32;
  c.d_model = 16;
  c.n_heads = 2;
  c.n_layers = 1;
  c.d_ff = 32;
  c.seed = 1;
  return c;
}

// A handful of documents per origin keeps these tests fast.
const ExperimentData& small_data() {
  static const ExperimentData data = [] {
    std::vector<SourceDocument> docs;
    for (Origin o : {Origin::kCommit, Origin::kIdeSnapshot, Origin::kAcceptanceLog}) {
      auto d = testing::documents_where(Language::kA, o);
      d.resize(std::min<std::size_t>(d.size(), o == Origin::kAcceptanceLog ? 8 : 3));
      docs.insert(docs.end(), d.begin(), d.end());
    }
    DataOptions o;
    o.finetune_events = 60;
    o.seed = 3;
    return prepare_experiment_data(docs, Language::kA, o);
  }();
  return data;
}

ExperimentConfig quick(int id) {
  ExperimentConfig c = ExperimentConfig::matrix_row(id);
  c.model = small_model();
  c.max_epochs = 2;
  c.batch_size = 8;
  c.seed = 5;
  c.finetune_learning_rate = 1e-4;
  return c;
}

}  // namespace

TEST_CASE("early stopping rule trace") {
  EarlyStopper s(2, 1e-3);
  const std::vector<double> losses{2.0, 1.9, 1.91, 1.92};
  int stopped_after = 0;
  for (int e = 1; e <= static_cast<int>(losses.size()); ++e) {
    s.update(e, losses[static_cast<std::size_t>(e - 1)]);
    if (s.should_stop()) {
      stopped_after = e;
      break;
    }
  }
  CHECK(stopped_after == 4);
  CHECK(s.best_epoch() == 2);
  CHECK(s.best_loss() == 1.9);

  // Gains below min_delta count as no improvement, but the kept epoch is
  // still the lowest loss seen.
  EarlyStopper t(2, 1e-3);
  t.update(1, 1.0);
  t.update(2, 0.9995);
  CHECK_FALSE(t.should_stop());
  t.update(3, 0.9991);
  CHECK(t.should_stop());
  CHECK(t.best_epoch() == 3);

  CHECK_THROWS_AS(EarlyStopper(0, 1e-3), InvalidArgument);
}

TEST_CASE("sequence windows fit the context and cover every id") {
  const auto& data = small_data();
  const auto& seq = std::get<TokenSequence>(data.ide.items.front());
  for (int ctx : {8, 16, 32}) {
    const auto windows = sequence_windows(seq, data.vocab, ctx);
    REQUIRE_FALSE(windows.empty());
    std::size_t ids = 0;
    for (const auto& w : windows) {
      CHECK(w.ids.size() == w.targets.size());
      CHECK(static_cast<int>(w.ids.size()) <= ctx);
      CHECK(w.ids.front() == data.vocab.control_id(Language::kA));
      CHECK(std::all_of(w.targets.begin(), w.targets.end(), [](int t) { return t >= 0; }));
      for (std::size_t i = 1; i < w.ids.size(); ++i) CHECK(w.ids[i] == w.targets[i - 1]);
      ids += w.targets.size();
    }
    std::size_t expected = 0;
    for (const auto& t : seq.tokens) expected += t.kind == TokenKind::kIdentifier ? 2 : 1;
    CHECK(ids == expected);
  }
}

TEST_CASE("completion examples score exactly what the ranker scores") {
  const auto& data = small_data();
  ModelConfig c = small_model(data.vocab.size());
  auto params = Parameters<double>::initialized(c);
  for (std::size_t i = 0; i < params.count(); ++i) params.tensor(i).array() += 0.05;
  const Transformer<double> model(c, params);
  int checked = 0;
  for (const auto& item : data.autocompletion.items) {
    const auto& ev = std::get<CompletionEvent>(item);
    const auto ex = completion_example(ev, data.vocab, c.context_len, EventLoss::kAcceptedToken);
    if (!ex) continue;
    CHECK(static_cast<int>(ex->ids.size()) <= c.context_len);
    CHECK(std::count_if(ex->targets.begin(), ex->targets.end(), [](int t) { return t >= 0; }) == 2);
    const auto seq = completion_example(ev, data.vocab, c.context_len, EventLoss::kSequence);
    REQUIRE(seq);
    CHECK(seq->ids == ex->ids);
    for (std::size_t i = 0; i + 1 < seq->ids.size(); ++i) CHECK(seq->targets[i] == seq->ids[i + 1]);
    CHECK(seq->targets.back() == ex->targets.back());
    int n = 0;
    const double loss = model.loss_sum(ex->ids, ex->targets, n);
    const auto ctx = tokens_from_texts(ev.context_tokens, ev.language);
    const auto ranked = rank_candidates<double>(model, data.vocab, ev.language, ctx, ev.candidates);
    const auto it = std::find_if(ranked.items.begin(), ranked.items.end(),
                                 [&](const Suggestion& s) { return s.candidate == ev.accepted; });
    REQUIRE(it != ranked.items.end());
    CHECK(loss == doctest::Approx(-it->score).epsilon(1e-9));
    if (++checked == 25) break;
  }
  CHECK(checked == 25);
}

TEST_CASE("train_phase overfits a two-sequence corpus") {
  const auto& data = small_data();
  Dataset two = data.ide;
  two.items.resize(2);
  for (auto& item : two.items) {
    auto& s = std::get<TokenSequence>(item);
    s.tokens.resize(std::min<std::size_t>(s.tokens.size(), 60));
  }
  const auto shared = std::make_shared<const Dataset>(two);
  TrainPhase p;
  p.dataset = shared;
  p.validation = shared;
  p.kind = PhaseKind::kPretrain;
  p.batch_size = 1;
  p.patience = 20;
  p.seed = 2;
  ModelConfig c = small_model();
  c.context_len = 8;
  c.d_model = 32;
  c.d_ff = 64;
  const ModelCheckpoint start = ModelCheckpoint::fresh(c, data.vocab);
  const ExampleSet ex = make_examples(two, data.vocab, c.context_len);
  const double initial = heldout_loss(start.model(), ex);
  const PhaseResult r = train_phase(start, p);
  CHECK(p.effective_learning_rate() == 5e-4);
  CHECK(r.report.epochs.size() == 20);
  CHECK(r.report.epochs.back().train_loss < 0.5 * initial);
  CHECK(heldout_loss(r.checkpoint.model(), ex) < 0.5 * initial);
}

TEST_CASE("train_phase keeps the best epoch and appends provenance") {
  const auto& data = small_data();
  const ModelCheckpoint start = ModelCheckpoint::fresh(small_model(), data.vocab);
  TrainPhase p;
  p.dataset = std::make_shared<const Dataset>(data.autocompletion);
  p.kind = PhaseKind::kPretrain;
  p.max_epochs = 4;
  p.patience = 1;
  p.seed = 4;
  const PhaseResult r = train_phase(start, p);
  REQUIRE_FALSE(r.report.epochs.empty());
  double lowest = INFINITY;
  for (const auto& e : r.report.epochs) lowest = std::min(lowest, e.heldout_loss);
  CHECK(r.report.best_heldout_loss == lowest);
  CHECK(r.report.epochs[static_cast<std::size_t>(r.report.best_epoch - 1)].heldout_loss == lowest);
  CHECK(r.report.train_examples + r.report.heldout_examples + r.report.skipped ==
        data.autocompletion.size());

  CHECK(r.checkpoint.provenance.size() == start.provenance.size() + 1);
  const auto& prov = r.checkpoint.provenance.back();
  CHECK(prov.phase == PhaseKind::kPretrain);
  CHECK(prov.role == DatasetRole::kAutocompletion);
  CHECK(prov.learning_rate == 5e-4);
  CHECK(prov.best_epoch == r.report.best_epoch);
  CHECK(prov.seed == 4);

  // The kept weights reproduce the reported loss.
  const ExampleSet valid = make_examples(split_holdout(data.autocompletion, 0.10, 4).second,
                                         data.vocab, start.config.context_len);
  CHECK(heldout_loss(r.checkpoint.model(), valid) == doctest::Approx(lowest).epsilon(1e-9));

  // Chained phase: provenance grows by one again.
  TrainPhase ft = p;
  ft.kind = PhaseKind::kFinetune;
  ft.max_epochs = 1;
  const PhaseResult r2 = train_phase(r.checkpoint, ft);
  CHECK(r2.checkpoint.provenance.size() == 2);
  CHECK(r2.checkpoint.provenance.back().learning_rate == 5e-6);
}

TEST_CASE("train_phase errors") {
  const auto& data = small_data();
  const ModelCheckpoint start = ModelCheckpoint::fresh(small_model(), data.vocab);
  TrainPhase p;
  p.dataset = std::make_shared<const Dataset>(Dataset{});
  CHECK_THROWS_AS(train_phase(start, p), InvalidArgument);
  p.dataset = std::make_shared<const Dataset>(data.autocompletion);
  p.vocab_fingerprint = Vocabulary().fingerprint();
  CHECK_THROWS_AS(train_phase(start, p), InvalidArgument);
  p.vocab_fingerprint.reset();
  p.learning_rate = -1;
  CHECK_THROWS_AS(train_phase(start, p), InvalidArgument);
  p.learning_rate.reset();
  ModelCheckpoint wrong = start;
  wrong.vocab = Vocabulary();
  CHECK_THROWS_AS(train_phase(wrong, p), InvalidArgument);
}

TEST_CASE("run_config chains phases exactly like train_phase") {
  const auto& data = small_data();
  const ExperimentConfig cfg = quick(6);
  testing::TempDir dir;
  const RunResult run = run_config(cfg, data, dir.path());

  const auto phases = phases_for(cfg, data);
  REQUIRE(phases.size() == 2);
  CHECK(phases[0].kind == PhaseKind::kPretrain);
  CHECK(phases[0].effective_learning_rate() == 5e-4);
  CHECK(phases[1].kind == PhaseKind::kFinetune);
  CHECK(phases[1].effective_learning_rate() == 1e-4);
  ModelConfig mc = cfg.model;
  mc.seed = cfg.seed;
  const ModelCheckpoint fresh = ModelCheckpoint::fresh(mc, data.vocab);
  const auto step1 = train_phase(fresh, phases[0]);
  const auto step2 = train_phase(step1.checkpoint, phases[1]);
  CHECK(step2.checkpoint.params == run.checkpoint.params);
  CHECK(step2.checkpoint.provenance == run.checkpoint.provenance);

  CHECK(std::filesystem::exists(dir.path() / "exp6-seed5-phase1.ckpt"));
  CHECK(std::filesystem::exists(dir.path() / "exp6-seed5-phase2.ckpt"));
  std::ifstream in(dir.path() / "results.jsonl");
  std::string line;
  REQUIRE(std::getline(in, line));
  const auto row = nlohmann::json::parse(line);
  CHECK_NOTHROW(validate_result_row(row));
  CHECK(row["config"] == 6);
  CHECK(row["phases"].size() == 2);
  CHECK(row["top1"].get<double>() == run.metrics.top1);
  CHECK(run.metrics.top1 <= run.metrics.mrr3);
  CHECK(run.metrics.mrr3 <= run.metrics.top3);
}

TEST_CASE("config 3 is a single phase from a fresh model") {
  const auto& data = small_data();
  const ExperimentConfig cfg = quick(3);
  const RunResult run = run_config(cfg, data);
  ModelConfig mc = cfg.model;
  mc.seed = cfg.seed;
  TrainPhase p;
  p.dataset = std::make_shared<const Dataset>(data.autocompletion);
  p.kind = PhaseKind::kPretrain;
  p.max_epochs = cfg.max_epochs;
  p.batch_size = cfg.batch_size;
  p.seed = derive_seed(cfg.seed, 0);
  const auto single = train_phase(ModelCheckpoint::fresh(mc, data.vocab), p);
  CHECK(single.checkpoint.params == run.checkpoint.params);
  CHECK(run.checkpoint.provenance.size() == 1);
}

TEST_CASE("experiment configs: matrix rows, validation and files") {
  const std::vector<std::string> names{"commit",
                                       "all",
                                       "autocompletion",
                                       "commit>all",
                                       "commit>autocompletion",
                                       "all>autocompletion",
                                       "commit>all>autocompletion"};
  for (int id = 1; id <= 7; ++id) {
    const auto c = ExperimentConfig::matrix_row(id);
    CHECK(c.name == names[static_cast<std::size_t>(id - 1)]);
    CHECK_NOTHROW(c.validate());
    const auto back = ExperimentConfig::from_json(c.to_json());
    CHECK(back.to_json() == c.to_json());
    const auto file = std::filesystem::path(XFER_SOURCE_DIR) / "configs" /
                      ("exp" + std::to_string(id) + ".json");
    const auto loaded = ExperimentConfig::load(file);
    CHECK(loaded.id == id);
    CHECK(loaded.name == c.name);
  }
  CHECK_THROWS_AS(ExperimentConfig::matrix_row(8), InvalidArgument);
  auto bad = ExperimentConfig::matrix_row(6);
  std::swap(bad.phases[0], bad.phases[1]);
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"id", 2}, {"phases", {{{"dataset", "commit"}}}}}),
                  InvalidArgument);

  CHECK_THROWS_AS(validate_result_row({{"config", 9}}), FormatError);
}

TEST_CASE("sweep subsamples are nested and empty fractions are skipped") {
  const auto& data = small_data();
  for (std::uint64_t seed : {0u, 1u}) {
    std::set<std::string> prev;
    for (double f : {0.1, 0.25, 0.5, 1.0}) {
      std::set<std::string> ids;
      for (const auto& it : subsample(data.autocompletion, f, seed).items) ids.insert(item_id(it));
      CHECK(std::includes(ids.begin(), ids.end(), prev.begin(), prev.end()));
      prev = ids;
    }
  }

  const ModelCheckpoint base = ModelCheckpoint::fresh(small_model(), data.vocab);
  SweepOptions opt;
  opt.fractions = {0.001, 0.5};
  opt.seeds = {1, 2};
  opt.phase.max_epochs = 1;
  opt.phase.batch_size = 8;
  std::vector<SweepPoint> seen;
  const SweepResult r = sweep_finetune_size(base, data.autocompletion, data.test, opt,
                                            [&](const SweepPoint& p) { seen.push_back(p); });
  CHECK(r.warnings.size() == 2);
  REQUIRE(r.points.size() == 2);
  CHECK(seen.size() == 2);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].fraction == 0.5);
  CHECK(r.rows[0].examples == 30);
  CHECK(r.rows[0].pretrained_mean ==
        doctest::Approx((r.points[0].pretrained.top1 + r.points[1].pretrained.top1) / 2));

  testing::TempDir dir;
  write_sweep_csv(r.rows, dir.path() / "sweep.csv");
  write_sweep_svg(r.rows, "test", dir.path() / "sweep.svg");
  CHECK(std::filesystem::file_size(dir.path() / "sweep.svg") > 100);

  opt.fractions = {0.0};
  CHECK_THROWS_AS(sweep_finetune_size(base, data.autocompletion, data.test, opt), InvalidArgument);
}

TEST_CASE("summarize_sweep statistics") {
  std::vector<SweepPoint> pts(3);
  const double pre[] = {0.4, 0.5, 0.6}, scr[] = {0.1, 0.2, 0.3};
  for (int i = 0; i < 3; ++i) {
    pts[static_cast<std::size_t>(i)].fraction = 0.1;
    pts[static_cast<std::size_t>(i)].examples = 10;
    pts[static_cast<std::size_t>(i)].pretrained.top1 = pre[i];
    pts[static_cast<std::size_t>(i)].scratch.top1 = scr[i];
  }
  const auto rows = summarize_sweep(pts);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].pretrained_mean == doctest::Approx(0.5));
  CHECK(rows[0].pretrained_std == doctest::Approx(0.1));
  CHECK(rows[0].gap() == doctest::Approx(0.3));
}

TEST_CASE("held-out events come from files never used for fine-tuning") {
  const ExperimentData& data = small_data();
  auto file_of = [](const DatasetItem& item) {
    const std::string& id = std::get<CompletionEvent>(item).id;
    return id.substr(0, id.rfind(':'));
  };
  std::set<std::string> train_files, test_files;
  for (const auto& it : data.autocompletion.items) train_files.insert(file_of(it));
  for (const auto& it : data.test.items) test_files.insert(file_of(it));
  CHECK(test_files.size() == 1);  // round(0.1 * 8 files)
  for (const auto& f : test_files) CHECK(train_files.count(f) == 0);

  auto docs = testing::documents_where(Language::kA, Origin::kAcceptanceLog);
  docs.resize(8);
  DataOptions by_event;
  by_event.split_by_document = false;
  by_event.seed = 3;
  const ExperimentData mixed = prepare_experiment_data(docs, Language::kA, by_event);
  const std::size_t all = mixed.autocompletion.size() + mixed.test.size();
  CHECK(mixed.test.size() == static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(all))));
}
