#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "xfer/checkpoint.h"
#include "xfer/corpus.h"
#include "xfer/eval.h"
#include "xfer/model.h"
#include "xfer/vocabulary.h"

namespace xfer {

inline constexpr double kPretrainLearningRate = 5e-4;
inline constexpr double kFinetuneLearningRate = 5e-6;

double default_learning_rate(PhaseKind kind);

// One model input: ids and next-token targets of equal length, targets < 0
// masked.
struct Example {
  std::vector<int> ids;
  std::vector<int> targets;
};

struct ExampleSet {
  std::vector<Example> examples;
  std::size_t skipped = 0;  // events whose accepted token cannot be encoded
  std::size_t target_count() const;
};

// How a completion event is supervised. kSequence trains next-token loss over
// the whole event (context and accepted token); kAcceptedToken only on the two
// subtokens of the accepted token, which makes the example loss equal minus the
// ranker score.
enum class EventLoss { kSequence, kAcceptedToken };

std::string_view event_loss_name(EventLoss loss);
EventLoss parse_event_loss(std::string_view name);

// Token sequences become windows of [control] + tokens with full next-token
// loss, cut at token boundaries so no window exceeds context_len inputs;
// every window restarts the copy table. A completion event becomes the
// ranker's input, [control] + truncated context + first subtoken of the
// accepted token.
ExampleSet make_examples(const Dataset& dataset, const Vocabulary& vocab, int context_len,
                         EventLoss event_loss = EventLoss::kSequence);
std::vector<Example> sequence_windows(const TokenSequence& sequence, const Vocabulary& vocab,
                                      int context_len);
std::optional<Example> completion_example(const CompletionEvent& event, const Vocabulary& vocab,
                                          int context_len,
                                          EventLoss event_loss = EventLoss::kSequence);

// Held-out loss patience rule. An epoch improves when its loss is below the
// best improving loss by more than min_delta; training stops once `patience`
// epochs in a row fail to improve. The epoch with the strictly lowest loss is
// reported separately, so the kept weights are never worse than any epoch seen.
class EarlyStopper {
 public:
  EarlyStopper(int patience, double min_delta);

  // Returns true when this epoch has the lowest loss so far.
  bool update(int epoch, double loss);
  bool should_stop() const { return wait_ >= patience_; }
  int best_epoch() const { return best_epoch_; }
  double best_loss() const { return best_loss_; }

 private:
  int patience_;
  double min_delta_;
  double reference_ = std::numeric_limits<double>::infinity();
  double best_loss_ = std::numeric_limits<double>::infinity();
  int best_epoch_ = 0;
  int wait_ = 0;
};

struct TrainPhase {
  std::shared_ptr<const Dataset> dataset;
  // Early-stopping set. When null, 10% of `dataset` is carved off by id hash.
  std::shared_ptr<const Dataset> validation;
  PhaseKind kind = PhaseKind::kPretrain;
  std::optional<double> learning_rate;  // default_learning_rate(kind) when unset
  int max_epochs = 20;
  int patience = 3;
  double min_delta = 1e-3;
  int batch_size = 16;
  double clip_norm = 1.0;
  std::uint64_t seed = 0;
  // When set, must equal the checkpoint vocabulary's fingerprint.
  std::optional<std::uint64_t> vocab_fingerprint;
  EventLoss event_loss = EventLoss::kSequence;

  double effective_learning_rate() const;
  // Throws InvalidArgument.
  void validate() const;
};

struct EpochLog {
  int epoch = 0;
  double train_loss = 0;
  double heldout_loss = 0;
  double seconds = 0;
};

struct PhaseReport {
  std::vector<EpochLog> epochs;
  int best_epoch = 0;
  double best_heldout_loss = 0;
  bool early_stopped = false;
  std::size_t train_examples = 0;
  std::size_t heldout_examples = 0;
  std::size_t skipped = 0;
};

struct PhaseResult {
  ModelCheckpoint checkpoint;
  PhaseReport report;
};

using EpochCallback = std::function<void(const EpochLog&)>;

// Trains a copy of `start` and returns the best-held-out-loss weights with
// one provenance entry appended. Throws InvalidArgument on a vocabulary
// mismatch or when the dataset yields no examples.
PhaseResult train_phase(const ModelCheckpoint& start, const TrainPhase& phase,
                        const EpochCallback& on_epoch = {});

// Mean held-out loss of a model on prepared examples.
double heldout_loss(const Transformer<float>& model, const ExampleSet& examples);

// --- Experiment matrix ---------------------------------------------------------

// Datasets an experiment draws phases from. `test` is the held-out
// Autocompletion split every configuration is scored on.
struct ExperimentData {
  Language language = Language::kA;
  Dataset commit;
  Dataset ide;
  Dataset autocompletion;  // training split, possibly capped
  Dataset all;             // union of autocompletion and ide
  Dataset test;
  Vocabulary vocab;

  const Dataset& by_role(DatasetRole role) const;
};

struct DataOptions {
  // Cap on fine-tuning events after the held-out split; 0 keeps all.
  std::size_t finetune_events = 0;
  double test_fraction = 0.10;
  // Hold out whole acceptance-log files instead of single events. Events of
  // one file share context windows, so an event-level split lets sequence
  // training see held-out sites.
  bool split_by_document = true;
  std::int64_t vocab_cutoff = 2;
  std::uint64_t seed = 0;
};

// Builds every role for one language from a document tree. The vocabulary
// covers the training splits only.
ExperimentData prepare_experiment_data(const std::vector<SourceDocument>& documents,
                                       Language language, const DataOptions& options);

struct PhaseSpec {
  DatasetRole role = DatasetRole::kAutocompletion;
  std::optional<double> learning_rate;
};

struct ExperimentConfig {
  int id = 0;
  std::string name;
  std::vector<PhaseSpec> phases;
  ModelConfig model;  // vocab_size is filled from the data
  Language language = Language::kA;
  std::uint64_t seed = 0;
  // Used by phases after the first that do not set their own rate.
  std::optional<double> finetune_learning_rate;
  std::optional<double> pretrain_learning_rate;
  int max_epochs = 20;
  int patience = 3;
  double min_delta = 1e-3;
  int batch_size = 16;
  std::size_t finetune_events = 0;
  EventLoss event_loss = EventLoss::kSequence;

  // Throws InvalidArgument unless 1 <= id <= 7 and phases name one of the
  // seven rows of the matrix.
  void validate() const;
  // The phase list of row `id`:
  //   1 commit, 2 all, 3 autocompletion, 4 commit>all,
  //   5 commit>autocompletion, 6 all>autocompletion,
  //   7 commit>all>autocompletion.
  static ExperimentConfig matrix_row(int id);

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::filesystem::path& path);
};

// First phase trains from scratch (pretrain kind and rate), the rest fine-tune
// from the previous checkpoint. Phase seeds are derive_seed(seed, index).
std::vector<TrainPhase> phases_for(const ExperimentConfig& config, const ExperimentData& data);

struct RunResult {
  ModelCheckpoint checkpoint;
  Metrics metrics;
  std::vector<PhaseReport> phases;
  nlohmann::json row;
};

// Chains the phases, evaluates on data.test and, when out_dir is given, saves
// each phase checkpoint there and appends the result row to results.jsonl.
// A failing phase aborts the run; checkpoints of completed phases remain.
RunResult run_config(const ExperimentConfig& config, const ExperimentData& data,
                     const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                     const EpochCallback& on_epoch = {});

// Fails unless `row` has the documented result-row fields and types.
void validate_result_row(const nlohmann::json& row);

// Appends one JSON object as a line; the file is created when missing.
void append_jsonl(const std::filesystem::path& path, const nlohmann::json& row);

// --- Fine-tuning-size sweeps ---------------------------------------------------

struct SweepOptions {
  std::vector<double> fractions;
  std::vector<std::uint64_t> seeds;
  // Template for the fine-tuning phase of `base` (dataset, seed and kind are
  // filled per point). Scratch baselines reuse it with the pretrain rate.
  TrainPhase phase;
  std::optional<double> scratch_learning_rate;
};

struct SweepPoint {
  double fraction = 0;
  std::uint64_t seed = 0;
  std::size_t examples = 0;
  Metrics pretrained;
  Metrics scratch;
};

struct SweepRow {
  double fraction = 0;
  std::size_t examples = 0;  // mean over seeds, rounded
  double pretrained_mean = 0, pretrained_std = 0;
  double scratch_mean = 0, scratch_std = 0;
  double gap() const { return pretrained_mean - scratch_mean; }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<SweepRow> rows;  // ascending fraction
  std::vector<std::string> warnings;
};

// For every fraction and seed: nested subsample of `finetune`, fine-tune a
// copy of `base`, train a fresh model of the same shape from scratch, score
// both on `test`. Fractions that select no items are skipped with a warning.
SweepResult sweep_finetune_size(const ModelCheckpoint& base, const Dataset& finetune,
                                const Dataset& test, const SweepOptions& options,
                                const std::function<void(const SweepPoint&)>& on_point = {});

std::vector<SweepRow> summarize_sweep(const std::vector<SweepPoint>& points);

nlohmann::json sweep_point_to_json(const SweepPoint& point);

// CSV (fraction,examples,pretrained_mean,pretrained_std,scratch_mean,scratch_std)
// and an SVG line chart of top-1 against fraction.
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
void write_sweep_svg(const std::vector<SweepRow>& rows, const std::string& title,
                     const std::filesystem::path& path);

}  // namespace xfer
