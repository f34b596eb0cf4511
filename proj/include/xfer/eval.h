#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "xfer/corpus.h"
#include "xfer/model.h"
#include "xfer/vocabulary.h"

namespace xfer {

struct Metrics {
  std::size_t n = 0;
  double top1 = 0;
  double top3 = 0;
  double mrr3 = 0;
  std::size_t unscorable = 0;

  nlohmann::json to_json() const;
  static Metrics from_json(const nlohmann::json& j);
};

// Mean of 1/rank over events, counting 0 for a missing rank or one beyond k.
// Throws InvalidArgument when ranks is empty, k < 1 or a rank is < 1.
double mrr_at_k(std::span<const std::optional<int>> ranks, int k = 3);

// Share of events with rank <= k.
double top_k_accuracy(std::span<const std::optional<int>> ranks, int k);

Metrics metrics_from_ranks(std::span<const std::optional<int>> ranks, std::size_t unscorable = 0);

struct EventRank {
  std::string event_id;
  std::optional<int> rank;  // of the accepted token; nullopt when unscorable
  std::size_t candidates = 0;
};

struct Evaluation {
  Metrics metrics;
  std::vector<EventRank> ranks;  // in dataset order
};

// Ranks the accepted token of every event in `heldout`. An event whose
// accepted token the ranker skipped counts as rank none and as unscorable.
// Throws InvalidArgument when the dataset has no events or the model's
// vocabulary size differs from `vocab`.
template <typename T>
Evaluation evaluate(const Transformer<T>& model, const Vocabulary& vocab, const Dataset& heldout);

// event_id,rank,candidates with an empty rank for unscorable events.
void write_audit_csv(const std::vector<EventRank>& ranks, const std::filesystem::path& path);
std::vector<EventRank> read_audit_csv(const std::filesystem::path& path);

// --- Online-style statistics ---------------------------------------------------

// Daily completions per user: one row per (developer, day).
struct ABObservation {
  std::string developer_id;
  std::string day;
  std::int64_t completions_accepted = 0;

  bool operator==(const ABObservation&) const = default;
};

struct ABResult {
  double mean_control = 0;
  double mean_experiment = 0;
  double std_control = 0;  // sample standard deviations
  double std_experiment = 0;
  std::size_t n_control = 0;
  std::size_t n_experiment = 0;
  std::size_t unique_developers_control = 0;
  std::size_t unique_developers_experiment = 0;
  double improvement = 0;  // (mean_e - mean_c) / mean_c
  double t_statistic = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;  // two-sided Welch

  nlohmann::json to_json() const;
};

// Throws InvalidArgument on negative counts or a repeated (developer, day).
void validate_observations(std::span<const ABObservation> observations);

// Welch's unequal-variance t-test over the observation lists. Throws
// InvalidArgument when a side has fewer than two observations. When both
// sides have zero variance the p-value is 1 for equal means and 0 otherwise.
ABResult ab_compare(std::span<const ABObservation> control,
                    std::span<const ABObservation> experiment);

// Same statistics from plain samples.
ABResult welch_test(std::span<const double> control, std::span<const double> experiment);

// (mean_e - mean_c) / mean_c; throws when mean_c is 0.
double improvement_ratio(double mean_control, double mean_experiment);

bool significance_gate(const ABResult& result, double level = 0.95);
bool significance_gate(double p_value, double level = 0.95);

void write_observations(std::span<const ABObservation> observations,
                        const std::filesystem::path& path);
std::vector<ABObservation> read_observations(const std::filesystem::path& path);

// Synthetic usage logs. Each developer gets a Gamma-distributed daily rate
// (mean base_rate, coefficient of variation rate_cv); each (developer, day)
// count is Poisson of that rate, multiplied by 1 + uplift in the experiment
// group. The two groups have disjoint developers.
struct ABSimulation {
  int developers_per_group = 300;
  int days = 14;
  double base_rate = 18.0;
  double rate_cv = 1.0;
  double uplift = 0.0;
  std::uint64_t seed = 0;
};

struct ABLogs {
  std::vector<ABObservation> control;
  std::vector<ABObservation> experiment;
};

ABLogs simulate_ab(const ABSimulation& sim);

}  // namespace xfer
