#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "xfer/lexer.h"
#include "xfer/model.h"
#include "xfer/tokenizer.h"
#include "xfer/vocabulary.h"

namespace xfer::oracle {

struct GradientCheck {
  std::string tensor;
  double analytic = 0;
  double numeric = 0;
  double relative_error = 0;
};

inline double masked_mean_loss(const Transformer<double>& model, const std::vector<int>& ids,
                               const std::vector<int>& targets, const ForwardOptions& opt) {
  // Naive path: full logits, explicit log-sum-exp per row.
  const Matrix<double> logits = model.forward(ids, opt);
  double total = 0;
  int n = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0) continue;
    double mx = -INFINITY;
    for (Eigen::Index v = 0; v < logits.cols(); ++v) mx = std::max(mx, logits(i, v));
    double s = 0;
    for (Eigen::Index v = 0; v < logits.cols(); ++v) s += std::exp(logits(i, v) - mx);
    total += mx + std::log(s) - logits(i, targets[i]);
    ++n;
  }
  return total / n;
}

// Central finite differences along one random unit direction per tensor,
// compared with the inner product of that direction and the analytic
// gradient.
inline std::vector<GradientCheck> check_gradients(const ModelConfig& config, std::uint64_t seed,
                                                  double eps = 1e-5,
                                                  Mode mode = Mode::kInfer) {
  std::mt19937_64 rng(seed);
  Parameters<double> params = Parameters<double>::initialized(config);
  // Perturb gains and biases away from their trivial init so their gradients
  // are exercised in a generic regime.
  std::normal_distribution<double> noise(0.0, 0.1);
  for (std::size_t i = 0; i < params.count(); ++i) {
    Matrix<double>& t = params.tensor(i);
    for (Eigen::Index k = 0; k < t.size(); ++k) t.data()[k] += noise(rng);
  }
  std::uniform_int_distribution<int> tok(0, config.vocab_size - 1);
  const int len = config.context_len;
  std::vector<int> ids(static_cast<std::size_t>(len)), targets(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    ids[static_cast<std::size_t>(i)] = tok(rng);
    targets[static_cast<std::size_t>(i)] = i % 3 == 1 ? -1 : tok(rng);
  }
  const ForwardOptions opt{mode, seed + 1};

  Transformer<double> model(config, params);
  Parameters<double> grads(config);
  model.loss_and_gradients(ids, targets, grads, opt);

  std::vector<GradientCheck> out;
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < params.count(); ++i) {
    Matrix<double> dir(params.tensor(i).rows(), params.tensor(i).cols());
    for (Eigen::Index k = 0; k < dir.size(); ++k) dir.data()[k] = normal(rng);
    dir /= dir.norm();
    Parameters<double> plus = params, minus = params;
    plus.tensor(i) += eps * dir;
    minus.tensor(i) -= eps * dir;
    const double lp = masked_mean_loss(Transformer<double>(config, plus), ids, targets, opt);
    const double lm = masked_mean_loss(Transformer<double>(config, minus), ids, targets, opt);
    GradientCheck c;
    c.tensor = params.name(i);
    c.numeric = (lp - lm) / (2 * eps);
    c.analytic = (grads.tensor(i).array() * dir.array()).sum();
    const double scale = std::max({std::abs(c.numeric), std::abs(c.analytic), 1e-8});
    c.relative_error = std::abs(c.numeric - c.analytic) / scale;
    out.push_back(c);
  }
  return out;
}

struct BruteForceScore {
  std::string candidate;
  double score = 0;
};

// One full forward pass per candidate over [ctrl] + context + candidate,
// scoring the candidate's two ids with naive log-softmax. Candidates that
// are not identifiers or hit <unk> are left out. Sorted by score, then string.
inline std::vector<BruteForceScore> brute_force_rank(const Transformer<double>& model,
                                                     const Vocabulary& vocab, Language language,
                                                     const std::vector<Token>& context,
                                                     const std::vector<std::string>& candidates) {
  std::vector<BruteForceScore> out;
  for (const std::string& c : candidates) {
    if (!is_identifier(c, language)) continue;
    std::vector<Token> seq = context;
    seq.push_back(ident(c));
    std::vector<int> ids{vocab.control_id(language)};
    const EncodedSequence enc = encode_sequence(seq, vocab);
    ids.insert(ids.end(), enc.ids.begin(), enc.ids.end());
    const std::size_t n = ids.size();
    const int s1 = ids[n - 2], s2 = ids[n - 1];
    if (s1 == vocab.unk_id() || s2 == vocab.unk_id()) continue;
    const Matrix<double> logits = model.forward(ids, ForwardOptions{});
    auto logprob = [&](std::size_t row, int id) {
      double mx = -INFINITY;
      for (Eigen::Index v = 0; v < logits.cols(); ++v) mx = std::max(mx, logits(row, v));
      double s = 0;
      for (Eigen::Index v = 0; v < logits.cols(); ++v) s += std::exp(logits(row, v) - mx);
      return logits(row, id) - mx - std::log(s);
    };
    out.push_back({c, logprob(n - 3, s1) + logprob(n - 2, s2)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.score != b.score ? a.score > b.score : a.candidate < b.candidate;
  });
  return out;
}

// MRR@k straight from the definition over rank lists (0 = not found).
inline double naive_mrr(const std::vector<int>& ranks, int k) {
  double s = 0;
  for (int r : ranks) s += (r >= 1 && r <= k) ? 1.0 / r : 0.0;
  return s / static_cast<double>(ranks.size());
}

inline ModelConfig tiny_config() {
  ModelConfig c;
  c.vocab_size = 23;
  c.context_len = 8;
  c.d_model = 16;
  c.n_heads = 2;
  c.n_layers = 2;
  c.d_ff = 32;
  c.seed = 5;
  return c;
}

}  // namespace xfer::oracle
