#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include "json.hpp"

namespace xfer {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using RowVector = Eigen::Matrix<T, 1, Eigen::Dynamic>;

struct ModelConfig {
  int vocab_size = 0;
  int context_len = 256;
  int d_model = 128;
  int n_heads = 4;
  int n_layers = 4;
  int d_ff = 512;
  double dropout = 0.0;
  std::uint64_t seed = 0;

  // Throws InvalidArgument.
  void validate() const;
  int head_dim() const { return d_model / n_heads; }

  // d_model=128, 4 heads, 4 layers, d_ff=512, 256 positions.
  static ModelConfig desk_default(int vocab_size);

  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);
  bool operator==(const ModelConfig&) const = default;
};

// Named dense tensors with the shapes implied by a config. Tensor order is
// fixed: wte, wpe, then per block ln1.{g,b}, attn.{w_qkv,b_qkv,w_proj,b_proj},
// ln2.{g,b}, mlp.{w_fc,b_fc,w_proj,b_proj}, then ln_f.{g,b}. The output
// projection is tied to wte.
// Tensor indices of one transformer block.
struct BlockLayout {
  int ln1_g, ln1_b, w_qkv, b_qkv, w_attn_proj, b_attn_proj;
  int ln2_g, ln2_b, w_fc, b_fc, w_mlp_proj, b_mlp_proj;
};

template <typename T>
class Parameters {
 public:
  using Block = BlockLayout;

  Parameters() = default;
  // Zero tensors of the right shapes.
  explicit Parameters(const ModelConfig& config);

  // GPT-2 style initialization: N(0, 0.02), residual projections scaled by
  // 1/sqrt(2 * n_layers), layer-norm gains 1.
  static Parameters initialized(const ModelConfig& config);

  std::size_t count() const { return tensors_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  Matrix<T>& tensor(std::size_t i) { return tensors_[i]; }
  const Matrix<T>& tensor(std::size_t i) const { return tensors_[i]; }
  Matrix<T>& get(std::string_view name);
  const Matrix<T>& get(std::string_view name) const;
  std::size_t total_size() const;

  void set_zero();

  template <typename U>
  Parameters<U> cast() const {
    Parameters<U> out;
    out.assign_layout(*this);
    for (std::size_t i = 0; i < tensors_.size(); ++i) {
      out.tensor(i) = tensors_[i].template cast<U>();
    }
    return out;
  }

  // Copies names and indices (not values) from another instantiation.
  template <typename U>
  void assign_layout(const Parameters<U>& other) {
    names_.clear();
    tensors_.clear();
    for (std::size_t i = 0; i < other.count(); ++i) {
      names_.push_back(other.name(i));
      tensors_.emplace_back(other.tensor(i).rows(), other.tensor(i).cols());
    }
    wte = other.wte;
    wpe = other.wpe;
    lnf_g = other.lnf_g;
    lnf_b = other.lnf_b;
    blocks = other.blocks;
    rebuild_index();
  }

  bool operator==(const Parameters& other) const;

  int wte = 0, wpe = 0, lnf_g = 0, lnf_b = 0;
  std::vector<Block> blocks;

 private:
  int add(std::string name, Eigen::Index rows, Eigen::Index cols);
  void rebuild_index();

  std::vector<std::string> names_;
  std::vector<Matrix<T>> tensors_;
  std::unordered_map<std::string, int> index_;
};

enum class Mode { kTrain, kInfer };

struct ForwardOptions {
  Mode mode = Mode::kInfer;
  // Seeds dropout masks in train mode.
  std::uint64_t dropout_seed = 0;
};

// Keys and values of every layer for a processed prefix.
template <typename T>
struct KvCache {
  std::vector<Matrix<T>> keys;    // per layer [length x d_model]
  std::vector<Matrix<T>> values;  // per layer [length x d_model]
  int length = 0;
};

// Causal decoder-only transformer. The model object holds a config and a
// parameter set; all methods are const and safe to call concurrently.
template <typename T>
class Transformer {
 public:
  Transformer(ModelConfig config, Parameters<T> params);

  const ModelConfig& config() const { return config_; }
  const Parameters<T>& params() const { return params_; }
  Parameters<T>& mutable_params() { return params_; }

  // Logits for every position, [ids.size() x vocab_size]. Throws
  // InvalidArgument for an empty or overlong sequence or an id out of range.
  Matrix<T> forward(std::span<const int> ids, const ForwardOptions& options = {}) const;

  // Log-softmax of the final position. Throws on an empty context.
  RowVector<T> next_token_logprobs(std::span<const int> context_ids) const;

  // Runs the prefix once, returning its cache and last-position logits.
  KvCache<T> prefill(std::span<const int> ids, RowVector<T>* last_logits) const;

  // Logits at position cache.length for each candidate next id, every row
  // conditioned on the cached prefix followed by that single id. One batched
  // pass; the cache is not modified.
  Matrix<T> extend(const KvCache<T>& cache, std::span<const int> next_ids) const;

  // Adds d(sum of masked cross-entropy)/d(params) * scale into `grads` and
  // returns the unscaled loss sum; `count` receives the number of unmasked
  // targets. targets[i] < 0 marks a masked position.
  double accumulate_gradients(std::span<const int> ids, std::span<const int> targets,
                              T scale, Parameters<T>& grads, int& count,
                              const ForwardOptions& options = {}) const;

  // Mean masked cross-entropy and its gradient.
  T loss_and_gradients(std::span<const int> ids, std::span<const int> targets,
                       Parameters<T>& grads, const ForwardOptions& options = {}) const;

  // Mean masked cross-entropy without gradients (no output projection for
  // masked positions).
  double loss_sum(std::span<const int> ids, std::span<const int> targets, int& count) const;

 private:
  void check_ids(std::span<const int> ids) const;

  ModelConfig config_;
  Parameters<T> params_;
};

// Mean token-level cross-entropy over unmasked positions (targets < 0 are
// masked). Throws InvalidArgument when every position is masked.
template <typename T>
T cross_entropy(const Matrix<T>& logits, std::span<const int> targets);

template <typename T>
RowVector<T> log_softmax(const RowVector<T>& logits);

struct AdamOptions {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with a caller-supplied constant learning rate.
template <typename T>
class Adam {
 public:
  Adam() = default;
  Adam(const Parameters<T>& like, AdamOptions options = {});

  // Throws NumericError naming the tensor when a gradient is NaN/Inf; the
  // parameters and moments are left untouched in that case.
  void step(Parameters<T>& params, const Parameters<T>& grads, double learning_rate);

  std::int64_t steps() const { return step_; }

 private:
  AdamOptions options_;
  Parameters<T> m_;
  Parameters<T> v_;
  std::int64_t step_ = 0;
};

// Scales grads so their global L2 norm is at most max_norm; returns the
// pre-clipping norm.
template <typename T>
double clip_global_norm(Parameters<T>& grads, double max_norm);

}  // namespace xfer
