#include "xfer/model.h"

#include <cmath>
#include <limits>
#include <random>

#include "xfer/error.h"

namespace xfer {

// --- ModelConfig -----------------------------------------------------------

void ModelConfig::validate() const {
  if (vocab_size <= 0) throw InvalidArgument("vocab_size must be positive");
  if (context_len < 2) throw InvalidArgument("context_len must be at least 2");
  if (d_model <= 0 || n_heads <= 0 || n_layers <= 0 || d_ff <= 0) {
    throw InvalidArgument("model dimensions must be positive");
  }
  if (d_model % n_heads != 0) throw InvalidArgument("d_model must be divisible by n_heads");
  if (!(dropout >= 0.0 && dropout < 1.0)) throw InvalidArgument("dropout must lie in [0, 1)");
}

ModelConfig ModelConfig::desk_default(int vocab_size) {
  ModelConfig c;
  c.vocab_size = vocab_size;
  return c;
}

nlohmann::json ModelConfig::to_json() const {
  return {{"vocab_size", vocab_size}, {"context_len", context_len}, {"d_model", d_model},
          {"n_heads", n_heads},       {"n_layers", n_layers},       {"d_ff", d_ff},
          {"dropout", dropout},       {"seed", seed}};
}

ModelConfig ModelConfig::from_json(const nlohmann::json& j) {
  ModelConfig c;
  c.vocab_size = j.value("vocab_size", 0);
  c.context_len = j.value("context_len", c.context_len);
  c.d_model = j.value("d_model", c.d_model);
  c.n_heads = j.value("n_heads", c.n_heads);
  c.n_layers = j.value("n_layers", c.n_layers);
  c.d_ff = j.value("d_ff", c.d_ff);
  c.dropout = j.value("dropout", c.dropout);
  c.seed = j.value("seed", c.seed);
  return c;
}

// --- Parameters --------------------------------------------------------------

template <typename T>
int Parameters<T>::add(std::string name, Eigen::Index rows, Eigen::Index cols) {
  const int id = static_cast<int>(tensors_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  tensors_.push_back(Matrix<T>::Zero(rows, cols));
  return id;
}

template <typename T>
void Parameters<T>::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<int>(i));
}

template <typename T>
Parameters<T>::Parameters(const ModelConfig& c) {
  c.validate();
  wte = add("wte", c.vocab_size, c.d_model);
  wpe = add("wpe", c.context_len, c.d_model);
  for (int l = 0; l < c.n_layers; ++l) {
    const std::string p = "h" + std::to_string(l) + ".";
    Block b{};
    b.ln1_g = add(p + "ln1.g", 1, c.d_model);
    b.ln1_b = add(p + "ln1.b", 1, c.d_model);
    b.w_qkv = add(p + "attn.w_qkv", c.d_model, 3 * c.d_model);
    b.b_qkv = add(p + "attn.b_qkv", 1, 3 * c.d_model);
    b.w_attn_proj = add(p + "attn.w_proj", c.d_model, c.d_model);
    b.b_attn_proj = add(p + "attn.b_proj", 1, c.d_model);
    b.ln2_g = add(p + "ln2.g", 1, c.d_model);
    b.ln2_b = add(p + "ln2.b", 1, c.d_model);
    b.w_fc = add(p + "mlp.w_fc", c.d_model, c.d_ff);
    b.b_fc = add(p + "mlp.b_fc", 1, c.d_ff);
    b.w_mlp_proj = add(p + "mlp.w_proj", c.d_ff, c.d_model);
    b.b_mlp_proj = add(p + "mlp.b_proj", 1, c.d_model);
    blocks.push_back(b);
  }
  lnf_g = add("ln_f.g", 1, c.d_model);
  lnf_b = add("ln_f.b", 1, c.d_model);
}

template <typename T>
Parameters<T> Parameters<T>::initialized(const ModelConfig& c) {
  Parameters<T> p(c);
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto fill = [&](int id, double stddev) {
    Matrix<T>& m = p.tensor(static_cast<std::size_t>(id));
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<T>(normal(rng) * stddev);
  };
  const double base = 0.02;
  const double resid = base / std::sqrt(2.0 * c.n_layers);
  fill(p.wte, base);
  fill(p.wpe, 0.01);
  for (const Block& b : p.blocks) {
    p.tensor(b.ln1_g).setOnes();
    p.tensor(b.ln2_g).setOnes();
    fill(b.w_qkv, base);
    fill(b.w_attn_proj, resid);
    fill(b.w_fc, base);
    fill(b.w_mlp_proj, resid);
  }
  p.tensor(p.lnf_g).setOnes();
  return p;
}

template <typename T>
Matrix<T>& Parameters<T>::get(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InvalidArgument("no parameter named '" + std::string(name) + "'");
  return tensors_[static_cast<std::size_t>(it->second)];
}

template <typename T>
const Matrix<T>& Parameters<T>::get(std::string_view name) const {
  return const_cast<Parameters<T>*>(this)->get(name);
}

template <typename T>
std::size_t Parameters<T>::total_size() const {
  std::size_t n = 0;
  for (const auto& t : tensors_) n += static_cast<std::size_t>(t.size());
  return n;
}

template <typename T>
void Parameters<T>::set_zero() {
  for (auto& t : tensors_) t.setZero();
}

template <typename T>
bool Parameters<T>::operator==(const Parameters& other) const {
  if (names_ != other.names_) return false;
  for (std::size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].rows() != other.tensors_[i].rows() ||
        tensors_[i].cols() != other.tensors_[i].cols() || tensors_[i] != other.tensors_[i]) {
      return false;
    }
  }
  return true;
}

// --- Kernels -----------------------------------------------------------------

namespace {

template <typename T>
using ColVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

constexpr double kLayerNormEps = 1e-5;

template <typename T>
Matrix<T> layer_norm(const Matrix<T>& x, const Matrix<T>& g, const Matrix<T>& b,
                     Matrix<T>* xhat_out, ColVector<T>* rstd_out) {
  const Eigen::Index d = x.cols();
  ColVector<T> mean = x.rowwise().mean();
  Matrix<T> xc = x.colwise() - mean;
  ColVector<T> var = xc.array().square().rowwise().sum() / static_cast<T>(d);
  ColVector<T> rstd = (var.array() + static_cast<T>(kLayerNormEps)).rsqrt();
  Matrix<T> xhat = xc.array().colwise() * rstd.array();
  Matrix<T> y = (xhat.array().rowwise() * g.row(0).array()).rowwise() + b.row(0).array();
  if (xhat_out) *xhat_out = std::move(xhat);
  if (rstd_out) *rstd_out = std::move(rstd);
  return y;
}

// dx from dy; accumulates dg, db.
template <typename T>
Matrix<T> layer_norm_backward(const Matrix<T>& dy, const Matrix<T>& xhat,
                              const ColVector<T>& rstd, const Matrix<T>& g, Matrix<T>& dg,
                              Matrix<T>& db) {
  dg.row(0) += (dy.array() * xhat.array()).colwise().sum().matrix();
  db.row(0) += dy.colwise().sum();
  Matrix<T> dxhat = dy.array().rowwise() * g.row(0).array();
  const T inv_d = static_cast<T>(1) / static_cast<T>(dy.cols());
  ColVector<T> mean_dxhat = dxhat.rowwise().sum() * inv_d;
  ColVector<T> mean_dxhat_xhat = (dxhat.array() * xhat.array()).rowwise().sum().matrix() * inv_d;
  Matrix<T> dx = dxhat;
  dx.colwise() -= mean_dxhat;
  dx.array() -= xhat.array().colwise() * mean_dxhat_xhat.array();
  dx.array().colwise() *= rstd.array();
  return dx;
}

template <typename T>
T gelu(T x) {
  const T c = static_cast<T>(0.7978845608028654);
  const T k = static_cast<T>(0.044715);
  return static_cast<T>(0.5) * x * (static_cast<T>(1) + std::tanh(c * (x + k * x * x * x)));
}

template <typename T>
T gelu_grad(T x) {
  const T c = static_cast<T>(0.7978845608028654);
  const T k = static_cast<T>(0.044715);
  const T t = std::tanh(c * (x + k * x * x * x));
  return static_cast<T>(0.5) * (static_cast<T>(1) + t) +
         static_cast<T>(0.5) * x * (static_cast<T>(1) - t * t) * c *
             (static_cast<T>(1) + static_cast<T>(3) * k * x * x);
}

template <typename T>
Matrix<T> dropout_mask(Eigen::Index rows, Eigen::Index cols, double p, std::mt19937_64& rng) {
  Matrix<T> m(rows, cols);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const T keep = static_cast<T>(1.0 / (1.0 - p));
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng) < p ? T(0) : keep;
  return m;
}

template <typename T>
void causal_softmax_rows(Matrix<T>& s) {
  const Eigen::Index n = s.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    T mx = s(i, 0);
    for (Eigen::Index j = 1; j <= i; ++j) mx = std::max(mx, s(i, j));
    T sum = 0;
    for (Eigen::Index j = 0; j <= i; ++j) {
      const T e = std::exp(s(i, j) - mx);
      s(i, j) = e;
      sum += e;
    }
    const T inv = static_cast<T>(1) / sum;
    for (Eigen::Index j = 0; j <= i; ++j) s(i, j) *= inv;
    for (Eigen::Index j = i + 1; j < s.cols(); ++j) s(i, j) = 0;
  }
}

template <typename T>
struct BlockTrace {
  Matrix<T> x_in, xhat1, a1, qkv, attn_cat, xhat2, a2, h_pre, h_act;
  ColVector<T> rstd1, rstd2;
  std::vector<Matrix<T>> probs;
  Matrix<T> attn_mask, mlp_mask;
};

template <typename T>
struct Trace {
  Matrix<T> emb_mask;
  std::vector<BlockTrace<T>> blocks;
  Matrix<T> xhatf;
  ColVector<T> rstdf;
};

// Runs the stack and returns the final layer-norm output [T x d]. When
// `trace` is given, records what the backward pass needs; when `kv` is given,
// records per-layer keys and values.
template <typename T>
Matrix<T> run_stack(const ModelConfig& c, const Parameters<T>& p, std::span<const int> ids,
                    const ForwardOptions& opt, Trace<T>* trace, KvCache<T>* kv) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  const Eigen::Index d = c.d_model;
  const Eigen::Index hd = c.head_dim();
  const T scale = static_cast<T>(1.0 / std::sqrt(static_cast<double>(hd)));
  const bool drop = opt.mode == Mode::kTrain && c.dropout > 0.0;
  std::mt19937_64 rng(opt.dropout_seed);

  const Matrix<T>& wte = p.tensor(p.wte);
  const Matrix<T>& wpe = p.tensor(p.wpe);
  Matrix<T> x(n, d);
  for (Eigen::Index i = 0; i < n; ++i) x.row(i) = wte.row(ids[i]) + wpe.row(i);
  if (drop) {
    Matrix<T> m = dropout_mask<T>(n, d, c.dropout, rng);
    x.array() *= m.array();
    if (trace) trace->emb_mask = std::move(m);
  }
  if (trace) trace->blocks.resize(p.blocks.size());
  if (kv) {
    kv->keys.clear();
    kv->values.clear();
    kv->length = static_cast<int>(n);
  }

  for (std::size_t l = 0; l < p.blocks.size(); ++l) {
    const auto& b = p.blocks[l];
    BlockTrace<T> local;
    BlockTrace<T>& bt = trace ? trace->blocks[l] : local;
    if (trace) bt.x_in = x;

    Matrix<T> a1 = layer_norm<T>(x, p.tensor(b.ln1_g), p.tensor(b.ln1_b),
                              trace ? &bt.xhat1 : nullptr, trace ? &bt.rstd1 : nullptr);
    Matrix<T> qkv = a1 * p.tensor(b.w_qkv);
    qkv.rowwise() += p.tensor(b.b_qkv).row(0);
    if (kv) {
      kv->keys.push_back(qkv.middleCols(d, d));
      kv->values.push_back(qkv.middleCols(2 * d, d));
    }
    Matrix<T> attn_cat(n, d);
    if (trace) bt.probs.resize(static_cast<std::size_t>(c.n_heads));
    for (int h = 0; h < c.n_heads; ++h) {
      const auto q = qkv.middleCols(h * hd, hd);
      const auto k = qkv.middleCols(d + h * hd, hd);
      const auto v = qkv.middleCols(2 * d + h * hd, hd);
      Matrix<T> s = (q * k.transpose()) * scale;
      causal_softmax_rows(s);
      attn_cat.middleCols(h * hd, hd).noalias() = s * v;
      if (trace) bt.probs[static_cast<std::size_t>(h)] = std::move(s);
    }
    Matrix<T> attn_out = attn_cat * p.tensor(b.w_attn_proj);
    attn_out.rowwise() += p.tensor(b.b_attn_proj).row(0);
    if (drop) {
      Matrix<T> m = dropout_mask<T>(n, d, c.dropout, rng);
      attn_out.array() *= m.array();
      if (trace) bt.attn_mask = std::move(m);
    }
    x += attn_out;

    Matrix<T> a2 = layer_norm<T>(x, p.tensor(b.ln2_g), p.tensor(b.ln2_b),
                              trace ? &bt.xhat2 : nullptr, trace ? &bt.rstd2 : nullptr);
    Matrix<T> h_pre = a2 * p.tensor(b.w_fc);
    h_pre.rowwise() += p.tensor(b.b_fc).row(0);
    Matrix<T> h_act = h_pre.unaryExpr([](T v) { return gelu(v); });
    Matrix<T> mlp = h_act * p.tensor(b.w_mlp_proj);
    mlp.rowwise() += p.tensor(b.b_mlp_proj).row(0);
    if (drop) {
      Matrix<T> m = dropout_mask<T>(n, d, c.dropout, rng);
      mlp.array() *= m.array();
      if (trace) bt.mlp_mask = std::move(m);
    }
    x += mlp;

    if (trace) {
      bt.a1 = std::move(a1);
      bt.qkv = std::move(qkv);
      bt.attn_cat = std::move(attn_cat);
      bt.a2 = std::move(a2);
      bt.h_pre = std::move(h_pre);
      bt.h_act = std::move(h_act);
    }
  }
  return layer_norm(x, p.tensor(p.lnf_g), p.tensor(p.lnf_b), trace ? &trace->xhatf : nullptr,
                    trace ? &trace->rstdf : nullptr);
}

template <typename T>
void backward_stack(const ModelConfig& c, const Parameters<T>& p, std::span<const int> ids,
                    const Trace<T>& tr, const Matrix<T>& dyf, Parameters<T>& g) {
  const Eigen::Index n = dyf.rows();
  const Eigen::Index d = c.d_model;
  const Eigen::Index hd = c.head_dim();
  const T scale = static_cast<T>(1.0 / std::sqrt(static_cast<double>(hd)));

  Matrix<T> dx = layer_norm_backward(dyf, tr.xhatf, tr.rstdf, p.tensor(p.lnf_g),
                                     g.tensor(p.lnf_g), g.tensor(p.lnf_b));
  for (std::size_t li = p.blocks.size(); li-- > 0;) {
    const auto& b = p.blocks[li];
    const BlockTrace<T>& bt = tr.blocks[li];

    // MLP branch.
    Matrix<T> dmlp = dx;
    if (bt.mlp_mask.size()) dmlp.array() *= bt.mlp_mask.array();
    g.tensor(b.w_mlp_proj).noalias() += bt.h_act.transpose() * dmlp;
    g.tensor(b.b_mlp_proj).row(0) += dmlp.colwise().sum();
    Matrix<T> dh = dmlp * p.tensor(b.w_mlp_proj).transpose();
    dh.array() *= bt.h_pre.unaryExpr([](T v) { return gelu_grad(v); }).array();
    g.tensor(b.w_fc).noalias() += bt.a2.transpose() * dh;
    g.tensor(b.b_fc).row(0) += dh.colwise().sum();
    Matrix<T> da2 = dh * p.tensor(b.w_fc).transpose();
    dx += layer_norm_backward(da2, bt.xhat2, bt.rstd2, p.tensor(b.ln2_g), g.tensor(b.ln2_g),
                              g.tensor(b.ln2_b));

    // Attention branch.
    Matrix<T> dattn = dx;
    if (bt.attn_mask.size()) dattn.array() *= bt.attn_mask.array();
    g.tensor(b.w_attn_proj).noalias() += bt.attn_cat.transpose() * dattn;
    g.tensor(b.b_attn_proj).row(0) += dattn.colwise().sum();
    Matrix<T> dcat = dattn * p.tensor(b.w_attn_proj).transpose();
    Matrix<T> dqkv(n, 3 * d);
    for (int h = 0; h < c.n_heads; ++h) {
      const Matrix<T>& prob = bt.probs[static_cast<std::size_t>(h)];
      const auto q = bt.qkv.middleCols(h * hd, hd);
      const auto k = bt.qkv.middleCols(d + h * hd, hd);
      const auto v = bt.qkv.middleCols(2 * d + h * hd, hd);
      const auto d_out = dcat.middleCols(h * hd, hd);
      Matrix<T> dprob = d_out * v.transpose();
      dqkv.middleCols(2 * d + h * hd, hd).noalias() = prob.transpose() * d_out;
      ColVector<T> row_dot = (dprob.array() * prob.array()).rowwise().sum();
      Matrix<T> ds = prob.array() * (dprob.colwise() - row_dot).array();
      ds *= scale;
      dqkv.middleCols(h * hd, hd).noalias() = ds * k;
      dqkv.middleCols(d + h * hd, hd).noalias() = ds.transpose() * q;
    }
    g.tensor(b.w_qkv).noalias() += bt.a1.transpose() * dqkv;
    g.tensor(b.b_qkv).row(0) += dqkv.colwise().sum();
    Matrix<T> da1 = dqkv * p.tensor(b.w_qkv).transpose();
    dx += layer_norm_backward(da1, bt.xhat1, bt.rstd1, p.tensor(b.ln1_g), g.tensor(b.ln1_g),
                              g.tensor(b.ln1_b));
  }
  if (tr.emb_mask.size()) dx.array() *= tr.emb_mask.array();
  Matrix<T>& gwte = g.tensor(p.wte);
  Matrix<T>& gwpe = g.tensor(p.wpe);
  for (Eigen::Index i = 0; i < n; ++i) {
    gwte.row(ids[static_cast<std::size_t>(i)]) += dx.row(i);
    gwpe.row(i) += dx.row(i);
  }
}

template <typename T>
T row_logsumexp(const Eigen::Ref<const RowVector<T>>& row) {
  const T mx = row.maxCoeff();
  return mx + std::log((row.array() - mx).exp().sum());
}

}  // namespace

// --- Transformer -----------------------------------------------------------

template <typename T>
Transformer<T>::Transformer(ModelConfig config, Parameters<T> params)
    : config_(std::move(config)), params_(std::move(params)) {
  config_.validate();
  const Parameters<T> shape(config_);
  if (shape.count() != params_.count()) {
    throw InvalidArgument("parameter set does not match the model config");
  }
  for (std::size_t i = 0; i < shape.count(); ++i) {
    if (shape.name(i) != params_.name(i) || shape.tensor(i).rows() != params_.tensor(i).rows() ||
        shape.tensor(i).cols() != params_.tensor(i).cols()) {
      throw InvalidArgument("tensor '" + params_.name(i) + "' has the wrong shape for the config");
    }
  }
}

template <typename T>
void Transformer<T>::check_ids(std::span<const int> ids) const {
  if (ids.empty()) throw InvalidArgument("empty input sequence");
  if (ids.size() > static_cast<std::size_t>(config_.context_len)) {
    throw InvalidArgument("sequence of " + std::to_string(ids.size()) +
                          " ids exceeds context_len " + std::to_string(config_.context_len));
  }
  for (int id : ids) {
    if (id < 0 || id >= config_.vocab_size) {
      throw InvalidArgument("token id " + std::to_string(id) + " out of range");
    }
  }
}

template <typename T>
Matrix<T> Transformer<T>::forward(std::span<const int> ids, const ForwardOptions& options) const {
  check_ids(ids);
  const Matrix<T> y = run_stack<T>(config_, params_, ids, options, nullptr, nullptr);
  return y * params_.tensor(params_.wte).transpose();
}

template <typename T>
RowVector<T> Transformer<T>::next_token_logprobs(std::span<const int> context_ids) const {
  if (context_ids.empty()) throw InvalidArgument("empty context");
  RowVector<T> logits;
  prefill(context_ids, &logits);
  return log_softmax<T>(logits);
}

template <typename T>
KvCache<T> Transformer<T>::prefill(std::span<const int> ids, RowVector<T>* last_logits) const {
  check_ids(ids);
  KvCache<T> cache;
  const Matrix<T> y = run_stack<T>(config_, params_, ids, ForwardOptions{}, nullptr, &cache);
  if (last_logits) {
    *last_logits = y.row(y.rows() - 1) * params_.tensor(params_.wte).transpose();
  }
  return cache;
}

template <typename T>
Matrix<T> Transformer<T>::extend(const KvCache<T>& cache, std::span<const int> next_ids) const {
  const auto& p = params_;
  const Eigen::Index r = static_cast<Eigen::Index>(next_ids.size());
  const Eigen::Index len = cache.length;
  if (len + 1 > config_.context_len) {
    throw InvalidArgument("cannot extend: cache already fills the context");
  }
  for (int id : next_ids) {
    if (id < 0 || id >= config_.vocab_size) {
      throw InvalidArgument("token id " + std::to_string(id) + " out of range");
    }
  }
  if (r == 0) return Matrix<T>(0, config_.vocab_size);
  const Eigen::Index d = config_.d_model;
  const Eigen::Index hd = config_.head_dim();
  const T scale = static_cast<T>(1.0 / std::sqrt(static_cast<double>(hd)));

  Matrix<T> x(r, d);
  for (Eigen::Index i = 0; i < r; ++i) {
    x.row(i) = p.tensor(p.wte).row(next_ids[static_cast<std::size_t>(i)]) +
               p.tensor(p.wpe).row(len);
  }
  for (std::size_t l = 0; l < p.blocks.size(); ++l) {
    const auto& b = p.blocks[l];
    const Matrix<T>& kc = cache.keys[l];
    const Matrix<T>& vc = cache.values[l];
    Matrix<T> a1 = layer_norm<T>(x, p.tensor(b.ln1_g), p.tensor(b.ln1_b), nullptr, nullptr);
    Matrix<T> qkv = a1 * p.tensor(b.w_qkv);
    qkv.rowwise() += p.tensor(b.b_qkv).row(0);
    Matrix<T> attn_cat(r, d);
    for (int h = 0; h < config_.n_heads; ++h) {
      const auto q = qkv.middleCols(h * hd, hd);
      const auto k_self = qkv.middleCols(d + h * hd, hd);
      const auto v_self = qkv.middleCols(2 * d + h * hd, hd);
      Matrix<T> s = (q * kc.middleCols(h * hd, hd).transpose()) * scale;  // [r x len]
      ColVector<T> s_self = (q.array() * k_self.array()).rowwise().sum() * scale;
      ColVector<T> mx = s.rowwise().maxCoeff().cwiseMax(s_self);
      s = (s.colwise() - mx).array().exp();
      ColVector<T> e_self = (s_self - mx).array().exp();
      ColVector<T> inv = (s.rowwise().sum() + e_self).cwiseInverse();
      s.array().colwise() *= inv.array();
      e_self.array() *= inv.array();
      auto out = attn_cat.middleCols(h * hd, hd);
      out.noalias() = s * vc.middleCols(h * hd, hd);
      out += (v_self.array().colwise() * e_self.array()).matrix();
    }
    Matrix<T> attn_out = attn_cat * p.tensor(b.w_attn_proj);
    attn_out.rowwise() += p.tensor(b.b_attn_proj).row(0);
    x += attn_out;
    Matrix<T> a2 = layer_norm<T>(x, p.tensor(b.ln2_g), p.tensor(b.ln2_b), nullptr, nullptr);
    Matrix<T> h_pre = a2 * p.tensor(b.w_fc);
    h_pre.rowwise() += p.tensor(b.b_fc).row(0);
    Matrix<T> mlp = h_pre.unaryExpr([](T v) { return gelu(v); }) * p.tensor(b.w_mlp_proj);
    mlp.rowwise() += p.tensor(b.b_mlp_proj).row(0);
    x += mlp;
  }
  const Matrix<T> y = layer_norm<T>(x, p.tensor(p.lnf_g), p.tensor(p.lnf_b), nullptr, nullptr);
  return y * p.tensor(p.wte).transpose();
}

template <typename T>
double Transformer<T>::accumulate_gradients(std::span<const int> ids,
                                            std::span<const int> targets, T scale,
                                            Parameters<T>& grads, int& count,
                                            const ForwardOptions& options) const {
  check_ids(ids);
  if (targets.size() != ids.size()) throw InvalidArgument("targets and ids differ in length");
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= 0) {
      if (targets[i] >= config_.vocab_size) throw InvalidArgument("target id out of range");
      rows.push_back(static_cast<Eigen::Index>(i));
    }
  }
  count = static_cast<int>(rows.size());
  if (rows.empty()) return 0.0;

  Trace<T> trace;
  const Matrix<T> y = run_stack<T>(config_, params_, ids, options, &trace, nullptr);
  const Matrix<T>& wte = params_.tensor(params_.wte);
  const auto m = static_cast<Eigen::Index>(rows.size());
  Matrix<T> ysel(m, config_.d_model);
  for (Eigen::Index k = 0; k < m; ++k) ysel.row(k) = y.row(rows[static_cast<std::size_t>(k)]);
  Matrix<T> logits = ysel * wte.transpose();
  double loss = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    auto row = logits.row(k);
    const T mx = row.maxCoeff();
    row.array() = (row.array() - mx).exp();
    const T sum = row.sum();
    row /= sum;
    const int t = targets[static_cast<std::size_t>(rows[static_cast<std::size_t>(k)])];
    loss -= std::log(static_cast<double>(row(t)));
    row(t) -= static_cast<T>(1);
  }
  logits *= scale;  // now d(loss * scale)/d(logits)
  grads.tensor(params_.wte).noalias() += logits.transpose() * ysel;
  Matrix<T> dysel = logits * wte;
  Matrix<T> dy = Matrix<T>::Zero(y.rows(), y.cols());
  for (Eigen::Index k = 0; k < m; ++k) dy.row(rows[static_cast<std::size_t>(k)]) = dysel.row(k);
  backward_stack<T>(config_, params_, ids, trace, dy, grads);
  return loss;
}

template <typename T>
T Transformer<T>::loss_and_gradients(std::span<const int> ids, std::span<const int> targets,
                                     Parameters<T>& grads, const ForwardOptions& options) const {
  int count = 0;
  std::vector<int> probe(targets.begin(), targets.end());
  const auto unmasked = std::count_if(probe.begin(), probe.end(), [](int t) { return t >= 0; });
  if (unmasked == 0) throw InvalidArgument("every target position is masked");
  const double total = accumulate_gradients(ids, targets, static_cast<T>(1.0 / unmasked), grads,
                                            count, options);
  return static_cast<T>(total / count);
}

template <typename T>
double Transformer<T>::loss_sum(std::span<const int> ids, std::span<const int> targets,
                                int& count) const {
  check_ids(ids);
  if (targets.size() != ids.size()) throw InvalidArgument("targets and ids differ in length");
  const Matrix<T> y = run_stack<T>(config_, params_, ids, ForwardOptions{}, nullptr, nullptr);
  const Matrix<T>& wte = params_.tensor(params_.wte);
  double loss = 0.0;
  count = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0) continue;
    const RowVector<T> logits = y.row(static_cast<Eigen::Index>(i)) * wte.transpose();
    loss += static_cast<double>(row_logsumexp<T>(logits) - logits(targets[i]));
    ++count;
  }
  return loss;
}

template <typename T>
T cross_entropy(const Matrix<T>& logits, std::span<const int> targets) {
  if (static_cast<Eigen::Index>(targets.size()) != logits.rows()) {
    throw InvalidArgument("targets and logits differ in length");
  }
  T total = 0;
  int count = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0) continue;
    const auto row = logits.row(static_cast<Eigen::Index>(i));
    total += row_logsumexp<T>(row) - row(targets[i]);
    ++count;
  }
  if (count == 0) throw InvalidArgument("every target position is masked");
  return total / static_cast<T>(count);
}

template <typename T>
RowVector<T> log_softmax(const RowVector<T>& logits) {
  return logits.array() - row_logsumexp<T>(logits);
}

// --- Optimizer ---------------------------------------------------------------

template <typename T>
Adam<T>::Adam(const Parameters<T>& like, AdamOptions options)
    : options_(options), m_(like), v_(like) {
  m_.set_zero();
  v_.set_zero();
}

template <typename T>
void Adam<T>::step(Parameters<T>& params, const Parameters<T>& grads, double learning_rate) {
  for (std::size_t i = 0; i < grads.count(); ++i) {
    if (!grads.tensor(i).allFinite()) {
      throw NumericError("non-finite gradient in tensor '" + grads.name(i) + "' at step " +
                         std::to_string(step_ + 1) + "; update skipped");
    }
  }
  ++step_;
  const double b1 = options_.beta1;
  const double b2 = options_.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(step_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(step_));
  const T tb1 = static_cast<T>(b1), tb2 = static_cast<T>(b2);
  const T step_size = static_cast<T>(learning_rate / c1);
  const T inv_sqrt_c2 = static_cast<T>(1.0 / std::sqrt(c2));
  const T eps = static_cast<T>(options_.epsilon);
  for (std::size_t i = 0; i < params.count(); ++i) {
    auto g = grads.tensor(i).array();
    auto m = m_.tensor(i).array();
    auto v = v_.tensor(i).array();
    m = tb1 * m + (static_cast<T>(1) - tb1) * g;
    v = tb2 * v + (static_cast<T>(1) - tb2) * g.square();
    params.tensor(i).array() -= step_size * m / (v.sqrt() * inv_sqrt_c2 + eps);
  }
}

template <typename T>
double clip_global_norm(Parameters<T>& grads, double max_norm) {
  double sq = 0.0;
  for (std::size_t i = 0; i < grads.count(); ++i) {
    sq += static_cast<double>(grads.tensor(i).squaredNorm());
  }
  const double norm = std::sqrt(sq);
  if (max_norm > 0.0 && norm > max_norm) {
    const T s = static_cast<T>(max_norm / norm);
    for (std::size_t i = 0; i < grads.count(); ++i) grads.tensor(i) *= s;
  }
  return norm;
}

template class Parameters<float>;
template class Parameters<double>;
template class Transformer<float>;
template class Transformer<double>;
template class Adam<float>;
template class Adam<double>;
template float cross_entropy<float>(const Matrix<float>&, std::span<const int>);
template double cross_entropy<double>(const Matrix<double>&, std::span<const int>);
template RowVector<float> log_softmax<float>(const RowVector<float>&);
template RowVector<double> log_softmax<double>(const RowVector<double>&);
template double clip_global_norm<float>(Parameters<float>&, double);
template double clip_global_norm<double>(Parameters<double>&, double);

}  // namespace xfer
