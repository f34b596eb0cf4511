#include "doctest.h"
#include "oracles.h"
#include "xfer/error.h"
#include "xfer/model.h"

using namespace xfer;

namespace {

ModelConfig small_config(int vocab = 31) {
  ModelConfig c;
  c.vocab_size = vocab;
  c.context_len = 12;
  c.d_model = 16;
  c.n_heads = 4;
  c.n_layers = 2;
  c.d_ff = 24;
  c.seed = 3;
  return c;
}

std::vector<int> random_ids(int n, int vocab, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, vocab - 1);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int& x : out) x = d(rng);
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  ModelConfig c = small_config();
  CHECK_NOTHROW(c.validate());
  c.n_heads = 5;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.context_len = 1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = small_config();
  c.dropout = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  CHECK(ModelConfig::from_json(small_config().to_json()) == small_config());
}

TEST_CASE("forward shape, normalization and errors") {
  const ModelConfig c = small_config();
  const Transformer<float> m(c, Parameters<float>::initialized(c));
  const std::vector<int> one = {4};
  const Matrix<float> l1 = m.forward(one);
  CHECK(l1.rows() == 1);
  CHECK(l1.cols() == c.vocab_size);

  const auto ids = random_ids(10, c.vocab_size, 1);
  const Matrix<float> logits = m.forward(ids);
  for (Eigen::Index p = 0; p < logits.rows(); ++p) {
    const RowVector<float> lp = log_softmax<float>(logits.row(p));
    CHECK(std::abs(lp.array().exp().sum() - 1.0f) < 1e-6);
  }
  CHECK_THROWS_AS(m.forward(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(m.forward(random_ids(13, c.vocab_size, 2)), InvalidArgument);
  CHECK_THROWS_AS(m.forward(std::vector<int>{c.vocab_size}), InvalidArgument);
  CHECK_THROWS_AS(m.next_token_logprobs(std::vector<int>{}), InvalidArgument);
}

TEST_CASE("causality: perturbing ids[k] leaves earlier logits unchanged") {
  const ModelConfig c = small_config();
  const Transformer<double> m(c, Parameters<double>::initialized(c));
  for (int trial = 0; trial < 20; ++trial) {
    auto ids = random_ids(12, c.vocab_size, 100 + trial);
    const Matrix<double> before = m.forward(ids);
    const int k = trial % 12;
    ids[static_cast<std::size_t>(k)] = (ids[static_cast<std::size_t>(k)] + 1) % c.vocab_size;
    const Matrix<double> after = m.forward(ids);
    CHECK(before.topRows(k) == after.topRows(k));
    CHECK_FALSE(before.row(k) == after.row(k));
  }
}

TEST_CASE("infer mode is deterministic; train mode applies dropout") {
  ModelConfig c = small_config();
  c.dropout = 0.2;
  const Transformer<float> m(c, Parameters<float>::initialized(c));
  const auto ids = random_ids(8, c.vocab_size, 4);
  CHECK(m.forward(ids) == m.forward(ids));
  const Matrix<float> t1 = m.forward(ids, {Mode::kTrain, 1});
  CHECK(t1 == m.forward(ids, {Mode::kTrain, 1}));
  CHECK_FALSE(t1 == m.forward(ids, {Mode::kTrain, 2}));
  CHECK_FALSE(t1 == m.forward(ids));
}

TEST_CASE("cross entropy: analytic values and naive oracle") {
  Matrix<double> uniform = Matrix<double>::Zero(3, 16);
  const std::vector<int> t = {1, 5, 9};
  CHECK(cross_entropy<double>(uniform, t) == doctest::Approx(std::log(16.0)).epsilon(1e-12));

  Matrix<double> sharp = Matrix<double>::Zero(2, 16);
  sharp(0, 3) = 100;
  sharp(1, 7) = 100;
  CHECK(cross_entropy<double>(sharp, std::vector<int>{3, 7}) < 1e-12);
  CHECK_THROWS_AS(cross_entropy<double>(sharp, std::vector<int>{-1, -1}), InvalidArgument);

  const ModelConfig c = small_config();
  const Transformer<double> m(c, Parameters<double>::initialized(c));
  const auto ids = random_ids(12, c.vocab_size, 7);
  auto targets = random_ids(12, c.vocab_size, 8);
  targets[0] = -1;
  const double naive = oracle::masked_mean_loss(m, ids, targets, {});
  CHECK(std::abs(cross_entropy<double>(m.forward(ids), targets) - naive) < 1e-8);
  int count = 0;
  const double sum = m.loss_sum(ids, targets, count);
  CHECK(count == 11);
  CHECK(std::abs(sum / count - naive) < 1e-8);
}

TEST_CASE("next_token_logprobs matches forward + manual log-softmax") {
  const ModelConfig c = small_config();
  const Transformer<double> m(c, Parameters<double>::initialized(c));
  const auto ids = random_ids(9, c.vocab_size, 9);
  const RowVector<double> lp = m.next_token_logprobs(ids);
  const Matrix<double> logits = m.forward(ids);
  const RowVector<double> last = logits.row(8);
  const double lse = std::log((last.array() - last.maxCoeff()).exp().sum()) + last.maxCoeff();
  for (Eigen::Index v = 0; v < lp.size(); ++v) CHECK(std::abs(lp(v) - (last(v) - lse)) < 1e-10);
  Eigen::Index a = 0, b = 0;
  lp.maxCoeff(&a);
  last.maxCoeff(&b);
  CHECK(a == b);
  CHECK(std::abs(std::log(lp.array().exp().sum())) < 1e-6);
}

TEST_CASE("prefill + extend equals full forward") {
  const ModelConfig c = small_config();
  const Transformer<double> m(c, Parameters<double>::initialized(c));
  const auto ctx = random_ids(7, c.vocab_size, 10);
  RowVector<double> last;
  const KvCache<double> cache = m.prefill(ctx, &last);
  CHECK(cache.length == 7);
  const Matrix<double> full = m.forward(ctx);
  CHECK((last - full.row(6)).cwiseAbs().maxCoeff() < 1e-12);

  const std::vector<int> next = {0, 5, 30, 5};
  const Matrix<double> ext = m.extend(cache, next);
  REQUIRE(ext.rows() == 4);
  for (std::size_t r = 0; r < next.size(); ++r) {
    auto seq = ctx;
    seq.push_back(next[r]);
    const Matrix<double> f = m.forward(seq);
    CHECK((ext.row(static_cast<Eigen::Index>(r)) - f.row(7)).cwiseAbs().maxCoeff() < 1e-10);
  }

  const KvCache<double> full_cache = m.prefill(random_ids(12, c.vocab_size, 11), nullptr);
  CHECK_THROWS_AS(m.extend(full_cache, next), InvalidArgument);
}

TEST_CASE("finite-difference gradient check on every parameter group") {
  const ModelConfig c = oracle::tiny_config();
  const auto checks = oracle::check_gradients(c, 123);
  CHECK(checks.size() == Parameters<double>(c).count());
  for (const auto& r : checks) {
    INFO(r.tensor << " analytic=" << r.analytic << " numeric=" << r.numeric);
    CHECK(r.relative_error < 1e-4);
  }
}

TEST_CASE("gradient check holds with dropout in train mode") {
  ModelConfig c = oracle::tiny_config();
  c.dropout = 0.25;
  for (const auto& r : oracle::check_gradients(c, 77, 1e-5, Mode::kTrain)) {
    INFO(r.tensor);
    CHECK(r.relative_error < 1e-4);
  }
}

TEST_CASE("gradients are deterministic") {
  const ModelConfig c = small_config();
  const Transformer<float> m(c, Parameters<float>::initialized(c));
  const auto ids = random_ids(10, c.vocab_size, 12);
  const auto targets = random_ids(10, c.vocab_size, 13);
  Parameters<float> g1(c), g2(c);
  m.loss_and_gradients(ids, targets, g1);
  m.loss_and_gradients(ids, targets, g2);
  CHECK(g1 == g2);
}

TEST_CASE("Adam: closed-form first step, zero gradients, non-finite gradients") {
  // A one-parameter model: reuse Parameters by editing a single entry.
  const ModelConfig c = small_config();
  Parameters<double> p = Parameters<double>::initialized(c);
  Parameters<double> g(c);
  Adam<double> adam(p);
  const Parameters<double> before = p;
  adam.step(p, g, 0.01);
  CHECK(p == before);

  const double theta0 = p.tensor(0)(0, 0);
  const double grad = 0.37;
  g.tensor(0)(0, 0) = grad;
  Adam<double> fresh(p);
  fresh.step(p, g, 5e-4);
  // m = 0.1 g, v = 0.001 g^2; bias-corrected m_hat = g, v_hat = g^2.
  const double m_hat = (0.1 * grad) / (1 - 0.9);
  const double v_hat = (0.001 * grad * grad) / (1 - 0.999);
  const double expect = theta0 - 5e-4 * m_hat / (std::sqrt(v_hat) + 1e-8);
  CHECK(std::abs(p.tensor(0)(0, 0) - expect) < 1e-12);

  const Parameters<double> snapshot = p;
  g.tensor(3)(0, 1) = std::numeric_limits<double>::quiet_NaN();
  try {
    fresh.step(p, g, 5e-4);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find(p.name(3)) != std::string::npos);
  }
  CHECK(p == snapshot);
  CHECK(fresh.steps() == 1);
}

TEST_CASE("overfit smoke: 200 Adam steps on two sequences") {
  const ModelConfig c = small_config(20);
  Transformer<float> m(c, Parameters<float>::initialized(c));
  const std::vector<std::vector<int>> seqs = {random_ids(12, 20, 21), random_ids(12, 20, 22)};
  auto loss_of = [&] {
    double total = 0;
    for (const auto& s : seqs) {
      std::vector<int> in(s.begin(), s.end() - 1), tgt(s.begin() + 1, s.end());
      total += cross_entropy<float>(m.forward(in), tgt);
    }
    return total / 2;
  };
  const double initial = loss_of();
  Adam<float> adam(m.params());
  for (int step = 0; step < 200; ++step) {
    Parameters<float> g(c);
    for (const auto& s : seqs) {
      std::vector<int> in(s.begin(), s.end() - 1), tgt(s.begin() + 1, s.end());
      int n = 0;
      m.accumulate_gradients(in, tgt, 1.0f / 22, g, n);
    }
    clip_global_norm(g, 1.0);
    adam.step(m.mutable_params(), g, 5e-3);
  }
  const double final_loss = loss_of();
  CHECK(final_loss < initial);
  CHECK(final_loss < 0.5 * initial);
}

TEST_CASE("clip_global_norm") {
  const ModelConfig c = small_config();
  Parameters<double> g(c);
  g.tensor(0)(0, 0) = 3;
  g.tensor(1)(0, 0) = 4;
  CHECK(clip_global_norm(g, 1.0) == doctest::Approx(5.0));
  CHECK(g.tensor(0)(0, 0) == doctest::Approx(0.6));
  CHECK(clip_global_norm(g, 10.0) == doctest::Approx(1.0));
}

TEST_CASE("parameter layout and cast") {
  const ModelConfig c = small_config();
  const Parameters<float> p = Parameters<float>::initialized(c);
  CHECK(p.name(0) == "wte");
  CHECK(p.name(1) == "wpe");
  CHECK(p.get("h1.mlp.w_fc").rows() == c.d_model);
  CHECK(p.get("h1.mlp.w_fc").cols() == c.d_ff);
  CHECK(p.count() == 2 + 12 * 2 + 2);
  CHECK_THROWS_AS(p.get("nope"), InvalidArgument);
  const Parameters<double> d = p.cast<double>();
  CHECK(d.get("ln_f.g").rows() == 1);
  CHECK(d.cast<float>() == p);
  CHECK_THROWS_AS(Transformer<float>(small_config(40), p), InvalidArgument);
}
