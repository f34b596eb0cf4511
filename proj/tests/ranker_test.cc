#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "xfer/error.h"
#include "xfer/ranker.h"

using namespace xfer;

namespace {

Vocabulary small_vocab() {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const char* t : {"get", "set", "User", "Name", "getUser", "this", "->", "(", ")", ";",
                        "=", "user", "name", "repo", "Repository", "find", "ById", "save",
                        "$user", "return", "fetch", "All"}) {
    counts[t] = 5;
  }
  return Vocabulary::from_counts(counts, 1);
}

ModelConfig ranker_config(int vocab_size) {
  ModelConfig c;
  c.vocab_size = vocab_size;
  c.context_len = 24;
  c.d_model = 16;
  c.n_heads = 2;
  c.n_layers = 2;
  c.d_ff = 32;
  c.seed = 11;
  return c;
}

// Larger weights than the default init so scores spread out.
Transformer<double> spread_model(const ModelConfig& c, std::uint64_t seed) {
  auto params = Parameters<double>::initialized(c);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.3);
  for (std::size_t i = 0; i < params.count(); ++i) {
    auto& t = params.tensor(i);
    for (Eigen::Index k = 0; k < t.size(); ++k) t.data()[k] += noise(rng);
  }
  return Transformer<double>(c, params);
}

std::vector<Token> hack_context() {
  return lex("$user = this->repo->findById(", Language::kA).tokens;
}

}  // namespace

TEST_CASE("build_tree shares roots and records skipped candidates") {
  const Vocabulary v = small_vocab();
  const std::vector<std::string> cands{"getUser", "getName", "setName", "+", "findById"};
  const auto tree = build_tree(cands, Language::kA, v, CopyTable{});
  CHECK(tree.leaf_count() == 4);
  REQUIRE(tree.skipped.size() == 1);
  CHECK(tree.skipped[0].candidate == "+");
  CHECK(tree.skipped[0].index == 3);
  CHECK_FALSE(tree.paths[3].has_value());
  // getUser is in the vocabulary whole; getName is get + Name.
  CHECK((*tree.paths[0])[1] == v.end_of_token_id());
  CHECK((*tree.paths[1])[0] == v.id_of("get"));
  CHECK((*tree.paths[1])[1] == v.id_of("Name"));
  CHECK(std::is_sorted(tree.roots.begin(), tree.roots.end(),
                       [](const auto& a, const auto& b) { return a.first_id < b.first_id; }));
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!tree.paths[i]) continue;
    const auto& p = *tree.paths[i];
    const auto root = std::find_if(tree.roots.begin(), tree.roots.end(),
                                   [&](const auto& r) { return r.first_id == p[0]; });
    REQUIRE(root != tree.roots.end());
    const auto& leaf = root->leaves.at(p[1]);
    CHECK(std::find(leaf.begin(), leaf.end(), i) != leaf.end());
  }
  CHECK(PartialTokenTree::height() == 2);
}

TEST_CASE("build_tree rejects empty and duplicate lists") {
  const Vocabulary v = small_vocab();
  CHECK_THROWS_AS(build_tree({}, Language::kA, v, CopyTable{}), InvalidArgument);
  const std::vector<std::string> dup{"getUser", "getUser"};
  CHECK_THROWS_AS(build_tree(dup, Language::kA, v, CopyTable{}), InvalidArgument);
}

TEST_CASE("candidates reuse context placeholders and are encoded independently") {
  const Vocabulary v = small_vocab();
  const auto ctx = lex("$widget = zorp", Language::kA).tokens;
  const EncodedContext ec = encode_context(ctx, Language::kA, v, 100);
  const std::vector<std::string> cands{"zorpQux", "qux_zorp", "zorp"};
  const auto tree = build_tree(cands, Language::kA, v, ec.copies);
  const int zorp = *ec.copies.lookup("zorp");
  CHECK((*tree.paths[0])[0] == v.placeholder_id(zorp));
  CHECK((*tree.paths[1])[1] == v.placeholder_id(zorp));
  // "Qux" and "qux" are fresh in both candidates and take the same next slot.
  CHECK((*tree.paths[0])[1] == v.placeholder_id(ec.copies.next_index()));
  CHECK((*tree.paths[1])[0] == v.placeholder_id(ec.copies.next_index()));
}

TEST_CASE("single candidate ranks first") {
  const Vocabulary v = small_vocab();
  const auto model = spread_model(ranker_config(v.size()), 1);
  const std::vector<std::string> cands{"save"};
  const auto ranked = rank_candidates<double>(model, v, Language::kA, hack_context(), cands);
  REQUIRE(ranked.items.size() == 1);
  CHECK(ranked.items[0].rank == 1);
  CHECK(ranked.rank_of("save") == 1);
  CHECK_FALSE(ranked.rank_of("fetch").has_value());
  CHECK(ranked.items[0].score < 0);
}

TEST_CASE("uniform model ties are broken by candidate string") {
  const Vocabulary v = small_vocab();
  const auto c = ranker_config(v.size());
  Parameters<double> zero(c);  // all-zero weights give uniform next-token logits
  const Transformer<double> model(c, zero);
  const std::vector<std::string> cands{"setName", "fetchAll", "getUser", "save"};
  const auto ranked = rank_candidates<double>(model, v, Language::kA, hack_context(), cands);
  REQUIRE(ranked.items.size() == 4);
  const double expected = -2.0 * std::log(static_cast<double>(v.size()));
  std::vector<std::string> order;
  for (const auto& s : ranked.items) {
    CHECK(s.score == doctest::Approx(expected).epsilon(1e-12));
    order.push_back(s.candidate);
  }
  CHECK(order == std::vector<std::string>{"fetchAll", "getUser", "save", "setName"});
}

TEST_CASE("tree scoring matches one forward pass per candidate") {
  const Vocabulary v = small_vocab();
  const auto c = ranker_config(v.size());
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = spread_model(c, 100 + static_cast<std::uint64_t>(trial));
    std::vector<std::string> cands{"getUser", "getName", "setName", "findById", "fetchAll",
                                   "return",  "repoZap", "zapZap",  "+",        "save"};
    for (int i = 0; i < 10; ++i) {
      const std::string id = testing::random_identifier(rng);
      if (std::find(cands.begin(), cands.end(), id) == cands.end()) cands.push_back(id);
    }
    const auto ctx = hack_context();
    const auto ranked = rank_candidates<double>(model, v, Language::kA, ctx, cands);
    const auto oracle = oracle::brute_force_rank(model, v, Language::kA, ctx, cands);
    REQUIRE(ranked.items.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      CHECK(ranked.items[i].candidate == oracle[i].candidate);
      CHECK(std::abs(ranked.items[i].score - oracle[i].score) < 1e-6);
      CHECK(ranked.items[i].rank == static_cast<int>(i + 1));
    }
  }
}

TEST_CASE("ranking is invariant to candidate order") {
  const Vocabulary v = small_vocab();
  const auto model = spread_model(ranker_config(v.size()), 3);
  std::vector<std::string> cands{"getUser", "getName", "setName", "findById", "fetchAll", "save"};
  const auto base = rank_candidates<double>(model, v, Language::kA, hack_context(), cands);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(cands.begin(), cands.end(), rng);
    const auto r = rank_candidates<double>(model, v, Language::kA, hack_context(), cands);
    REQUIRE(r.items.size() == base.items.size());
    for (std::size_t k = 0; k < r.items.size(); ++k) {
      CHECK(r.items[k].candidate == base.items[k].candidate);
      CHECK(r.items[k].score == doctest::Approx(base.items[k].score).epsilon(1e-12));
    }
  }
}

TEST_CASE("a hundred candidates give a hundred leaves") {
  const Vocabulary v = small_vocab();
  std::vector<std::string> cands;
  std::mt19937_64 rng(9);
  while (cands.size() < 100) {
    const std::string id = testing::random_identifier(rng);
    if (std::find(cands.begin(), cands.end(), id) == cands.end()) cands.push_back(id);
  }
  const auto ctx = hack_context();
  const auto ec = encode_context(ctx, Language::kA, v, 23);
  const auto tree = build_tree(cands, Language::kA, v, ec.copies);
  CHECK(tree.leaf_count() + tree.skipped.size() == 100);
  CHECK(tree.skipped.empty());
  const auto model = spread_model(ranker_config(v.size()), 5);
  const auto ranked = score_candidates<double>(ec.ids, tree, model);
  CHECK(ranked.items.size() == 100);
  for (std::size_t i = 1; i < ranked.items.size(); ++i) {
    CHECK(ranked.items[i - 1].score >= ranked.items[i].score);
  }
}

TEST_CASE("top_k truncates and keeps order") {
  const Vocabulary v = small_vocab();
  const auto model = spread_model(ranker_config(v.size()), 8);
  const std::vector<std::string> cands{"getUser", "getName", "setName", "findById", "fetchAll"};
  const auto ranked = rank_candidates<double>(model, v, Language::kA, hack_context(), cands);
  const auto top = top_k(ranked, 3);
  REQUIRE(top.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(top[static_cast<std::size_t>(i)].rank == i + 1);
  CHECK(top_k(ranked, 50).size() == 5);
  CHECK_THROWS_AS(top_k(ranked, 0), InvalidArgument);
}

TEST_CASE("score_candidates rejects contexts that do not fit") {
  const Vocabulary v = small_vocab();
  const auto c = ranker_config(v.size());
  const auto model = spread_model(c, 2);
  const std::vector<std::string> cands{"save"};
  const auto tree = build_tree(cands, Language::kA, v, CopyTable{});
  CHECK_THROWS_AS(score_candidates<double>(std::vector<int>{}, tree, model), InvalidArgument);
  const std::vector<int> full(static_cast<std::size_t>(c.context_len), v.control_id(Language::kA));
  CHECK_THROWS_AS(score_candidates<double>(full, tree, model), InvalidArgument);
}

TEST_CASE("long contexts are truncated to fit the window") {
  const Vocabulary v = small_vocab();
  const auto c = ranker_config(v.size());
  const auto model = spread_model(c, 6);
  std::vector<Token> ctx;
  for (int i = 0; i < 40; ++i) {
    for (const auto& t : hack_context()) ctx.push_back(t);
  }
  const std::vector<std::string> cands{"getUser", "save"};
  const auto ranked = rank_candidates<double>(model, v, Language::kA, ctx, cands);
  CHECK(ranked.items.size() == 2);
  const auto ec = encode_context(ctx, Language::kA, v, c.context_len - 1);
  CHECK(static_cast<int>(ec.ids.size()) <= c.context_len - 1);
  CHECK(ec.tokens_dropped > 0);
  CHECK(ec.ids[0] == v.control_id(Language::kA));
}
