#include "xfer/ranker.h"

#include <algorithm>
#include <unordered_set>

#include "xfer/error.h"

namespace xfer {

std::size_t PartialTokenTree::leaf_count() const {
  std::size_t n = 0;
  for (const Root& r : roots) {
    for (const auto& [id, cands] : r.leaves) n += cands.size();
  }
  return n;
}

PartialTokenTree build_tree(std::span<const std::string> candidates, Language language,
                            const Vocabulary& vocab, const CopyTable& context_copies) {
  if (candidates.empty()) throw InvalidArgument("build_tree: empty candidate list");
  PartialTokenTree tree;
  tree.candidates.assign(candidates.begin(), candidates.end());
  tree.paths.resize(candidates.size());
  std::unordered_set<std::string_view> seen;
  std::map<int, std::size_t> root_of;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string& c = candidates[i];
    if (!seen.insert(c).second) {
      throw InvalidArgument("build_tree: duplicate candidate '" + c + "'");
    }
    if (!is_identifier(c, language)) {
      tree.skipped.push_back({i, c, "not an identifier"});
      continue;
    }
    CopyTable copies = context_copies;
    const std::array<int, 2> ids = encode_identifier(c, vocab, copies);
    if (ids[0] == vocab.unk_id() || ids[1] == vocab.unk_id()) {
      tree.skipped.push_back({i, c, "copy placeholders exhausted"});
      continue;
    }
    tree.paths[i] = ids;
    auto [it, inserted] = root_of.emplace(ids[0], 0);
    if (inserted) {
      it->second = tree.roots.size();
      tree.roots.push_back({ids[0], {}});
    }
    tree.roots[it->second].leaves[ids[1]].push_back(i);
  }
  std::sort(tree.roots.begin(), tree.roots.end(),
            [](const auto& a, const auto& b) { return a.first_id < b.first_id; });
  return tree;
}

std::optional<int> RankedSuggestions::rank_of(std::string_view candidate) const {
  for (const Suggestion& s : items) {
    if (s.candidate == candidate) return s.rank;
  }
  return std::nullopt;
}

template <typename T>
RankedSuggestions score_candidates(std::span<const int> context_ids, const PartialTokenTree& tree,
                                   const Transformer<T>& model) {
  if (context_ids.empty()) throw InvalidArgument("score_candidates: empty context");
  if (context_ids.size() + 1 > static_cast<std::size_t>(model.config().context_len)) {
    throw InvalidArgument("score_candidates: context of " + std::to_string(context_ids.size()) +
                          " ids leaves no room in a window of " +
                          std::to_string(model.config().context_len));
  }
  RankedSuggestions out;
  out.skipped = tree.skipped;
  if (tree.roots.empty()) return out;

  RowVector<T> last;
  const KvCache<T> cache = model.prefill(context_ids, &last);
  const RowVector<T> first_lp = log_softmax<T>(last);
  std::vector<int> firsts;
  firsts.reserve(tree.roots.size());
  for (const auto& r : tree.roots) firsts.push_back(r.first_id);
  const Matrix<T> second_logits = model.extend(cache, firsts);

  for (std::size_t r = 0; r < tree.roots.size(); ++r) {
    const auto& root = tree.roots[r];
    const RowVector<T> second_lp =
        log_softmax<T>(second_logits.row(static_cast<Eigen::Index>(r)));
    const double s1 = static_cast<double>(first_lp(root.first_id));
    for (const auto& [second, cands] : root.leaves) {
      const double score = s1 + static_cast<double>(second_lp(second));
      for (std::size_t idx : cands) out.items.push_back({tree.candidates[idx], idx, score, 0});
    }
  }
  std::sort(out.items.begin(), out.items.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.candidate != b.candidate) return a.candidate < b.candidate;
    return a.index < b.index;
  });
  for (std::size_t i = 0; i < out.items.size(); ++i) out.items[i].rank = static_cast<int>(i + 1);
  return out;
}

std::vector<Suggestion> top_k(const RankedSuggestions& ranked, int k) {
  if (k < 1) throw InvalidArgument("top_k: k must be at least 1");
  const auto n = std::min(ranked.items.size(), static_cast<std::size_t>(k));
  return {ranked.items.begin(), ranked.items.begin() + static_cast<std::ptrdiff_t>(n)};
}

template <typename T>
RankedSuggestions rank_candidates(const Transformer<T>& model, const Vocabulary& vocab,
                                  Language language, std::span<const Token> context,
                                  std::span<const std::string> candidates) {
  const EncodedContext ctx =
      encode_context(context, language, vocab, model.config().context_len - 1);
  const PartialTokenTree tree = build_tree(candidates, language, vocab, ctx.copies);
  return score_candidates<T>(ctx.ids, tree, model);
}

template RankedSuggestions score_candidates<float>(std::span<const int>, const PartialTokenTree&,
                                                   const Transformer<float>&);
template RankedSuggestions score_candidates<double>(std::span<const int>, const PartialTokenTree&,
                                                    const Transformer<double>&);
template RankedSuggestions rank_candidates<float>(const Transformer<float>&, const Vocabulary&,
                                                  Language, std::span<const Token>,
                                                  std::span<const std::string>);
template RankedSuggestions rank_candidates<double>(const Transformer<double>&, const Vocabulary&,
                                                   Language, std::span<const Token>,
                                                   std::span<const std::string>);

}  // namespace xfer
