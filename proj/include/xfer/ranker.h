#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xfer/language.h"
#include "xfer/lexer.h"
#include "xfer/model.h"
#include "xfer/tokenizer.h"
#include "xfer/vocabulary.h"

namespace xfer {

struct SkippedCandidate {
  std::size_t index = 0;
  std::string candidate;
  std::string reason;
};

// Height-2 trie over the bigram encodings of a candidate list. Candidates
// sharing a first subtoken share a root; a leaf lists every candidate whose
// encoding ends there (distinct strings collide only through <unk>, which is
// reported as skipped instead).
struct PartialTokenTree {
  struct Root {
    int first_id = 0;
    std::map<int, std::vector<std::size_t>> leaves;  // second id -> candidate indices
  };

  std::vector<std::string> candidates;
  std::vector<Root> roots;  // ascending first_id
  // Per candidate; nullopt when skipped.
  std::vector<std::optional<std::array<int, 2>>> paths;
  std::vector<SkippedCandidate> skipped;

  std::size_t leaf_count() const;
  static constexpr int height() { return 2; }
};

// Each candidate is encoded against its own copy of `context_copies`, so a
// candidate repeating an out-of-vocabulary half seen in the context reuses
// that placeholder, and no candidate's encoding depends on the others.
// Throws InvalidArgument for an empty list or a duplicate candidate.
PartialTokenTree build_tree(std::span<const std::string> candidates, Language language,
                            const Vocabulary& vocab, const CopyTable& context_copies);

struct Suggestion {
  std::string candidate;
  std::size_t index = 0;  // position in the input list
  double score = 0;       // log P(sub1 | ctx) + log P(sub2 | ctx, sub1)
  int rank = 0;           // 1-based
};

struct RankedSuggestions {
  std::vector<Suggestion> items;  // non-increasing score
  std::vector<SkippedCandidate> skipped;

  // 1-based rank of a candidate string, nullopt when absent or skipped.
  std::optional<int> rank_of(std::string_view candidate) const;
};

// One prefill of the context plus one batched extension over the tree's
// roots. Ties are ordered by candidate string, then input index. Throws
// InvalidArgument when the context is empty or leaves no room for the first
// subtoken inside the model's context window.
template <typename T>
RankedSuggestions score_candidates(std::span<const int> context_ids, const PartialTokenTree& tree,
                                   const Transformer<T>& model);

std::vector<Suggestion> top_k(const RankedSuggestions& ranked, int k = 3);

// Convenience: encode `context` (truncated to fit), build the tree and score.
template <typename T>
RankedSuggestions rank_candidates(const Transformer<T>& model, const Vocabulary& vocab,
                                  Language language, std::span<const Token> context,
                                  std::span<const std::string> candidates);

}  // namespace xfer
