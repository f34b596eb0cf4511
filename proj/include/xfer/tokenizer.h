#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xfer/corpus.h"
#include "xfer/identifier.h"
#include "xfer/lexer.h"
#include "xfer/vocabulary.h"

namespace xfer {

// Two-subtoken encoding of one identifier. An in-vocabulary identifier, or
// one with a single partial token, is (token, "</t>"). Otherwise the partial
// list is cut after ceil(n/2) partials; `first` keeps any leading underscores,
// `second` any trailing ones, and the underscores at the cut are recorded in
// `join_underscores` so the original can be rebuilt.
struct Bigram {
  std::string first;
  std::string second;
  int join_underscores = 0;

  bool whole() const { return second == Vocabulary::kEndOfToken; }
  std::string joined() const;
  bool operator==(const Bigram&) const = default;
};

Bigram bigram_encode(std::string_view token, const Vocabulary& vocab);

// Per-example copy state: the i-th distinct out-of-vocabulary subtoken gets
// <var-i>. Past Vocabulary::kMaxPlaceholders further subtokens map to <unk>.
class CopyTable {
 public:
  CopyTable() = default;
  explicit CopyTable(const std::map<int, std::string>& var_map);

  // Placeholder index for `subtoken`, assigning the next one if new. Returns
  // -1 on overflow.
  int index_for(const std::string& subtoken);
  std::optional<int> lookup(const std::string& subtoken) const;
  int next_index() const { return static_cast<int>(by_index_.size()); }
  int overflowed() const { return overflowed_; }
  std::map<int, std::string> var_map() const;

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> by_index_;
  int overflowed_ = 0;
};

// Ids of one identifier given a copy state.
std::array<int, 2> encode_identifier(std::string_view token, const Vocabulary& vocab,
                                     CopyTable& copies);

struct EncodedToken {
  bool identifier = false;
  int join_underscores = 0;
};

struct EncodedSequence {
  std::vector<int> ids;
  // Placeholder index -> original subtoken, in first-occurrence order.
  std::map<int, std::string> var_map;
  int source_len = 0;
  // One entry per source token: identifiers occupy two ids, everything else one.
  std::vector<EncodedToken> layout;
  // Original text of tokens whose ids lost information (<unk>), by token index.
  std::map<int, std::string> fallback;
  int overflowed = 0;
};

EncodedSequence encode_sequence(std::span<const Token> tokens, const Vocabulary& vocab);

// Model input at a completion point: the language control token followed by
// the most recent context tokens, oldest dropped first, so that at most
// max_ids ids remain. `copies` holds the copy state after the context;
// candidates are encoded against a copy of it.
struct EncodedContext {
  std::vector<int> ids;
  CopyTable copies;
  std::size_t tokens_dropped = 0;
};

EncodedContext encode_context(std::span<const Token> context, Language language,
                              const Vocabulary& vocab, int max_ids);

// Inverse of encode_sequence on token text. Throws FormatError when a
// placeholder is missing from var_map.
std::vector<std::string> decode(const EncodedSequence& encoded, const Vocabulary& vocab);

// Subtoken frequency table over the bigram-encoded corpora. Pass one counts
// whole tokens and keeps those reaching the cutoff; pass two re-encodes every
// token against that table and counts the resulting subtokens.
Vocabulary build_vocab(std::span<const Dataset> corpora, std::int64_t cutoff = 2);

}  // namespace xfer
