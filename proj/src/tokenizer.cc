#include "xfer/tokenizer.h"

#include "xfer/error.h"

namespace xfer {

std::string Bigram::joined() const {
  if (whole()) return first;
  return first + std::string(static_cast<std::size_t>(join_underscores), '_') + second;
}

Bigram bigram_encode(std::string_view token, const Vocabulary& vocab) {
  if (token.empty()) throw InvalidArgument("bigram_encode: empty token");
  const auto spans = partial_spans(token);
  if (spans.size() <= 1 || vocab.contains_entry(token)) {
    return Bigram{std::string(token), std::string(Vocabulary::kEndOfToken), 0};
  }
  const std::size_t cut = (spans.size() + 1) / 2;
  const std::size_t first_end = spans[cut - 1].second;
  const std::size_t second_begin = spans[cut].first;
  return Bigram{std::string(token.substr(0, first_end)), std::string(token.substr(second_begin)),
                static_cast<int>(second_begin - first_end)};
}

CopyTable::CopyTable(const std::map<int, std::string>& var_map) {
  for (const auto& [i, s] : var_map) {
    if (i != next_index()) throw FormatError("var_map indices are not dense");
    index_.emplace(s, i);
    by_index_.push_back(s);
  }
}

int CopyTable::index_for(const std::string& subtoken) {
  if (auto it = index_.find(subtoken); it != index_.end()) return it->second;
  if (next_index() >= Vocabulary::kMaxPlaceholders) {
    ++overflowed_;
    return -1;
  }
  const int i = next_index();
  index_.emplace(subtoken, i);
  by_index_.push_back(subtoken);
  return i;
}

std::optional<int> CopyTable::lookup(const std::string& subtoken) const {
  if (auto it = index_.find(subtoken); it != index_.end()) return it->second;
  return std::nullopt;
}

std::map<int, std::string> CopyTable::var_map() const {
  std::map<int, std::string> out;
  for (std::size_t i = 0; i < by_index_.size(); ++i) out.emplace(static_cast<int>(i), by_index_[i]);
  return out;
}

namespace {

int subtoken_id(const std::string& s, const Vocabulary& vocab, CopyTable& copies) {
  if (auto id = vocab.find(s); id && !vocab.is_special(*id)) return *id;
  if (s == Vocabulary::kEndOfToken) return vocab.end_of_token_id();
  const int idx = copies.index_for(s);
  return idx < 0 ? vocab.unk_id() : vocab.placeholder_id(idx);
}

}  // namespace

std::array<int, 2> encode_identifier(std::string_view token, const Vocabulary& vocab,
                                     CopyTable& copies) {
  const Bigram b = bigram_encode(token, vocab);
  const int first = subtoken_id(b.first, vocab, copies);
  const int second =
      b.whole() ? vocab.end_of_token_id() : subtoken_id(b.second, vocab, copies);
  return {first, second};
}

EncodedSequence encode_sequence(std::span<const Token> tokens, const Vocabulary& vocab) {
  EncodedSequence out;
  out.source_len = static_cast<int>(tokens.size());
  out.ids.reserve(tokens.size() * 2);
  out.layout.reserve(tokens.size());
  CopyTable copies;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    EncodedToken slot;
    if (t.kind == TokenKind::kIdentifier) {
      const Bigram b = bigram_encode(t.text, vocab);
      const auto ids = encode_identifier(t.text, vocab, copies);
      out.ids.push_back(ids[0]);
      out.ids.push_back(ids[1]);
      slot.identifier = true;
      slot.join_underscores = b.join_underscores;
      if (ids[0] == vocab.unk_id() || ids[1] == vocab.unk_id()) {
        out.fallback.emplace(static_cast<int>(i), t.text);
      }
    } else if (t.kind == TokenKind::kControl) {
      const auto id = vocab.find(t.text);
      if (!id || !vocab.control_language(*id)) {
        throw InvalidArgument("unknown control token '" + t.text + "'");
      }
      out.ids.push_back(*id);
    } else {
      const auto id = vocab.find(t.text);
      if (id && !vocab.is_special(*id)) {
        out.ids.push_back(*id);
      } else {
        out.ids.push_back(vocab.unk_id());
        out.fallback.emplace(static_cast<int>(i), t.text);
      }
    }
    out.layout.push_back(slot);
  }
  out.var_map = copies.var_map();
  out.overflowed = copies.overflowed();
  return out;
}

EncodedContext encode_context(std::span<const Token> context, Language language,
                              const Vocabulary& vocab, int max_ids) {
  if (max_ids < 1) throw InvalidArgument("encode_context: max_ids must be positive");
  std::size_t total = 1;
  for (const Token& t : context) total += t.kind == TokenKind::kIdentifier ? 2 : 1;
  std::size_t start = 0;
  while (total > static_cast<std::size_t>(max_ids) && start < context.size()) {
    total -= context[start++].kind == TokenKind::kIdentifier ? 2 : 1;
  }
  std::vector<Token> tagged;
  tagged.reserve(context.size() - start + 1);
  tagged.push_back(Token{TokenKind::kControl, control_token(language), ""});
  tagged.insert(tagged.end(), context.begin() + static_cast<std::ptrdiff_t>(start), context.end());
  EncodedSequence enc = encode_sequence(tagged, vocab);
  EncodedContext out;
  out.ids = std::move(enc.ids);
  out.copies = CopyTable(enc.var_map);
  out.tokens_dropped = start;
  return out;
}

namespace {

std::string resolve(int id, const EncodedSequence& enc, const Vocabulary& vocab) {
  if (auto idx = vocab.placeholder_index(id)) {
    auto it = enc.var_map.find(*idx);
    if (it == enc.var_map.end()) {
      throw FormatError("placeholder <var-" + std::to_string(*idx) + "> missing from var_map");
    }
    return it->second;
  }
  return vocab.token(id);
}

}  // namespace

std::vector<std::string> decode(const EncodedSequence& encoded, const Vocabulary& vocab) {
  std::vector<std::string> out;
  out.reserve(encoded.layout.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < encoded.layout.size(); ++i) {
    const EncodedToken& slot = encoded.layout[i];
    const std::size_t width = slot.identifier ? 2 : 1;
    if (pos + width > encoded.ids.size()) throw FormatError("encoded sequence is truncated");
    if (auto fb = encoded.fallback.find(static_cast<int>(i)); fb != encoded.fallback.end()) {
      out.push_back(fb->second);
    } else if (slot.identifier) {
      const std::string first = resolve(encoded.ids[pos], encoded, vocab);
      if (encoded.ids[pos + 1] == vocab.end_of_token_id()) {
        out.push_back(first);
      } else {
        out.push_back(first + std::string(static_cast<std::size_t>(slot.join_underscores), '_') +
                      resolve(encoded.ids[pos + 1], encoded, vocab));
      }
    } else {
      out.push_back(vocab.token(encoded.ids[pos]));
    }
    pos += width;
  }
  return out;
}

namespace {

// Calls fn(text, kind) for every token of every item.
template <typename Fn>
void for_each_token(std::span<const Dataset> corpora, Fn&& fn) {
  for (const Dataset& ds : corpora) {
    for (const DatasetItem& item : ds.items) {
      if (const auto* seq = std::get_if<TokenSequence>(&item)) {
        for (const Token& t : seq->tokens) fn(t.text, t.kind);
      } else {
        const auto& ev = std::get<CompletionEvent>(item);
        for (const std::string& t : ev.context_tokens) fn(t, classify_token(t, ev.language));
        fn(ev.accepted, TokenKind::kIdentifier);
      }
    }
  }
}

}  // namespace

Vocabulary build_vocab(std::span<const Dataset> corpora, std::int64_t cutoff) {
  std::unordered_map<std::string, std::int64_t> whole;
  for_each_token(corpora, [&](const std::string& text, TokenKind kind) {
    if (kind != TokenKind::kControl) ++whole[text];
  });
  const Vocabulary whole_vocab = Vocabulary::from_counts(whole, cutoff);

  std::unordered_map<std::string, std::int64_t> sub;
  for_each_token(corpora, [&](const std::string& text, TokenKind kind) {
    if (kind == TokenKind::kControl) return;
    if (kind != TokenKind::kIdentifier) {
      ++sub[text];
      return;
    }
    const Bigram b = bigram_encode(text, whole_vocab);
    ++sub[b.first];
    if (!b.whole()) ++sub[b.second];
  });
  return Vocabulary::from_counts(sub, cutoff);
}

}  // namespace xfer
