#include "xfer/lexer.h"

#include <cstdint>

#include "xfer/error.h"

namespace xfer {
namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<std::uint8_t>(s[i]);
  std::size_t n;
  std::uint32_t cp;
  if (b0 < 0x80) return 1;
  if ((b0 & 0xE0) == 0xC0) {
    n = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    n = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    n = 4;
    cp = b0 & 0x07;
  } else {
    return 0;
  }
  if (i + n > s.size()) return 0;
  for (std::size_t k = 1; k < n; ++k) {
    const auto b = static_cast<std::uint8_t>(s[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong encodings, surrogates, out of range.
  if ((n == 2 && cp < 0x80) || (n == 3 && cp < 0x800) || (n == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    return 0;
  }
  return n;
}

void validate_text(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '\0') {
      throw LexError("binary content: NUL byte at offset " + std::to_string(i));
    }
    const std::size_t n = utf8_length(s, i);
    if (n == 0) {
      throw LexError("undecodable content: invalid UTF-8 at offset " + std::to_string(i));
    }
    i += n;
  }
}

class Scanner {
 public:
  Scanner(std::string_view src, const LanguageSpec& spec) : src_(src), spec_(spec) {}

  LexedSource run() {
    LexedSource out;
    std::string pending;
    while (pos_ < src_.size()) {
      const std::size_t trivia_end = skip_trivia();
      pending.append(src_.substr(pos_, trivia_end - pos_));
      pos_ = trivia_end;
      if (pos_ >= src_.size()) break;
      Token tok = next_token();
      tok.leading = std::move(pending);
      pending.clear();
      out.tokens.push_back(std::move(tok));
    }
    out.trailing = std::move(pending);
    return out;
  }

 private:
  bool starts_with(std::size_t at, std::string_view s) const {
    return src_.substr(at, s.size()) == s;
  }

  std::size_t skip_trivia() const {
    std::size_t i = pos_;
    while (i < src_.size()) {
      if (is_space(src_[i])) {
        ++i;
      } else if (starts_with(i, spec_.line_comment)) {
        while (i < src_.size() && src_[i] != '\n') ++i;
      } else if (spec_.block_comments && starts_with(i, "/*")) {
        const std::size_t end = src_.find("*/", i + 2);
        i = end == std::string_view::npos ? src_.size() : end + 2;
      } else {
        break;
      }
    }
    return i;
  }

  Token take(TokenKind kind, std::size_t end) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(pos_, end - pos_));
    pos_ = end;
    return t;
  }

  std::size_t scan_string(std::size_t i) const {
    if (spec_.triple_quoted_strings &&
        (starts_with(i, "\"\"\"") || starts_with(i, "'''"))) {
      const std::string_view delim = src_.substr(i, 3);
      const std::size_t end = src_.find(delim, i + 3);
      return end == std::string_view::npos ? src_.size() : end + 3;
    }
    const char quote = src_[i];
    std::size_t j = i + 1;
    while (j < src_.size() && src_[j] != quote && src_[j] != '\n') {
      j += (src_[j] == '\\' && j + 1 < src_.size()) ? 2 : 1;
    }
    if (j < src_.size() && src_[j] == quote) ++j;
    return std::min(j, src_.size());
  }

  Token next_token() {
    const char c = src_[pos_];
    if (is_ident_start(c)) {
      std::size_t j = pos_ + 1;
      while (j < src_.size() && is_ident_char(src_[j])) ++j;
      const std::string_view word = src_.substr(pos_, j - pos_);
      return take(spec_.keywords.contains(std::string(word)) ? TokenKind::kKeyword
                                                             : TokenKind::kIdentifier,
                  j);
    }
    if (is_digit(c)) {
      std::size_t j = pos_ + 1;
      while (j < src_.size() &&
             (is_ident_char(src_[j]) ||
              (src_[j] == '.' && j + 1 < src_.size() && is_digit(src_[j + 1])))) {
        ++j;
      }
      return take(TokenKind::kLiteral, j);
    }
    if (c == '"' || c == '\'') return take(TokenKind::kLiteral, scan_string(pos_));
    for (const std::string& op : spec_.operators) {
      if (starts_with(pos_, op)) return take(TokenKind::kPunctuation, pos_ + op.size());
    }
    const auto byte = static_cast<std::uint8_t>(c);
    if (byte < 0x80) return take(TokenKind::kPunctuation, pos_ + 1);
    return take(TokenKind::kOther, pos_ + utf8_length(src_, pos_));
  }

  std::string_view src_;
  const LanguageSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "id";
    case TokenKind::kKeyword: return "kw";
    case TokenKind::kPunctuation: return "punct";
    case TokenKind::kLiteral: return "lit";
    case TokenKind::kOther: return "other";
    case TokenKind::kControl: return "ctrl";
  }
  return "other";
}

LexedSource lex(std::string_view content, Language language) {
  validate_text(content);
  return Scanner(content, language_spec(language)).run();
}

std::string detokenize(const LexedSource& lexed) {
  std::string out;
  for (const Token& t : lexed.tokens) {
    out += t.leading;
    out += t.text;
  }
  out += lexed.trailing;
  return out;
}

TokenKind classify_token(std::string_view text, Language language) {
  if (text.size() > 7 && text.starts_with("<lang-") && text.ends_with(">")) {
    return TokenKind::kControl;
  }
  if (text.empty()) return TokenKind::kOther;
  try {
    const LexedSource lexed = lex(text, language);
    if (lexed.tokens.size() == 1 && lexed.tokens[0].leading.empty() &&
        lexed.trailing.empty()) {
      return lexed.tokens[0].kind;
    }
  } catch (const LexError&) {
  }
  return TokenKind::kOther;
}

bool is_identifier(std::string_view text, Language language) {
  return classify_token(text, language) == TokenKind::kIdentifier;
}

Token ident(std::string text) { return Token{TokenKind::kIdentifier, std::move(text), ""}; }
Token punct(std::string text) { return Token{TokenKind::kPunctuation, std::move(text), ""}; }

std::vector<Token> tokens_from_texts(const std::vector<std::string>& texts, Language language) {
  std::vector<Token> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(Token{classify_token(t, language), t, ""});
  return out;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace xfer
