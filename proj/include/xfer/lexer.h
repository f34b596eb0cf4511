#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xfer/language.h"

namespace xfer {

enum class TokenKind { kIdentifier, kKeyword, kPunctuation, kLiteral, kOther, kControl };

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kOther;
  std::string text;
  // Whitespace and comments between the previous token and this one.
  std::string leading;

  bool operator==(const Token&) const = default;
};

struct LexedSource {
  std::vector<Token> tokens;
  std::string trailing;
};

// Splits `content` into tokens. Throws LexError when the bytes are not valid
// UTF-8 or contain NUL (binary content).
LexedSource lex(std::string_view content, Language language);

// Inverse of lex: concatenates separators and token texts.
std::string detokenize(const LexedSource& lexed);

// Kind of a single token text as the lexer would classify it. Used to recover
// kinds for token strings stored without them (event contexts).
TokenKind classify_token(std::string_view text, Language language);

bool is_identifier(std::string_view text, Language language);

// Shorthand constructors, mostly for tests.
Token ident(std::string text);
Token punct(std::string text);

std::vector<std::string> token_texts(const std::vector<Token>& tokens);
// Re-attaches kinds to stored token strings.
std::vector<Token> tokens_from_texts(const std::vector<std::string>& texts, Language language);

}  // namespace xfer
