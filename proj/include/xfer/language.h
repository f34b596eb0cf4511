#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace xfer {

// Registered source languages. `A` is the Hack-like stand-in (camelCase,
// `->` member access); `B` is the Python-like stand-in (snake_case, `.`).
enum class Language { kA, kB };

struct LanguageSpec {
  Language language;
  std::string name;          // "A", "B"; also used in control tokens
  std::string extension;     // ".hk", ".py"
  std::string line_comment;  // "//" or "#"
  bool block_comments;       // C-style /* */
  bool triple_quoted_strings;
  std::unordered_set<std::string> keywords;
  // An identifier right after one of these is being declared, not referenced.
  std::unordered_set<std::string> declaration_keywords;
  // Member-access operators; an identifier after one is a member site.
  std::vector<std::string> member_operators;
  // Multi-character punctuation, longest first.
  std::vector<std::string> operators;
};

const LanguageSpec& language_spec(Language language);
std::span<const Language> registered_languages();

// Throws InvalidArgument for an unknown name. Accepts "A"/"a"/"B"/"b" and the
// descriptive aliases "hacklike"/"pylike".
Language parse_language(std::string_view name);
std::optional<Language> language_for_extension(std::string_view extension);
const std::string& language_name(Language language);

// "<lang-A>" etc.
std::string control_token(Language language);

}  // namespace xfer
