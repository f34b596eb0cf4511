#include "xfer/language.h"

#include <array>

#include "xfer/error.h"

namespace xfer {
namespace {

LanguageSpec make_a() {
  LanguageSpec s;
  s.language = Language::kA;
  s.name = "A";
  s.extension = ".hk";
  s.line_comment = "//";
  s.block_comments = true;
  s.triple_quoted_strings = false;
  s.keywords = {"namespace", "use",     "class",  "final",    "private",
                "public",    "protected", "function", "return", "if",
                "else",      "foreach", "as",     "new",      "this",
                "null",      "true",    "false",  "int",      "string",
                "bool",      "float",   "void",   "await",    "async",
                "throw",     "try",     "catch",  "static",   "const",
                "while",     "for",     "abstract", "interface", "extends",
                "implements"};
  s.declaration_keywords = {"function", "class",  "const", "namespace", "use",
                            "interface", "int",   "string", "bool", "float",
                            "as"};
  s.member_operators = {"->", "::"};
  s.operators = {"===", "!==", "->", "::", "==", "!=", "<=", ">=", "&&",
                 "||",  "=>",  "+=", "-=", "++", "--", "??"};
  return s;
}

LanguageSpec make_b() {
  LanguageSpec s;
  s.language = Language::kB;
  s.name = "B";
  s.extension = ".py";
  s.line_comment = "#";
  s.block_comments = false;
  s.triple_quoted_strings = true;
  s.keywords = {"def",    "class", "return", "if",     "elif",  "else",
                "for",    "in",    "is",     "not",    "None",  "True",
                "False",  "import", "from",  "as",     "self",  "while",
                "try",    "except", "raise", "with",   "pass",  "lambda",
                "and",    "or",    "yield",  "async",  "await", "global",
                "finally", "break", "continue"};
  s.declaration_keywords = {"def", "class", "import", "as", "global", "from"};
  s.member_operators = {"."};
  s.operators = {"**=", "//=", "==", "!=", "<=", ">=", "->", "**", "//", "+=",
                 "-=", "*=", "/=", ":="};
  return s;
}

const std::array<Language, 2> kLanguages = {Language::kA, Language::kB};

}  // namespace

const LanguageSpec& language_spec(Language language) {
  static const LanguageSpec a = make_a();
  static const LanguageSpec b = make_b();
  return language == Language::kA ? a : b;
}

std::span<const Language> registered_languages() { return kLanguages; }

Language parse_language(std::string_view name) {
  if (name == "A" || name == "a" || name == "hacklike") return Language::kA;
  if (name == "B" || name == "b" || name == "pylike") return Language::kB;
  throw InvalidArgument("unregistered language: '" + std::string(name) + "'");
}

std::optional<Language> language_for_extension(std::string_view extension) {
  for (Language l : kLanguages) {
    if (language_spec(l).extension == extension) return l;
  }
  return std::nullopt;
}

const std::string& language_name(Language language) {
  return language_spec(language).name;
}

std::string control_token(Language language) {
  return "<lang-" + language_name(language) + ">";
}

}  // namespace xfer
