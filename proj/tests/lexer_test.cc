#include "doctest.h"
#include "test_util.h"
#include "xfer/error.h"
#include "xfer/identifier.h"
#include "xfer/lexer.h"

#include <regex>

using namespace xfer;

namespace {

std::vector<std::pair<TokenKind, std::string>> kinds(const LexedSource& l) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const Token& t : l.tokens) out.emplace_back(t.kind, t.text);
  return out;
}

// Independent splitter: a regex over each underscore-separated segment.
std::vector<std::string> regex_split(const std::string& token) {
  static const std::regex part("[A-Z]+(?=[A-Z][a-z])|[A-Z]*[a-z0-9]+|[A-Z]+");
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= token.size()) {
    std::size_t j = token.find('_', i);
    if (j == std::string::npos) j = token.size();
    const std::string seg = token.substr(i, j - i);
    for (auto it = std::sregex_iterator(seg.begin(), seg.end(), part); it != std::sregex_iterator();
         ++it) {
      out.push_back(it->str());
    }
    i = j + 1;
  }
  if (out.empty()) out.push_back(token);
  return out;
}

}  // namespace

TEST_CASE("lex classifies a simple assignment") {
  for (Language lang : {Language::kA, Language::kB}) {
    const LexedSource l = lex("x = foo_bar(1)", lang);
    const std::vector<std::pair<TokenKind, std::string>> want = {
        {TokenKind::kIdentifier, "x"},          {TokenKind::kPunctuation, "="},
        {TokenKind::kIdentifier, "foo_bar"},    {TokenKind::kPunctuation, "("},
        {TokenKind::kLiteral, "1"},             {TokenKind::kPunctuation, ")"}};
    CHECK(kinds(l) == want);
  }
}

TEST_CASE("lex of empty input is empty") {
  CHECK(lex("", Language::kA).tokens.empty());
  CHECK(lex("   // only a comment\n", Language::kA).tokens.empty());
}

TEST_CASE("lex rejects binary and malformed content") {
  CHECK_THROWS_AS(lex(std::string("ab\0c", 4), Language::kA), LexError);
  CHECK_THROWS_AS(lex("x = \xff;", Language::kB), LexError);
  CHECK_THROWS_AS(lex("\xe2\x82", Language::kB), LexError);
  CHECK_NOTHROW(lex("s = \"caf\xc3\xa9\"", Language::kB));
}

TEST_CASE("unknown language names are rejected") {
  CHECK_THROWS_AS(parse_language("cobol"), InvalidArgument);
  CHECK(parse_language("a") == Language::kA);
  CHECK(parse_language("pylike") == Language::kB);
}

TEST_CASE("lex keeps member operators, keywords and strings intact") {
  const LexedSource a = lex("$x = $this->fooBar(\"s // no\"); /* c */ return;", Language::kA);
  std::vector<std::string> texts;
  for (const Token& t : a.tokens) texts.push_back(t.text);
  CHECK(std::find(texts.begin(), texts.end(), "->") != texts.end());
  CHECK(std::find(texts.begin(), texts.end(), "\"s // no\"") != texts.end());
  CHECK(classify_token("return", Language::kA) == TokenKind::kKeyword);
  CHECK(classify_token("fooBar", Language::kA) == TokenKind::kIdentifier);
  CHECK(classify_token("<lang-B>", Language::kA) == TokenKind::kControl);

  const LexedSource b = lex("def f(x):\n    \"\"\"doc\n  string\"\"\"\n    return x.y_z\n", Language::kB);
  CHECK(b.tokens[0].kind == TokenKind::kKeyword);
  bool saw_doc = false;
  for (const Token& t : b.tokens) saw_doc |= t.kind == TokenKind::kLiteral && t.text.size() > 10;
  CHECK(saw_doc);
}

TEST_CASE("detokenize inverts lex on every sample corpus file") {
  const auto& docs = xfer::testing::sample_documents();
  REQUIRE(docs.size() >= 200);
  std::size_t failures = 0;
  for (const SourceDocument& d : docs) {
    if (detokenize(lex(d.content, d.language)) != d.content) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("split_identifier examples") {
  using V = std::vector<std::string>;
  CHECK(split_identifier("fooBarBazQuux") == V{"foo", "Bar", "Baz", "Quux"});
  CHECK(split_identifier("x") == V{"x"});
  CHECK(split_identifier("foo_bar_baz") == V{"foo", "bar", "baz"});
  CHECK(split_identifier("parseHTTP2Response") == V{"parse", "HTTP2", "Response"});
  CHECK(split_identifier("HTTPResponse") == V{"HTTP", "Response"});
  CHECK(split_identifier("__init__") == V{"init"});
  CHECK(split_identifier("___") == V{"___"});
  CHECK_THROWS_AS(split_identifier(""), InvalidArgument);
}

TEST_CASE("split_identifier agrees with a regex splitter") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const std::string id = xfer::testing::random_identifier(rng);
    INFO(id);
    REQUIRE(split_identifier(id) == regex_split(id));
  }
  std::size_t checked = 0;
  for (const SourceDocument& d : xfer::testing::sample_documents()) {
    for (const Token& t : lex(d.content, d.language).tokens) {
      if (t.kind != TokenKind::kIdentifier) continue;
      INFO(t.text);
      REQUIRE(split_identifier(t.text) == regex_split(t.text));
      ++checked;
    }
    if (checked > 50000) break;
  }
  CHECK(checked > 1000);
}
