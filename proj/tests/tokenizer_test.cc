#include <sstream>

#include "doctest.h"
#include "test_util.h"
#include "xfer/error.h"
#include "xfer/tokenizer.h"

using namespace xfer;

namespace {

Vocabulary vocab_of(std::initializer_list<std::pair<const char*, int>> entries) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const auto& [t, c] : entries) counts[t] = c;
  return Vocabulary::from_counts(counts, 1);
}

// Reference bigram: brute-force over partial lists, cut at ceil(n/2).
std::pair<std::string, std::string> reference_halves(const std::string& token) {
  const auto parts = split_identifier(token);
  if (parts.size() <= 1) return {token, "</t>"};
  const std::size_t cut = (parts.size() + 1) / 2;
  // Locate the cut in the original string by walking partials in order.
  std::size_t pos = 0;
  std::size_t first_end = 0, second_begin = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    pos = token.find(parts[i], pos);
    if (i == cut) second_begin = pos;
    pos += parts[i].size();
    if (i == cut - 1) first_end = pos;
  }
  return {token.substr(0, first_end), token.substr(second_begin)};
}

std::vector<Token> identifiers(std::initializer_list<const char*> names) {
  std::vector<Token> out;
  for (const char* n : names) out.push_back(ident(n));
  return out;
}

Dataset sequence_dataset(const std::vector<std::vector<Token>>& seqs, Language lang) {
  Dataset ds;
  ds.role = DatasetRole::kCommit;
  ds.language_mix = {lang};
  int i = 0;
  for (const auto& s : seqs) ds.items.emplace_back(TokenSequence{"s" + std::to_string(i++), lang, s});
  return ds;
}

}  // namespace

TEST_CASE("bigram_encode worked example and special cases") {
  const Vocabulary empty;
  CHECK(bigram_encode("fooBarBazQuux", empty) == Bigram{"fooBar", "BazQuux", 0});
  CHECK(bigram_encode("fooBarBaz", empty) == Bigram{"fooBar", "Baz", 0});
  CHECK(bigram_encode("x", empty) == Bigram{"x", "</t>", 0});
  CHECK(bigram_encode("foo_bar_baz", empty) == Bigram{"foo_bar", "baz", 1});
  CHECK(bigram_encode("_private__name_", empty) == Bigram{"_private", "name_", 2});

  const Vocabulary v = vocab_of({{"fooBarBazQuux", 3}});
  CHECK(bigram_encode("fooBarBazQuux", v) == Bigram{"fooBarBazQuux", "</t>", 0});
  CHECK_THROWS_AS(bigram_encode("", v), InvalidArgument);
}

TEST_CASE("bigram_encode matches a brute-force splitter") {
  const Vocabulary empty;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::string id = xfer::testing::random_identifier(rng);
    INFO(id);
    const Bigram b = bigram_encode(id, empty);
    const auto [f, s] = reference_halves(id);
    REQUIRE(b.first == f);
    REQUIRE(b.second == s);
    REQUIRE(b.joined() == id);
  }
}

TEST_CASE("copy placeholders are assigned per example in first-seen order") {
  const Vocabulary v = vocab_of({{"foo", 5}});
  const auto seq = identifiers({"alphaBeta", "alphaBeta", "gammaDelta", "alphaGamma"});
  const EncodedSequence enc = encode_sequence(seq, v);
  REQUIRE(enc.ids.size() == 8);
  CHECK(enc.ids[0] == v.placeholder_id(0));  // alpha
  CHECK(enc.ids[1] == v.placeholder_id(1));  // Beta
  CHECK(enc.ids[2] == enc.ids[0]);
  CHECK(enc.ids[3] == enc.ids[1]);
  CHECK(enc.ids[4] == v.placeholder_id(2));  // gamma
  CHECK(enc.ids[5] == v.placeholder_id(3));  // Delta
  CHECK(enc.ids[6] == v.placeholder_id(0));  // alpha again
  CHECK(enc.ids[7] == v.placeholder_id(4));  // Gamma
  CHECK(enc.var_map == std::map<int, std::string>{
                           {0, "alpha"}, {1, "Beta"}, {2, "gamma"}, {3, "Delta"}, {4, "Gamma"}});
  CHECK(decode(enc, v) == token_texts(seq));

  // In-vocabulary identifiers never touch the copy table.
  const EncodedSequence in_vocab = encode_sequence(identifiers({"foo", "foo"}), v);
  CHECK(in_vocab.ids == std::vector<int>{v.id_of("foo"), 2, v.id_of("foo"), 2});
  CHECK(in_vocab.var_map.empty());
}

TEST_CASE("placeholder overflow maps to unk and still decodes") {
  const Vocabulary v;
  std::vector<Token> seq;
  for (int i = 0; i < 40; ++i) {
    seq.push_back(ident("w" + std::to_string(i) + "X" + std::to_string(i)));
  }
  const EncodedSequence enc = encode_sequence(seq, v);
  CHECK(enc.var_map.size() == 64);
  CHECK(enc.overflowed > 0);
  CHECK(std::count(enc.ids.begin(), enc.ids.end(), v.unk_id()) > 0);
  CHECK(decode(enc, v) == token_texts(seq));
}

TEST_CASE("decode resolves placeholders and detects corruption") {
  const Vocabulary v = vocab_of({{"BazQuux", 4}});
  const EncodedSequence enc = encode_sequence(identifiers({"fooBarBazQuux", "y"}), v);
  CHECK(enc.ids[0] == v.placeholder_id(0));
  CHECK(enc.ids[1] == v.id_of("BazQuux"));
  CHECK(decode(enc, v) == std::vector<std::string>{"fooBarBazQuux", "y"});

  EncodedSequence broken = enc;
  broken.var_map.clear();
  CHECK_THROWS_AS(decode(broken, v), FormatError);
}

TEST_CASE("non-identifier tokens take one id") {
  const Vocabulary v = vocab_of({{"(", 9}, {"return", 4}});
  std::vector<Token> seq = {Token{TokenKind::kKeyword, "return", ""}, punct("("), punct("@@")};
  const EncodedSequence enc = encode_sequence(seq, v);
  CHECK(enc.ids == std::vector<int>{v.id_of("return"), v.id_of("("), v.unk_id()});
  CHECK(decode(enc, v) == token_texts(seq));
}

TEST_CASE("corpus round trip: every identifier takes two ids and decodes exactly") {
  const auto& docs = xfer::testing::sample_documents();
  std::vector<Dataset> parts;
  for (Language lang : {Language::kA, Language::kB}) {
    std::vector<SourceDocument> commit;
    for (const auto& d : docs) {
      if (d.language == lang && d.origin == Origin::kCommit) commit.push_back(d);
    }
    if (!commit.empty()) parts.push_back(build_dataset(commit, DatasetRole::kCommit, lang));
  }
  const Vocabulary v = build_vocab(parts);
  std::size_t tokens = 0;
  for (const auto& d : docs) {
    const auto lexed = lex(d.content, d.language);
    const EncodedSequence enc = encode_sequence(lexed.tokens, v);
    std::size_t expect = 0;
    for (const Token& t : lexed.tokens) expect += t.kind == TokenKind::kIdentifier ? 2 : 1;
    REQUIRE(enc.ids.size() == expect);
    REQUIRE(decode(enc, v) == token_texts(lexed.tokens));
    tokens += lexed.tokens.size();
  }
  CHECK(tokens > 100000);
}

TEST_CASE("build_vocab cutoff, ordering and determinism") {
  const auto seqs = std::vector<std::vector<Token>>{
      identifiers({"alpha", "alpha", "alpha", "beta", "beta", "gamma"})};
  const Dataset ds = sequence_dataset(seqs, Language::kA);
  const Vocabulary v = build_vocab(std::span<const Dataset>(&ds, 1), 2);
  CHECK(v.contains_entry("alpha"));
  CHECK(v.contains_entry("beta"));
  CHECK_FALSE(v.contains_entry("gamma"));
  CHECK(v.id_of("alpha") == v.num_specials());
  CHECK(v.id_of("beta") == v.num_specials() + 1);

  std::ostringstream a, b;
  v.save(a);
  build_vocab(std::span<const Dataset>(&ds, 1), 2).save(b);
  CHECK(a.str() == b.str());

  const Vocabulary none = build_vocab({}, 2);
  CHECK(none.size() == none.num_specials());
}

TEST_CASE("build_vocab encodes OOV identifiers into halves before counting") {
  // fooBarBaz is seen once (below cutoff), so its halves are counted instead.
  const auto seqs = std::vector<std::vector<Token>>{
      identifiers({"fooBarBaz", "fooBarQux", "Baz", "x", "x"})};
  const Dataset ds = sequence_dataset(seqs, Language::kA);
  const Vocabulary v = build_vocab(std::span<const Dataset>(&ds, 1), 2);
  CHECK(v.contains_entry("fooBar"));
  CHECK(v.contains_entry("x"));
  CHECK(v.count(v.id_of("fooBar")) == 2);
  CHECK(v.count(v.id_of("Baz")) == 2);
  CHECK_FALSE(v.contains_entry("Qux"));
}

TEST_CASE("vocabulary union and file round trip") {
  const Vocabulary a = vocab_of({{"foo", 3}, {"bar", 2}});
  const Vocabulary b = vocab_of({{"bar", 5}, {"baz\tq", 1}});
  const Vocabulary u = Vocabulary::union_of(a, b);
  CHECK(u.size() - u.num_specials() <= (a.size() - a.num_specials()) + (b.size() - b.num_specials()));
  CHECK(u.count(u.id_of("bar")) == 7);
  for (const auto& [t, c] : a.entries()) CHECK(u.contains_entry(t));
  for (const auto& [t, c] : b.entries()) CHECK(u.contains_entry(t));
  CHECK(Vocabulary::union_of(a, b) == Vocabulary::union_of(b, a));
  for (int id = 0; id < u.size(); ++id) CHECK(u.id_of(u.token(id)) == id);

  std::stringstream io;
  u.save(io);
  CHECK(Vocabulary::load(io) == u);

  std::stringstream bad("<pad>\t0\nnot-unk\t0\n");
  CHECK_THROWS_AS(Vocabulary::load(bad), FormatError);
}

TEST_CASE("vocabulary specials layout") {
  const Vocabulary v;
  CHECK(v.token(0) == "<pad>");
  CHECK(v.token(1) == "<unk>");
  CHECK(v.token(2) == "</t>");
  CHECK(v.token(3) == "<var-0>");
  CHECK(v.token(66) == "<var-63>");
  CHECK(v.token(v.control_id(Language::kA)) == "<lang-A>");
  CHECK(v.token(v.control_id(Language::kB)) == "<lang-B>");
  CHECK(v.num_specials() == 69);
}
