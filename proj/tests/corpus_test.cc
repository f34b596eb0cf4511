#include <fstream>
#include <numeric>

#include "doctest.h"
#include "test_util.h"
#include "xfer/error.h"

using namespace xfer;
using xfer::testing::documents_where;

namespace {

SourceDocument doc(std::string path, std::string content, Origin origin,
                   Language lang = Language::kA) {
  SourceDocument d;
  d.path = std::move(path);
  d.language = lang;
  d.content = std::move(content);
  d.origin = origin;
  if (origin == Origin::kIdeSnapshot) d.cursor_offset = d.content.size();
  return d;
}

Dataset numbered_events(int n) {
  std::vector<CompletionEvent> events;
  for (int i = 0; i < n; ++i) {
    CompletionEvent e;
    e.id = "ev" + std::to_string(i);
    e.context_tokens = {"x", "="};
    e.candidates = {"fooBar", "bazQux"};
    e.accepted = "fooBar";
    e.developer_id = "d";
    e.day = "2021-03-01";
    events.push_back(e);
  }
  return build_dataset(events, Language::kA);
}

std::multiset<std::string> ids(const Dataset& ds) {
  std::multiset<std::string> out;
  for (const auto& item : ds.items) out.insert(item_id(item));
  return out;
}

}  // namespace

TEST_CASE("synthesize_events: single site with fixed size") {
  EventPolicy p;
  p.fixed_size = 5;
  const std::vector<SourceDocument> docs = {
      doc("a.hk", "this->fooBar();", Origin::kAcceptanceLog)};
  const auto events = synthesize_events(docs, p, 1);
  bool found = false;
  for (const auto& e : events) {
    CHECK(e.candidates.size() == 5);
    CHECK(std::count(e.candidates.begin(), e.candidates.end(), e.accepted) == 1);
    if (e.accepted == "fooBar") {
      found = true;
      CHECK(e.context_tokens == std::vector<std::string>{"this", "->"});
    }
    validate_event(e);
  }
  CHECK(found);
}

TEST_CASE("synthesize_events: empty inputs and ineligible documents") {
  EventPolicy p;
  CHECK(synthesize_events({}, p, 0).empty());
  const std::vector<SourceDocument> docs = {doc("a.hk", "1 + 2; \"s\";", Origin::kAcceptanceLog),
                                            doc("b.hk", "function foo", Origin::kAcceptanceLog)};
  CHECK(synthesize_events(docs, p, 0).empty());
}

TEST_CASE("synthesize_events: candidate mean and validity over the sample corpus") {
  for (auto [lang, mean] : {std::pair{Language::kB, 26.3}, std::pair{Language::kA, 99.5}}) {
    const auto docs = documents_where(lang, Origin::kAcceptanceLog);
    REQUIRE_FALSE(docs.empty());
    EventPolicy p = EventPolicy::for_language(lang);
    CHECK(p.candidate_mean == mean);
    const auto events = synthesize_events(docs, p, 42);
    REQUIRE(events.size() > 500);
    double total = 0;
    for (const auto& e : events) {
      total += static_cast<double>(e.candidates.size());
      REQUIRE(std::count(e.candidates.begin(), e.candidates.end(), e.accepted) == 1);
      const std::set<std::string> uniq(e.candidates.begin(), e.candidates.end());
      REQUIRE(uniq.size() == e.candidates.size());
      REQUIRE(is_identifier(e.accepted, lang));
      REQUIRE_FALSE(e.context_tokens.empty());
      const auto& decl = language_spec(lang).declaration_keywords;
      REQUIRE_FALSE(decl.contains(e.context_tokens.back()));
    }
    CHECK(std::abs(total / static_cast<double>(events.size()) - mean) <= 2.0);
  }
}

TEST_CASE("synthesize_events is deterministic and ordered by path and offset") {
  const auto docs = documents_where(Language::kB, Origin::kAcceptanceLog);
  const EventPolicy p = EventPolicy::for_language(Language::kB);
  const auto a = synthesize_events(docs, p, 9);
  auto shuffled = docs;
  std::reverse(shuffled.begin(), shuffled.end());
  const auto b = synthesize_events(shuffled, p, 9);
  CHECK(a == b);
  const auto c = synthesize_events(docs, p, 10);
  CHECK_FALSE(a == c);
}

TEST_CASE("build_dataset roles") {
  const std::vector<SourceDocument> commits = {doc("c1.hk", "a->b();", Origin::kCommit),
                                               doc("c2.hk", "c = d;", Origin::kCommit),
                                               doc("c3.hk", "e;", Origin::kCommit)};
  const Dataset commit = build_dataset(commits, DatasetRole::kCommit, Language::kA);
  CHECK(commit.size() == 3);
  CHECK(commit.event_count() == 0);

  const std::vector<SourceDocument> ide = {doc("i.hk", "x = y;", Origin::kIdeSnapshot)};
  CHECK_THROWS_AS(build_dataset(ide, DatasetRole::kAutocompletion, Language::kA),
                  InvalidArgument);
  try {
    build_dataset(ide, DatasetRole::kCommit, Language::kA);
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("i.hk") != std::string::npos);
  }

  SourceDocument cut = doc("j.hk", "alpha = beta; gamma", Origin::kIdeSnapshot);
  cut.cursor_offset = 12;
  const Dataset ide_ds = build_dataset(std::vector{cut}, DatasetRole::kIde, Language::kA);
  const auto& seq = std::get<TokenSequence>(ide_ds.items[0]);
  CHECK(token_texts(seq.tokens) == std::vector<std::string>{"alpha", "=", "beta"});

  SourceDocument bad = cut;
  bad.cursor_offset = 999;
  CHECK_THROWS_AS(validate_document(bad), InvalidArgument);
}

TEST_CASE("union_all counts") {
  const Dataset ac = numbered_events(10);
  std::vector<SourceDocument> ide;
  for (int i = 0; i < 7; ++i) {
    ide.push_back(doc("ide" + std::to_string(i) + ".hk", "x = y;", Origin::kIdeSnapshot));
  }
  const Dataset ide_ds = build_dataset(ide, DatasetRole::kIde, Language::kA);
  const Dataset all = union_all(ac, ide_ds);
  CHECK(all.size() == 17);
  CHECK(all.role == DatasetRole::kAll);
  auto want = ids(ac);
  for (const auto& s : ids(ide_ds)) want.insert(s);
  CHECK(ids(all) == want);
  CHECK_THROWS_AS(union_all(ide_ds, ac), InvalidArgument);
}

TEST_CASE("tag_language") {
  const std::vector<Token> seq = {ident("t1"), ident("t2")};
  const auto tagged = tag_language(seq, Language::kA);
  CHECK(token_texts(tagged) == std::vector<std::string>{"<lang-A>", "t1", "t2"});
  CHECK_THROWS_AS(tag_language(tagged, Language::kA), InvalidArgument);
  CHECK_THROWS_AS(tag_language(tagged, Language::kB), InvalidArgument);
}

TEST_CASE("split_holdout sizes, partition and determinism") {
  for (auto [n, held] : {std::pair{100, 10}, std::pair{10, 1}, std::pair{1234, 123}}) {
    const Dataset ds = numbered_events(n);
    const auto [train, heldout] = split_holdout(ds, 0.10, 3);
    CHECK(heldout.size() == static_cast<std::size_t>(held));
    CHECK(train.size() + heldout.size() == static_cast<std::size_t>(n));
    auto joined = ids(train);
    for (const auto& s : ids(heldout)) {
      CHECK_FALSE(joined.contains(s));
      joined.insert(s);
    }
    CHECK(joined == ids(ds));
    CHECK(ids(split_holdout(ds, 0.10, 3).second) == ids(heldout));
    CHECK(heldout.split == Split::kHeldout);
  }
  CHECK_THROWS_AS(split_holdout(Dataset{}, 0.1, 0), InvalidArgument);
  CHECK_THROWS_AS(split_holdout(numbered_events(5), 1.0, 0), InvalidArgument);
}

TEST_CASE("subsample is nested across fractions") {
  const Dataset ds = numbered_events(500);
  std::multiset<std::string> prev;
  for (double f : {0.01, 0.05, 0.1, 0.25, 0.5, 1.0}) {
    const auto cur = ids(subsample(ds, f, 17));
    CHECK(cur.size() == static_cast<std::size_t>(std::llround(f * 500)));
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = cur;
  }
}

TEST_CASE("JSON lines round trip and torn final line") {
  xfer::testing::TempDir tmp;
  const Dataset ds = numbered_events(3);
  const auto path = tmp.path() / "events.jsonl";
  write_jsonl(ds, path);
  const Dataset back = read_jsonl(path);
  REQUIRE(back.size() == 3);
  CHECK(std::get<CompletionEvent>(back.items[1]) == std::get<CompletionEvent>(ds.items[1]));

  const auto j = event_to_json(std::get<CompletionEvent>(ds.items[0]));
  for (const char* key :
       {"id", "language", "context_tokens", "candidates", "accepted", "developer_id", "day"}) {
    CHECK(j.contains(key));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"id":"torn","language":"A")";
  }
  CHECK(read_events(path).size() == 3);

  std::vector<SourceDocument> commits = {doc("c.hk", "a->b();", Origin::kCommit)};
  const Dataset seqs = build_dataset(commits, DatasetRole::kCommit, Language::kA);
  write_jsonl(seqs, tmp.path() / "seq.jsonl");
  const Dataset seqs_back = read_jsonl(tmp.path() / "seq.jsonl");
  CHECK(seqs_back.role == DatasetRole::kCommit);
  CHECK(std::get<TokenSequence>(seqs_back.items[0]) == std::get<TokenSequence>(seqs.items[0]));
}

TEST_CASE("invalid events are rejected") {
  CompletionEvent e;
  e.id = "x";
  e.context_tokens = {"a"};
  e.candidates = {"foo", "bar"};
  e.accepted = "baz";
  CHECK_THROWS_AS(validate_event(e), InvalidArgument);
  e.accepted = "foo";
  CHECK_NOTHROW(validate_event(e));
  e.candidates = {"foo", "foo"};
  CHECK_THROWS_AS(validate_event(e), InvalidArgument);
  e.candidates = {"foo", "("};
  e.accepted = "(";
  CHECK_THROWS_AS(validate_event(e), InvalidArgument);
  e.candidates = {"foo"};
  e.accepted = "foo";
  e.context_tokens.clear();
  CHECK_THROWS_AS(validate_event(e), InvalidArgument);
}

TEST_CASE("sample corpus manifest covers every origin and language") {
  const auto& docs = xfer::testing::sample_documents();
  CHECK(docs.size() >= 200);
  for (Language lang : {Language::kA, Language::kB}) {
    CHECK_FALSE(documents_where(lang, Origin::kAcceptanceLog).empty());
    CHECK_FALSE(documents_where(lang, Origin::kIdeSnapshot).empty());
  }
  CHECK_FALSE(documents_where(Language::kA, Origin::kCommit).empty());
  for (const auto& d : docs) validate_document(d);
}
