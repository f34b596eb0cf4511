#include <atomic>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "oracles.h"
#include "test_util.h"
#include "xfer/service.h"
#include "xfer/trainer.h"

// After Eigen: resolv.h defines _res.
#include "httplib.h"

using namespace xfer;

namespace {

ModelCheckpoint small_checkpoint(std::uint64_t seed) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const char* t : {"self", ".", "(", ")", "=", "fooBar", "foo", "Baz", "get_user", "user",
                        "name", "save", "def", ":", "return"}) {
    counts[t] = 3;
  }
  ModelConfig c = oracle::tiny_config();
  c.context_len = 32;
  c.seed = seed;
  return ModelCheckpoint::fresh(c, Vocabulary::from_counts(counts, 1));
}

CompletionRequest request(std::string text, std::optional<std::vector<std::string>> cands = {}) {
  CompletionRequest r;
  r.language = Language::kB;
  r.before_cursor = std::move(text);
  r.candidates = std::move(cands);
  r.session_id = "s1";
  r.developer_id = "dev-7";
  return r;
}

std::size_t line_count(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) n += !line.empty();
  return n;
}

}  // namespace

TEST_CASE("complete passes candidates through the ranker") {
  Service svc;
  CHECK_THROWS_AS(svc.complete(request("x = 1")), ServiceError);
  const ModelCheckpoint ck = small_checkpoint(1);
  svc.set_checkpoint(ck);
  const auto resp = svc.complete(request("self.fooBar(", std::vector<std::string>{"fooBar", "fooBaz"}));
  REQUIRE(resp.suggestions.size() == 2);
  const auto tokens = lex("self.fooBar(", Language::kB).tokens;
  const std::vector<std::string> cands{"fooBar", "fooBaz"};
  const auto direct = rank_candidates<float>(ck.model(), ck.vocab, Language::kB, tokens, cands);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(resp.suggestions[i].candidate == direct.items[i].candidate);
    CHECK(resp.suggestions[i].score == direct.items[i].score);
  }
  CHECK(resp.latency_ms >= 0);
  CHECK(resp.prefix.empty());

  const auto again = svc.complete(request("self.fooBar(", std::vector<std::string>{"fooBar", "fooBaz"}));
  CHECK(again.request_id != resp.request_id);
  CHECK(again.suggestions[0].score == resp.suggestions[0].score);
}

TEST_CASE("complete errors and derived candidates") {
  Service svc;
  svc.set_checkpoint(small_checkpoint(2));
  try {
    svc.complete(request(""));
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 400);
  }
  try {
    svc.complete(request(std::string("x = \0y", 6)));
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 400);
  }
  CHECK_THROWS_AS(svc.complete(request("x = ", std::vector<std::string>{})), ServiceError);

  const auto resp = svc.complete(request("user_name = load(user_id)\nprint(user_"));
  CHECK(resp.prefix == "user_");
  CHECK(resp.candidate_count >= 2);
  for (const auto& s : resp.suggestions) CHECK(s.candidate.rfind("user_", 0) == 0);
  CHECK(resp.suggestions.size() <= 5);
}

TEST_CASE("accept logs valid events exactly once") {
  testing::TempDir dir;
  const auto log = dir.path() / "logs" / "events.jsonl";
  ServiceOptions opt;
  opt.log_path = log;
  Service svc(opt);
  svc.set_checkpoint(small_checkpoint(3));
  const std::vector<std::string> cands{"save", "get_user", "fooBar", "name", "foo", "user"};
  const auto resp = svc.complete(request("def f(user):\n    self.", cands));
  REQUIRE(resp.suggestions.size() == 5);

  AcceptanceNotice n;
  n.session_id = "s1";
  n.request_id = resp.request_id;
  n.accepted = resp.suggestions[0].candidate;
  n.timestamp = "2021-03-04T10:00:00Z";
  const CompletionEvent ev = svc.accept(n);
  CHECK(line_count(log) == 1);
  CHECK(ev.day == "2021-03-04");
  CHECK(ev.candidates == cands);
  CHECK(ev.developer_id == "dev-7");
  CHECK_NOTHROW(validate_event(ev));
  const auto events = read_events(log);
  REQUIRE(events.size() == 1);
  CHECK(events[0] == ev);

  try {
    svc.accept(n);
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 409);
  }

  const auto resp2 = svc.complete(request("def f(user):\n    self.", cands));
  AcceptanceNotice bad = n;
  bad.request_id = resp2.request_id;
  const auto missing = std::find_if(cands.begin(), cands.end(), [&](const std::string& c) {
    return std::none_of(resp2.suggestions.begin(), resp2.suggestions.end(),
                        [&](const Suggestion& s) { return s.candidate == c; });
  });
  REQUIRE(missing != cands.end());
  bad.accepted = *missing;
  try {
    svc.accept(bad);
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 422);
  }
  CHECK(line_count(log) == 1);

  bad.request_id = "r0-999";
  CHECK_THROWS_AS(svc.accept(bad), ServiceError);
}

TEST_CASE("expired requests cannot be accepted") {
  ServiceOptions opt;
  opt.request_ttl = std::chrono::seconds(0);
  Service svc(opt);
  svc.set_checkpoint(small_checkpoint(4));
  const auto resp = svc.complete(request("x = ", std::vector<std::string>{"foo", "user"}));
  std::this_thread::sleep_for(std::chrono::milliseconds(5));
  AcceptanceNotice n;
  n.request_id = resp.request_id;
  n.accepted = resp.suggestions[0].candidate;
  try {
    svc.accept(n);
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 404);
  }
}

TEST_CASE("reload swaps models and survives a corrupt file") {
  testing::TempDir dir;
  const auto a = dir.path() / "a.ckpt";
  const auto b = dir.path() / "b.ckpt";
  small_checkpoint(5).save(a);
  small_checkpoint(6).save(b);
  Service svc;
  svc.load(a);
  const auto req = request("self.", std::vector<std::string>{"fooBar", "save", "name"});
  const auto r1 = svc.complete(req);

  svc.reload(a);
  CHECK(svc.complete(req).suggestions[0].score == r1.suggestions[0].score);

  svc.reload(b);
  const auto r2 = svc.complete(req);
  CHECK(r2.suggestions[0].score != r1.suggestions[0].score);

  const auto corrupt = dir.path() / "bad.ckpt";
  std::ofstream(corrupt) << "XFERCKPT-nope";
  try {
    svc.reload(corrupt);
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.status() == 422);
  }
  CHECK(svc.complete(req).suggestions[0].score == r2.suggestions[0].score);
  CHECK(svc.health()["checkpoint"] == b.string());
}

TEST_CASE("reload under concurrent load loses no requests") {
  testing::TempDir dir;
  const auto a = dir.path() / "a.ckpt";
  const auto b = dir.path() / "b.ckpt";
  small_checkpoint(7).save(a);
  small_checkpoint(8).save(b);
  Service svc;
  svc.load(a);
  std::atomic<int> ok{0}, failed{0};
  std::atomic<bool> done{false};
  std::vector<std::thread> workers;
  for (int t = 0; t < 3; ++t) {
    workers.emplace_back([&] {
      const auto req = request("self.", std::vector<std::string>{"fooBar", "save", "name"});
      while (!done) {
        try {
          svc.complete(req);
          ++ok;
        } catch (...) {
          ++failed;
        }
      }
    });
  }
  for (int i = 0; i < 10; ++i) svc.reload(i % 2 ? a : b);
  done = true;
  for (auto& w : workers) w.join();
  CHECK(ok > 0);
  CHECK(failed == 0);
}

TEST_CASE("logged acceptances feed fine-tuning") {
  testing::TempDir dir;
  const auto log = dir.path() / "events.jsonl";
  ServiceOptions opt;
  opt.log_path = log;
  Service svc(opt);
  const ModelCheckpoint ck = small_checkpoint(9);
  svc.set_checkpoint(ck);
  const std::vector<std::string> contexts{"def f(user):\n    self.", "name = get_user(",
                                          "return self.foo", "x = user."};
  for (int i = 0; i < 1000; ++i) {
    const auto resp = svc.complete(request(contexts[static_cast<std::size_t>(i) % contexts.size()],
                                           std::vector<std::string>{"save", "get_user", "fooBar", "name", "user"}));
    AcceptanceNotice n;
    n.request_id = resp.request_id;
    n.accepted = resp.suggestions[static_cast<std::size_t>(i) % resp.suggestions.size()].candidate;
    svc.accept(n);
  }
  CHECK(line_count(log) == 1000);
  const auto events = read_events(log);
  Dataset ds = build_dataset(events, Language::kB);
  TrainPhase p;
  p.dataset = std::make_shared<const Dataset>(ds);
  p.kind = PhaseKind::kFinetune;
  p.max_epochs = 1;
  const PhaseResult r = train_phase(ck, p);
  CHECK(r.report.train_examples + r.report.heldout_examples == 1000);
  CHECK(r.checkpoint.provenance.size() == 1);
}

TEST_CASE("HTTP endpoints") {
  testing::TempDir dir;
  const auto ckpt = dir.path() / "m.ckpt";
  small_checkpoint(10).save(ckpt);
  const auto web = dir.path() / "web";
  std::filesystem::create_directories(web);
  std::ofstream(web / "index.html") << "<html>editor</html>";

  ServiceOptions opt;
  opt.log_path = dir.path() / "events.jsonl";
  Service svc(opt);
  svc.load(ckpt);
  HttpServer server(svc, {"127.0.0.1", 0, web});
  const int port = server.bind();
  std::thread th([&] { server.listen_after_bind(); });

  httplib::Client cli("127.0.0.1", port);
  auto health = cli.Get("/v1/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(nlohmann::json::parse(health->body)["model_loaded"] == true);

  auto index = cli.Get("/");
  REQUIRE(index);
  CHECK(index->status == 200);
  CHECK(index->body.find("editor") != std::string::npos);

  const nlohmann::json body{{"language", "B"},
                            {"before_cursor", "self."},
                            {"candidates", {"fooBar", "save"}},
                            {"developer_id", "d1"}};
  auto comp = cli.Post("/v1/complete", body.dump(), "application/json");
  REQUIRE(comp);
  CHECK(comp->status == 200);
  const auto cj = nlohmann::json::parse(comp->body);
  CHECK(cj["suggestions"].size() == 2);

  const nlohmann::json accept{{"request_id", cj["request_id"]},
                              {"accepted", cj["suggestions"][0]["token"]},
                              {"context_hash", cj["context_hash"]}};
  auto acc = cli.Post("/v1/accept", accept.dump(), "application/json");
  REQUIRE(acc);
  CHECK(acc->status == 200);
  auto dup = cli.Post("/v1/accept", accept.dump(), "application/json");
  REQUIRE(dup);
  CHECK(dup->status == 409);

  auto empty = cli.Post("/v1/complete", R"({"language":"B","before_cursor":""})", "application/json");
  REQUIRE(empty);
  CHECK(empty->status == 400);
  auto junk = cli.Post("/v1/complete", "{nope", "application/json");
  REQUIRE(junk);
  CHECK(junk->status == 400);

  auto bad_reload = cli.Post("/v1/reload", R"({"checkpoint":"/nonexistent.ckpt"})", "application/json");
  REQUIRE(bad_reload);
  CHECK(bad_reload->status == 422);
  auto good_reload = cli.Post("/v1/reload", "", "application/json");
  REQUIRE(good_reload);
  CHECK(good_reload->status == 200);

  server.stop();
  th.join();
  CHECK(line_count(dir.path() / "events.jsonl") == 1);
}

TEST_CASE("HTTP answers 503 without a model") {
  Service svc;
  HttpServer server(svc, {"127.0.0.1", 0, std::nullopt});
  const int port = server.bind();
  std::thread th([&] { server.listen_after_bind(); });
  httplib::Client cli("127.0.0.1", port);
  auto r = cli.Post("/v1/complete", R"({"language":"A","before_cursor":"$x = "})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 503);
  server.stop();
  th.join();
}
