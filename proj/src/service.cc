#include "xfer/service.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <ctime>
#include <set>

#include "httplib.h"

#include "xfer/hash.h"
#include "xfer/lexer.h"
#include "xfer/tokenizer.h"

namespace xfer {

namespace {

template <typename V>
V field(const nlohmann::json& j, const char* key, V fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<V>();
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

std::string utc_day(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[16];
  std::strftime(buf, sizeof(buf), "%Y-%m-%d", &tm);
  return buf;
}

bool valid_day(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

CompletionRequest CompletionRequest::from_json(const nlohmann::json& j) {
  try {
    CompletionRequest r;
    r.language = parse_language(j.at("language").get<std::string>());
    r.before_cursor = j.at("before_cursor").get<std::string>();
    if (j.contains("candidates") && !j.at("candidates").is_null()) {
      r.candidates = j.at("candidates").get<std::vector<std::string>>();
    }
    r.session_id = field<std::string>(j, "session_id", "");
    r.developer_id = field<std::string>(j, "developer_id", "anonymous");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ServiceError(400, std::string("bad completion request: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ServiceError(400, e.what());
  }
}

nlohmann::json CompletionRequest::to_json() const {
  nlohmann::json j{{"language", language_name(language)},
                   {"before_cursor", before_cursor},
                   {"session_id", session_id},
                   {"developer_id", developer_id}};
  if (candidates) j["candidates"] = *candidates;
  return j;
}

nlohmann::json CompletionResponse::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& s : suggestions) {
    items.push_back({{"token", s.candidate}, {"score", s.score}, {"rank", s.rank}});
  }
  nlohmann::json skip = nlohmann::json::array();
  for (const auto& s : skipped) skip.push_back({{"token", s.candidate}, {"reason", s.reason}});
  return {{"request_id", request_id},
          {"suggestions", items},
          {"latency_ms", latency_ms},
          {"candidate_count", candidate_count},
          {"skipped", skip},
          {"prefix", prefix},
          {"context_hash", context_hash}};
}

AcceptanceNotice AcceptanceNotice::from_json(const nlohmann::json& j) {
  try {
    AcceptanceNotice n;
    n.session_id = field<std::string>(j, "session_id", "");
    n.request_id = j.at("request_id").get<std::string>();
    n.context_hash = field<std::string>(j, "context_hash", "");
    n.accepted = j.at("accepted").get<std::string>();
    n.shown = field<std::vector<std::string>>(j, "shown", {});
    n.timestamp = field<std::string>(j, "timestamp", "");
    return n;
  } catch (const nlohmann::json::exception& e) {
    throw ServiceError(400, std::string("bad acceptance notice: ") + e.what());
  }
}

ModelSnapshot::ModelSnapshot(ModelCheckpoint ck, std::filesystem::path source, std::uint64_t gen)
    : checkpoint(std::move(ck)),
      model(checkpoint.model()),
      path(std::move(source)),
      generation(gen) {
  const Vocabulary& v = checkpoint.vocab;
  for (Language lang : {Language::kA, Language::kB}) {
    auto& out = frequent_identifiers[static_cast<int>(lang)];
    for (int id = v.num_specials(); id < v.size(); ++id) {
      if (is_identifier(v.token(id), lang)) out.push_back(v.token(id));
    }
  }
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (options_.top_k < 1) throw InvalidArgument("top_k must be at least 1");
  if (options_.log_path && options_.log_path->has_parent_path()) {
    std::filesystem::create_directories(options_.log_path->parent_path());
  }
}

void Service::load(const std::filesystem::path& checkpoint) {
  set_checkpoint(ModelCheckpoint::load(checkpoint), checkpoint);
}

void Service::set_checkpoint(ModelCheckpoint checkpoint, std::filesystem::path source) {
  std::lock_guard lock(snapshot_mutex_);
  auto snap = std::make_shared<const ModelSnapshot>(std::move(checkpoint), std::move(source),
                                                    ++generation_);
  snapshot_ = std::move(snap);
}

bool Service::loaded() const { return snapshot() != nullptr; }

std::shared_ptr<const ModelSnapshot> Service::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

std::vector<std::string> Service::derive_candidates(const ModelSnapshot& snap, Language language,
                                                    const std::vector<Token>& context,
                                                    const std::string& prefix) const {
  // Same split as synthesized events: identifiers from the surrounding file
  // (most recent first) and frequent corpus identifiers.
  const auto limit = static_cast<std::size_t>(options_.fallback_candidates);
  const std::size_t local_share = std::max<std::size_t>(1, limit / 2);
  auto wanted = [&](const std::string& s) { return prefix.empty() || s.rfind(prefix, 0) == 0; };
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto it = context.rbegin(); it != context.rend() && out.size() < local_share; ++it) {
    if (it->kind == TokenKind::kIdentifier && wanted(it->text) && seen.insert(it->text).second) {
      out.push_back(it->text);
    }
  }
  for (const auto& s : snap.frequent_identifiers[static_cast<int>(language)]) {
    if (out.size() >= limit) break;
    if (wanted(s) && seen.insert(s).second) out.push_back(s);
  }
  return out;
}

CompletionResponse Service::complete(const CompletionRequest& request) {
  const auto snap = snapshot();
  if (!snap) throw ServiceError(503, "no model loaded");
  if (request.before_cursor.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ServiceError(400, "before_cursor is empty");
  }
  std::vector<Token> tokens;
  try {
    tokens = lex(request.before_cursor, request.language).tokens;
  } catch (const LexError& e) {
    throw ServiceError(400, std::string("cannot lex before_cursor: ") + e.what());
  }
  if (tokens.empty()) throw ServiceError(400, "before_cursor contains no tokens");

  CompletionResponse resp;
  if (is_word_char(request.before_cursor.back()) && tokens.back().kind == TokenKind::kIdentifier) {
    resp.prefix = tokens.back().text;
    tokens.pop_back();
  }
  std::vector<std::string> candidates;
  if (request.candidates) {
    candidates = *request.candidates;
    std::set<std::string> seen;
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](const std::string& c) { return !seen.insert(c).second; }),
                     candidates.end());
  } else {
    candidates = derive_candidates(*snap, request.language, tokens, resp.prefix);
  }
  if (candidates.empty()) throw ServiceError(400, "no candidates to rank");

  const auto t0 = std::chrono::steady_clock::now();
  RankedSuggestions ranked;
  try {
    ranked = rank_candidates<float>(snap->model, snap->checkpoint.vocab, request.language, tokens,
                                    candidates);
  } catch (const InvalidArgument& e) {
    throw ServiceError(400, e.what());
  }
  resp.latency_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  resp.suggestions = top_k(ranked, options_.top_k);
  resp.skipped = ranked.skipped;
  resp.candidate_count = candidates.size();
  resp.context_hash = hex64(fnv1a(request.before_cursor, fnv1a(language_name(request.language))));

  Pending p;
  p.language = request.language;
  const auto keep = static_cast<std::size_t>(options_.logged_context_tokens);
  const std::size_t from = tokens.size() > keep ? tokens.size() - keep : 0;
  for (std::size_t i = from; i < tokens.size(); ++i) p.context_tokens.push_back(tokens[i].text);
  p.candidates = candidates;
  for (const auto& s : resp.suggestions) p.shown.push_back(s.candidate);
  p.session_id = request.session_id;
  p.developer_id = request.developer_id.empty() ? "anonymous" : request.developer_id;
  p.context_hash = resp.context_hash;
  p.created = std::chrono::steady_clock::now();
  {
    std::lock_guard lock(pending_mutex_);
    expire_pending(p.created);
    resp.request_id = "r" + std::to_string(snap->generation) + "-" + std::to_string(++next_request_);
    pending_.emplace(resp.request_id, std::move(p));
    ++completes_;
  }
  return resp;
}

void Service::expire_pending(std::chrono::steady_clock::time_point now) {
  for (auto it = pending_.begin(); it != pending_.end();) {
    if (now - it->second.created > options_.request_ttl) {
      it = pending_.erase(it);
    } else {
      ++it;
    }
  }
  while (pending_.size() >= options_.max_pending) {
    auto oldest = std::min_element(pending_.begin(), pending_.end(), [](const auto& a, const auto& b) {
      return a.second.created < b.second.created;
    });
    pending_.erase(oldest);
  }
}

CompletionEvent Service::accept(const AcceptanceNotice& notice) {
  Pending p;
  {
    std::lock_guard lock(pending_mutex_);
    expire_pending(std::chrono::steady_clock::now());
    if (accepted_.count(notice.request_id)) {
      throw ServiceError(409, "request " + notice.request_id + " was already accepted");
    }
    const auto it = pending_.find(notice.request_id);
    if (it == pending_.end()) {
      throw ServiceError(404, "unknown or expired request " + notice.request_id);
    }
    const Pending& found = it->second;
    if (std::find(found.shown.begin(), found.shown.end(), notice.accepted) == found.shown.end()) {
      throw ServiceError(422, "'" + notice.accepted + "' was not among the suggestions shown for " +
                                  notice.request_id);
    }
    if (!notice.shown.empty() && notice.shown != found.shown) {
      throw ServiceError(422, "shown list does not match what the service returned");
    }
    if (!notice.context_hash.empty() && notice.context_hash != found.context_hash) {
      throw ServiceError(422, "context hash does not match the request");
    }
    if (!notice.session_id.empty() && !found.session_id.empty() &&
        notice.session_id != found.session_id) {
      throw ServiceError(422, "session does not match the request");
    }
    p = found;
  }

  CompletionEvent ev;
  ev.id = "service:" + notice.request_id;
  ev.language = p.language;
  ev.context_tokens = p.context_tokens;
  ev.candidates = p.candidates;
  ev.accepted = notice.accepted;
  ev.developer_id = p.developer_id;
  if (notice.timestamp.size() >= 10 && valid_day(notice.timestamp.substr(0, 10))) {
    ev.day = notice.timestamp.substr(0, 10);
  } else if (notice.timestamp.empty()) {
    ev.day = utc_day(options_.clock());
  } else {
    throw ServiceError(400, "timestamp must start with YYYY-MM-DD");
  }
  try {
    validate_event(ev);
  } catch (const InvalidArgument& e) {
    throw ServiceError(422, std::string("event would be invalid: ") + e.what());
  }

  {
    // Claim the request before writing so a concurrent duplicate fails.
    std::lock_guard lock(pending_mutex_);
    if (!accepted_.insert(notice.request_id).second) {
      throw ServiceError(409, "request " + notice.request_id + " was already accepted");
    }
    pending_.erase(notice.request_id);
  }
  try {
    append_event(ev);
  } catch (...) {
    std::lock_guard lock(pending_mutex_);
    accepted_.erase(notice.request_id);
    throw;
  }
  return ev;
}

void Service::append_event(const CompletionEvent& event) {
  std::lock_guard lock(log_mutex_);
  ++accepts_;
  if (!options_.log_path) return;
  const std::string line = event_to_json(event).dump() + "\n";
  const int fd = ::open(options_.log_path->c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw ServiceError(500, "cannot open event log: " + std::string(std::strerror(errno)));
  }
  // One write per line; O_APPEND keeps it contiguous and fsync makes it durable
  // before the client hears back.
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      const std::string err = std::strerror(errno);
      ::close(fd);
      throw ServiceError(500, "event log write failed: " + err);
    }
    done += static_cast<std::size_t>(n);
  }
  const bool synced = ::fsync(fd) == 0;
  ::close(fd);
  if (!synced) throw ServiceError(500, "event log fsync failed");
}

nlohmann::json Service::reload(const std::filesystem::path& checkpoint) {
  std::lock_guard reload_lock(reload_mutex_);
  std::filesystem::path path = checkpoint;
  if (path.empty()) {
    const auto current = snapshot();
    if (!current || current->path.empty()) throw ServiceError(422, "no checkpoint path to reload");
    path = current->path;
  }
  ModelCheckpoint ck;
  try {
    ck = ModelCheckpoint::load(path);
  } catch (const Error& e) {
    throw ServiceError(422, std::string("reload failed, still serving the previous model: ") + e.what());
  }
  set_checkpoint(std::move(ck), path);
  const auto snap = snapshot();
  return {{"status", "reloaded"},
          {"checkpoint", snap->path.string()},
          {"generation", snap->generation},
          {"vocab_size", snap->checkpoint.vocab.size()}};
}

nlohmann::json Service::health() const {
  const auto snap = snapshot();
  nlohmann::json j{{"status", snap ? "ok" : "no_model"}, {"model_loaded", snap != nullptr}};
  if (snap) {
    nlohmann::json prov = nlohmann::json::array();
    for (const auto& p : snap->checkpoint.provenance) prov.push_back(p.to_json());
    j["checkpoint"] = snap->path.string();
    j["generation"] = snap->generation;
    j["model"] = snap->checkpoint.config.to_json();
    j["provenance"] = prov;
  }
  j["log"] = options_.log_path ? options_.log_path->string() : "";
  return j;
}

// --- HTTP --------------------------------------------------------------------

struct HttpServer::Impl {
  httplib::Server server;
};

namespace {

void reply_json(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message) {
  reply_json(res, status, {{"error", message}, {"status", status}});
}

template <typename F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const ServiceError& e) {
    reply_error(res, e.status(), e.what());
  } catch (const nlohmann::json::exception& e) {
    reply_error(res, 400, std::string("malformed JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    reply_error(res, 400, e.what());
  } catch (const std::exception& e) {
    reply_error(res, 500, e.what());
  }
}

}  // namespace

HttpServer::HttpServer(Service& service, ServerOptions options)
    : impl_(std::make_unique<Impl>()), service_(service), options_(std::move(options)) {
  auto& svr = impl_->server;
  svr.Post("/v1/complete", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto r = CompletionRequest::from_json(nlohmann::json::parse(req.body));
      reply_json(res, 200, service_.complete(r).to_json());
    });
  });
  svr.Post("/v1/accept", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto n = AcceptanceNotice::from_json(nlohmann::json::parse(req.body));
      const CompletionEvent ev = service_.accept(n);
      reply_json(res, 200, {{"status", "logged"}, {"event", event_to_json(ev)}});
    });
  });
  svr.Post("/v1/reload", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string path;
      if (!req.body.empty()) {
        const auto j = nlohmann::json::parse(req.body);
        path = field<std::string>(j, "checkpoint", "");
      }
      reply_json(res, 200, service_.reload(path));
    });
  });
  svr.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { reply_json(res, 200, service_.health()); });
  });
  if (options_.static_dir) {
    if (!svr.set_mount_point("/", options_.static_dir->string())) {
      throw Error("static directory not found: " + options_.static_dir->string());
    }
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& svr = impl_->server;
  if (options_.port == 0) {
    port_ = svr.bind_to_any_port(options_.host);
  } else {
    port_ = svr.bind_to_port(options_.host, options_.port) ? options_.port : -1;
  }
  if (port_ < 0) {
    throw Error("cannot bind " + options_.host + ":" + std::to_string(options_.port));
  }
  return port_;
}

void HttpServer::listen_after_bind() { impl_->server.listen_after_bind(); }

void HttpServer::run() {
  bind();
  listen_after_bind();
}

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace xfer
