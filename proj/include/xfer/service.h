#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "xfer/checkpoint.h"
#include "xfer/corpus.h"
#include "xfer/error.h"
#include "xfer/ranker.h"

namespace xfer {

// Carries the HTTP status the server should answer with.
class ServiceError : public Error {
 public:
  ServiceError(int status, const std::string& what) : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

struct CompletionRequest {
  Language language = Language::kA;
  std::string before_cursor;
  // When absent the service derives a list from the context and the
  // vocabulary's most frequent identifiers.
  std::optional<std::vector<std::string>> candidates;
  std::string session_id;
  std::string developer_id;

  // Throws ServiceError(400) on a malformed body.
  static CompletionRequest from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CompletionResponse {
  std::string request_id;
  std::vector<Suggestion> suggestions;  // top 5
  double latency_ms = 0;                // encode + tree + scoring
  std::size_t candidate_count = 0;
  std::vector<SkippedCandidate> skipped;
  // Identifier fragment directly before the cursor, if any; the suggestions
  // complete it and it is not part of the scored context.
  std::string prefix;
  std::string context_hash;

  nlohmann::json to_json() const;
};

struct AcceptanceNotice {
  std::string session_id;
  std::string request_id;
  std::string context_hash;  // optional echo, checked when present
  std::string accepted;
  std::vector<std::string> shown;  // optional echo, checked when present
  std::string timestamp;           // ISO 8601; the day is its date part

  static AcceptanceNotice from_json(const nlohmann::json& j);
};

struct ServiceOptions {
  std::optional<std::filesystem::path> log_path;
  std::chrono::seconds request_ttl{1800};
  std::size_t max_pending = 100000;
  int top_k = 5;
  // Size of a derived candidate list.
  int fallback_candidates = 100;
  // Context tokens stored with a logged event.
  int logged_context_tokens = 128;
  // Overridable for tests.
  std::function<std::chrono::system_clock::time_point()> clock = [] {
    return std::chrono::system_clock::now();
  };
};

// Everything a request needs from one loaded checkpoint.
struct ModelSnapshot {
  ModelCheckpoint checkpoint;
  Transformer<float> model;
  std::filesystem::path path;
  std::vector<std::string> frequent_identifiers[2];  // per language, by count
  std::uint64_t generation = 0;

  ModelSnapshot(ModelCheckpoint ck, std::filesystem::path source, std::uint64_t gen);
};

// Thread-safe: completes run concurrently against an immutable snapshot;
// reload swaps the snapshot pointer; the log has a single serialized writer.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  // Loads the first model. Throws on failure.
  void load(const std::filesystem::path& checkpoint);
  void set_checkpoint(ModelCheckpoint checkpoint, std::filesystem::path source = {});
  bool loaded() const;
  std::shared_ptr<const ModelSnapshot> snapshot() const;

  // Throws ServiceError 400 for unlexable or empty input, 503 without a model.
  CompletionResponse complete(const CompletionRequest& request);

  // Validates against the remembered request and appends the event to the
  // log. Throws ServiceError 404 (unknown or expired request), 409 (already
  // accepted) or 422 (token not shown / echo mismatch).
  CompletionEvent accept(const AcceptanceNotice& notice);

  // Swaps in a new checkpoint; on failure the old model keeps serving and
  // ServiceError 422 is thrown. An empty path reloads the current file.
  nlohmann::json reload(const std::filesystem::path& checkpoint = {});

  nlohmann::json health() const;

  // Candidate list used when a request carries none.
  std::vector<std::string> derive_candidates(const ModelSnapshot& snap, Language language,
                                             const std::vector<Token>& context,
                                             const std::string& prefix) const;

 private:
  struct Pending {
    Language language;
    std::vector<std::string> context_tokens;
    std::vector<std::string> candidates;
    std::vector<std::string> shown;
    std::string session_id;
    std::string developer_id;
    std::string context_hash;
    std::chrono::steady_clock::time_point created;
  };

  void append_event(const CompletionEvent& event);
  void expire_pending(std::chrono::steady_clock::time_point now);

  ServiceOptions options_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const ModelSnapshot> snapshot_;
  std::uint64_t generation_ = 0;
  std::mutex reload_mutex_;

  std::mutex pending_mutex_;
  std::unordered_map<std::string, Pending> pending_;
  std::unordered_set<std::string> accepted_;
  std::uint64_t next_request_ = 0;

  std::mutex log_mutex_;
  std::uint64_t completes_ = 0;
  std::uint64_t accepts_ = 0;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8731;
  std::optional<std::filesystem::path> static_dir;
};

// Blocks serving POST /v1/complete, /v1/accept, /v1/reload, GET /v1/health
// and the static bundle at GET /. `on_ready` runs once the socket is bound.
// Returns when stop_server is called from another thread.
class HttpServer {
 public:
  HttpServer(Service& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds and serves until stop(). Throws Error when the port cannot be bound.
  void run();
  // Binds to an ephemeral port when options.port is 0; returns the port.
  int bind();
  void listen_after_bind();
  void stop();
  int port() const { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Service& service_;
  ServerOptions options_;
  int port_ = 0;
};

}  // namespace xfer
