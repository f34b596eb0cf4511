#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "xfer/language.h"
#include "xfer/lexer.h"

namespace xfer {

enum class Origin { kIdeSnapshot, kCommit, kAcceptanceLog };

std::string_view origin_name(Origin origin);
Origin parse_origin(std::string_view name);

struct SourceDocument {
  std::string path;
  Language language = Language::kA;
  std::string content;
  Origin origin = Origin::kCommit;
  // Byte offset of the editor cursor; present for IDE snapshots.
  std::optional<std::size_t> cursor_offset;
};

// Checks the cursor invariant. Throws InvalidArgument.
void validate_document(const SourceDocument& doc);

LexedSource lex(const SourceDocument& doc);

// One logged autocompletion selection.
struct CompletionEvent {
  std::string id;
  Language language = Language::kA;
  std::vector<std::string> context_tokens;
  std::vector<std::string> candidates;
  std::string accepted;
  std::string developer_id;
  std::string day;  // YYYY-MM-DD

  bool operator==(const CompletionEvent&) const = default;
};

// accepted in candidates, no duplicate candidates, non-empty context, accepted
// lexes as a single identifier. Throws InvalidArgument naming the violation.
void validate_event(const CompletionEvent& event);

// A task-agnostic code sequence (IDE snapshot prefix or commit file).
struct TokenSequence {
  std::string id;
  Language language = Language::kA;
  std::vector<Token> tokens;

  bool operator==(const TokenSequence&) const = default;
};

enum class DatasetRole { kAutocompletion, kIde, kCommit, kAll };
enum class Split { kTrain, kHeldout };

std::string_view role_name(DatasetRole role);
DatasetRole parse_role(std::string_view name);

using DatasetItem = std::variant<TokenSequence, CompletionEvent>;

const std::string& item_id(const DatasetItem& item);
Language item_language(const DatasetItem& item);

struct Dataset {
  DatasetRole role = DatasetRole::kIde;
  std::set<Language> language_mix;
  std::vector<DatasetItem> items;
  Split split = Split::kTrain;

  std::size_t size() const { return items.size(); }
  std::size_t event_count() const;
};

// How acceptance events are synthesized from source files.
struct EventPolicy {
  // Candidate-list size is Poisson(candidate_mean) clipped to
  // [min_candidates, max_candidates]; fixed_size overrides it.
  double candidate_mean = 26.3;
  std::optional<int> fixed_size;
  int min_candidates = 2;
  int max_candidates = 400;
  // Share of distractors drawn from identifiers of the same file; the rest
  // come from corpus-frequency-weighted sampling.
  double same_file_share = 0.5;
  int frequent_pool_size = 2000;
  int max_context_tokens = 128;
  int max_events_per_document = 60;
  // Acceptance propensity of a site: partial_count^length_exponent, times
  // member_site_boost after a member-access operator. Developers type short
  // names themselves and reach for completion on long member names.
  double length_exponent = 2.0;
  double member_site_boost = 2.0;
  int developers = 40;
  int days = 14;
  // Used to pad candidate lists when the corpus pools run dry.
  std::vector<std::string> background_identifiers;

  // 99.5 candidates for A, 26.3 for B.
  static EventPolicy for_language(Language language);
};

// True when token `index` of `tokens` may be the accepted token of an event:
// an identifier that is not the name introduced by a declaration keyword.
bool is_eligible_site(const std::vector<Token>& tokens, std::size_t index,
                      Language language);

std::vector<CompletionEvent> synthesize_events(std::span<const SourceDocument> documents,
                                               const EventPolicy& policy,
                                               std::uint64_t seed);

// Builds an IDE or Commit dataset from documents of the matching origin, or an
// Autocompletion dataset by synthesizing events from acceptance-log documents.
// Throws InvalidArgument naming the first document whose origin or language
// does not fit the role. role=All must be built with union_all.
Dataset build_dataset(std::span<const SourceDocument> documents, DatasetRole role,
                      Language language, const EventPolicy& policy = {},
                      std::uint64_t seed = 0);

Dataset build_dataset(std::vector<CompletionEvent> events, Language language);

// Multiset union of an Autocompletion and an IDE dataset.
Dataset union_all(const Dataset& autocompletion, const Dataset& ide);

// Concatenation of datasets of possibly different languages (multilingual runs).
Dataset merge_datasets(std::span<const Dataset> parts, DatasetRole role);

// Prepends a single control token. Throws InvalidArgument when the sequence
// already starts with one.
std::vector<Token> tag_language(const std::vector<Token>& sequence, Language language);

// Deterministic partition keyed by item id: the heldout set is the
// round(fraction * n) items with the smallest keyed hash.
std::pair<Dataset, Dataset> split_holdout(const Dataset& dataset, double fraction = 0.10,
                                          std::uint64_t seed = 0);

// Nested subsample: for a fixed seed the result at f is a subset of the result
// at any f' > f.
Dataset subsample(const Dataset& dataset, double fraction, std::uint64_t seed);

// --- Files -----------------------------------------------------------------

nlohmann::json event_to_json(const CompletionEvent& event);
CompletionEvent event_from_json(const nlohmann::json& j);
nlohmann::json item_to_json(const DatasetItem& item, DatasetRole role);
DatasetItem item_from_json(const nlohmann::json& j);

// One item per line. Lines without a trailing newline (an interrupted append)
// are ignored when reading.
void write_jsonl(const Dataset& dataset, const std::filesystem::path& path);
Dataset read_jsonl(const std::filesystem::path& path);
std::vector<CompletionEvent> read_events(const std::filesystem::path& path);

// Loads every registered-language file below `root`. Origin and cursor come
// from root/manifest.jsonl when present; otherwise origin is inferred from a
// path component named ide/accept/commit and IDE cursors default to the end.
std::vector<SourceDocument> load_tree(const std::filesystem::path& root);

// $XFER_DATA_DIR, falling back to ./data.
std::filesystem::path default_data_dir();

}  // namespace xfer
