#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "xfer/corpus.h"
#include "xfer/model.h"
#include "xfer/vocabulary.h"

namespace xfer {

enum class PhaseKind { kPretrain, kFinetune };

std::string_view phase_kind_name(PhaseKind kind);
PhaseKind parse_phase_kind(std::string_view name);

// One completed training phase.
struct ProvenanceEntry {
  PhaseKind phase = PhaseKind::kPretrain;
  DatasetRole role = DatasetRole::kIde;
  std::vector<Language> languages;
  std::size_t examples = 0;
  int epochs = 0;       // epochs run
  int best_epoch = 0;   // epoch whose weights were kept
  double learning_rate = 0;
  double heldout_loss = 0;
  std::uint64_t seed = 0;
  std::string event_loss = "sequence";  // supervision of completion events

  nlohmann::json to_json() const;
  static ProvenanceEntry from_json(const nlohmann::json& j);
  bool operator==(const ProvenanceEntry&) const = default;
};

// File layout: "XFERCKPT", u32 format version, u64 header byte length, the
// JSON header (config, provenance, vocabulary, tensor manifest with shapes and
// byte offsets), then raw little-endian float32 tensor payloads.
struct ModelCheckpoint {
  static constexpr std::uint32_t kFormatVersion = 1;

  ModelConfig config;
  Parameters<float> params;
  std::vector<ProvenanceEntry> provenance;
  std::uint32_t format_version = kFormatVersion;
  Vocabulary vocab;

  // Randomly initialized model for `vocab`; config.vocab_size is set from it.
  static ModelCheckpoint fresh(ModelConfig config, Vocabulary vocab);

  // Written to a sibling temp file and renamed into place.
  void save(const std::filesystem::path& path) const;
  void save(std::ostream& out) const;
  // Throws FormatError on a bad magic, version, manifest or payload size.
  static ModelCheckpoint load(const std::filesystem::path& path);
  static ModelCheckpoint load(std::istream& in);

  Transformer<float> model() const { return Transformer<float>(config, params); }
};

}  // namespace xfer
