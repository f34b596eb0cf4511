#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xfer/language.h"

namespace xfer {

// Ordered subtoken table. Ids are dense: the special tokens come first
// (<pad>, <unk>, </t>, <var-0>..<var-63>, one <lang-*> per registered
// language), followed by corpus entries ordered by (-count, string).
class Vocabulary {
 public:
  static constexpr int kMaxPlaceholders = 64;
  static constexpr std::string_view kPad = "<pad>";
  static constexpr std::string_view kUnk = "<unk>";
  static constexpr std::string_view kEndOfToken = "</t>";

  // Specials only.
  Vocabulary();

  // Keeps entries with count >= cutoff. Strings that collide with a special
  // are dropped.
  static Vocabulary from_counts(const std::unordered_map<std::string, std::int64_t>& counts,
                                std::int64_t cutoff);

  // Every entry of both, counts summed.
  static Vocabulary union_of(const Vocabulary& a, const Vocabulary& b);

  int size() const { return static_cast<int>(tokens_.size()); }
  int num_specials() const { return num_specials_; }

  std::optional<int> find(std::string_view token) const;
  // Corpus entries only; specials never count as "in vocabulary" text.
  bool contains_entry(std::string_view token) const;
  // Throws InvalidArgument for unknown strings.
  int id_of(std::string_view token) const;
  const std::string& token(int id) const;
  std::int64_t count(int id) const { return counts_.at(static_cast<std::size_t>(id)); }

  int pad_id() const { return 0; }
  int unk_id() const { return 1; }
  int end_of_token_id() const { return 2; }
  int placeholder_id(int index) const;
  std::optional<int> placeholder_index(int id) const;
  int control_id(Language language) const;
  std::optional<Language> control_language(int id) const;
  bool is_special(int id) const { return id < num_specials_; }

  // (token, count) pairs after the specials.
  std::vector<std::pair<std::string, std::int64_t>> entries() const;

  // Stable content hash; checkpoints and datasets are matched on it.
  std::uint64_t fingerprint() const;

  // UTF-8 text, one `subtoken<TAB>count` per line, specials first with count
  // 0. Backslash, tab and newline inside a subtoken are written as \\, \t, \n.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(std::istream& in);
  // Every row including the specials, in id order. Throws FormatError when
  // the specials are missing or out of place, or a string repeats.
  static Vocabulary from_rows(std::vector<std::pair<std::string, std::int64_t>> rows);
  static Vocabulary load(const std::filesystem::path& path);

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_ && counts_ == other.counts_;
  }

 private:
  void add(std::string token, std::int64_t count);

  std::vector<std::string> tokens_;
  std::vector<std::int64_t> counts_;
  std::unordered_map<std::string, int> index_;
  int num_specials_ = 0;
};

}  // namespace xfer
