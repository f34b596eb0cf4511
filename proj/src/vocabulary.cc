#include "xfer/vocabulary.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "xfer/error.h"
#include "xfer/hash.h"

namespace xfer {
namespace {

constexpr int kControlBase = 3 + Vocabulary::kMaxPlaceholders;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\t') {
      out += "\\t";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      const char n = s[++i];
      out += n == 't' ? '\t' : n == 'n' ? '\n' : n;
    } else {
      out += s[i];
    }
  }
  return out;
}

void sort_entries(std::vector<std::pair<std::string, std::int64_t>>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
}

}  // namespace

Vocabulary::Vocabulary() {
  add(std::string(kPad), 0);
  add(std::string(kUnk), 0);
  add(std::string(kEndOfToken), 0);
  for (int i = 0; i < kMaxPlaceholders; ++i) add("<var-" + std::to_string(i) + ">", 0);
  for (Language l : registered_languages()) add(control_token(l), 0);
  num_specials_ = size();
}

void Vocabulary::add(std::string token, std::int64_t count) {
  const int id = size();
  index_.emplace(token, id);
  tokens_.push_back(std::move(token));
  counts_.push_back(count);
}

Vocabulary Vocabulary::from_counts(const std::unordered_map<std::string, std::int64_t>& counts,
                                   std::int64_t cutoff) {
  Vocabulary v;
  std::vector<std::pair<std::string, std::int64_t>> kept;
  for (const auto& [tok, c] : counts) {
    if (c >= cutoff && !tok.empty() && !v.index_.contains(tok)) kept.emplace_back(tok, c);
  }
  sort_entries(kept);
  for (auto& [tok, c] : kept) v.add(std::move(tok), c);
  return v;
}

Vocabulary Vocabulary::union_of(const Vocabulary& a, const Vocabulary& b) {
  std::unordered_map<std::string, std::int64_t> merged;
  for (const auto& [t, c] : a.entries()) merged[t] += c;
  for (const auto& [t, c] : b.entries()) merged[t] += c;
  return from_counts(merged, 0);
}

std::optional<int> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::contains_entry(std::string_view token) const {
  auto id = find(token);
  return id && *id >= num_specials_;
}

int Vocabulary::id_of(std::string_view token) const {
  if (auto id = find(token)) return *id;
  throw InvalidArgument("token not in vocabulary: '" + std::string(token) + "'");
}

const std::string& Vocabulary::token(int id) const {
  if (id < 0 || id >= size()) {
    throw InvalidArgument("vocabulary id out of range: " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

int Vocabulary::placeholder_id(int index) const {
  if (index < 0 || index >= kMaxPlaceholders) {
    throw InvalidArgument("placeholder index out of range: " + std::to_string(index));
  }
  return 3 + index;
}

std::optional<int> Vocabulary::placeholder_index(int id) const {
  if (id >= 3 && id < 3 + kMaxPlaceholders) return id - 3;
  return std::nullopt;
}

int Vocabulary::control_id(Language language) const {
  const auto langs = registered_languages();
  for (std::size_t i = 0; i < langs.size(); ++i) {
    if (langs[i] == language) return kControlBase + static_cast<int>(i);
  }
  throw InvalidArgument("unregistered language");
}

std::optional<Language> Vocabulary::control_language(int id) const {
  const auto langs = registered_languages();
  const int k = id - kControlBase;
  if (k >= 0 && k < static_cast<int>(langs.size())) return langs[static_cast<std::size_t>(k)];
  return std::nullopt;
}

std::vector<std::pair<std::string, std::int64_t>> Vocabulary::entries() const {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (int i = num_specials_; i < size(); ++i) {
    out.emplace_back(tokens_[static_cast<std::size_t>(i)], counts_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::uint64_t Vocabulary::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::string& t : tokens_) {
    h = fnv1a(t, h);
    h = fnv1a(std::string_view("\0", 1), h);
  }
  return h;
}

void Vocabulary::save(std::ostream& out) const {
  for (int i = 0; i < size(); ++i) {
    out << escape(tokens_[static_cast<std::size_t>(i)]) << '\t'
        << counts_[static_cast<std::size_t>(i)] << '\n';
  }
}

void Vocabulary::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  save(out);
}

Vocabulary Vocabulary::load(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::pair<std::string, std::int64_t>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw FormatError("vocabulary line " + std::to_string(line_no) + ": missing tab");
    }
    std::int64_t count = 0;
    try {
      count = std::stoll(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw FormatError("vocabulary line " + std::to_string(line_no) + ": bad count");
    }
    rows.emplace_back(unescape(std::string_view(line).substr(0, tab)), count);
  }
  return from_rows(std::move(rows));
}

Vocabulary Vocabulary::from_rows(std::vector<std::pair<std::string, std::int64_t>> rows) {
  Vocabulary v;
  if (rows.size() < static_cast<std::size_t>(v.num_specials_)) {
    throw FormatError("vocabulary file is missing special tokens");
  }
  for (int i = 0; i < v.num_specials_; ++i) {
    if (rows[static_cast<std::size_t>(i)].first != v.tokens_[static_cast<std::size_t>(i)]) {
      throw FormatError("vocabulary special #" + std::to_string(i) + " is '" +
                        rows[static_cast<std::size_t>(i)].first + "', expected '" +
                        v.tokens_[static_cast<std::size_t>(i)] + "'");
    }
  }
  for (std::size_t i = static_cast<std::size_t>(v.num_specials_); i < rows.size(); ++i) {
    if (v.index_.contains(rows[i].first)) {
      throw FormatError("duplicate vocabulary entry '" + rows[i].first + "'");
    }
    v.add(std::move(rows[i].first), rows[i].second);
  }
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return load(in);
}

}  // namespace xfer
