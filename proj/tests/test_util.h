#pragma once

#include <unistd.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "xfer/corpus.h"

namespace xfer::testing {

inline std::filesystem::path sample_corpus() { return XFER_SAMPLE_CORPUS; }

inline const std::vector<SourceDocument>& sample_documents() {
  static const std::vector<SourceDocument> docs = load_tree(sample_corpus());
  return docs;
}

inline std::vector<SourceDocument> documents_where(Language language, Origin origin) {
  std::vector<SourceDocument> out;
  for (const auto& d : sample_documents()) {
    if (d.language == language && d.origin == origin) out.push_back(d);
  }
  return out;
}

// Random identifier-shaped strings mixing case styles, digits and underscores.
inline std::string random_identifier(std::mt19937_64& rng) {
  static const std::string lower = "abcdefghijklmnopqrstuvwxyz";
  static const std::string upper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const std::string digits = "0123456789";
  std::uniform_int_distribution<int> pick(0, 99);
  const int len = 1 + pick(rng) % 24;
  std::string s;
  for (int i = 0; i < len; ++i) {
    const int r = pick(rng);
    if (r < 55) {
      s += lower[static_cast<std::size_t>(pick(rng)) % lower.size()];
    } else if (r < 80) {
      s += upper[static_cast<std::size_t>(pick(rng)) % upper.size()];
    } else if (r < 90) {
      s += i == 0 ? '_' : digits[static_cast<std::size_t>(pick(rng)) % digits.size()];
    } else {
      s += '_';
    }
  }
  return s;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("xfer-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace xfer::testing
