#include "xfer/identifier.h"

#include "xfer/error.h"

namespace xfer {
namespace {

bool upper(char c) { return c >= 'A' && c <= 'Z'; }
bool lower(char c) { return c >= 'a' && c <= 'z'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> partial_spans(std::string_view token) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t i = 0;
  const std::size_t n = token.size();
  while (i < n) {
    while (i < n && token[i] == '_') ++i;
    if (i >= n) break;
    std::size_t seg_end = i;
    while (seg_end < n && token[seg_end] != '_') ++seg_end;
    std::size_t start = i;
    for (std::size_t k = i + 1; k < seg_end; ++k) {
      const char c = token[k];
      const char prev = token[k - 1];
      const bool next_lower = k + 1 < seg_end && lower(token[k + 1]);
      if (upper(c) && (lower(prev) || digit(prev) || (upper(prev) && next_lower))) {
        spans.emplace_back(start, k);
        start = k;
      }
    }
    spans.emplace_back(start, seg_end);
    i = seg_end;
  }
  return spans;
}

std::vector<std::string> split_identifier(std::string_view token) {
  if (token.empty()) throw InvalidArgument("split_identifier: empty token");
  const auto spans = partial_spans(token);
  if (spans.empty()) return {std::string(token)};
  std::vector<std::string> parts;
  parts.reserve(spans.size());
  for (const auto& [b, e] : spans) parts.emplace_back(token.substr(b, e - b));
  return parts;
}

}  // namespace xfer
