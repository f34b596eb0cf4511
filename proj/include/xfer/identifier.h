#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xfer {

// Byte ranges [begin, end) of the partial tokens of an identifier.
std::vector<std::pair<std::size_t, std::size_t>> partial_spans(std::string_view token);

// Splits on camelCase boundaries and underscores. Underscores are separators
// and are not emitted. An uppercase run followed by a lowercase letter loses
// its last capital to the next partial ("HTTPResponse" -> HTTP, Response);
// digits stay with the preceding partial ("parseHTTP2Response" -> parse,
// HTTP2, Response). A token without boundaries comes back whole. Throws
// InvalidArgument on the empty string.
std::vector<std::string> split_identifier(std::string_view token);

}  // namespace xfer
