// Small text helpers shared by the matrix / config / polynomial parsers.
#pragma once

#include <string_view>
#include <vector>

namespace tgrs::detail {

// Trims ASCII whitespace from both ends.
std::string_view trim_view(std::string_view s);

// Splits on sep at bracket depth zero, so "[1,2],z" splits into "[1,2]" and
// "z".  An empty input yields one empty piece.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

}  // namespace tgrs::detail
