#pragma once

#include <string>

#include "harary/tree.hpp"

namespace harary {

/// Edge-list text format: first line `n`, then n-1 lines `u v` with decimal
/// 0-indexed labels separated by a single space.  The only tree wire format.
Tree parse_tree_text(const std::string& text);
Tree parse_tree_file(const std::string& path);
std::string format_edge_list(const Tree& t);

}  // namespace harary
