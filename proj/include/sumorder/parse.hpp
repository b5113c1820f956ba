#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sumorder/group.hpp"

namespace sumorder {

/// Parses the textual element-list syntax: a single integer per element for
/// rank-1 groups ("1,7,11" or "1;7;11"), a parenthesized tuple per element
/// for products ("(0,1); (1,0); (-1,0)", tuples force semicolons). Order is
/// preserved and duplicates are kept; set-consuming operations reject
/// duplicates themselves. Elements come back canonicalized.
std::vector<Element> parse_element_list(const GroupSpec& spec,
                                        std::string_view text);

/// Batch file format: one element list per line, '#' starts a comment,
/// blank lines are ignored.
std::vector<std::vector<Element>> parse_set_file(const GroupSpec& spec,
                                                 std::istream& in);

std::string format_element(const Element& e);

/// Comma-joined for rank 1, semicolon-joined tuples otherwise.
std::string format_element_list(std::span<const Element> elems);

/// Parses a group name: "Z", "Z^d", "F_p", "Z_n", or an " x "-joined flat
/// product of those ("Z_6 x Z"). Round-trips GroupSpec::name() for every
/// group the CLI can construct.
GroupSpec parse_group(std::string_view text);

}  // namespace sumorder
