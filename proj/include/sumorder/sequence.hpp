#pragma once

#include <span>

#include "sumorder/result.hpp"
#include "sumorder/search.hpp"

namespace sumorder {

/// Sequences a finite set of nonzero elements of any supported group by
/// dispatching to the construction that applies: the sign-split recursion
/// for Z, the rectification pipeline for F_p, the layout construction for
/// products ending in a Z coordinate, and backtracking search for Z_n and
/// any other product shape.
SequencingResult sequence_subset(std::span<const Element> elems,
                                 const GroupSpec& spec,
                                 BacktrackStats* stats = nullptr,
                                 bool lift_guards = false);

}  // namespace sumorder
