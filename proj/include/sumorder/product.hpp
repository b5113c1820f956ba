#pragma once

#include <span>
#include <vector>

#include "sumorder/result.hpp"
#include "sumorder/search.hpp"

namespace sumorder {

/// Partition of a subset of H x Z by the sign of the final (free)
/// coordinate. Elements in zero_last necessarily have a nonzero H-part.
struct TriSplit {
  std::vector<Element> positive_last;
  std::vector<Element> zero_last;
  std::vector<Element> negative_last;
};

TriSplit tri_split(const GroupSpec& spec, std::span<const Element> elems);

/// Orderings of two element sets, each with strictly positive final
/// coordinate, produced by the same peel-the-heavier-side recursion used
/// for integers, with the final coordinate as the weight and removal
/// disqualification decided on full group sums.
struct ElementPairOrdering {
  std::vector<Element> p_order;
  std::vector<Element> n_order;
};

ElementPairOrdering pair_sequence_elements(const GroupSpec& spec,
                                           std::vector<Element> p,
                                           std::vector<Element> n);

/// Sequences a subset of H x Z (any supported H): splits on the final
/// coordinate's sign, sequences the zero-coordinate block through the
/// H-sequencer, runs the pair recursion on the rest, then tries the six
/// block layouts in a fixed order and returns the first assembly that
/// verifies. Falls back to backtracking when no layout is valid.
SequencingResult sequence_product(std::span<const Element> elems,
                                  const GroupSpec& spec,
                                  BacktrackStats* stats = nullptr,
                                  bool lift_guards = false);

}  // namespace sumorder
