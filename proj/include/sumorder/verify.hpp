#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sumorder/group.hpp"

namespace sumorder {

/// A sequence of pairwise-distinct nonzero elements of one group.
struct Ordering {
  GroupSpec spec;
  std::vector<Element> elems;

  std::size_t size() const { return elems.size(); }
};

/// Throws malformed_ordering when the ordering breaks its own contract:
/// a zero element, a duplicate, a rank mismatch, or a non-canonical
/// coordinate.
void check_well_formed(const Ordering& o);

Ordering reversed(Ordering o);

/// s_1, s_1+s_2, and so on: one running total per prefix, length |elems|.
std::vector<Element> partial_sums(const Ordering& o);

/// True iff the partial sums are pairwise distinct. Distinctness is decided
/// by exact canonical-element comparison in a hash set.
bool is_valid(const Ordering& o);

struct ValidityReport {
  bool valid = true;
  /// Earliest colliding pair of prefix indices (i, j), 1-based, i < j,
  /// with s_i == s_j; "earliest" minimizes j, then i.
  std::optional<std::pair<std::size_t, std::size_t>> first_collision;
  /// Valid in both directions: is_valid(o) and is_valid(reversed(o)).
  bool two_sided = true;
  /// Every proper consecutive block summing to zero, as prefix-index pairs
  /// (i, j) with 0 <= i < j <= m and s_i == s_j (s_0 = 0), excluding exactly
  /// the full block (0, m). Sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> zero_blocks;
};

ValidityReport analyze(const Ordering& o);

}  // namespace sumorder
