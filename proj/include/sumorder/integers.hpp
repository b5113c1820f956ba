#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumorder/verify.hpp"

namespace sumorder {

/// The two halves of a finite set of nonzero integers: the positive members
/// and the absolute values of the negative members, each sorted ascending.
struct SignSplit {
  std::vector<std::int64_t> positives;
  std::vector<std::int64_t> negated_negatives;
};

SignSplit sign_split(std::span<const std::int64_t> elems);

/// Orderings of two disjoint positive multiplicity-free sets P and N such
/// that no proper prefix of one sums to the same value as a prefix of the
/// other. The empty prefixes (0, 0) and the full pair (|P|, |N|) are the
/// only allowed coincidences.
struct PairOrdering {
  std::vector<std::int64_t> p_order;
  std::vector<std::int64_t> n_order;
};

PairOrdering pair_sequence(std::vector<std::int64_t> p,
                           std::vector<std::int64_t> n);

/// True iff the prefix-sum sequences of the two orderings only meet at the
/// exempt positions described on PairOrdering.
bool prefix_disjoint(const PairOrdering& po);

/// Valid ordering of a finite set of distinct nonzero integers: the P-side
/// ordering reversed, then the N-side ordering negated. Throws input_error
/// on zeros, duplicates, or out-of-range magnitudes.
Ordering sequence_integers(std::span<const std::int64_t> elems);

}  // namespace sumorder
