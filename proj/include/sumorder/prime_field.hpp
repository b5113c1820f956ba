#pragma once

#include <cstdint>
#include <span>

#include "sumorder/result.hpp"
#include "sumorder/search.hpp"

namespace sumorder {

/// floor(ln p / ln ln p) for prime p >= 17, computed in extended precision
/// with a near-integer guard resolved by an exact power comparison. Primes
/// below 17 return 1 by convention (ln ln p is too small for the ratio to
/// mean anything there).
int graham_bound(std::int64_t p);

/// Sequences a set of nonzero residues mod p: trivially for one or two
/// elements, otherwise by rectifying A (together with 0) into the integers
/// with ell = |A| - 1, sequencing the image, and pulling the ordering back.
/// Falls back to backtracking search when no dilation is accepted. Every
/// branch verifies its output before returning. Throws no_ordering_found
/// only if the fallback exhausts, which no known input triggers.
SequencingResult sequence_mod_p(std::span<const std::int64_t> residues,
                                std::int64_t p,
                                BacktrackStats* stats = nullptr,
                                bool lift_guards = false);

}  // namespace sumorder
