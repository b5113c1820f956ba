#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumorder/verify.hpp"

namespace sumorder {

/// Default cap on |A| for the backtracking oracle. Overridable per call.
inline constexpr std::size_t kBacktrackSizeGuard = 20;
/// Cap on |A| for full-enumeration counting.
inline constexpr std::size_t kCountSizeGuard = 10;
/// Largest p swept exhaustively without an explicit override.
inline constexpr std::int64_t kSweepPrimeGuard = 17;

struct BacktrackStats {
  /// Accepted prefix extensions: every node of the search tree entered.
  std::uint64_t nodes = 0;
};

/// Depth-first search over orderings of A in lexicographic element order,
/// pruning any prefix whose newest partial sum repeats an earlier one.
/// Returns the lexicographically first valid ordering, or nullopt when the
/// set has none.
std::optional<Ordering> backtrack_order(
    std::vector<Element> elems, const GroupSpec& spec,
    BacktrackStats* stats = nullptr,
    std::size_t size_guard = kBacktrackSizeGuard);

/// Exact number of valid orderings of A by full permutation enumeration.
/// Deliberately independent of backtrack_order so the two can check each
/// other.
std::uint64_t count_valid_orderings(std::vector<Element> elems,
                                    const GroupSpec& spec,
                                    std::size_t size_guard = kCountSizeGuard);

enum class SweepEngine { Backtracking, Pipeline };

std::string engine_name(SweepEngine engine);

struct SweepSizeStats {
  std::uint64_t subset_count = 0;
  bool all_sequenceable = true;
  std::uint64_t total_backtrack_nodes = 0;
  std::uint64_t max_backtrack_nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SweepReport {
  std::int64_t p = 0;
  int max_size = 0;
  SweepEngine engine = SweepEngine::Backtracking;
  std::map<int, SweepSizeStats> per_size;
  /// Subsets of F_p \ {0} with no valid ordering, as ascending residue
  /// lists. Nonempty output falsifies the conjecture at this p.
  std::vector<std::vector<std::int64_t>> counterexamples;
};

/// Runs the chosen engine over every nonempty subset of F_p \ {0} of size
/// at most max_size, enumerated by ascending bitmask. Guarded to p <= 17
/// unless lift_guards is set.
SweepReport sweep(std::int64_t p, int max_size, SweepEngine engine,
                  bool lift_guards = false);

}  // namespace sumorder
