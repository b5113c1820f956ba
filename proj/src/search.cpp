#include "sumorder/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_set>

#include "sumorder/errors.hpp"
#include "sumorder/prime_field.hpp"

namespace sumorder {
namespace {

void check_set_input(const std::vector<Element>& elems, const GroupSpec& spec,
                     std::size_t size_guard) {
  if (elems.size() > size_guard) {
    throw guard_error("set of size " + std::to_string(elems.size()) +
                      " exceeds the search guard of " +
                      std::to_string(size_guard));
  }
  std::unordered_set<Element, ElementHash> seen;
  seen.reserve(elems.size());
  for (const Element& e : elems) {
    if (e.rank() != spec.rank()) {
      throw input_error("element rank does not match the group");
    }
    if (!is_canonical(spec, e)) {
      throw input_error("element is not canonical for the group");
    }
    if (is_zero(e)) throw input_error("set contains the zero element");
    if (!seen.insert(e).second) throw input_error("set contains duplicates");
  }
}

struct Searcher {
  const GroupSpec& spec;
  const std::vector<Element>& elems;
  std::vector<char> used;
  std::vector<Element> prefix;
  std::unordered_set<Element, ElementHash> sums;
  Element acc;
  BacktrackStats* stats;

  bool dfs() {
    if (prefix.size() == elems.size()) return true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (used[i]) continue;
      Element next = add(spec, acc, elems[i]);
      if (!sums.insert(next).second) continue;
      if (stats != nullptr) ++stats->nodes;
      used[i] = 1;
      prefix.push_back(elems[i]);
      Element saved = std::move(acc);
      acc = std::move(next);
      if (dfs()) return true;
      sums.erase(acc);
      acc = std::move(saved);
      prefix.pop_back();
      used[i] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Ordering> backtrack_order(std::vector<Element> elems,
                                        const GroupSpec& spec,
                                        BacktrackStats* stats,
                                        std::size_t size_guard) {
  check_set_input(elems, spec, size_guard);
  std::sort(elems.begin(), elems.end());
  Searcher searcher{spec, elems, std::vector<char>(elems.size(), 0),
                    {},   {},    zero_element(spec),
                    stats};
  searcher.prefix.reserve(elems.size());
  if (!searcher.dfs()) return std::nullopt;
  return Ordering{spec, std::move(searcher.prefix)};
}

std::uint64_t count_valid_orderings(std::vector<Element> elems,
                                    const GroupSpec& spec,
                                    std::size_t size_guard) {
  check_set_input(elems, spec, size_guard);
  std::sort(elems.begin(), elems.end());
  std::uint64_t count = 0;
  std::unordered_set<Element, ElementHash> sums;
  sums.reserve(elems.size());
  do {
    sums.clear();
    Element acc = zero_element(spec);
    bool valid = true;
    for (const Element& e : elems) {
      acc = add(spec, acc, e);
      if (!sums.insert(acc).second) {
        valid = false;
        break;
      }
    }
    if (valid) ++count;
  } while (std::next_permutation(elems.begin(), elems.end()));
  return count;
}

std::string engine_name(SweepEngine engine) {
  return engine == SweepEngine::Backtracking ? "backtracking" : "pipeline";
}

SweepReport sweep(std::int64_t p, int max_size, SweepEngine engine,
                  bool lift_guards) {
  if (p < 2 || !is_prime(p)) {
    throw input_error(std::to_string(p) + " is not prime");
  }
  if (!lift_guards && p > kSweepPrimeGuard) {
    throw guard_error("sweep guarded to p <= " +
                      std::to_string(kSweepPrimeGuard) +
                      "; pass the override to go further");
  }
  if (p - 1 > 40) {
    throw input_error("sweep beyond 40 base elements is not supported");
  }
  if (max_size < 1) throw input_error("max size must be at least 1");
  const int n = static_cast<int>(p - 1);
  if (max_size > n) max_size = n;

  const GroupSpec spec = GroupSpec::prime_field(p);
  std::vector<Element> base;
  base.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 1; r < p; ++r) {
    base.push_back(Element(std::vector<std::int64_t>{r}));
  }

  SweepReport report;
  report.p = p;
  report.max_size = max_size;
  report.engine = engine;
  for (int size = 1; size <= max_size; ++size) report.per_size[size];

  const std::size_t backtrack_guard =
      std::max<std::size_t>(kBacktrackSizeGuard, static_cast<std::size_t>(n));
  const std::uint64_t mask_end = std::uint64_t{1} << n;
  std::vector<Element> subset;
  std::vector<std::int64_t> residues;
  for (std::uint64_t mask = 1; mask < mask_end; ++mask) {
    const int size = std::popcount(mask);
    if (size > max_size) continue;
    subset.clear();
    residues.clear();
    for (int bit = 0; bit < n; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        subset.push_back(base[static_cast<std::size_t>(bit)]);
        residues.push_back(bit + 1);
      }
    }

    BacktrackStats stats;
    bool found = false;
    const auto begin = std::chrono::steady_clock::now();
    if (engine == SweepEngine::Backtracking) {
      found = backtrack_order(subset, spec, &stats, backtrack_guard)
                  .has_value();
    } else {
      try {
        sequence_mod_p(residues, p, &stats, lift_guards);
        found = true;
      } catch (const no_ordering_found&) {
        found = false;
      }
    }
    const auto end = std::chrono::steady_clock::now();

    SweepSizeStats& s = report.per_size[size];
    s.subset_count += 1;
    s.total_backtrack_nodes += stats.nodes;
    s.max_backtrack_nodes = std::max(s.max_backtrack_nodes, stats.nodes);
    s.elapsed_seconds +=
        std::chrono::duration<double>(end - begin).count();
    if (!found) {
      s.all_sequenceable = false;
      report.counterexamples.push_back(residues);
    }
  }
  return report;
}

}  // namespace sumorder
