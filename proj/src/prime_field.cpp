#include "sumorder/prime_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "sumorder/errors.hpp"
#include "sumorder/integers.hpp"
#include "sumorder/rectify.hpp"

namespace sumorder {
namespace {

std::vector<std::int64_t> checked_residues(
    std::span<const std::int64_t> residues, std::int64_t p) {
  if (residues.size() > kMaxSetSize) {
    throw input_error("residue set exceeds the size cap");
  }
  std::unordered_set<std::int64_t> seen;
  seen.reserve(residues.size());
  for (std::int64_t r : residues) {
    if (r <= 0 || r >= p) {
      throw input_error("residue " + std::to_string(r) +
                        " is not a canonical nonzero residue mod " +
                        std::to_string(p));
    }
    if (!seen.insert(r).second) {
      throw input_error("residue set repeats " + std::to_string(r));
    }
  }
  std::vector<std::int64_t> sorted(residues.begin(), residues.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Ordering residues_to_ordering(const GroupSpec& spec,
                              const std::vector<std::int64_t>& residues) {
  Ordering o{spec, {}};
  o.elems.reserve(residues.size());
  for (std::int64_t r : residues) {
    o.elems.push_back(Element(std::vector<std::int64_t>{r}));
  }
  return o;
}

SequencingResult finish(Ordering o, Method method,
                        std::optional<RectCertificate> certificate) {
  if (!is_valid(o)) {
    throw internal_error("sequencing produced an invalid ordering (method " +
                         method_name(method) + ")");
  }
  return SequencingResult{std::move(o), method, std::move(certificate),
                          std::nullopt, true};
}

}  // namespace

int graham_bound(std::int64_t p) {
  if (p < 2 || !is_prime(p)) {
    throw input_error(std::to_string(p) + " is not prime");
  }
  if (p < 17) return 1;
  const long double lp = logl(static_cast<long double>(p));
  const long double llp = logl(lp);
  const long double ratio = lp / llp;
  const long double nearest = roundl(ratio);
  // Within a hair of an integer the floor is floating-point fragile; settle
  // it by comparing p against (ln p)^m directly.
  if (fabsl(ratio - nearest) < 1e-9L) {
    const long long m = llroundl(nearest);
    return static_cast<int>(
        static_cast<long double>(p) >= powl(lp, static_cast<long double>(m))
            ? m
            : m - 1);
  }
  return static_cast<int>(floorl(ratio));
}

SequencingResult sequence_mod_p(std::span<const std::int64_t> residues,
                                std::int64_t p, BacktrackStats* stats,
                                bool lift_guards) {
  const GroupSpec spec = GroupSpec::prime_field(p);
  const std::vector<std::int64_t> sorted = checked_residues(residues, p);
  const std::size_t n = sorted.size();

  // One element is its own valid ordering; for two, increasing order always
  // works because the second partial sum differs from the first by a
  // nonzero element.
  if (n <= 2) {
    return finish(residues_to_ordering(spec, sorted), Method::Trivial,
                  std::nullopt);
  }

  const int ell = static_cast<int>(n) - 1;
  std::vector<std::int64_t> with_zero;
  with_zero.reserve(n + 1);
  with_zero.push_back(0);
  with_zero.insert(with_zero.end(), sorted.begin(), sorted.end());

  if (std::optional<RectCertificate> cert = find_dilation(with_zero, p, ell)) {
    std::vector<std::int64_t> images;
    images.reserve(n);
    for (std::int64_t r : sorted) images.push_back(apply_iso(*cert, r));
    const Ordering integer_ordering = sequence_integers(images);
    std::vector<std::int64_t> pulled_back;
    pulled_back.reserve(n);
    for (const Element& e : integer_ordering.elems) {
      pulled_back.push_back(invert_iso(*cert, e.coords()[0]));
    }
    Ordering o{spec, {}};
    o.elems.reserve(n);
    for (std::int64_t r : pulled_back) {
      o.elems.push_back(Element(std::vector<std::int64_t>{r}));
    }
    if (!is_valid(o)) {
      throw internal_error(
          "rectified pullback failed verification; the certificate or the "
          "integer construction is buggy");
    }
    return SequencingResult{std::move(o), Method::RectifiedPullback,
                            std::move(cert), std::nullopt, true};
  }

  const std::size_t guard =
      lift_guards ? std::max(kBacktrackSizeGuard, n) : kBacktrackSizeGuard;
  std::optional<Ordering> found =
      backtrack_order(residues_to_ordering(spec, sorted).elems, spec, stats,
                      guard);
  if (!found) {
    throw no_ordering_found(
        "exhaustive search found no valid ordering for this subset of F_" +
        std::to_string(p) +
        "; that would falsify the distinct-partial-sums conjecture, so "
        "treat this set as remarkable and double-check it");
  }
  return finish(std::move(*found), Method::Backtracking, std::nullopt);
}

}  // namespace sumorder
