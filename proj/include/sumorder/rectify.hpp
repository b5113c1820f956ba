#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sumorder {

/// Inclusive cyclic arc [start, start + width] of residues mod p, width
/// measured in steps (a single residue has width 0).
struct CyclicWindow {
  std::int64_t start = 0;
  std::int64_t width = 0;

  friend bool operator==(const CyclicWindow&, const CyclicWindow&) = default;
};

/// Minimal-width cyclic arc containing every residue of the (deduplicated)
/// input: the complement of the largest cyclic gap. Among equally large gaps
/// the one with the smallest lower endpoint wins, which fixes the window
/// deterministically.
CyclicWindow min_cyclic_window(std::span<const std::int64_t> residues,
                               std::int64_t p);

/// Smallest k >= 1 with ell^k >= p, i.e. ceil(log p / log ell) computed by
/// integer power comparison. Exact powers of ell land on the exact exponent.
int lev_bound(std::int64_t p, int ell);

/// Witness that the residue set {sources} maps to an integer set by an
/// ell-Freiman isomorphism: dilate by lambda, read representatives off a
/// cyclic window narrow enough that ell-fold sums cannot wrap, shift so
/// that 0 maps to 0.
struct RectCertificate {
  std::int64_t p = 0;
  int ell = 0;
  std::int64_t lambda = 0;
  std::int64_t window_start = 0;
  std::int64_t width = 0;
  /// (source residue, integer image) pairs, strictly sorted by source.
  std::vector<std::pair<std::int64_t, std::int64_t>> mapping;

  friend bool operator==(const RectCertificate&, const RectCertificate&) =
      default;
};

/// Scans lambda = 1..p-1 in order and returns a certificate for the first
/// dilation whose minimal window satisfies ell * width < p, or nullopt when
/// no dilation works. The set must contain 0. The scan is exhaustive over
/// certificates of this shape, yet nullopt can occur even for sets of size
/// lev_bound(p, ell): a small fraction of threshold-size sets admit no
/// dilation-form certificate at all (for example {0, 1, 3, 12, 44} mod 101
/// at ell = 3), so callers must handle nullopt; sequence_mod_p falls back
/// to backtracking search.
std::optional<RectCertificate> find_dilation(
    std::span<const std::int64_t> residues, std::int64_t p, int ell);

/// Mapping lookups; input_error on values outside the certificate's
/// domain / image.
std::int64_t apply_iso(const RectCertificate& cert, std::int64_t source);
std::int64_t invert_iso(const RectCertificate& cert, std::int64_t image);

/// Structural validation of every certificate invariant: prime p, lambda in
/// range, the no-wrap bound ell * width < p, mapping sorted and bijective
/// with 0 -> 0, every image equal to its shifted window representative, and
/// the window exactly spanned (max image - min image == width). On failure
/// returns false and, when `why` is given, stores the first broken rule.
bool check_certificate(const RectCertificate& cert, std::string* why = nullptr);

/// Brute-force check of the ell-Freiman biconditional: over all tuples of
/// ell domain elements with repetition, sum congruence mod p holds exactly
/// when image sums agree in Z. Shorter tuple lengths are covered implicitly
/// by zero-padding, since 0 is in the domain and maps to 0. Guarded by
/// k^(2*ell) <= 1e8 for domain size k.
bool freiman_verify(const RectCertificate& cert, int ell);

}  // namespace sumorder
