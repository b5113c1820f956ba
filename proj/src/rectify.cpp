#include "sumorder/rectify.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sumorder/errors.hpp"
#include "sumorder/group.hpp"

namespace sumorder {
namespace {

void check_residues_canonical(std::span<const std::int64_t> residues,
                              std::int64_t p) {
  for (std::int64_t r : residues) {
    if (r < 0 || r >= p) {
      throw input_error("residue " + std::to_string(r) +
                        " is not canonical mod " + std::to_string(p));
    }
  }
}

// Window of a sorted, deduplicated residue list: complement of the largest
// cyclic gap, ties to the gap with the smallest lower endpoint.
CyclicWindow window_of_sorted(const std::vector<std::int64_t>& r,
                              std::int64_t p) {
  const std::size_t k = r.size();
  std::int64_t best_gap = -1;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t next = (i + 1 < k) ? r[i + 1] : r[0] + p;
    const std::int64_t gap = next - r[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_i = i;
    }
  }
  return CyclicWindow{r[(best_i + 1) % k], p - best_gap};
}

}  // namespace

CyclicWindow min_cyclic_window(std::span<const std::int64_t> residues,
                               std::int64_t p) {
  if (residues.empty()) {
    throw input_error("cannot take the window of an empty residue set");
  }
  if (p < 2) throw input_error("modulus must be at least 2");
  check_residues_canonical(residues, p);
  std::vector<std::int64_t> r(residues.begin(), residues.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return window_of_sorted(r, p);
}

int lev_bound(std::int64_t p, int ell) {
  if (ell < 2) throw input_error("ell must be at least 2");
  if (p < 2) throw input_error("p must be at least 2");
  __int128 power = 1;
  int k = 0;
  while (power < p) {
    power *= ell;
    ++k;
  }
  return k;
}

std::optional<RectCertificate> find_dilation(
    std::span<const std::int64_t> residues, std::int64_t p, int ell) {
  if (p < 2 || p >= kMaxModulus || !is_prime(p)) {
    throw input_error(std::to_string(p) + " is not a supported prime");
  }
  if (ell < 2) throw input_error("ell must be at least 2");
  if (residues.empty()) throw input_error("residue set is empty");
  if (residues.size() > kMaxSetSize) {
    throw input_error("residue set exceeds the size cap");
  }
  check_residues_canonical(residues, p);

  std::vector<std::int64_t> sources(residues.begin(), residues.end());
  std::sort(sources.begin(), sources.end());
  if (std::adjacent_find(sources.begin(), sources.end()) != sources.end()) {
    throw input_error("residue set contains duplicates");
  }
  if (sources.front() != 0) {
    throw input_error("residue set must contain 0");
  }
  const std::size_t k = sources.size();

  // Any window over k distinct residues has width >= k-1, so no dilation
  // can satisfy the no-wrap bound when ell*(k-1) >= p.
  if (static_cast<__int128>(ell) * static_cast<__int128>(k - 1) >= p) {
    return std::nullopt;
  }

  // dilated[i] tracks lambda * sources[i] mod p incrementally across the
  // lambda scan: one add and a conditional subtract per element per step.
  std::vector<std::int64_t> dilated(sources);
  std::vector<std::int64_t> scratch(k);
  for (std::int64_t lambda = 1; lambda <= p - 1; ++lambda) {
    if (lambda > 1) {
      for (std::size_t i = 0; i < k; ++i) {
        dilated[i] += sources[i];
        if (dilated[i] >= p) dilated[i] -= p;
      }
    }
    scratch.assign(dilated.begin(), dilated.end());
    std::sort(scratch.begin(), scratch.end());
    const CyclicWindow window = window_of_sorted(scratch, p);
    if (static_cast<__int128>(ell) * static_cast<__int128>(window.width) >=
        p) {
      continue;
    }

    RectCertificate cert;
    cert.p = p;
    cert.ell = ell;
    cert.lambda = lambda;
    cert.window_start = window.start;
    cert.width = window.width;
    cert.mapping.reserve(k);
    // rep(x) reads x as the integer in [start, start + width] congruent to
    // it; the shift by rep(0) pins source 0 to image 0.
    const std::int64_t rep_zero = window.start == 0 ? 0 : p;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t d = dilated[i];
      std::int64_t offset = d - window.start;
      if (offset < 0) offset += p;
      cert.mapping.emplace_back(sources[i],
                                window.start + offset - rep_zero);
    }
    std::string why;
    if (!check_certificate(cert, &why)) {
      throw internal_error("dilation search built a bad certificate: " + why);
    }
    return cert;
  }

  // The scan is complete over dilation-form isomorphisms: translations do
  // not change window widths and negation is the dilation p - lambda. A
  // nullopt here means no certificate of this shape exists for the set,
  // which does happen for a small fraction of sets at the lev_bound
  // threshold size, so callers must treat it as a real outcome.
  return std::nullopt;
}

std::int64_t apply_iso(const RectCertificate& cert, std::int64_t source) {
  const auto it = std::lower_bound(
      cert.mapping.begin(), cert.mapping.end(), source,
      [](const auto& entry, std::int64_t value) { return entry.first < value; });
  if (it == cert.mapping.end() || it->first != source) {
    throw input_error("residue " + std::to_string(source) +
                      " is outside the certificate domain");
  }
  return it->second;
}

std::int64_t invert_iso(const RectCertificate& cert, std::int64_t image) {
  for (const auto& [source, img] : cert.mapping) {
    if (img == image) return source;
  }
  throw input_error("integer " + std::to_string(image) +
                    " is outside the certificate image");
}

bool check_certificate(const RectCertificate& cert, std::string* why) {
  const auto fail = [&](const std::string& reason) {
    if (why != nullptr) *why = reason;
    return false;
  };

  if (cert.p < 2 || cert.p >= kMaxModulus || !is_prime(cert.p)) {
    return fail("p is not a supported prime");
  }
  if (cert.ell < 2) return fail("ell below 2");
  if (cert.lambda < 1 || cert.lambda > cert.p - 1) {
    return fail("lambda outside [1, p-1]");
  }
  if (cert.window_start < 0 || cert.window_start >= cert.p) {
    return fail("window start not a canonical residue");
  }
  if (cert.width < 0 || cert.width >= cert.p) {
    return fail("width outside [0, p)");
  }
  if (static_cast<__int128>(cert.ell) * static_cast<__int128>(cert.width) >=
      cert.p) {
    return fail("no-wrap bound ell*width < p violated");
  }
  if (cert.mapping.empty()) return fail("empty mapping");

  const std::int64_t rep_zero = cert.window_start == 0 ? 0 : cert.p;
  bool has_zero = false;
  std::int64_t min_offset = cert.p;
  std::int64_t max_offset = -1;
  std::unordered_set<std::int64_t> images;
  images.reserve(cert.mapping.size());
  std::int64_t prev_source = -1;
  for (const auto& [source, image] : cert.mapping) {
    if (source <= prev_source) {
      return fail("mapping sources not strictly sorted");
    }
    prev_source = source;
    if (source < 0 || source >= cert.p) {
      return fail("mapping source not a canonical residue");
    }
    if (!images.insert(image).second) return fail("duplicate image value");
    if (source == 0) {
      if (image != 0) return fail("source 0 does not map to 0");
      has_zero = true;
    }
    const std::int64_t dilated = mul_mod(cert.lambda, source, cert.p);
    std::int64_t offset = dilated - cert.window_start;
    if (offset < 0) offset += cert.p;
    if (offset > cert.width) {
      return fail("dilated source falls outside the window");
    }
    if (image != cert.window_start + offset - rep_zero) {
      return fail("image disagrees with its window representative");
    }
    min_offset = std::min(min_offset, offset);
    max_offset = std::max(max_offset, offset);
  }
  if (!has_zero) return fail("mapping does not contain source 0");
  if (min_offset != 0 || max_offset != cert.width) {
    return fail("window is not exactly spanned by the images");
  }
  return true;
}

bool freiman_verify(const RectCertificate& cert, int ell) {
  if (ell < 1) throw input_error("ell must be at least 1");
  const std::size_t k = cert.mapping.size();
  if (k == 0) return false;

  __int128 work = 1;
  for (int i = 0; i < 2 * ell; ++i) {
    work *= static_cast<__int128>(k);
    if (work > 100000000) {
      throw guard_error("freiman_verify infeasible: k^(2*ell) exceeds 1e8");
    }
  }

  if (cert.p < 2 || !is_prime(cert.p)) return false;
  std::vector<std::int64_t> sources;
  std::vector<std::int64_t> images;
  sources.reserve(k);
  images.reserve(k);
  bool zero_fixed = false;
  {
    std::unordered_set<std::int64_t> seen_src, seen_img;
    for (const auto& [source, image] : cert.mapping) {
      if (source < 0 || source >= cert.p) return false;
      if (!seen_src.insert(source).second) return false;
      if (!seen_img.insert(image).second) return false;
      if (source == 0 && image == 0) zero_fixed = true;
      sources.push_back(source);
      images.push_back(image);
    }
  }
  if (!zero_fixed) return false;

  // Enumerate every length-ell tuple over the domain once, recording the
  // (sum mod p, image sum) pair. The isomorphism biconditional holds exactly
  // when each component of the pair determines the other. Tuples containing
  // 0 stand in for all shorter lengths.
  std::unordered_map<std::int64_t, std::int64_t> mod_to_int;
  std::unordered_map<std::int64_t, std::int64_t> int_to_mod;
  std::vector<std::size_t> idx(static_cast<std::size_t>(ell), 0);
  while (true) {
    std::int64_t mod_sum = 0;
    std::int64_t int_sum = 0;
    for (std::size_t i : idx) {
      mod_sum += sources[i];
      if (mod_sum >= cert.p) mod_sum -= cert.p;
      int_sum += images[i];
    }
    auto [it1, fresh1] = mod_to_int.try_emplace(mod_sum, int_sum);
    if (!fresh1 && it1->second != int_sum) return false;
    auto [it2, fresh2] = int_to_mod.try_emplace(int_sum, mod_sum);
    if (!fresh2 && it2->second != mod_sum) return false;

    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == k) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return true;
}

}  // namespace sumorder
