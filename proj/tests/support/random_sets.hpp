#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "sumorder/group.hpp"

namespace sumorder::testsupport {

// SplitMix64 keeps the test corpora identical across platforms and standard
// library versions. std::mt19937 plus a distribution would not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound) via the multiply-shift trick. The bias is
  // at most bound / 2^64, far below anything a test could observe.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Inclusive range.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

inline Element el(std::vector<std::int64_t> coords) {
  return Element(std::move(coords));
}

inline std::vector<Element> rank1(const std::vector<std::int64_t>& values) {
  std::vector<Element> out;
  out.reserve(values.size());
  for (std::int64_t v : values) out.push_back(el({v}));
  return out;
}

// k distinct nonzero integers with |v| <= magnitude.
inline std::vector<std::int64_t> random_integer_set(SplitMix64& rng,
                                                    std::size_t k,
                                                    std::int64_t magnitude) {
  std::unordered_set<std::int64_t> seen;
  std::vector<std::int64_t> out;
  while (out.size() < k) {
    std::int64_t v = rng.range(-magnitude, magnitude);
    if (v == 0 || !seen.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

// k distinct residues in [1, p-1].
inline std::vector<std::int64_t> random_nonzero_residues(SplitMix64& rng,
                                                         std::size_t k,
                                                         std::int64_t p) {
  std::unordered_set<std::int64_t> seen;
  std::vector<std::int64_t> out;
  while (out.size() < k) {
    std::int64_t v = rng.range(1, p - 1);
    if (!seen.insert(v).second) continue;
    out.push_back(v);
  }
  return out;
}

// k distinct nonzero elements of the group, coordinates drawn uniformly.
// free_magnitude bounds coordinates of free (modulus 0) positions.
inline std::vector<Element> random_group_set(SplitMix64& rng,
                                             const GroupSpec& spec,
                                             std::size_t k,
                                             std::int64_t free_magnitude) {
  const auto& moduli = spec.moduli();
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  while (out.size() < k) {
    std::vector<std::int64_t> coords(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      coords[i] = moduli[i] == 0 ? rng.range(-free_magnitude, free_magnitude)
                                 : rng.range(0, moduli[i] - 1);
    }
    Element e(std::move(coords));
    if (is_zero(e) || !seen.insert(e).second) continue;
    out.push_back(e);
  }
  return out;
}

inline void shuffle(SplitMix64& rng, std::vector<Element>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace sumorder::testsupport
