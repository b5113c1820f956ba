#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sumorder {

/// Deterministic Miller-Rabin primality test, exact for all n < 2^63.
bool is_prime(std::int64_t n);

/// (a * b) mod m for 0 <= a, b < m < 2^62, via a 128-bit intermediate.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

/// Largest magnitude accepted for a free (integer-valued) coordinate at
/// ingestion. Any sum of up to kMaxSetSize such coordinates then stays below
/// 2^62, so 64-bit partial-sum accumulation cannot overflow and the 128-bit
/// intermediates used for modular products have slack to spare.
inline constexpr std::int64_t kMaxFreeMagnitude = std::int64_t{1} << 46;

/// Largest number of elements a single set or ordering may hold; the
/// ingestion magnitude bound is calibrated against sums of this length.
inline constexpr std::size_t kMaxSetSize = std::size_t{1} << 16;

/// Exclusive upper bound for prime-field and cyclic moduli.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 40;

inline constexpr int kMaxProductDepth = 4;
inline constexpr std::size_t kMaxCoordinates = 8;

enum class GroupKind { Integers, PrimeField, Cyclic, Product };

/// Description of an ambient abelian group: Z, F_p (p prime), Z_n, or a
/// product of these. Products are flattened to a coordinate vector at
/// construction: coordinate i is integer-valued when moduli()[i] == 0 and
/// Z_m-valued when moduli()[i] == m.
class GroupSpec {
 public:
  /// Defaults to Z.
  GroupSpec() : moduli_{0} {}

  static GroupSpec integers();
  static GroupSpec prime_field(std::int64_t p);
  static GroupSpec cyclic(std::int64_t n);
  static GroupSpec product(std::vector<GroupSpec> parts);

  GroupKind kind() const { return kind_; }
  /// Modulus of a PrimeField or Cyclic spec.
  std::int64_t modulus() const { return modulus_; }
  const std::vector<GroupSpec>& parts() const { return parts_; }

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  /// Spec for the group with the last flattened coordinate removed.
  /// Requires rank() >= 2.
  GroupSpec drop_last() const;

  /// Canonical display name: "Z", "F_13", "Z_6", "Z^3", "Z_6 x Z", ...
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupKind kind_ = GroupKind::Integers;
  std::int64_t modulus_ = 0;       // PrimeField / Cyclic only
  std::vector<GroupSpec> parts_;   // Product only
  std::vector<std::int64_t> moduli_;

  int depth() const;
};

/// A group element as a flattened coordinate vector. Modular coordinates are
/// canonical in [0, m); integer coordinates are plain signed values.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

Element zero_element(const GroupSpec& spec);

/// Reduces raw coordinates into canonical form. Errors on a length mismatch
/// or an integer coordinate beyond the ingestion magnitude bound.
Element canonicalize(const GroupSpec& spec, std::span<const std::int64_t> raw);

/// Group addition of canonical elements. Integer coordinates are not
/// re-bounded: partial sums may legitimately exceed the ingestion bound.
Element add(const GroupSpec& spec, const Element& a, const Element& b);

Element neg(const GroupSpec& spec, const Element& a);

bool is_zero(const Element& a);

/// True when every modular coordinate lies in its canonical range.
bool is_canonical(const GroupSpec& spec, const Element& a);

}  // namespace sumorder
