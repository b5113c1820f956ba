#include "sumorder/group.hpp"

#include <algorithm>

#include "sumorder/errors.hpp"

namespace sumorder {

namespace {

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = static_cast<std::uint64_t>((__uint128_t)r * base % m);
    base = static_cast<std::uint64_t>((__uint128_t)base * base % m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set for all n < 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod_u(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>((__uint128_t)x * x % n);
      if (x == static_cast<std::uint64_t>(n - 1)) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((__int128)a * b % m);
}

GroupSpec GroupSpec::integers() { return GroupSpec{}; }

GroupSpec GroupSpec::prime_field(std::int64_t p) {
  if (p < 2 || p >= kMaxModulus)
    throw input_error("prime-field modulus out of range [2, 2^40): " +
                      std::to_string(p));
  if (!is_prime(p))
    throw input_error("composite prime-field modulus: " + std::to_string(p));
  GroupSpec g;
  g.kind_ = GroupKind::PrimeField;
  g.modulus_ = p;
  g.moduli_ = {p};
  return g;
}

GroupSpec GroupSpec::cyclic(std::int64_t n) {
  if (n < 2 || n >= kMaxModulus)
    throw input_error("cyclic modulus out of range [2, 2^40): " +
                      std::to_string(n));
  GroupSpec g;
  g.kind_ = GroupKind::Cyclic;
  g.modulus_ = n;
  g.moduli_ = {n};
  return g;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> parts) {
  if (parts.empty()) throw input_error("empty product group");
  if (parts.size() == 1) return std::move(parts.front());
  GroupSpec g;
  g.kind_ = GroupKind::Product;
  g.parts_ = std::move(parts);
  g.moduli_.clear();
  for (const GroupSpec& part : g.parts_)
    g.moduli_.insert(g.moduli_.end(), part.moduli().begin(),
                     part.moduli().end());
  if (g.depth() > kMaxProductDepth)
    throw input_error("product nesting depth exceeds " +
                      std::to_string(kMaxProductDepth));
  if (g.moduli_.size() > kMaxCoordinates)
    throw input_error("total coordinate count exceeds " +
                      std::to_string(kMaxCoordinates));
  return g;
}

int GroupSpec::depth() const {
  if (kind_ != GroupKind::Product) return 1;
  int d = 0;
  for (const GroupSpec& part : parts_) d = std::max(d, part.depth());
  return d + 1;
}

GroupSpec GroupSpec::drop_last() const {
  if (rank() < 2) throw internal_error("drop_last on a rank-1 group");
  std::vector<GroupSpec> parts = parts_;
  GroupSpec& last = parts.back();
  if (last.rank() == 1) {
    parts.pop_back();
  } else {
    last = last.drop_last();
  }
  return product(std::move(parts));
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::Integers:
      return "Z";
    case GroupKind::PrimeField:
      return "F_" + std::to_string(modulus_);
    case GroupKind::Cyclic:
      return "Z_" + std::to_string(modulus_);
    case GroupKind::Product: {
      bool all_free = std::all_of(moduli_.begin(), moduli_.end(),
                                  [](std::int64_t m) { return m == 0; });
      if (all_free) return "Z^" + std::to_string(rank());
      std::string out;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += " x ";
        if (parts_[i].kind() == GroupKind::Product)
          out += "(" + parts_[i].name() + ")";
        else
          out += parts_[i].name();
      }
      return out;
    }
  }
  return "?";
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  // FNV-1a over the coordinate words, with a final avalanche.
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t c : e.coords()) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  h ^= h >> 32;
  h *= 0xD6E8FEB86659FD93ull;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

Element zero_element(const GroupSpec& spec) {
  return Element(std::vector<std::int64_t>(spec.rank(), 0));
}

Element canonicalize(const GroupSpec& spec, std::span<const std::int64_t> raw) {
  if (raw.size() != spec.rank())
    throw input_error("element has " + std::to_string(raw.size()) +
                      " coordinates, expected " + std::to_string(spec.rank()));
  std::vector<std::int64_t> coords(raw.begin(), raw.end());
  const auto& moduli = spec.moduli();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli[i] == 0) {
      if (coords[i] > kMaxFreeMagnitude || coords[i] < -kMaxFreeMagnitude)
        throw input_error("integer coordinate magnitude exceeds ingestion "
                          "bound 2^46: " +
                          std::to_string(coords[i]));
    } else {
      std::int64_t r = coords[i] % moduli[i];
      if (r < 0) r += moduli[i];
      coords[i] = r;
    }
  }
  return Element(std::move(coords));
}

Element add(const GroupSpec& spec, const Element& a, const Element& b) {
  if (a.rank() != spec.rank() || b.rank() != spec.rank())
    throw input_error("element rank does not match group spec");
  const auto& moduli = spec.moduli();
  std::vector<std::int64_t> coords(spec.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t s = a.coords()[i] + b.coords()[i];
    if (moduli[i] != 0 && s >= moduli[i]) s -= moduli[i];
    coords[i] = s;
  }
  return Element(std::move(coords));
}

Element neg(const GroupSpec& spec, const Element& a) {
  if (a.rank() != spec.rank())
    throw input_error("element rank does not match group spec");
  const auto& moduli = spec.moduli();
  std::vector<std::int64_t> coords(spec.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t c = a.coords()[i];
    coords[i] = (moduli[i] == 0 || c == 0) ? -c : moduli[i] - c;
  }
  return Element(std::move(coords));
}

bool is_zero(const Element& a) {
  return std::all_of(a.coords().begin(), a.coords().end(),
                     [](std::int64_t c) { return c == 0; });
}

bool is_canonical(const GroupSpec& spec, const Element& a) {
  if (a.rank() != spec.rank()) return false;
  const auto& moduli = spec.moduli();
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (moduli[i] != 0 &&
        (a.coords()[i] < 0 || a.coords()[i] >= moduli[i]))
      return false;
  return true;
}

}  // namespace sumorder
