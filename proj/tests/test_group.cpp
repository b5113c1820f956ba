#include "doctest.h"

#include <unordered_set>
#include <vector>

#include "sumorder/errors.hpp"
#include "sumorder/group.hpp"
#include "support/random_sets.hpp"

using namespace sumorder;
using testsupport::SplitMix64;
using testsupport::el;

TEST_CASE("is_prime handles small and adversarial inputs") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(2147483647));      // 2^31 - 1
  CHECK(is_prime(1000000000039));   // large prime beyond 32 bits
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(561));       // Carmichael number
  CHECK_FALSE(is_prime(1105));      // Carmichael number
  CHECK_FALSE(is_prime(std::int64_t{1000003} * 999983));
}

TEST_CASE("mul_mod is exact near the modulus bound") {
  const std::int64_t m = kMaxModulus - 87;  // 2^40 - 87, prime
  CHECK(is_prime(m));
  CHECK(mul_mod(m - 1, m - 1, m) == 1);  // (-1)^2 = 1
  CHECK(mul_mod(m - 2, m - 1, m) == 2);
  CHECK(mul_mod(0, m - 1, m) == 0);
}

TEST_CASE("GroupSpec factories validate their arguments") {
  CHECK_THROWS_AS(GroupSpec::prime_field(15), input_error);
  CHECK_THROWS_AS(GroupSpec::prime_field(1), input_error);
  CHECK_THROWS_AS(GroupSpec::prime_field(kMaxModulus + 7), input_error);
  CHECK_THROWS_AS(GroupSpec::cyclic(0), input_error);
  CHECK_THROWS_AS(GroupSpec::cyclic(-4), input_error);
  // Z_1 has no nonzero elements, so no set to order; it is rejected outright
  CHECK_THROWS_AS(GroupSpec::cyclic(1), input_error);
  CHECK(GroupSpec::prime_field(2).modulus() == 2);
  CHECK_THROWS_AS(GroupSpec::product({}), input_error);
}

TEST_CASE("GroupSpec names and flattening") {
  CHECK(GroupSpec::integers().name() == "Z");
  CHECK(GroupSpec::prime_field(13).name() == "F_13");
  CHECK(GroupSpec::cyclic(6).name() == "Z_6");

  GroupSpec z = GroupSpec::integers();
  GroupSpec z3 = GroupSpec::product({z, z, z});
  CHECK(z3.name() == "Z^3");
  CHECK(z3.rank() == 3);
  CHECK(z3.moduli() == std::vector<std::int64_t>{0, 0, 0});

  GroupSpec mix = GroupSpec::product({GroupSpec::cyclic(6), z});
  CHECK(mix.name() == "Z_6 x Z");
  CHECK(mix.moduli() == std::vector<std::int64_t>{6, 0});

  // A singleton product collapses to its part.
  GroupSpec single = GroupSpec::product({GroupSpec::prime_field(5)});
  CHECK(single.kind() == GroupKind::PrimeField);
  CHECK(single.modulus() == 5);

  // Nested products flatten their coordinate vectors.
  GroupSpec nested = GroupSpec::product({mix, GroupSpec::prime_field(5)});
  CHECK(nested.rank() == 3);
  CHECK(nested.moduli() == std::vector<std::int64_t>{6, 0, 5});
}

TEST_CASE("GroupSpec rank limits") {
  GroupSpec z = GroupSpec::integers();
  std::vector<GroupSpec> eight(8, z);
  CHECK(GroupSpec::product(eight).rank() == 8);
  std::vector<GroupSpec> nine(9, z);
  CHECK_THROWS_AS(GroupSpec::product(nine), input_error);
}

TEST_CASE("drop_last peels one flattened coordinate") {
  GroupSpec z = GroupSpec::integers();
  GroupSpec z2 = GroupSpec::product({z, z});
  CHECK(z2.drop_last() == z);

  GroupSpec mix = GroupSpec::product({GroupSpec::cyclic(6), z});
  CHECK(mix.drop_last() == GroupSpec::cyclic(6));

  GroupSpec z3 = GroupSpec::product({z, z, z});
  CHECK(z3.drop_last() == z2);

  CHECK_THROWS_AS(z.drop_last(), internal_error);
}

TEST_CASE("canonicalize reduces modular coordinates") {
  GroupSpec f13 = GroupSpec::prime_field(13);
  std::vector<std::int64_t> raw{14};
  CHECK(canonicalize(f13, raw) == el({1}));
  raw = {-1};
  CHECK(canonicalize(f13, raw) == el({12}));
  raw = {0};
  CHECK(canonicalize(f13, raw) == el({0}));

  GroupSpec z = GroupSpec::integers();
  raw = {-5};
  CHECK(canonicalize(z, raw) == el({-5}));
  raw = {kMaxFreeMagnitude + 1};
  CHECK_THROWS_AS(canonicalize(z, raw), input_error);

  GroupSpec z2 = GroupSpec::product({z, z});
  raw = {3, -2};
  CHECK(canonicalize(z2, raw) == el({3, -2}));
  raw = {3};
  CHECK_THROWS_AS(canonicalize(z2, raw), input_error);
}

TEST_CASE("canonicalize is idempotent on random inputs") {
  SplitMix64 rng(0x11A5ull);
  std::vector<GroupSpec> specs{
      GroupSpec::integers(), GroupSpec::prime_field(13), GroupSpec::cyclic(6),
      GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()}),
      GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::prime_field(7)})};
  for (const GroupSpec& spec : specs) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> raw(spec.rank());
      for (auto& c : raw) c = rng.range(-1000000, 1000000);
      Element once = canonicalize(spec, raw);
      Element twice = canonicalize(spec, once.coords());
      CHECK(once == twice);
      CHECK(is_canonical(spec, once));
    }
  }
}

TEST_CASE("add and neg agree with hand worked examples") {
  GroupSpec f5 = GroupSpec::prime_field(5);
  CHECK(add(f5, el({4}), el({3})) == el({2}));
  CHECK(neg(GroupSpec::prime_field(13), el({1})) == el({12}));
  CHECK(neg(f5, el({0})) == el({0}));

  GroupSpec z = GroupSpec::integers();
  CHECK(add(z, el({-7}), el({3})) == el({-4}));
  CHECK(neg(z, el({-7})) == el({7}));

  GroupSpec mix = GroupSpec::product({GroupSpec::cyclic(6), z});
  CHECK(add(mix, el({5, 2}), el({3, -4})) == el({2, -2}));
  CHECK(neg(mix, el({5, 2})) == el({1, -2}));
}

TEST_CASE("group laws hold on random canonical elements") {
  SplitMix64 rng(0xABCDull);
  std::vector<GroupSpec> specs{
      GroupSpec::integers(), GroupSpec::prime_field(101), GroupSpec::cyclic(12),
      GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()}),
      GroupSpec::product({GroupSpec::prime_field(5), GroupSpec::integers()})};
  for (const GroupSpec& spec : specs) {
    Element zero = zero_element(spec);
    for (int trial = 0; trial < 200; ++trial) {
      auto pick = [&] {
        std::vector<std::int64_t> raw(spec.rank());
        for (std::size_t i = 0; i < raw.size(); ++i) {
          std::int64_t m = spec.moduli()[i];
          raw[i] = m == 0 ? rng.range(-1000, 1000) : rng.range(0, m - 1);
        }
        return Element(std::move(raw));
      };
      Element a = pick();
      Element b = pick();
      Element c = pick();
      CHECK(add(spec, a, b) == add(spec, b, a));
      CHECK(add(spec, add(spec, a, b), c) == add(spec, a, add(spec, b, c)));
      CHECK(add(spec, a, zero) == a);
      CHECK(add(spec, a, neg(spec, a)) == zero);
      CHECK(is_canonical(spec, add(spec, a, b)));
      CHECK(is_canonical(spec, neg(spec, a)));
    }
  }
}

TEST_CASE("is_zero and zero_element") {
  GroupSpec z2 = GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()});
  CHECK(is_zero(zero_element(z2)));
  CHECK(zero_element(z2) == el({0, 0}));
  CHECK_FALSE(is_zero(el({0, 1})));
}

TEST_CASE("ElementHash is consistent with equality") {
  ElementHash h;
  CHECK(h(el({3, -2})) == h(el({3, -2})));
  std::unordered_set<Element, ElementHash> seen;
  SplitMix64 rng(0x5EEDull);
  int inserted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> raw{rng.range(-20, 20), rng.range(-20, 20)};
    if (seen.insert(Element(std::move(raw))).second) ++inserted;
  }
  CHECK(inserted == static_cast<int>(seen.size()));
  CHECK(seen.size() > 100);  // 41*41 cells, 500 draws: far more than 100 hit
}
