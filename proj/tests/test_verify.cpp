#include "doctest.h"

#include <vector>

#include "sumorder/errors.hpp"
#include "sumorder/verify.hpp"
#include "support/random_sets.hpp"

using namespace sumorder;
using testsupport::SplitMix64;
using testsupport::el;
using testsupport::rank1;

namespace {

Ordering ord(const GroupSpec& spec, std::vector<std::int64_t> values) {
  return Ordering{spec, rank1(values)};
}

// Independent recomputation of each prefix sum with the fold associated the
// other way, as a cross-check on partial_sums.
std::vector<Element> partial_sums_right_assoc(const Ordering& o) {
  std::vector<Element> out;
  for (std::size_t k = 1; k <= o.size(); ++k) {
    Element acc = o.elems[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
      acc = add(o.spec, o.elems[i], acc);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("partial_sums worked examples") {
  GroupSpec z = GroupSpec::integers();
  auto sums = partial_sums(ord(z, {1, 3, 2, -3}));
  CHECK(sums == rank1({1, 4, 6, 3}));

  GroupSpec f5 = GroupSpec::prime_field(5);
  sums = partial_sums(ord(f5, {1, 2, 4, 3}));
  CHECK(sums == rank1({1, 3, 2, 0}));

  CHECK(partial_sums(Ordering{z, {}}).empty());
}

TEST_CASE("partial_sums agrees with a reverse-association fold") {
  SplitMix64 rng(0x9AEull);
  std::vector<GroupSpec> specs{
      GroupSpec::integers(), GroupSpec::prime_field(13), GroupSpec::cyclic(9),
      GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()})};
  for (const GroupSpec& spec : specs) {
    for (int trial = 0; trial < 50; ++trial) {
      auto elems = testsupport::random_group_set(rng, spec, 1 + rng.below(8), 40);
      Ordering o{spec, elems};
      CHECK(partial_sums(o) == partial_sums_right_assoc(o));
    }
  }
}

TEST_CASE("is_valid worked examples") {
  GroupSpec z = GroupSpec::integers();
  CHECK(is_valid(ord(z, {1, 3, 2, -3})));
  CHECK(is_valid(ord(z, {5})));
  CHECK(is_valid(Ordering{z, {}}));
}

TEST_CASE("is_valid rejects colliding partial sums, not zero sums") {
  GroupSpec z = GroupSpec::integers();
  // sums 1, 0, 2: all distinct, 0 among them is fine
  CHECK(is_valid(ord(z, {1, -1, 2})));
  // sums 1, 3, 1: collision
  CHECK_FALSE(is_valid(ord(z, {1, 2, -2})));

  GroupSpec f5 = GroupSpec::prime_field(5);
  // sums 1, 3, 1, 0: collision at positions 1 and 3
  CHECK_FALSE(is_valid(ord(f5, {1, 2, 3, 4})));
  CHECK(is_valid(ord(f5, {1, 2, 4, 3})));
}

TEST_CASE("check_well_formed rejects structural breakage") {
  GroupSpec z = GroupSpec::integers();
  CHECK_THROWS_AS(is_valid(ord(z, {1, 0, 2})), malformed_ordering);
  CHECK_THROWS_AS(is_valid(ord(z, {1, 2, 1})), malformed_ordering);

  GroupSpec f5 = GroupSpec::prime_field(5);
  // 6 is not canonical in F_5
  CHECK_THROWS_AS(is_valid(Ordering{f5, {el({6})}}), malformed_ordering);
  // rank mismatch
  CHECK_THROWS_AS(is_valid(Ordering{f5, {el({1, 2})}}), malformed_ordering);

  try {
    is_valid(ord(z, {3, 1, 1}));
    FAIL("expected malformed_ordering");
  } catch (const malformed_ordering& e) {
    // 1-based position of the offending entry
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("analyze worked examples") {
  GroupSpec f5 = GroupSpec::prime_field(5);

  ValidityReport r = analyze(ord(f5, {1, 2, 4, 3}));
  CHECK(r.valid);
  CHECK_FALSE(r.first_collision.has_value());
  CHECK(r.two_sided);
  CHECK(r.zero_blocks.empty());

  // sums 1, 0, 2: valid one way; reversed is 2,4,1 -> sums 2,1,2 invalid
  r = analyze(ord(f5, {1, 4, 2}));
  CHECK(r.valid);
  CHECK_FALSE(r.two_sided);
  REQUIRE(r.zero_blocks.size() == 1);
  CHECK(r.zero_blocks[0] == std::pair<std::size_t, std::size_t>{0, 2});

  r = analyze(ord(GroupSpec::integers(), {5}));
  CHECK(r.valid);
  CHECK(r.two_sided);
  CHECK(r.zero_blocks.empty());
}

TEST_CASE("analyze reports the earliest collision") {
  GroupSpec z = GroupSpec::integers();
  // sums: 1, 0, 2, 0 -> collisions (2,4); earliest j is 4
  ValidityReport r = analyze(ord(z, {1, -1, 2, -2}));
  CHECK_FALSE(r.valid);
  REQUIRE(r.first_collision.has_value());
  CHECK(*r.first_collision == std::pair<std::size_t, std::size_t>{2, 4});

  // sums: 3, 4, 3, 5 -> the minimal colliding pair is (1, 3)
  r = analyze(ord(z, {3, 1, -1, 2}));
  REQUIRE(r.first_collision.has_value());
  CHECK(*r.first_collision == std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("analyze excludes only the full zero block") {
  GroupSpec z = GroupSpec::integers();
  // sums: 1, 0; s_0 = s_2 = 0 is the full block and stays out
  ValidityReport r = analyze(ord(z, {1, -1}));
  CHECK(r.valid);
  CHECK(r.zero_blocks.empty());
  CHECK(r.two_sided);

  // sums: 1, 0, 3; block (0,2) is proper here
  r = analyze(ord(z, {1, -1, 3}));
  CHECK(r.valid);
  REQUIRE(r.zero_blocks.size() == 1);
  CHECK(r.zero_blocks[0] == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK_FALSE(r.two_sided);

  // extended sums: 0, 3, 0, 5, 0 -> equal pairs (0,2), (0,4), (2,4); the
  // full block (0,4) is excluded, the inner ones stay
  r = analyze(ord(z, {3, -3, 5, -5}));
  CHECK_FALSE(r.valid);
  REQUIRE(r.first_collision.has_value());
  CHECK(*r.first_collision == std::pair<std::size_t, std::size_t>{2, 4});
  std::vector<std::pair<std::size_t, std::size_t>> want{{0, 2}, {2, 4}};
  CHECK(r.zero_blocks == want);

  // extended sums: 0, 1, 0, 4, 1 -> (0,2) and (1,4), nothing excluded
  r = analyze(ord(z, {1, -1, 4, -3}));
  CHECK_FALSE(r.valid);
  want = {{0, 2}, {1, 4}};
  CHECK(r.zero_blocks == want);
}

TEST_CASE("two-sided validity matches the zero-block characterization") {
  SplitMix64 rng(0x2517ull);
  std::vector<GroupSpec> specs{
      GroupSpec::integers(), GroupSpec::prime_field(13), GroupSpec::cyclic(10),
      GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()})};
  int checked = 0;
  for (const GroupSpec& spec : specs) {
    for (int trial = 0; trial < 400; ++trial) {
      auto elems =
          testsupport::random_group_set(rng, spec, rng.below(7), 4);
      testsupport::shuffle(rng, elems);
      ValidityReport r = analyze(Ordering{spec, elems});
      CHECK(r.two_sided == r.zero_blocks.empty());
      // A collision among s_1..s_m is a proper zero block not touching s_0.
      bool inner_block = false;
      for (auto [i, j] : r.zero_blocks) {
        if (i >= 1) inner_block = true;
      }
      CHECK(r.valid == !inner_block);
      CHECK(r.valid == (r.first_collision == std::nullopt));
      ++checked;
    }
  }
  CHECK(checked == 1600);
}

TEST_CASE("validity is preserved by global negation") {
  SplitMix64 rng(0x715Aull);
  GroupSpec f13 = GroupSpec::prime_field(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto elems = testsupport::random_group_set(rng, f13, 1 + rng.below(8), 0);
    Ordering o{f13, elems};
    std::vector<Element> negated;
    for (const Element& e : elems) negated.push_back(neg(f13, e));
    Ordering on{f13, negated};
    CHECK(is_valid(o) == is_valid(on));
  }
}

TEST_CASE("reversed reverses") {
  GroupSpec z = GroupSpec::integers();
  Ordering o = ord(z, {1, 3, 2});
  CHECK(reversed(o).elems == rank1({2, 3, 1}));
  CHECK(reversed(reversed(o)).elems == o.elems);
}
