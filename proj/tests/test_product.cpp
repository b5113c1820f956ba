#include "doctest.h"

#include <bit>
#include <cstdint>
#include <vector>

#include "sumorder/errors.hpp"
#include "sumorder/integers.hpp"
#include "sumorder/product.hpp"
#include "sumorder/sequence.hpp"
#include "support/random_sets.hpp"

using namespace sumorder;
using testsupport::SplitMix64;
using testsupport::el;

namespace {

const GroupSpec kZ2 =
    GroupSpec::product({GroupSpec::integers(), GroupSpec::integers()});

}  // namespace

TEST_CASE("tri_split partitions on the final coordinate") {
  std::vector<Element> in{el({0, 1}), el({1, 0}), el({-1, 0}), el({3, -2})};
  TriSplit t = tri_split(kZ2, in);
  CHECK(t.positive_last == std::vector<Element>{el({0, 1})});
  CHECK(t.zero_last == std::vector<Element>{el({1, 0}), el({-1, 0})});
  CHECK(t.negative_last == std::vector<Element>{el({3, -2})});

  std::vector<Element> zero{el({0, 0})};
  CHECK_THROWS_AS(tri_split(kZ2, zero), input_error);
}

TEST_CASE("tri_split requires a product ending in a free coordinate") {
  std::vector<Element> in{el({1})};
  CHECK_THROWS_AS(tri_split(GroupSpec::integers(), in), input_error);
  GroupSpec zf5 =
      GroupSpec::product({GroupSpec::integers(), GroupSpec::prime_field(5)});
  std::vector<Element> in2{el({1, 1})};
  CHECK_THROWS_AS(tri_split(zf5, in2), input_error);
}

TEST_CASE("pair_sequence_elements matches the integer recursion when embedded") {
  SplitMix64 rng(0xE3BEull);
  for (int trial = 0; trial < 200; ++trial) {
    auto ints = testsupport::random_integer_set(rng, 1 + rng.below(10), 50);
    Ordering flat = sequence_integers(ints);

    std::vector<Element> lifted;
    for (std::int64_t v : ints) lifted.push_back(el({0, v}));
    SequencingResult r = sequence_product(lifted, kZ2);
    CHECK(r.verified);
    REQUIRE(r.ordering.size() == flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
      CHECK(r.ordering.elems[i].coords()[0] == 0);
      CHECK(r.ordering.elems[i].coords()[1] == flat.elems[i].coords()[0]);
    }
  }
}

TEST_CASE("sequence_product worked examples") {
  std::vector<Element> in{el({0, 1}), el({1, 0}), el({-1, 0})};
  SequencingResult r = sequence_product(in, kZ2);
  CHECK(r.method == Method::ProductConstruction);
  CHECK(r.verified);
  REQUIRE(r.layout.has_value());
  CHECK(*r.layout == "MPN");
  CHECK(r.ordering.elems ==
        std::vector<Element>{el({1, 0}), el({-1, 0}), el({0, 1})});
  CHECK(partial_sums(r.ordering) ==
        std::vector<Element>{el({1, 0}), el({0, 0}), el({0, 1})});

  in = {el({2, 3})};
  r = sequence_product(in, kZ2);
  CHECK(r.method == Method::Trivial);
  CHECK_FALSE(r.layout.has_value());
  CHECK(r.ordering.elems == std::vector<Element>{el({2, 3})});

  in = {el({0, 2}), el({0, -1})};
  r = sequence_product(in, kZ2);
  CHECK(r.verified);
  CHECK(r.ordering.elems == std::vector<Element>{el({0, 2}), el({0, -1})});

  r = sequence_product(std::vector<Element>{}, kZ2);
  CHECK(r.method == Method::Trivial);
  CHECK(r.ordering.elems.empty());
}

TEST_CASE("sequence_product input contract") {
  std::vector<Element> dup{el({1, 2}), el({1, 2})};
  CHECK_THROWS_AS(sequence_product(dup, kZ2), input_error);
  std::vector<Element> zero{el({1, 2}), el({0, 0})};
  CHECK_THROWS_AS(sequence_product(zero, kZ2), input_error);
  std::vector<Element> wrong_rank{el({1})};
  CHECK_THROWS_AS(sequence_product(wrong_rank, kZ2), input_error);
}

TEST_CASE("sequence_product handles every small Z^2 subset near the origin") {
  // all subsets of {-1,0,1}^2 minus the origin with at most 3 elements
  std::vector<Element> universe;
  for (std::int64_t a = -1; a <= 1; ++a) {
    for (std::int64_t b = -1; b <= 1; ++b) {
      if (a || b) universe.push_back(el({a, b}));
    }
  }
  REQUIRE(universe.size() == 8);
  int tested = 0;
  for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<Element> subset;
    for (int i = 0; i < 8; ++i) {
      if (mask & (1u << i)) subset.push_back(universe[i]);
    }
    SequencingResult r = sequence_product(subset, kZ2);
    CHECK(r.verified);
    CHECK(is_valid(r.ordering));
    REQUIRE(r.ordering.size() == subset.size());
    ++tested;
  }
  CHECK(tested == 8 + 28 + 56);
}

TEST_CASE("sequence_product recurses through higher rank") {
  SplitMix64 rng(0x3D3Dull);
  GroupSpec z3 = GroupSpec::product(
      {GroupSpec::integers(), GroupSpec::integers(), GroupSpec::integers()});
  for (int trial = 0; trial < 100; ++trial) {
    auto set = testsupport::random_group_set(rng, z3, 1 + rng.below(8), 3);
    SequencingResult r = sequence_product(set, z3);
    CHECK(r.verified);
    CHECK(is_valid(r.ordering));
  }
}

TEST_CASE("sequence_product supports modular H parts") {
  SplitMix64 rng(0xAB5Eull);
  for (const GroupSpec& spec :
       {GroupSpec::product({GroupSpec::prime_field(5), GroupSpec::integers()}),
        GroupSpec::product({GroupSpec::cyclic(6), GroupSpec::integers()})}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto set = testsupport::random_group_set(rng, spec, 1 + rng.below(7), 4);
      SequencingResult r = sequence_product(set, spec);
      CHECK(r.verified);
      CHECK(is_valid(r.ordering));
      CHECK((r.method == Method::ProductConstruction ||
             r.method == Method::Backtracking ||
             r.method == Method::Trivial));
    }
  }
}

TEST_CASE("sequence_product is deterministic") {
  SplitMix64 rng(0xDE7Aull);
  auto set = testsupport::random_group_set(rng, kZ2, 7, 5);
  SequencingResult a = sequence_product(set, kZ2);
  SequencingResult b = sequence_product(set, kZ2);
  CHECK(a.ordering.elems == b.ordering.elems);
  CHECK(a.layout == b.layout);
}
