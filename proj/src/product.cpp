#include "sumorder/product.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "sumorder/errors.hpp"
#include "sumorder/sequence.hpp"

namespace sumorder {
namespace {

void check_product_spec(const GroupSpec& spec) {
  if (spec.rank() < 2 || spec.moduli().back() != 0) {
    throw input_error(
        "product sequencing needs a product group whose final coordinate "
        "is a copy of Z");
  }
}

std::int64_t last_coord(const Element& e) { return e.coords().back(); }

Element drop_last_coord(const Element& e) {
  std::vector<std::int64_t> coords(e.coords().begin(),
                                   e.coords().end() - 1);
  return Element(std::move(coords));
}

Element append_zero(const Element& e) {
  std::vector<std::int64_t> coords = e.coords();
  coords.push_back(0);
  return Element(std::move(coords));
}

// Same shape as the integer recursion's side state, with group elements in
// the pool and the final coordinate as the scalar weight.
struct Side {
  std::vector<Element> pool;
  std::size_t head = 0;
  std::vector<Element> removed;
  Element group_sum;
  std::int64_t weight = 0;

  Side(const GroupSpec& spec, std::vector<Element> elems)
      : pool(std::move(elems)), group_sum(zero_element(spec)) {
    std::sort(pool.begin(), pool.end());
    for (const Element& e : pool) {
      group_sum = add(spec, group_sum, e);
      weight += last_coord(e);
    }
  }

  std::size_t active() const { return pool.size() - head; }

  void remove_at(const GroupSpec& spec, std::size_t idx) {
    weight -= last_coord(pool[idx]);
    group_sum = add(spec, group_sum, neg(spec, pool[idx]));
    removed.push_back(pool[idx]);
    if (idx == head) {
      ++head;
    } else {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
  }

  std::vector<Element> final_order() const {
    std::vector<Element> order(
        pool.begin() + static_cast<std::ptrdiff_t>(head), pool.end());
    order.insert(order.end(), removed.rbegin(), removed.rend());
    return order;
  }
};

void check_pair_side(const GroupSpec& spec, const std::vector<Element>& elems,
                     const char* label) {
  std::unordered_set<Element, ElementHash> seen;
  seen.reserve(elems.size());
  for (const Element& e : elems) {
    if (e.rank() != spec.rank() || !is_canonical(spec, e)) {
      throw input_error(std::string(label) +
                        " side element does not belong to the group");
    }
    if (last_coord(e) <= 0) {
      throw input_error(std::string(label) +
                        " side needs strictly positive final coordinates");
    }
    if (!seen.insert(e).second) {
      throw input_error(std::string(label) + " side contains duplicates");
    }
  }
}

}  // namespace

TriSplit tri_split(const GroupSpec& spec, std::span<const Element> elems) {
  check_product_spec(spec);
  TriSplit split;
  for (const Element& e : elems) {
    if (e.rank() != spec.rank()) {
      throw input_error("element rank does not match the group");
    }
    if (is_zero(e)) throw input_error("set contains the zero element");
    const std::int64_t last = last_coord(e);
    if (last > 0) {
      split.positive_last.push_back(e);
    } else if (last < 0) {
      split.negative_last.push_back(e);
    } else {
      split.zero_last.push_back(e);
    }
  }
  return split;
}

ElementPairOrdering pair_sequence_elements(const GroupSpec& spec,
                                           std::vector<Element> p,
                                           std::vector<Element> n) {
  check_product_spec(spec);
  check_pair_side(spec, p, "P");
  check_pair_side(spec, n, "N");

  Side p_side(spec, std::move(p));
  Side n_side(spec, std::move(n));

  Side* major = &p_side;
  Side* minor = &n_side;
  while (true) {
    if (major->weight < minor->weight) std::swap(major, minor);
    if (major->active() <= 1) break;
    // Removing e leaves equal side sums exactly when e equals the current
    // difference of group sums; that disqualifies at most one pool entry.
    const Element& head_elem = major->pool[major->head];
    const bool head_bad =
        add(spec, major->group_sum, neg(spec, head_elem)) == minor->group_sum;
    major->remove_at(spec, head_bad ? major->head + 1 : major->head);
  }

  return ElementPairOrdering{p_side.final_order(), n_side.final_order()};
}

SequencingResult sequence_product(std::span<const Element> elems,
                                  const GroupSpec& spec,
                                  BacktrackStats* stats, bool lift_guards) {
  check_product_spec(spec);
  if (elems.size() > kMaxSetSize) {
    throw input_error("set exceeds the size cap");
  }
  std::vector<Element> all(elems.begin(), elems.end());
  {
    std::unordered_set<Element, ElementHash> seen;
    seen.reserve(all.size());
    for (const Element& e : all) {
      if (e.rank() != spec.rank() || !is_canonical(spec, e)) {
        throw input_error("element does not belong to the group");
      }
      if (is_zero(e)) throw input_error("set contains the zero element");
      if (!seen.insert(e).second) {
        throw input_error("set contains duplicates");
      }
    }
  }

  if (all.size() <= 1) {
    Ordering o{spec, std::move(all)};
    if (!is_valid(o)) {
      throw internal_error("trivial ordering failed verification");
    }
    return SequencingResult{std::move(o), Method::Trivial, std::nullopt,
                            std::nullopt, true};
  }

  TriSplit split = tri_split(spec, all);

  // Middle block: sequence the H-parts of the zero-coordinate elements with
  // whatever sequencer fits H, then lift back by restoring the 0.
  std::vector<Element> middle_block;
  if (!split.zero_last.empty()) {
    const GroupSpec h_spec = spec.drop_last();
    std::vector<Element> h_parts;
    h_parts.reserve(split.zero_last.size());
    for (const Element& e : split.zero_last) {
      h_parts.push_back(drop_last_coord(e));
    }
    SequencingResult h_result =
        sequence_subset(h_parts, h_spec, stats, lift_guards);
    middle_block.reserve(h_result.ordering.elems.size());
    for (const Element& e : h_result.ordering.elems) {
      middle_block.push_back(append_zero(e));
    }
  }

  std::vector<Element> negated_n;
  negated_n.reserve(split.negative_last.size());
  for (const Element& e : split.negative_last) {
    negated_n.push_back(neg(spec, e));
  }
  ElementPairOrdering pair = pair_sequence_elements(
      spec, split.positive_last, std::move(negated_n));

  std::vector<Element> p_block(pair.p_order.rbegin(), pair.p_order.rend());
  std::vector<Element> n_block;
  n_block.reserve(pair.n_order.size());
  for (const Element& e : pair.n_order) n_block.push_back(neg(spec, e));

  static constexpr std::array<const char*, 6> kLayouts = {
      "MPN", "PMN", "PNM", "NMP", "MNP", "NPM"};
  for (const char* layout : kLayouts) {
    Ordering candidate{spec, {}};
    candidate.elems.reserve(all.size());
    for (const char* block = layout; *block != '\0'; ++block) {
      const std::vector<Element>& chunk = *block == 'M'   ? middle_block
                                          : *block == 'P' ? p_block
                                                          : n_block;
      candidate.elems.insert(candidate.elems.end(), chunk.begin(),
                             chunk.end());
    }
    if (is_valid(candidate)) {
      return SequencingResult{std::move(candidate), Method::ProductConstruction,
                              std::nullopt, std::string(layout), true};
    }
  }

  const std::size_t guard = lift_guards
                                ? std::max(kBacktrackSizeGuard, all.size())
                                : kBacktrackSizeGuard;
  std::optional<Ordering> found =
      backtrack_order(std::move(all), spec, stats, guard);
  if (!found) {
    throw no_ordering_found("no valid ordering exists for this subset of " +
                            spec.name());
  }
  if (!is_valid(*found)) {
    throw internal_error("backtracking produced an invalid ordering");
  }
  return SequencingResult{std::move(*found), Method::Backtracking,
                          std::nullopt, std::nullopt, true};
}

}  // namespace sumorder
