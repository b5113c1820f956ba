#include "sumorder/sequence.hpp"

#include <algorithm>
#include <vector>

#include "sumorder/errors.hpp"
#include "sumorder/integers.hpp"
#include "sumorder/prime_field.hpp"
#include "sumorder/product.hpp"

namespace sumorder {
namespace {

SequencingResult by_backtracking(std::vector<Element> elems,
                                 const GroupSpec& spec, BacktrackStats* stats,
                                 bool lift_guards) {
  const std::size_t guard = lift_guards
                                ? std::max(kBacktrackSizeGuard, elems.size())
                                : kBacktrackSizeGuard;
  std::optional<Ordering> found =
      backtrack_order(std::move(elems), spec, stats, guard);
  if (!found) {
    throw no_ordering_found("no valid ordering exists for this subset of " +
                            spec.name());
  }
  return SequencingResult{std::move(*found), Method::Backtracking,
                          std::nullopt, std::nullopt, true};
}

}  // namespace

SequencingResult sequence_subset(std::span<const Element> elems,
                                 const GroupSpec& spec, BacktrackStats* stats,
                                 bool lift_guards) {
  if (elems.empty()) {
    return SequencingResult{Ordering{spec, {}}, Method::Trivial, std::nullopt,
                            std::nullopt, true};
  }

  switch (spec.kind()) {
    case GroupKind::Integers: {
      std::vector<std::int64_t> values;
      values.reserve(elems.size());
      for (const Element& e : elems) {
        if (e.rank() != 1) {
          throw input_error("element rank does not match the group");
        }
        values.push_back(e.coords()[0]);
      }
      Ordering o = sequence_integers(values);
      return SequencingResult{std::move(o), Method::IntegerConstruction,
                              std::nullopt, std::nullopt, true};
    }
    case GroupKind::PrimeField: {
      std::vector<std::int64_t> residues;
      residues.reserve(elems.size());
      for (const Element& e : elems) {
        if (e.rank() != 1) {
          throw input_error("element rank does not match the group");
        }
        residues.push_back(e.coords()[0]);
      }
      return sequence_mod_p(residues, spec.modulus(), stats, lift_guards);
    }
    case GroupKind::Cyclic:
      return by_backtracking(std::vector<Element>(elems.begin(), elems.end()),
                             spec, stats, lift_guards);
    case GroupKind::Product:
      if (spec.moduli().back() == 0) {
        return sequence_product(elems, spec, stats, lift_guards);
      }
      return by_backtracking(std::vector<Element>(elems.begin(), elems.end()),
                             spec, stats, lift_guards);
  }
  throw internal_error("unhandled group kind");
}

}  // namespace sumorder
