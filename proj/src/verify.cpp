#include "sumorder/verify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sumorder/errors.hpp"

namespace sumorder {

void check_well_formed(const Ordering& o) {
  const std::size_t rank = o.spec.rank();
  std::unordered_set<Element, ElementHash> seen;
  seen.reserve(o.elems.size());
  for (std::size_t idx = 0; idx < o.elems.size(); ++idx) {
    const Element& e = o.elems[idx];
    if (e.rank() != rank) {
      throw malformed_ordering("ordering entry " + std::to_string(idx + 1) +
                               " has rank " + std::to_string(e.rank()) +
                               ", expected " + std::to_string(rank));
    }
    if (!is_canonical(o.spec, e)) {
      throw malformed_ordering("ordering entry " + std::to_string(idx + 1) +
                               " is not in canonical form");
    }
    if (is_zero(e)) {
      throw malformed_ordering("ordering entry " + std::to_string(idx + 1) +
                               " is the zero element");
    }
    if (!seen.insert(e).second) {
      throw malformed_ordering("ordering entry " + std::to_string(idx + 1) +
                               " repeats an earlier element");
    }
  }
}

Ordering reversed(Ordering o) {
  std::reverse(o.elems.begin(), o.elems.end());
  return o;
}

std::vector<Element> partial_sums(const Ordering& o) {
  std::vector<Element> sums;
  sums.reserve(o.elems.size());
  Element acc = zero_element(o.spec);
  for (const Element& e : o.elems) {
    acc = add(o.spec, acc, e);
    sums.push_back(acc);
  }
  return sums;
}

bool is_valid(const Ordering& o) {
  check_well_formed(o);
  std::unordered_set<Element, ElementHash> seen;
  seen.reserve(o.elems.size());
  Element acc = zero_element(o.spec);
  for (const Element& e : o.elems) {
    acc = add(o.spec, acc, e);
    if (!seen.insert(acc).second) return false;
  }
  return true;
}

ValidityReport analyze(const Ordering& o) {
  check_well_formed(o);
  ValidityReport report;

  const std::vector<Element> sums = partial_sums(o);
  const std::size_t m = sums.size();

  // First collision over s_1..s_m: walk j upward and remember the smallest
  // index at which each value appeared, so the first hit minimizes j and
  // the stored index minimizes i for that j.
  std::unordered_map<Element, std::size_t, ElementHash> first_index;
  first_index.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    auto [it, inserted] = first_index.try_emplace(sums[j - 1], j);
    if (!inserted) {
      report.valid = false;
      report.first_collision = std::make_pair(it->second, j);
      break;
    }
  }

  // Zero-sum proper blocks, phrased over the extended list s_0 = 0,
  // s_1..s_m: block (i, j] sums to zero iff s_i == s_j. The whole
  // ordering (0, m) is not a proper block.
  std::vector<Element> extended;
  extended.reserve(m + 1);
  extended.push_back(zero_element(o.spec));
  extended.insert(extended.end(), sums.begin(), sums.end());
  std::unordered_map<Element, std::vector<std::size_t>, ElementHash> positions;
  positions.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) positions[extended[i]].push_back(i);
  for (const auto& [value, idxs] : positions) {
    (void)value;
    for (std::size_t a = 0; a < idxs.size(); ++a) {
      for (std::size_t b = a + 1; b < idxs.size(); ++b) {
        if (idxs[a] == 0 && idxs[b] == m) continue;
        report.zero_blocks.emplace_back(idxs[a], idxs[b]);
      }
    }
  }
  std::sort(report.zero_blocks.begin(), report.zero_blocks.end());

  report.two_sided = is_valid(o) && is_valid(reversed(o));
  return report;
}

}  // namespace sumorder
