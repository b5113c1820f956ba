#include "sumorder/integers.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sumorder/errors.hpp"

namespace sumorder {
namespace {

void check_magnitude(std::int64_t v) {
  if (v < -kMaxFreeMagnitude || v > kMaxFreeMagnitude) {
    throw input_error("integer " + std::to_string(v) +
                      " exceeds the ingestion magnitude bound");
  }
}

// One side of the pair recursion: a sorted pool of positive integers, the
// index of its smallest remaining member, the members removed so far in
// removal order, and the sum of what remains.
struct Side {
  std::vector<std::int64_t> pool;
  std::size_t head = 0;
  std::vector<std::int64_t> removed;
  std::int64_t sum = 0;

  explicit Side(std::vector<std::int64_t> elems) : pool(std::move(elems)) {
    std::sort(pool.begin(), pool.end());
    for (std::int64_t v : pool) sum += v;
  }

  std::size_t active() const { return pool.size() - head; }

  void remove_at(std::size_t idx) {
    sum -= pool[idx];
    removed.push_back(pool[idx]);
    if (idx == head) {
      ++head;
    } else {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
  }

  // The removal step peels elements off the front of the eventual ordering's
  // tail: what is removed first ends up last, after everything the deeper
  // levels placed. Hence sorted remainder first, removals reversed after.
  std::vector<std::int64_t> final_order() const {
    std::vector<std::int64_t> order(
        pool.begin() + static_cast<std::ptrdiff_t>(head), pool.end());
    order.insert(order.end(), removed.rbegin(), removed.rend());
    return order;
  }
};

void check_pair_input(const std::vector<std::int64_t>& elems,
                      const char* label) {
  if (elems.size() > kMaxSetSize) {
    throw input_error(std::string(label) + " side exceeds the set size cap");
  }
  std::unordered_set<std::int64_t> seen;
  seen.reserve(elems.size());
  for (std::int64_t v : elems) {
    if (v <= 0) {
      throw input_error(std::string(label) +
                        " side must contain positive integers only");
    }
    check_magnitude(v);
    if (!seen.insert(v).second) {
      throw input_error(std::string(label) + " side repeats " +
                        std::to_string(v));
    }
  }
}

}  // namespace

SignSplit sign_split(std::span<const std::int64_t> elems) {
  SignSplit split;
  for (std::int64_t v : elems) {
    if (v == 0) {
      throw input_error("cannot sign-split a set containing zero");
    }
    check_magnitude(v);
    if (v > 0) {
      split.positives.push_back(v);
    } else {
      split.negated_negatives.push_back(-v);
    }
  }
  std::sort(split.positives.begin(), split.positives.end());
  std::sort(split.negated_negatives.begin(), split.negated_negatives.end());
  return split;
}

PairOrdering pair_sequence(std::vector<std::int64_t> p,
                           std::vector<std::int64_t> n) {
  check_pair_input(p, "P");
  check_pair_input(n, "N");

  Side p_side(std::move(p));
  Side n_side(std::move(n));

  // Role pointers float between the two sides: "major" is the side whose
  // remaining sum is at least the other's. A tie keeps the current roles.
  Side* major = &p_side;
  Side* minor = &n_side;
  while (true) {
    if (major->sum < minor->sum) std::swap(major, minor);
    if (major->active() <= 1) break;
    // Peel the smallest remaining major element whose removal keeps the
    // side sums different. Only the element equal to the sum difference is
    // disqualified, and there is at most one of those.
    const std::int64_t forbidden = major->sum - minor->sum;
    const std::size_t idx =
        major->pool[major->head] == forbidden ? major->head + 1 : major->head;
    major->remove_at(idx);
  }

  return PairOrdering{p_side.final_order(), n_side.final_order()};
}

bool prefix_disjoint(const PairOrdering& po) {
  std::unordered_map<std::int64_t, std::size_t> q_index;
  q_index.reserve(po.p_order.size() + 1);
  std::int64_t q = 0;
  q_index.emplace(0, 0);
  for (std::size_t i = 0; i < po.p_order.size(); ++i) {
    q += po.p_order[i];
    q_index.emplace(q, i + 1);
  }
  std::int64_t w = 0;
  for (std::size_t j = 0; j <= po.n_order.size(); ++j) {
    if (j > 0) w += po.n_order[j - 1];
    auto it = q_index.find(w);
    if (it == q_index.end()) continue;
    const std::size_t i = it->second;
    const bool exempt =
        (i == 0 && j == 0) ||
        (i == po.p_order.size() && j == po.n_order.size());
    if (!exempt) return false;
  }
  return true;
}

Ordering sequence_integers(std::span<const std::int64_t> elems) {
  if (elems.size() > kMaxSetSize) {
    throw input_error("set exceeds the size cap");
  }
  std::unordered_set<std::int64_t> seen;
  seen.reserve(elems.size());
  for (std::int64_t v : elems) {
    if (v == 0) throw input_error("set contains the zero element");
    check_magnitude(v);
    if (!seen.insert(v).second) {
      throw input_error("set repeats " + std::to_string(v));
    }
  }

  SignSplit split = sign_split(elems);
  PairOrdering po =
      pair_sequence(std::move(split.positives), std::move(split.negated_negatives));

  Ordering o{GroupSpec::integers(), {}};
  o.elems.reserve(elems.size());
  for (auto it = po.p_order.rbegin(); it != po.p_order.rend(); ++it) {
    o.elems.push_back(Element(std::vector<std::int64_t>{*it}));
  }
  for (std::int64_t v : po.n_order) {
    o.elems.push_back(Element(std::vector<std::int64_t>{-v}));
  }
  if (!is_valid(o)) {
    throw internal_error("integer construction produced an invalid ordering");
  }
  return o;
}

}  // namespace sumorder
