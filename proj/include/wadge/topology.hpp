#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "wadge/error.hpp"
#include "wadge/poset.hpp"

namespace wadge {

// Open sets are the up-sets; closed sets are the down-sets.

/// Minimal open neighbourhood of x.
inline SubsetMask up_set(const FinitePoset& space, Element x) {
  space.check_element(x);
  return {space, space.up(x)};
}

inline bool is_open(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  return space.up_closure(a.bits()) == a.bits();
}

inline bool is_closed(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  return space.down_closure(a.bits()) == a.bits();
}

inline SubsetMask closure(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  return {space, space.down_closure(a.bits())};
}

/// Largest up-set contained in `a`.
inline SubsetMask interior(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  Bits out = 0;
  bits::for_each(a.bits(), [&](Element i) {
    if ((space.up(i) & ~a.bits()) == 0) out |= bits::single(i);
  });
  return {space, out};
}

/// cl(A) minus int(A); for open A this is cl(A) minus A.
inline SubsetMask boundary(const FinitePoset& space, const SubsetMask& a) {
  return closure(space, a) - interior(space, a);
}

struct OpenEnumerationOptions {
  std::size_t max_elements = 16;
};

/// Every up-set exactly once, ordered by cardinality and then by the sorted
/// index list. Refuses spaces above the cap since the count is exponential.
inline std::vector<SubsetMask> enumerate_opens(const FinitePoset& space,
                                               OpenEnumerationOptions options = {}) {
  if (space.size() > options.max_elements) {
    throw CapExceeded("open-set enumeration refuses " + std::to_string(space.size()) +
                      " elements (cap " + std::to_string(options.max_elements) + ")");
  }
  const auto& order = space.linear_extension();
  std::vector<Bits> found;
  // Walk elements top-down; x may join only once everything strictly above it has.
  auto walk = [&](auto&& self, std::size_t pos, Bits current) -> void {
    if (pos == 0) {
      found.push_back(current);
      return;
    }
    const Element x = order[pos - 1];
    self(self, pos - 1, current);
    const Bits above = space.up(x) & ~bits::single(x);
    if ((above & ~current) == 0) self(self, pos - 1, current | bits::single(x));
  };
  walk(walk, order.size(), 0);
  std::sort(found.begin(), found.end(), [](Bits a, Bits b) {
    if (bits::count(a) != bits::count(b)) return bits::count(a) < bits::count(b);
    // Lexicographic on the ascending index lists: the first differing index
    // decides, and the set holding the smaller index comes first.
    const Bits diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  });
  std::vector<SubsetMask> out;
  out.reserve(found.size());
  for (Bits b : found) out.emplace_back(space, b);
  return out;
}

struct DerivativeTrace {
  /// stages[0] is the whole space; each next stage drops the isolated points.
  std::vector<SubsetMask> stages;
  /// rk(x) = sup{rk(y) + 1 : x < y}; maximal elements have rank 0.
  std::vector<std::size_t> rank_of;

  /// Number of strictly decreasing steps until the empty stage.
  std::size_t scattered_rank() const { return stages.empty() ? 0 : stages.size() - 1; }
};

inline DerivativeTrace derivative_trace(const FinitePoset& space) {
  DerivativeTrace trace;
  Bits stage = space.all();
  trace.stages.emplace_back(space, stage);
  while (stage != 0) {
    // x is isolated in the stage iff it is maximal there.
    Bits next = 0;
    bits::for_each(stage, [&](Element i) {
      if ((space.up(i) & stage) != bits::single(i)) next |= bits::single(i);
    });
    stage = next;
    trace.stages.emplace_back(space, stage);
  }
  trace.rank_of.assign(space.size(), 0);
  const auto& order = space.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t rk = 0;
    bits::for_each(space.up(*it) & ~bits::single(*it),
                   [&](Element y) { rk = std::max(rk, trace.rank_of[y] + 1); });
    trace.rank_of[*it] = rk;
  }
  return trace;
}

namespace detail {

// Small inductive dimension of the subspace on `members`, memoized by mask.
// In a finite Alexandrov space the only open V with x in V inside up(x) is
// up(x) itself, so dim <= a iff every boundary of a minimal neighbourhood has
// dim < a.
inline int subspace_dimension(const FinitePoset& space, Bits members,
                              std::unordered_map<Bits, int>& memo) {
  if (members == 0) return -1;
  if (auto it = memo.find(members); it != memo.end()) return it->second;
  int worst = -1;
  bits::for_each(members, [&](Element x) {
    const Bits nbhd = space.up(x) & members;
    const Bits cl = space.down_closure(nbhd) & members;
    worst = std::max(worst, subspace_dimension(space, cl & ~nbhd, memo));
  });
  memo.emplace(members, worst + 1);
  return worst + 1;
}

}  // namespace detail

/// Small inductive dimension; -1 for the empty space.
inline int dimension(const FinitePoset& space) {
  std::unordered_map<Bits, int> memo;
  return detail::subspace_dimension(space, space.all(), memo);
}

/// Dimension of `a` with the relative topology, without materializing the subspace.
inline int dimension(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  std::unordered_map<Bits, int> memo;
  return detail::subspace_dimension(space, a.bits(), memo);
}

}  // namespace wadge
