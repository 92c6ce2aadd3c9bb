#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wadge/error.hpp"
#include "wadge/poset.hpp"
#include "wadge/topology.hpp"

namespace wadge {

enum class LevelKind { ProperSigma, ProperPi, ProperDelta };

/// Exact position of a set in the finite difference hierarchy over the opens.
///
/// sigma_rank is the least n with A in Sigma^-1_n, pi_rank the least n with A
/// in Pi^-1_n. The two differ by at most one; the smaller one names the label,
/// and equal ranks give a proper Delta level.
struct DiffLevel {
  std::size_t sigma_rank = 0;
  std::size_t pi_rank = 0;

  static DiffLevel from_ranks(std::size_t sigma, std::size_t pi) { return {sigma, pi}; }

  LevelKind kind() const {
    if (sigma_rank < pi_rank) return LevelKind::ProperSigma;
    if (pi_rank < sigma_rank) return LevelKind::ProperPi;
    return LevelKind::ProperDelta;
  }

  std::size_t level() const { return std::min(sigma_rank, pi_rank); }

  /// "ProperSigma(2)" and friends.
  std::string label() const {
    const char* name = kind() == LevelKind::ProperSigma ? "ProperSigma"
                       : kind() == LevelKind::ProperPi  ? "ProperPi"
                                                        : "ProperDelta";
    return std::string(name) + "(" + std::to_string(level()) + ")";
  }

  DiffLevel dual() const { return {pi_rank, sigma_rank}; }

  friend bool operator==(const DiffLevel&, const DiffLevel&) = default;
};

/// Pointclass order: a <= b iff every Sigma/Pi class containing b contains a.
/// Continuous preimages never climb in this order.
inline bool level_leq(const DiffLevel& a, const DiffLevel& b) {
  return a.sigma_rank <= b.sigma_rank && a.pi_rank <= b.pi_rank;
}

/// Strictly increasing points whose membership in the target set alternates.
struct AlternatingChain {
  std::vector<Element> points;
  bool starts_in = false;

  std::size_t length() const { return points.size(); }
};

/// D_n of an increasing sequence of opens: the union of the blocks
/// A_b \ A_{b-1} whose index b has parity different from n.
inline SubsetMask d_n(const FinitePoset& space, const std::vector<SubsetMask>& opens, std::size_t n) {
  if (opens.size() != n) {
    throw Error("d_n expects " + std::to_string(n) + " sets, got " + std::to_string(opens.size()));
  }
  Bits previous = 0;
  Bits out = 0;
  for (std::size_t b = 0; b < n; ++b) {
    opens[b].check_space(space);
    if (!is_open(space, opens[b])) throw NotOpen("set " + std::to_string(b) + " of the sequence is not open");
    if ((previous & ~opens[b].bits()) != 0) {
      throw NotIncreasing("set " + std::to_string(b) + " does not contain its predecessor");
    }
    if ((n - b) % 2 == 1) out |= opens[b].bits() & ~previous;
    previous = opens[b].bits();
  }
  return {space, out};
}

/// A maximum-length alternating chain whose first point lies in `a` iff
/// `starts_in`. Empty when no point qualifies.
inline AlternatingChain longest_alternating_chain(const FinitePoset& space, const SubsetMask& a,
                                                  bool starts_in) {
  a.check_space(space);
  const std::size_t n = space.size();
  // best[x]: longest alternating chain starting at x; next[x]: its second point.
  std::vector<std::size_t> best(n, 1);
  std::vector<std::optional<Element>> next(n);
  const auto& order = space.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element x = *it;
    const Bits flip = a.contains(x) ? ~a.bits() : a.bits();
    bits::for_each(space.up(x) & ~bits::single(x) & flip, [&](Element y) {
      if (best[y] + 1 > best[x]) {
        best[x] = best[y] + 1;
        next[x] = y;
      }
    });
  }
  AlternatingChain chain;
  chain.starts_in = starts_in;
  std::optional<Element> start;
  const Bits candidates = starts_in ? a.bits() : (~a.bits() & space.all());
  bits::for_each(candidates, [&](Element x) {
    if (!start || best[x] > best[*start]) start = x;
  });
  for (auto cur = start; cur; cur = next[*cur]) chain.points.push_back(*cur);
  return chain;
}

/// Level of `a` read off its longest 1-alternating and 0-alternating chains.
inline DiffLevel classify(const FinitePoset& space, const SubsetMask& a) {
  return DiffLevel::from_ranks(longest_alternating_chain(space, a, true).length(),
                               longest_alternating_chain(space, a, false).length());
}

struct OracleOptions {
  std::size_t max_elements = 8;
};

/// Searches increasing open sequences A_0 <= ... <= A_{n-1} with D_n = a.
/// `opens` must be the full open-set list of the space.
inline std::optional<std::vector<SubsetMask>> oracle_sigma_witness(const FinitePoset& space,
                                                                   const SubsetMask& a, std::size_t n,
                                                                   const std::vector<SubsetMask>& opens) {
  a.check_space(space);
  if (n == 0) {
    if (a.empty()) return std::vector<SubsetMask>{};
    return std::nullopt;
  }
  const Bits inside = a.bits();
  const Bits outside = ~inside & space.all();
  std::vector<SubsetMask> seq;
  std::set<std::pair<std::size_t, Bits>> dead;
  // The block added at step b lands in D_n exactly when n - b is odd, so it
  // has to stay inside `a` or inside the complement accordingly.
  auto extend = [&](auto&& self, std::size_t b, Bits previous) -> bool {
    if (b == n) return (inside & ~previous) == 0;
    if (dead.count({b, previous}) != 0) return false;
    const Bits allowed = (n - b) % 2 == 1 ? inside : outside;
    for (const auto& open : opens) {
      const Bits block = open.bits() & ~previous;
      if ((previous & ~open.bits()) != 0 || (block & ~allowed) != 0) continue;
      seq.push_back(open);
      if (self(self, b + 1, open.bits())) return true;
      seq.pop_back();
    }
    dead.emplace(b, previous);
    return false;
  };
  if (!extend(extend, 0, 0)) return std::nullopt;
  if (d_n(space, seq, n) != a) throw Error("internal: oracle witness does not evaluate to the target set");
  return seq;
}

/// Definitional brute force: least n <= n_max with the set (resp. its
/// complement) of the form D_n over an increasing open sequence.
inline DiffLevel oracle_level(const FinitePoset& space, const SubsetMask& a, std::size_t n_max,
                              OracleOptions options = {}) {
  a.check_space(space);
  if (space.size() > options.max_elements) {
    throw CapExceeded("difference-hierarchy oracle refuses " + std::to_string(space.size()) +
                      " elements (cap " + std::to_string(options.max_elements) + ")");
  }
  const auto opens = enumerate_opens(space, {.max_elements = options.max_elements});
  auto least = [&](const SubsetMask& target) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (oracle_sigma_witness(space, target, n, opens)) return n;
    }
    throw CapExceeded("set lies above level " + std::to_string(n_max) + " of the difference hierarchy");
  };
  return DiffLevel::from_ranks(least(a), least(a.complement()));
}

}  // namespace wadge
