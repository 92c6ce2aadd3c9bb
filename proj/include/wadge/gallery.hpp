#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wadge/poset.hpp"

namespace wadge::gallery {

/// Linear order 0 < 1 < ... < n-1; n = 0 is the empty poset.
inline FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return build_poset(std::move(labels), covers);
}

/// n pairwise incomparable points.
inline FinitePoset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return build_poset(std::move(labels), std::vector<std::pair<Element, Element>>{});
}

namespace detail {

// Keeps labels when the two sides are disjoint, otherwise qualifies them.
inline std::pair<std::vector<std::string>, std::vector<std::string>> side_labels(const FinitePoset& p,
                                                                                 const FinitePoset& q) {
  std::unordered_set<std::string> left(p.labels().begin(), p.labels().end());
  bool clash = false;
  for (const auto& l : q.labels()) clash = clash || left.count(l) != 0;
  if (!clash) return {p.labels(), q.labels()};
  std::vector<std::string> lp, lq;
  for (const auto& l : p.labels()) lp.push_back("l." + l);
  for (const auto& l : q.labels()) lq.push_back("r." + l);
  return {lp, lq};
}

}  // namespace detail

/// P + Q: both orders kept, every element of P below every element of Q.
inline FinitePoset linear_sum(const FinitePoset& p, const FinitePoset& q) {
  auto [lp, lq] = detail::side_labels(p, q);
  std::vector<std::string> labels = lp;
  labels.insert(labels.end(), lq.begin(), lq.end());
  const std::size_t np = p.size();
  const Bits top_block = bits::full(np + q.size()) & ~bits::full(np);
  std::vector<Bits> up;
  for (Element i = 0; i < np; ++i) up.push_back(p.up(i) | top_block);
  for (Element j = 0; j < q.size(); ++j) up.push_back(q.up(j) << np);
  return FinitePoset::from_up_sets(std::move(labels), std::move(up));
}

/// P . Q: (p0,q0) < (p1,q1) iff q0 < q1, or q0 = q1 and p0 < p1.
/// Element (p, q) sits at index q * |P| + p and is labeled "p:q".
inline FinitePoset lex_product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t np = p.size();
  std::vector<std::string> labels;
  std::vector<Bits> up;
  for (Element qi = 0; qi < q.size(); ++qi) {
    for (Element pi = 0; pi < np; ++pi) labels.push_back(p.label(pi) + ":" + q.label(qi));
  }
  for (Element qi = 0; qi < q.size(); ++qi) {
    for (Element pi = 0; pi < np; ++pi) {
      Bits u = 0;
      for (Element qj = 0; qj < q.size(); ++qj) {
        for (Element pj = 0; pj < np; ++pj) {
          if (q.less(qi, qj) || (qi == qj && p.leq(pi, pj))) u |= bits::single(qj * np + pj);
        }
      }
      up.push_back(u);
    }
  }
  return FinitePoset::from_up_sets(std::move(labels), std::move(up));
}

/// Finite prefix (2 . L_k) + 4 of the quotient shape pairs-then-four-on-top.
inline FinitePoset expected_structure(std::size_t k) {
  return linear_sum(lex_product(antichain(2), chain(k)), antichain(4));
}

/// The first N naturals under the reversed order: 0 is the top, so it is the
/// only isolated point.
inline FinitePoset truncated_c_infinity(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i, i - 1);
  }
  return build_poset(std::move(labels), covers);
}

/// Truncated fan: chains C_0..C_N with C_n = {c^n_n < ... < c^n_0}, all
/// placed between a common bottom and top. The nested opens D_i and the sets
/// A, B are evaluated over the chains that exist in the truncation only, so
/// these are fixtures rather than witnesses of infinite behaviour.
struct Fan {
  std::size_t depth = 0;
  FinitePoset space;
  Element bottom = 0;
  Element top = 0;
  std::vector<SubsetMask> d;
  SubsetMask a;
  SubsetMask b;

  /// Index of c^n_k, for k <= n <= depth.
  Element element(std::size_t n, std::size_t k) const { return space.find("c" + std::to_string(n) + "_" + std::to_string(k)); }

  /// "D0".."DN", "A", "B".
  std::map<std::string, SubsetMask> named_sets() const {
    std::map<std::string, SubsetMask> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.emplace("D" + std::to_string(i), d[i]);
    out.emplace("A", a);
    out.emplace("B", b);
    return out;
  }
};

inline Fan fan(std::size_t depth) {
  std::vector<std::string> labels{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t k = n + 1; k-- > 0;) labels.push_back("c" + std::to_string(n) + "_" + std::to_string(k));
  }
  labels.emplace_back("top");
  for (std::size_t n = 0; n <= depth; ++n) {
    const auto name = [n](std::size_t k) { return "c" + std::to_string(n) + "_" + std::to_string(k); };
    covers.emplace_back("bot", name(n));
    for (std::size_t k = n; k > 0; --k) covers.emplace_back(name(k), name(k - 1));
    covers.emplace_back(name(0), "top");
  }
  Fan f;
  f.depth = depth;
  f.space = build_poset(std::move(labels), covers);
  f.bottom = f.space.find("bot");
  f.top = f.space.find("top");
  // D_i adds the up-closure of c^n_i over every chain long enough to hold it.
  Bits current = 0;
  for (std::size_t i = 0; i <= depth; ++i) {
    Bits seeds = 0;
    for (std::size_t n = i; n <= depth; ++n) seeds |= bits::single(f.element(n, i));
    current |= f.space.up_closure(seeds);
    f.d.emplace_back(f.space, current);
  }
  Bits a = f.d[0].bits();
  for (std::size_t k = 0; 2 * k + 2 <= depth; ++k) a |= f.d[2 * k + 2].bits() & ~f.d[2 * k + 1].bits();
  f.a = SubsetMask(f.space, a);
  f.b = SubsetMask(f.space, a & ~bits::single(f.top));
  return f;
}

}  // namespace wadge::gallery
