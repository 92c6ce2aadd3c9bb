#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wadge/error.hpp"
#include "wadge/poset.hpp"
#include "wadge/topology.hpp"

namespace wadge {

/// Largest poset size the canonical form handles (the order matrix must fit a word).
inline constexpr std::size_t kMaxCanonicalElements = 8;

namespace detail {

// Iterated refinement: start from (|up|, |down|) and repeatedly split by the
// multisets of colors strictly above and strictly below.
inline std::vector<std::size_t> refined_colors(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> color(n, 0);
  {
    std::vector<std::pair<std::size_t, std::size_t>> sig(n);
    for (Element i = 0; i < n; ++i) sig[i] = {bits::count(p.up(i)), bits::count(p.down(i))};
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Element i = 0; i < n; ++i) {
      color[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
  }
  for (;;) {
    using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<Sig> sig(n);
    for (Element i = 0; i < n; ++i) {
      std::vector<std::size_t> above, below;
      bits::for_each(p.up(i) & ~bits::single(i), [&](Element j) { above.push_back(color[j]); });
      bits::for_each(p.down(i) & ~bits::single(i), [&](Element j) { below.push_back(color[j]); });
      std::sort(above.begin(), above.end());
      std::sort(below.begin(), below.end());
      sig[i] = {color[i], std::move(above), std::move(below)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (Element i = 0; i < n; ++i) {
      next[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) return color;
  }
}

}  // namespace detail

/// Isomorphism-invariant key: the order matrix, read row by row, minimized
/// over all orderings that list elements by refined color.
inline std::uint64_t canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > kMaxCanonicalElements) {
    throw CapExceeded("canonical form supports at most " + std::to_string(kMaxCanonicalElements) + " elements");
  }
  const auto color = detail::refined_colors(p);
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return std::pair{color[a], a} < std::pair{color[b], b}; });
  // Permute within each color block independently.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e < n && color[order[e]] == color[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) code = (code << 1) | (p.leq(order[r], order[c]) ? 1U : 0U);
    }
    return code;
  };
  auto permute = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      best = std::min(best, encode());
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].second);
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return best;
}

/// One representative per isomorphism type, for each size 0..max_size.
/// Size n+1 arises from size n by adding a new maximal element above a down-set.
inline std::vector<std::vector<FinitePoset>> posets_up_to_isomorphism(std::size_t max_size) {
  if (max_size > kMaxCanonicalElements) {
    throw CapExceeded("poset enumeration supports at most " + std::to_string(kMaxCanonicalElements) + " elements");
  }
  std::vector<std::vector<FinitePoset>> out;
  out.push_back({FinitePoset{}});
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<FinitePoset> level;
    std::set<std::uint64_t> seen;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (const auto& base : out.back()) {
      for (const auto& open : enumerate_opens(base, {.max_elements = kMaxCanonicalElements})) {
        const Bits below = base.all() & ~open.bits();
        std::vector<Bits> up(n, 0);
        for (Element i = 0; i + 1 < n; ++i) {
          up[i] = base.up(i) | (bits::test(below, i) ? bits::single(n - 1) : 0);
        }
        up[n - 1] = bits::single(n - 1);
        auto candidate = FinitePoset::from_up_sets(labels, std::move(up));
        if (seen.insert(canonical_form(candidate)).second) level.push_back(std::move(candidate));
      }
    }
    out.push_back(std::move(level));
  }
  return out;
}

/// Unlabeled poset counts for 0..8 elements, used as an enumeration self-test.
inline constexpr std::size_t kKnownPosetCounts[] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999};

}  // namespace wadge
