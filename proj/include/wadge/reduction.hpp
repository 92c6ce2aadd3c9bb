#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wadge/diff_hierarchy.hpp"
#include "wadge/error.hpp"
#include "wadge/poset.hpp"

namespace wadge {

/// Total map from a space to itself, given by image indices.
struct SelfMap {
  std::uint64_t space_id = 0;
  std::vector<Element> image;

  SelfMap() = default;
  SelfMap(const FinitePoset& space, std::vector<Element> img) : space_id(space.id()), image(std::move(img)) {
    if (image.size() != space.size()) throw Error("map must assign an image to every element");
    for (Element y : image) space.check_element(y);
  }

  static SelfMap identity(const FinitePoset& space) {
    std::vector<Element> img(space.size());
    for (Element i = 0; i < img.size(); ++i) img[i] = i;
    return {space, std::move(img)};
  }

  static SelfMap constant(const FinitePoset& space, Element y) {
    return {space, std::vector<Element>(space.size(), y)};
  }

  Element operator()(Element x) const { return image.at(x); }

  void check_space(const FinitePoset& space) const {
    if (space_id != space.id()) throw SpaceMismatch();
  }

  friend bool operator==(const SelfMap&, const SelfMap&) = default;
};

/// Continuity on a finite Alexandrov space is monotonicity; checking covers suffices.
inline bool is_monotone(const FinitePoset& space, const SelfMap& f) {
  f.check_space(space);
  for (auto [lo, hi] : space.covers()) {
    if (!space.leq(f(lo), f(hi))) return false;
  }
  return true;
}

/// A self-map known to preserve the order.
class MonotoneMap {
 public:
  static MonotoneMap checked(const FinitePoset& space, SelfMap f) {
    if (!is_monotone(space, f)) throw Error("map is not monotone");
    return MonotoneMap(std::move(f));
  }

  const SelfMap& map() const { return map_; }
  std::uint64_t space_id() const { return map_.space_id; }
  Element operator()(Element x) const { return map_(x); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  explicit MonotoneMap(SelfMap f) : map_(std::move(f)) {}
  SelfMap map_;
};

inline SubsetMask preimage(const FinitePoset& space, const SelfMap& f, const SubsetMask& b) {
  f.check_space(space);
  b.check_space(space);
  Bits out = 0;
  for (Element x = 0; x < space.size(); ++x) {
    if (b.contains(f(x))) out |= bits::single(x);
  }
  return {space, out};
}

/// Map from the space to {0, ..., k-1}.
class KPartition {
 public:
  KPartition(const FinitePoset& space, std::size_t k, std::vector<std::size_t> color)
      : space_id_(space.id()), k_(k), color_(std::move(color)) {
    if (color_.size() != space.size()) throw Error("partition must color every element");
    for (std::size_t c : color_) {
      if (c >= k_) throw Error("color " + std::to_string(c) + " out of range for k = " + std::to_string(k_));
    }
  }

  static KPartition constant(const FinitePoset& space, std::size_t k, std::size_t c) {
    return {space, k, std::vector<std::size_t>(space.size(), c)};
  }

  /// Characteristic 2-partition: 1 on members, 0 elsewhere.
  static KPartition characteristic(const FinitePoset& space, const SubsetMask& a) {
    a.check_space(space);
    std::vector<std::size_t> color(space.size(), 0);
    for (Element x : a.elements()) color[x] = 1;
    return {space, 2, std::move(color)};
  }

  std::uint64_t space_id() const { return space_id_; }
  std::size_t k() const { return k_; }
  std::size_t operator()(Element x) const { return color_.at(x); }
  const std::vector<std::size_t>& colors() const { return color_; }

  void check_space(const FinitePoset& space) const {
    if (space_id_ != space.id()) throw SpaceMismatch();
  }

  friend bool operator==(const KPartition&, const KPartition&) = default;

 private:
  std::uint64_t space_id_;
  std::size_t k_;
  std::vector<std::size_t> color_;
};

enum class ReducibilityKind {
  Wadge,         ///< continuous (monotone) self-maps
  AllFunctions,  ///< arbitrary self-maps
};

namespace detail {

// Longest chains along which the color changes at every step, starting
// (upward) or ending (downward) at each element. A monotone reduction maps
// such chains to such chains, so neither length can drop under f.
struct ChangeLengths {
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
};

inline ChangeLengths change_lengths(const FinitePoset& space, std::span<const std::size_t> color) {
  const std::size_t n = space.size();
  ChangeLengths out{std::vector<std::size_t>(n, 1), std::vector<std::size_t>(n, 1)};
  const auto& order = space.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    bits::for_each(space.up(*it) & ~bits::single(*it), [&](Element y) {
      if (color[y] != color[*it]) out.up[*it] = std::max(out.up[*it], out.up[y] + 1);
    });
  }
  for (Element x : order) {
    bits::for_each(space.down(x) & ~bits::single(x), [&](Element y) {
      if (color[y] != color[x]) out.down[x] = std::max(out.down[x], out.down[y] + 1);
    });
  }
  return out;
}

/// Monotone f with target[f(x)] == source[x] for every x, found by
/// backtracking along the linear extension with candidates in index order.
inline std::optional<std::vector<Element>> find_monotone_reduction(const FinitePoset& space,
                                                                   std::span<const std::size_t> source,
                                                                   std::span<const std::size_t> target) {
  const std::size_t n = space.size();
  if (n == 0) return std::vector<Element>{};
  const auto ls = change_lengths(space, source);
  const auto lt = change_lengths(space, target);
  std::vector<Bits> domain(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (target[y] == source[x] && lt.up[y] >= ls.up[x] && lt.down[y] >= ls.down[x]) {
        domain[x] |= bits::single(y);
      }
    }
    if (domain[x] == 0) return std::nullopt;
  }
  const auto& order = space.linear_extension();
  std::vector<Element> image(n, 0);
  Bits assigned = 0;
  auto allowed = [&](Element x) {
    Bits a = domain[x];
    bits::for_each(space.lower_covers(x) & assigned, [&](Element p) { a &= space.up(image[p]); });
    return a;
  };
  auto extend = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    const Element x = order[pos];
    Bits candidates = allowed(x);
    while (candidates != 0) {
      const auto y = static_cast<Element>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      image[x] = y;
      assigned |= bits::single(x);
      bool viable = true;
      bits::for_each(space.upper_covers(x), [&](Element s) { viable = viable && allowed(s) != 0; });
      if (viable && self(self, pos + 1)) return true;
      assigned &= ~bits::single(x);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

inline std::vector<std::size_t> membership(const SubsetMask& a) {
  std::vector<std::size_t> out(a.universe_size(), 0);
  for (Element x : a.elements()) out[x] = 1;
  return out;
}

}  // namespace detail

/// Witness f with A = f^-1(B), or nothing if no map of the given kind works.
inline std::optional<SelfMap> wadge_reduces(const FinitePoset& space, const SubsetMask& a, const SubsetMask& b,
                                            ReducibilityKind kind = ReducibilityKind::Wadge) {
  a.check_space(space);
  b.check_space(space);
  if (kind == ReducibilityKind::AllFunctions) {
    if ((!a.empty() && b.empty()) || (!a.is_full() && b.is_full())) return std::nullopt;
    const auto in_b = b.elements();
    const auto out_b = b.complement().elements();
    std::vector<Element> image(space.size());
    for (Element x = 0; x < space.size(); ++x) image[x] = a.contains(x) ? in_b.front() : out_b.front();
    return SelfMap(space, std::move(image));
  }
  // Difference-hierarchy levels are closed under continuous preimages.
  if (!level_leq(classify(space, a), classify(space, b))) return std::nullopt;
  const auto source = detail::membership(a);
  const auto target = detail::membership(b);
  auto image = detail::find_monotone_reduction(space, source, target);
  if (!image) return std::nullopt;
  return SelfMap(space, std::move(*image));
}

inline bool wadge_leq(const FinitePoset& space, const SubsetMask& a, const SubsetMask& b,
                      ReducibilityKind kind = ReducibilityKind::Wadge) {
  return wadge_reduces(space, a, b, kind).has_value();
}

/// Monotone f with mu = nu o f.
inline std::optional<MonotoneMap> partition_reduces(const FinitePoset& space, const KPartition& mu,
                                                    const KPartition& nu) {
  mu.check_space(space);
  nu.check_space(space);
  if (mu.k() != nu.k()) {
    throw ColorCountMismatch("partitions have " + std::to_string(mu.k()) + " and " + std::to_string(nu.k()) +
                             " colors");
  }
  auto image = detail::find_monotone_reduction(space, mu.colors(), nu.colors());
  if (!image) return std::nullopt;
  return MonotoneMap::checked(space, SelfMap(space, std::move(*image)));
}

/// Reducibility between arbitrary k-partitions under the chosen kind.
inline bool partition_leq(const FinitePoset& space, const KPartition& mu, const KPartition& nu,
                          ReducibilityKind kind = ReducibilityKind::Wadge) {
  if (kind == ReducibilityKind::Wadge) return partition_reduces(space, mu, nu).has_value();
  mu.check_space(space);
  nu.check_space(space);
  if (mu.k() != nu.k()) throw ColorCountMismatch("partitions have different color counts");
  std::vector<bool> available(nu.k(), false);
  for (std::size_t c : nu.colors()) available[c] = true;
  return std::all_of(mu.colors().begin(), mu.colors().end(), [&](std::size_t c) { return available[c]; });
}

/// r is monotone, lands in Y, and fixes Y pointwise.
inline bool is_retraction(const FinitePoset& space, const SubsetMask& y, const SelfMap& r) {
  y.check_space(space);
  r.check_space(space);
  if (!is_monotone(space, r)) return false;
  for (Element x = 0; x < space.size(); ++x) {
    if (!y.contains(r(x))) return false;
    if (y.contains(x) && r(x) != x) return false;
  }
  return true;
}

struct EmbeddingCounterexample {
  SubsetMask source;  ///< subset of Y
  SubsetMask target;  ///< subset of Y
  bool reducible_in_subspace = false;
  bool reducible_after_pullback = false;
};

struct EmbeddingReport {
  std::size_t pairs_checked = 0;
  std::vector<EmbeddingCounterexample> counterexamples;

  bool exact() const { return counterexamples.empty(); }
};

/// Checks that S -> r^-1(S) preserves and reflects Wadge reducibility between
/// the sampled subsets of Y (reducibility in Y uses self-maps of the subspace).
inline EmbeddingReport degree_embedding_check(const FinitePoset& space, const SubsetMask& y, const SelfMap& r,
                                              const std::vector<SubsetMask>& sample) {
  if (!is_retraction(space, y, r)) throw Error("map is not a retraction onto the given subspace");
  const FinitePoset sub = subspace(space, y);
  const auto members = y.elements();
  auto restrict = [&](const SubsetMask& s) {
    s.check_space(space);
    if (!s.subset_of(y)) throw Error("sampled set is not contained in the retract");
    Bits out = 0;
    for (Element i = 0; i < members.size(); ++i) {
      if (s.contains(members[i])) out |= bits::single(i);
    }
    return SubsetMask(sub, out);
  };
  std::vector<SubsetMask> local;
  std::vector<SubsetMask> pulled;
  for (const auto& s : sample) {
    local.push_back(restrict(s));
    pulled.push_back(preimage(space, r, s));
  }
  EmbeddingReport report;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      ++report.pairs_checked;
      const bool in_sub = wadge_leq(sub, local[i], local[j]);
      const bool in_space = wadge_leq(space, pulled[i], pulled[j]);
      if (in_sub != in_space) report.counterexamples.push_back({sample[i], sample[j], in_sub, in_space});
    }
  }
  return report;
}

}  // namespace wadge
