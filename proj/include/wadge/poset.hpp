#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wadge/error.hpp"

namespace wadge {

/// Bitmask over the elements of one space; bit i is element index i.
using Bits = std::uint64_t;
using Element = std::size_t;

/// Element count limit. Every exhaustive routine here is exponential long
/// before this, so masks stay a single machine word.
inline constexpr std::size_t kMaxElements = 64;

namespace bits {

constexpr Bits single(Element i) { return Bits{1} << i; }

constexpr Bits full(std::size_t n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

constexpr bool test(Bits b, Element i) { return (b >> i) & 1U; }

constexpr std::size_t count(Bits b) { return static_cast<std::size_t>(std::popcount(b)); }

/// Calls fn(i) for each set bit, lowest index first.
template <typename Fn>
constexpr void for_each(Bits b, Fn&& fn) {
  while (b != 0) {
    const auto i = static_cast<Element>(std::countr_zero(b));
    fn(i);
    b &= b - 1;
  }
}

inline std::vector<Element> to_indices(Bits b) {
  std::vector<Element> out;
  out.reserve(count(b));
  for_each(b, [&](Element i) { out.push_back(i); });
  return out;
}

}  // namespace bits

/// A finite partial order, read as a T0 space whose open sets are its up-sets.
///
/// Immutable after construction. Copies share the space id, so subsets built
/// over one copy are accepted by every other copy.
class FinitePoset {
 public:
  FinitePoset() : id_(next_id()) {}

  /// Builds the order whose up-sets are given explicitly: up[i] holds j iff i <= j.
  /// Validates reflexivity, antisymmetry and transitivity.
  static FinitePoset from_up_sets(std::vector<std::string> labels, std::vector<Bits> up) {
    const std::size_t n = labels.size();
    if (n > kMaxElements) {
      throw Error("posets are limited to " + std::to_string(kMaxElements) + " elements");
    }
    if (up.size() != n) throw Error("order matrix size does not match label count");
    check_labels(labels);
    for (Element i = 0; i < n; ++i) {
      if ((up[i] & ~bits::full(n)) != 0) throw Error("order matrix references missing elements");
      if (!bits::test(up[i], i)) throw Error("order is not reflexive at '" + labels[i] + "'");
    }
    for (Element i = 0; i < n; ++i) {
      bits::for_each(up[i], [&](Element j) {
        if (j != i && bits::test(up[j], i)) {
          throw CycleError("order is not antisymmetric: '" + labels[i] + "' and '" + labels[j] + "'");
        }
        if ((up[j] & ~up[i]) != 0) throw Error("order is not transitive at '" + labels[i] + "'");
      });
    }
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.finish();
    return p;
  }

  std::uint64_t id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  Bits all() const { return bits::full(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element i) const { return labels_.at(i); }

  std::optional<Element> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element find(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownElement("unknown element '" + std::string(name) + "'");
  }

  void check_element(Element i) const {
    if (i >= size()) throw UnknownElement("element index " + std::to_string(i) + " out of range");
  }

  bool leq(Element i, Element j) const { return bits::test(up_[i], j); }
  bool less(Element i, Element j) const { return i != j && leq(i, j); }
  bool comparable(Element i, Element j) const { return leq(i, j) || leq(j, i); }

  /// Principal up-set and down-set, both including the element itself.
  Bits up(Element i) const { return up_[i]; }
  Bits down(Element i) const { return down_[i]; }
  Bits upper_covers(Element i) const { return upper_covers_[i]; }
  Bits lower_covers(Element i) const { return lower_covers_[i]; }

  /// Up-closure and down-closure of an arbitrary mask.
  Bits up_closure(Bits a) const {
    Bits out = 0;
    bits::for_each(a, [&](Element i) { out |= up_[i]; });
    return out;
  }
  Bits down_closure(Bits a) const {
    Bits out = 0;
    bits::for_each(a, [&](Element i) { out |= down_[i]; });
    return out;
  }

  /// Cover pairs (lower, upper), sorted.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element i = 0; i < size(); ++i) {
      bits::for_each(upper_covers_[i], [&](Element j) { out.emplace_back(i, j); });
    }
    return out;
  }

  /// Topological order: i precedes j whenever i < j. Ties broken by smallest index.
  const std::vector<Element>& linear_extension() const { return linext_; }

  friend bool same_space(const FinitePoset& a, const FinitePoset& b) { return a.id_ == b.id_; }

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  static void check_labels(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, Element> seen;
    for (Element i = 0; i < labels.size(); ++i) {
      if (!seen.emplace(labels[i], i).second) {
        throw DuplicateLabelError("duplicate element label '" + labels[i] + "'");
      }
    }
  }

  void finish() {
    const std::size_t n = size();
    down_.assign(n, 0);
    for (Element i = 0; i < n; ++i) {
      bits::for_each(up_[i], [&](Element j) { down_[j] |= bits::single(i); });
    }
    upper_covers_.assign(n, 0);
    lower_covers_.assign(n, 0);
    for (Element i = 0; i < n; ++i) {
      const Bits strict = up_[i] & ~bits::single(i);
      Bits indirect = 0;
      bits::for_each(strict, [&](Element k) { indirect |= up_[k] & ~bits::single(k); });
      upper_covers_[i] = strict & ~indirect;
      bits::for_each(upper_covers_[i], [&](Element j) { lower_covers_[j] |= bits::single(i); });
    }
    linext_.clear();
    Bits placed = 0;
    while (linext_.size() < n) {
      for (Element i = 0; i < n; ++i) {
        if (!bits::test(placed, i) && (down_[i] & ~bits::single(i) & ~placed) == 0) {
          linext_.push_back(i);
          placed |= bits::single(i);
          break;
        }
      }
    }
    index_.clear();
    for (Element i = 0; i < n; ++i) index_.emplace(labels_[i], i);
  }

  std::uint64_t id_;
  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Bits> upper_covers_;
  std::vector<Bits> lower_covers_;
  std::vector<Element> linext_;
  std::unordered_map<std::string, Element> index_;
};

/// Membership vector over the elements of one FinitePoset.
class SubsetMask {
 public:
  SubsetMask() = default;
  SubsetMask(const FinitePoset& space, Bits members)
      : space_id_(space.id()), size_(space.size()), bits_(members & space.all()) {}

  static SubsetMask none(const FinitePoset& space) { return {space, 0}; }
  static SubsetMask whole(const FinitePoset& space) { return {space, space.all()}; }
  static SubsetMask of(const FinitePoset& space, std::initializer_list<std::string_view> names) {
    Bits b = 0;
    for (auto name : names) b |= bits::single(space.find(name));
    return {space, b};
  }

  std::uint64_t space_id() const { return space_id_; }
  std::size_t universe_size() const { return size_; }
  Bits bits() const { return bits_; }
  std::size_t count() const { return bits::count(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == bits::full(size_); }
  bool contains(Element i) const { return i < size_ && bits::test(bits_, i); }
  std::vector<Element> elements() const { return bits::to_indices(bits_); }

  SubsetMask complement() const {
    SubsetMask out = *this;
    out.bits_ = ~bits_ & bits::full(size_);
    return out;
  }

  /// 0/1 string in element-index order.
  std::string to_bitstring() const {
    std::string s(size_, '0');
    for (Element i = 0; i < size_; ++i) {
      if (contains(i)) s[i] = '1';
    }
    return s;
  }

  SubsetMask operator|(const SubsetMask& o) const { return with(o, bits_ | o.bits_); }
  SubsetMask operator&(const SubsetMask& o) const { return with(o, bits_ & o.bits_); }
  SubsetMask operator-(const SubsetMask& o) const { return with(o, bits_ & ~o.bits_); }
  bool subset_of(const SubsetMask& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.space_id_ == b.space_id_ && a.bits_ == b.bits_;
  }

  void check_space(const FinitePoset& space) const {
    if (space_id_ != space.id()) throw SpaceMismatch();
  }

 private:
  void check_same(const SubsetMask& o) const {
    if (space_id_ != o.space_id_) throw SpaceMismatch();
  }
  SubsetMask with(const SubsetMask& o, Bits b) const {
    check_same(o);
    SubsetMask out = *this;
    out.bits_ = b;
    return out;
  }

  std::uint64_t space_id_ = 0;
  std::size_t size_ = 0;
  Bits bits_ = 0;
};

/// Builds the poset whose order is the reflexive-transitive closure of `covers`.
/// Pairs need not be actual covers; redundant pairs are absorbed by the closure.
inline FinitePoset build_poset(std::vector<std::string> labels,
                               const std::vector<std::pair<Element, Element>>& covers) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw Error("posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
  std::vector<Bits> succ(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw UnknownElement("cover pair references a missing element");
    if (lo != hi) succ[lo] |= bits::single(hi);
  }
  // Kahn's algorithm over the cover graph; leftovers sit on a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (Element i = 0; i < n; ++i) bits::for_each(succ[i], [&](Element j) { ++indegree[j]; });
  std::vector<Element> order;
  std::vector<Element> ready;
  for (Element i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    const Element i = ready.back();
    ready.pop_back();
    order.push_back(i);
    bits::for_each(succ[i], [&](Element j) {
      if (--indegree[j] == 0) ready.push_back(j);
    });
  }
  if (order.size() != n) {
    std::string names;
    for (Element i = 0; i < n; ++i) {
      if (indegree[i] != 0) names += (names.empty() ? "'" : ", '") + labels[i] + "'";
    }
    throw CycleError("cover relation has a cycle through " + names);
  }
  std::vector<Bits> up(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it] = bits::single(*it);
    bits::for_each(succ[*it], [&](Element j) { up[*it] |= up[j]; });
  }
  return FinitePoset::from_up_sets(std::move(labels), std::move(up));
}

/// Name-based overload.
inline FinitePoset build_poset(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw DuplicateLabelError("duplicate element label '" + labels[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw UnknownElement("cover pair references unknown element '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) pairs.emplace_back(lookup(lo), lookup(hi));
  return build_poset(std::move(labels), pairs);
}

/// Induced order on the members of `a`, in index order.
inline FinitePoset subspace(const FinitePoset& space, const SubsetMask& a) {
  a.check_space(space);
  if (a.empty()) throw EmptySubspace();
  const auto members = a.elements();
  std::vector<std::string> labels;
  std::vector<Bits> up(members.size(), 0);
  for (Element i = 0; i < members.size(); ++i) {
    labels.push_back(space.label(members[i]));
    for (Element j = 0; j < members.size(); ++j) {
      if (space.leq(members[i], members[j])) up[i] |= bits::single(j);
    }
  }
  return FinitePoset::from_up_sets(std::move(labels), std::move(up));
}

/// Order isomorphism X -> Y as a vector indexed by X's elements, if one exists.
inline std::optional<std::vector<Element>> poset_isomorphic(const FinitePoset& x, const FinitePoset& y) {
  const std::size_t n = x.size();
  if (n != y.size()) return std::nullopt;
  auto signature = [](const FinitePoset& p, Element i) {
    return std::pair{bits::count(p.up(i)), bits::count(p.down(i))};
  };
  {
    std::vector<std::pair<std::size_t, std::size_t>> sx, sy;
    for (Element i = 0; i < n; ++i) {
      sx.push_back(signature(x, i));
      sy.push_back(signature(y, i));
    }
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  std::vector<Element> image(n, 0);
  Bits used = 0;
  auto extend = [&](auto&& self, Element i) -> bool {
    if (i == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (bits::test(used, c) || signature(x, i) != signature(y, c)) continue;
      bool ok = true;
      for (Element k = 0; k < i && ok; ++k) {
        ok = x.leq(k, i) == y.leq(image[k], c) && x.leq(i, k) == y.leq(c, image[k]);
      }
      if (!ok) continue;
      image[i] = c;
      used |= bits::single(c);
      if (self(self, i + 1)) return true;
      used &= ~bits::single(c);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

}  // namespace wadge
