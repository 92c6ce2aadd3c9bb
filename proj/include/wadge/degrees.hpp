#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wadge/error.hpp"
#include "wadge/poset.hpp"
#include "wadge/reduction.hpp"

namespace wadge {

struct DegreeDiagnostics {
  std::size_t max_antichain = 0;
  /// One class index per element of a maximum antichain.
  std::vector<std::size_t> antichain_witness;
  /// Ordered class pairs (A, B) with A not below B and co-B not below A.
  std::vector<std::pair<std::size_t, std::size_t>> slo_violations;
  /// False for partitions with more than two colors, where complements are undefined.
  bool slo_applicable = true;
  /// Finite quotients never have infinite descending chains; kept for report stability.
  bool has_infinite_descending = false;
};

/// Quotient of a family of items under a reducibility.
template <typename Item>
struct DegreeStructure {
  std::vector<Item> items;
  /// Degree of each item.
  std::vector<std::size_t> class_of;
  /// Item indices of each degree, in item order; the first is the representative.
  std::vector<std::vector<std::size_t>> classes;
  /// less[c][d]: degree c lies strictly below degree d.
  std::vector<std::vector<bool>> less;
  /// Cover pairs (lower, upper), sorted by the representatives' membership vectors.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  DegreeDiagnostics diagnostics;

  std::size_t class_count() const { return classes.size(); }
  const Item& representative(std::size_t c) const { return items[classes[c].front()]; }
  bool comparable(std::size_t c, std::size_t d) const { return c == d || less[c][d] || less[d][c]; }

  std::vector<std::size_t> minimal_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < class_count(); ++d) {
      bool minimal = true;
      for (std::size_t c = 0; c < class_count() && minimal; ++c) minimal = !less[c][d];
      if (minimal) out.push_back(d);
    }
    return out;
  }

  /// Degrees whose strict lower cone is exactly `below`.
  std::vector<std::size_t> classes_directly_above(const std::vector<std::size_t>& below) const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < class_count(); ++d) {
      std::vector<std::size_t> cone;
      for (std::size_t c = 0; c < class_count(); ++c) {
        if (less[c][d]) cone.push_back(c);
      }
      if (cone == below) out.push_back(d);
    }
    return out;
  }
};

/// Maximum antichain of a strict order given as a matrix. Dilworth: its size
/// is n minus a maximum matching of the split comparability graph, and the
/// antichain is read off Konig's vertex cover.
inline std::vector<std::size_t> maximum_antichain(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<std::optional<std::size_t>> match_left(n), match_right(n);
  auto augment = [&](auto&& self, std::size_t u, std::vector<bool>& seen) -> bool {
    for (std::size_t v = 0; v < n; ++v) {
      if (!less[u][v] || seen[v]) continue;
      seen[v] = true;
      if (!match_right[v] || self(self, *match_right[v], seen)) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    augment(augment, u, seen);
  }
  // Alternating reachability from unmatched left vertices.
  std::vector<bool> reach_left(n, false), reach_right(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u) {
    if (!match_left[u]) {
      reach_left[u] = true;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!less[u][v] || reach_right[v] || match_left[u] == v) continue;
      reach_right[v] = true;
      if (match_right[v] && !reach_left[*match_right[v]]) {
        reach_left[*match_right[v]] = true;
        stack.push_back(*match_right[v]);
      }
    }
  }
  // Cover = unreached left plus reached right; the rest is the antichain.
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (reach_left[x] && !reach_right[x]) out.push_back(x);
  }
  return out;
}

struct DegreeOptions {
  std::size_t max_elements = 6;
};

/// Every subset of the space, in increasing bit order.
inline std::vector<SubsetMask> all_subsets(const FinitePoset& space, DegreeOptions options = {}) {
  if (space.size() > options.max_elements) {
    throw CapExceeded("all-subsets degree structure refuses " + std::to_string(space.size()) +
                      " elements (cap " + std::to_string(options.max_elements) + ")");
  }
  std::vector<SubsetMask> out;
  const Bits limit = space.all();
  for (Bits b = 0;; ++b) {
    out.emplace_back(space, b);
    if (b == limit) break;
  }
  return out;
}

namespace detail {

inline std::vector<std::size_t> sort_key(const SubsetMask& a) { return membership(a); }
inline std::vector<std::size_t> sort_key(const KPartition& p) { return p.colors(); }

template <typename Item>
DegreeStructure<Item> build_degrees(std::vector<Item> items,
                                    const std::function<bool(const Item&, const Item&)>& leq,
                                    const std::function<std::optional<Item>(const Item&)>& complement) {
  DegreeStructure<Item> d;
  d.items = std::move(items);
  const std::size_t m = d.items.size();
  std::vector<std::int8_t> memo(m * m, -1);
  auto reduces = [&](std::size_t i, std::size_t j) {
    auto& slot = memo[i * m + j];
    if (slot < 0) slot = leq(d.items[i], d.items[j]) ? 1 : 0;
    return slot == 1;
  };
  d.class_of.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<std::size_t> home;
    for (std::size_t c = 0; c < d.classes.size() && !home; ++c) {
      const std::size_t r = d.classes[c].front();
      if (reduces(i, r) && reduces(r, i)) home = c;
    }
    if (!home) {
      home = d.classes.size();
      d.classes.emplace_back();
    }
    d.classes[*home].push_back(i);
    d.class_of[i] = *home;
  }
  const std::size_t k = d.classes.size();
  d.less.assign(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t e = 0; e < k; ++e) {
      if (c != e) d.less[c][e] = reduces(d.classes[c].front(), d.classes[e].front());
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t e = 0; e < k; ++e) {
      if (!d.less[c][e]) continue;
      bool direct = true;
      for (std::size_t mid = 0; mid < k && direct; ++mid) direct = !(d.less[c][mid] && d.less[mid][e]);
      if (direct) d.hasse.emplace_back(c, e);
    }
  }
  std::sort(d.hasse.begin(), d.hasse.end(), [&](const auto& x, const auto& y) {
    return std::pair{sort_key(d.representative(x.first)), sort_key(d.representative(x.second))} <
           std::pair{sort_key(d.representative(y.first)), sort_key(d.representative(y.second))};
  });
  d.diagnostics.antichain_witness = maximum_antichain(d.less);
  d.diagnostics.max_antichain = d.diagnostics.antichain_witness.size();
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t e = 0; e < k; ++e) {
      if (c == e || d.less[c][e]) continue;
      const auto co = complement(d.representative(e));
      if (!co) {
        d.diagnostics.slo_applicable = false;
        break;
      }
      if (!leq(*co, d.representative(c))) d.diagnostics.slo_violations.emplace_back(c, e);
    }
    if (!d.diagnostics.slo_applicable) break;
  }
  if (!d.diagnostics.slo_applicable) d.diagnostics.slo_violations.clear();
  return d;
}

}  // namespace detail

/// Quotient of the given subsets under Wadge reducibility or arbitrary maps.
inline DegreeStructure<SubsetMask> degree_structure(const FinitePoset& space, std::vector<SubsetMask> items,
                                                    ReducibilityKind kind = ReducibilityKind::Wadge) {
  for (const auto& a : items) a.check_space(space);
  return detail::build_degrees<SubsetMask>(
      std::move(items), [&](const SubsetMask& a, const SubsetMask& b) { return wadge_leq(space, a, b, kind); },
      [](const SubsetMask& a) { return std::optional<SubsetMask>(a.complement()); });
}

/// Quotient of the given k-partitions. SLO diagnostics only apply for k = 2.
inline DegreeStructure<KPartition> degree_structure(const FinitePoset& space, std::vector<KPartition> items,
                                                    ReducibilityKind kind = ReducibilityKind::Wadge) {
  for (const auto& p : items) p.check_space(space);
  return detail::build_degrees<KPartition>(
      std::move(items), [&](const KPartition& a, const KPartition& b) { return partition_leq(space, a, b, kind); },
      [&](const KPartition& p) -> std::optional<KPartition> {
        if (p.k() != 2) return std::nullopt;
        auto colors = p.colors();
        for (auto& c : colors) c = 1 - c;
        return KPartition(space, 2, std::move(colors));
      });
}

struct StructureReport {
  bool finitely_very_good = false;
  std::size_t max_antichain = 0;
  std::size_t slo_violation_count = 0;
  /// Always true: a finite quotient is a well-quasi-order.
  bool wqo = true;
};

template <typename Item>
StructureReport structure_label(const DegreeStructure<Item>& d) {
  StructureReport r;
  r.max_antichain = d.diagnostics.max_antichain;
  r.slo_violation_count = d.diagnostics.slo_violations.size();
  r.finitely_very_good = d.diagnostics.slo_applicable && r.slo_violation_count == 0 && r.max_antichain <= 2;
  return r;
}

/// The quotient as a poset on degree indices, labeled "d<index>".
template <typename Item>
FinitePoset quotient_poset(const DegreeStructure<Item>& d) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < d.class_count(); ++c) labels.push_back("d" + std::to_string(c));
  return build_poset(std::move(labels), d.hasse);
}

}  // namespace wadge
