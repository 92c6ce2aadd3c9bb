#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wadge/degrees.hpp"
#include "wadge/diff_hierarchy.hpp"
#include "wadge/enumerate.hpp"
#include "wadge/error.hpp"
#include "wadge/poset.hpp"
#include "wadge/reduction.hpp"
#include "wadge/topology.hpp"

namespace wadge::suites {

/// Outcome of one property suite. Findings are listed in poset order.
struct SuiteResult {
  std::string name;
  std::size_t posets = 0;
  std::size_t cases = 0;
  std::vector<std::string> findings;

  bool passed() const { return findings.empty(); }
};

/// Per-poset check: appends findings and returns the number of cases examined.
using PosetCheck = std::function<std::size_t(const FinitePoset&, std::vector<std::string>&)>;

inline std::string describe(const FinitePoset& p) {
  std::ostringstream os;
  os << "poset elements=[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.label(i);
  os << "] covers=[";
  bool first = true;
  for (auto [lo, hi] : p.covers()) {
    os << (first ? "" : ",") << "(" << p.label(lo) << "," << p.label(hi) << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Per-poset checks.

/// Wadge quotient of all subsets has antichains of size <= 2 and no SLO violations.
inline std::size_t check_very_good(const FinitePoset& p, std::vector<std::string>& findings) {
  const auto d = degree_structure(p, all_subsets(p, {.max_elements = kMaxCanonicalElements}));
  if (d.diagnostics.max_antichain > 2) {
    findings.push_back(describe(p) + ": antichain of size " + std::to_string(d.diagnostics.max_antichain));
  }
  for (auto [a, b] : d.diagnostics.slo_violations) {
    findings.push_back(describe(p) + ": SLO fails for " + d.representative(a).to_bitstring() + " vs " +
                       d.representative(b).to_bitstring());
  }
  return 1;
}

/// classify agrees with the definitional oracle on every subset.
inline std::size_t check_classify_oracle(const FinitePoset& p, std::vector<std::string>& findings) {
  std::size_t cases = 0;
  for (const auto& a : all_subsets(p, {.max_elements = kMaxCanonicalElements})) {
    const auto fast = classify(p, a);
    const auto slow = oracle_level(p, a, p.size() + 1, {.max_elements = kMaxCanonicalElements});
    if (!(fast == slow)) {
      findings.push_back(describe(p) + ": subset " + a.to_bitstring() + " classify=" + fast.label() +
                         " oracle=" + slow.label());
    }
    ++cases;
  }
  return cases;
}

/// Complements swap the ranks, and Wadge reducibility commutes with complement.
inline std::size_t check_duality(const FinitePoset& p, std::vector<std::string>& findings) {
  const auto subsets = all_subsets(p, {.max_elements = kMaxCanonicalElements});
  std::size_t cases = 0;
  for (const auto& a : subsets) {
    if (!(classify(p, a.complement()) == classify(p, a).dual())) {
      findings.push_back(describe(p) + ": complement of " + a.to_bitstring() + " does not swap ranks");
    }
    for (const auto& b : subsets) {
      const auto f = wadge_reduces(p, a, b);
      const bool co = wadge_leq(p, a.complement(), b.complement());
      if (f.has_value() != co) {
        findings.push_back(describe(p) + ": " + a.to_bitstring() + " <= " + b.to_bitstring() +
                           " disagrees with the complements");
      } else if (f && preimage(p, *f, b.complement()) != a.complement()) {
        findings.push_back(describe(p) + ": witness for " + a.to_bitstring() + " <= " + b.to_bitstring() +
                           " does not reduce the complements");
      }
      ++cases;
    }
  }
  return cases;
}

/// Subsets sharing a level are Wadge equivalent, and proper Sigma levels
/// climb strictly.
inline std::size_t check_level_coherence(const FinitePoset& p, std::vector<std::string>& findings) {
  const auto subsets = all_subsets(p, {.max_elements = kMaxCanonicalElements});
  std::map<std::string, SubsetMask> first_of_label;
  std::map<std::size_t, SubsetMask> sigma_rep;
  std::size_t cases = 0;
  for (const auto& a : subsets) {
    const auto level = classify(p, a);
    auto [it, fresh] = first_of_label.emplace(level.label(), a);
    if (!fresh) {
      ++cases;
      if (!wadge_leq(p, a, it->second) || !wadge_leq(p, it->second, a)) {
        findings.push_back(describe(p) + ": " + level.label() + " sets " + it->second.to_bitstring() + " and " +
                           a.to_bitstring() + " are not Wadge equivalent");
      }
    }
    if (level.kind() == LevelKind::ProperSigma) sigma_rep.emplace(level.level(), a);
  }
  for (auto lo = sigma_rep.begin(); lo != sigma_rep.end(); ++lo) {
    for (auto hi = std::next(lo); hi != sigma_rep.end(); ++hi) {
      ++cases;
      if (!wadge_leq(p, lo->second, hi->second) || wadge_leq(p, hi->second, lo->second)) {
        findings.push_back(describe(p) + ": ProperSigma(" + std::to_string(lo->first) + ") set " +
                           lo->second.to_bitstring() + " is not strictly below ProperSigma(" +
                           std::to_string(hi->first) + ") set " + hi->second.to_bitstring());
      }
    }
  }
  return cases;
}

/// Subspaces never have larger dimension.
inline std::size_t check_dimension_monotone(const FinitePoset& p, std::vector<std::string>& findings) {
  const int whole = dimension(p);
  std::size_t cases = 0;
  for (const auto& a : all_subsets(p, {.max_elements = kMaxCanonicalElements})) {
    if (dimension(p, a) > whole) {
      findings.push_back(describe(p) + ": subspace " + a.to_bitstring() + " has dimension above the space");
    }
    ++cases;
  }
  return cases;
}

/// Under arbitrary maps the quotient is {empty}, {whole}, and one degree above both.
inline std::size_t check_d2_triviality(const FinitePoset& p, std::vector<std::string>& findings) {
  if (p.size() < 2) return 0;
  const auto d = degree_structure(p, all_subsets(p, {.max_elements = kMaxCanonicalElements}),
                                  ReducibilityKind::AllFunctions);
  const auto empty = d.class_of.front();
  const auto whole = d.class_of.back();
  bool ok = d.class_count() == 3 && d.classes[empty].size() == 1 && d.classes[whole].size() == 1 &&
            !d.comparable(empty, whole);
  for (std::size_t c = 0; c < d.class_count() && ok; ++c) {
    if (c != empty && c != whole) ok = d.less[empty][c] && d.less[whole][c];
  }
  if (!ok) findings.push_back(describe(p) + ": arbitrary-map quotient is not the three-degree shape");
  return 1;
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, PosetCheck>& registry() {
  static const std::map<std::string, PosetCheck> checks{
      {"finite-t0-very-good", check_very_good},       {"classify-oracle", check_classify_oracle},
      {"duality", check_duality},                     {"level-coherence", check_level_coherence},
      {"dimension-monotone", check_dimension_monotone}, {"d2-triviality", check_d2_triviality},
  };
  return checks;
}

/// Runs `check` on each poset, fanning out over worker threads. Results are
/// merged in input order, so reports do not depend on scheduling.
inline SuiteResult run_on(const std::string& name, const std::vector<FinitePoset>& posets, const PosetCheck& check,
                          std::size_t workers = 0) {
  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, posets.size()));
  std::vector<std::vector<std::string>> findings(posets.size());
  std::vector<std::size_t> cases(posets.size(), 0);
  std::vector<std::string> errors(posets.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < posets.size(); i += workers) {
      try {
        cases[i] = check(posets[i], findings[i]);
      } catch (const std::exception& e) {
        errors[i] = describe(posets[i]) + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  SuiteResult result{name, posets.size(), 0, {}};
  for (std::size_t i = 0; i < posets.size(); ++i) {
    result.cases += cases[i];
    result.findings.insert(result.findings.end(), findings[i].begin(), findings[i].end());
    if (!errors[i].empty()) result.findings.push_back(errors[i]);
  }
  return result;
}

struct VerifyOptions {
  std::size_t max_size = 4;
  /// Exhaustive enumeration is refused above this size.
  std::size_t cap = 5;
  std::size_t workers = 0;
};

/// Runs a named suite on every poset with at most max_size elements, up to
/// isomorphism. Enumeration counts are checked against the known values first.
inline SuiteResult run_suite(const std::string& name, VerifyOptions options = {}) {
  const auto& checks = registry();
  auto it = checks.find(name);
  if (it == checks.end()) throw Error("unknown suite '" + name + "'");
  if (options.max_size > options.cap || options.max_size > kMaxCanonicalElements) {
    throw CapExceeded("suite size bound " + std::to_string(options.max_size) + " exceeds cap " +
                      std::to_string(std::min(options.cap, kMaxCanonicalElements)));
  }
  const auto by_size = posets_up_to_isomorphism(options.max_size);
  std::vector<FinitePoset> all;
  std::vector<std::string> count_findings;
  for (std::size_t n = 1; n < by_size.size(); ++n) {
    if (by_size[n].size() != kKnownPosetCounts[n]) {
      count_findings.push_back("enumeration self-test: " + std::to_string(by_size[n].size()) + " posets on " +
                               std::to_string(n) + " elements, expected " + std::to_string(kKnownPosetCounts[n]));
    }
    all.insert(all.end(), by_size[n].begin(), by_size[n].end());
  }
  auto result = run_on(name, all, it->second, options.workers);
  result.findings.insert(result.findings.begin(), count_findings.begin(), count_findings.end());
  return result;
}

}  // namespace wadge::suites
