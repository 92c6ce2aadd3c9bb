#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wadge/degrees.hpp"
#include "wadge/diff_hierarchy.hpp"
#include "wadge/error.hpp"
#include "wadge/poset.hpp"
#include "wadge/reduction.hpp"

namespace wadge::io {

using Json = nlohmann::ordered_json;

/// A poset document: `elements`, `covers`, and optional named `sets`.
struct PosetDocument {
  FinitePoset space;
  std::map<std::string, SubsetMask> sets;
};

inline PosetDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object with 'elements' and 'covers'");
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw ParseError("elements: expected an array of names");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
    const auto& e = doc["elements"][i];
    if (!e.is_string()) throw ParseError("elements[" + std::to_string(i) + "]: expected a string");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw ParseError("covers: expected an array of [lower, upper] pairs");
    for (std::size_t i = 0; i < doc["covers"].size(); ++i) {
      const auto& c = doc["covers"][i];
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw ParseError("covers[" + std::to_string(i) + "]: expected a [lower, upper] pair of names");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  PosetDocument out{build_poset(std::move(labels), covers), {}};
  if (doc.contains("sets")) {
    if (!doc["sets"].is_object()) throw ParseError("sets: expected an object of named element lists");
    for (const auto& [name, members] : doc["sets"].items()) {
      if (!members.is_array()) throw ParseError("sets." + name + ": expected an array of names");
      Bits b = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (!members[i].is_string()) {
          throw ParseError("sets." + name + "[" + std::to_string(i) + "]: expected a string");
        }
        const auto idx = out.space.index_of(members[i].get<std::string>());
        if (!idx) {
          throw UnknownElement("sets." + name + "[" + std::to_string(i) + "]: unknown element '" +
                               members[i].get<std::string>() + "'");
        }
        b |= bits::single(*idx);
      }
      out.sets.emplace(name, SubsetMask(out.space, b));
    }
  }
  return out;
}

inline Json names_of(const FinitePoset& space, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (Element e : elements) out.push_back(space.label(e));
  return out;
}

inline Json to_json(const FinitePoset& space, const std::map<std::string, SubsetMask>& sets = {}) {
  Json doc;
  doc["elements"] = space.labels();
  Json covers = Json::array();
  for (auto [lo, hi] : space.covers()) covers.push_back({space.label(lo), space.label(hi)});
  doc["covers"] = covers;
  if (!sets.empty()) {
    Json named = Json::object();
    for (const auto& [name, set] : sets) named[name] = names_of(space, set.elements());
    doc["sets"] = named;
  }
  return doc;
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Accepts a JSON array of names, a brace list `{a,b}`, a 0/1 string in
/// element-index order, or the name of a set from the document.
inline SubsetMask parse_subset(const FinitePoset& space, std::string_view text,
                               const std::map<std::string, SubsetMask>& named = {}) {
  const std::string s = detail::trim(text);
  if (!s.empty() && s.front() == '[') {
    Json arr;
    try {
      arr = Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("subset '" + s + "': " + e.what());
    }
    Bits b = 0;
    for (const auto& e : arr) {
      if (!e.is_string()) throw ParseError("subset '" + s + "': expected element names");
      b |= bits::single(space.find(e.get<std::string>()));
    }
    return {space, b};
  }
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    Bits b = 0;
    std::stringstream inner(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(inner, item, ',')) {
      const auto name = detail::trim(item);
      if (!name.empty()) b |= bits::single(space.find(name));
    }
    return {space, b};
  }
  if (auto it = named.find(s); it != named.end()) return it->second;
  if (s.size() == space.size() && s.find_first_not_of("01") == std::string::npos) {
    Bits b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') b |= bits::single(i);
    }
    return {space, b};
  }
  throw ParseError("cannot read subset '" + s + "': use [\"a\"], {a,b}, a " + std::to_string(space.size()) +
                   "-digit 0/1 string, or a named set");
}

/// One color digit per element in index order, or a JSON array of integers.
inline KPartition parse_partition(const FinitePoset& space, std::size_t k, std::string_view text) {
  const std::string s = detail::trim(text);
  std::vector<std::size_t> colors;
  if (!s.empty() && s.front() == '[') {
    Json arr;
    try {
      arr = Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("partition '" + s + "': " + e.what());
    }
    for (const auto& e : arr) {
      if (!e.is_number_unsigned()) throw ParseError("partition '" + s + "': expected nonnegative integers");
      colors.push_back(e.get<std::size_t>());
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("partition '" + s + "': expected digits");
      colors.push_back(static_cast<std::size_t>(c - '0'));
    }
  }
  if (colors.size() != space.size()) {
    throw ParseError("partition '" + s + "': expected " + std::to_string(space.size()) + " colors");
  }
  for (std::size_t c : colors) {
    if (c >= k) throw ParseError("partition '" + s + "': color " + std::to_string(c) + " is not below k");
  }
  return {space, k, std::move(colors)};
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram; edges run from the lower to the upper element of each cover.
inline std::string hasse_dot(const FinitePoset& space, std::string_view graph_name = "hasse") {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (const auto& l : space.labels()) os << "  " << detail::dot_quote(l) << ";\n";
  for (auto [lo, hi] : space.covers()) {
    os << "  " << detail::dot_quote(space.label(lo)) << " -> " << detail::dot_quote(space.label(hi)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline Json chain_json(const FinitePoset& space, const AlternatingChain& chain) {
  return names_of(space, chain.points);
}

inline Json classification_json(const FinitePoset& space, const SubsetMask& a) {
  const auto in = longest_alternating_chain(space, a, true);
  const auto out = longest_alternating_chain(space, a, false);
  const auto level = DiffLevel::from_ranks(in.length(), out.length());
  Json j;
  j["sigma_rank"] = level.sigma_rank;
  j["pi_rank"] = level.pi_rank;
  j["label"] = level.label();
  j["witness_chain_in"] = chain_json(space, in);
  j["witness_chain_out"] = chain_json(space, out);
  return j;
}

inline std::string item_text(const SubsetMask& a) { return a.to_bitstring(); }
inline std::string item_text(const KPartition& p) {
  std::string s;
  for (std::size_t c : p.colors()) s += std::to_string(c);
  return s;
}

template <typename Item>
Json degrees_json(const FinitePoset& space, const DegreeStructure<Item>& d, ReducibilityKind kind) {
  Json j;
  j["kind"] = kind == ReducibilityKind::Wadge ? "wadge" : "any";
  j["items"] = d.items.size();
  j["class_count"] = d.class_count();
  Json classes = Json::array();
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    Json cls;
    cls["index"] = c;
    cls["representative"] = item_text(d.representative(c));
    if constexpr (std::is_same_v<Item, SubsetMask>) {
      cls["level"] = classify(space, d.representative(c)).label();
    }
    Json members = Json::array();
    for (std::size_t i : d.classes[c]) members.push_back(item_text(d.items[i]));
    cls["members"] = members;
    classes.push_back(cls);
  }
  j["classes"] = classes;
  Json hasse = Json::array();
  for (auto [lo, hi] : d.hasse) hasse.push_back({lo, hi});
  j["hasse"] = hasse;
  Json diag;
  diag["max_antichain"] = d.diagnostics.max_antichain;
  diag["antichain"] = d.diagnostics.antichain_witness;
  diag["slo_applicable"] = d.diagnostics.slo_applicable;
  Json slo = Json::array();
  for (auto [a, b] : d.diagnostics.slo_violations) slo.push_back({a, b});
  diag["slo_violations"] = slo;
  diag["has_infinite_descending"] = d.diagnostics.has_infinite_descending;
  j["diagnostics"] = diag;
  const auto label = structure_label(d);
  Json rep;
  rep["finitely_very_good"] = label.finitely_very_good;
  rep["max_antichain"] = label.max_antichain;
  rep["slo_violation_count"] = label.slo_violation_count;
  rep["wqo"] = label.wqo;
  j["structure"] = rep;
  return j;
}

/// Hasse diagram of a degree structure, nodes named by representatives.
template <typename Item>
std::string degrees_dot(const DegreeStructure<Item>& d) {
  std::ostringstream os;
  os << "digraph degrees {\n";
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    os << "  d" << c << " [label=" << detail::dot_quote(item_text(d.representative(c))) << "];\n";
  }
  for (auto [lo, hi] : d.hasse) os << "  d" << lo << " -> d" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace wadge::io
