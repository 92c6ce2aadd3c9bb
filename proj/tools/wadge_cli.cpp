// wadge: command-line front end for the finite Wadge toolkit.
//
// Commands:
//   space       element/open counts, dimension, scattered rank, Hasse DOT
//   classify    difference-hierarchy level with witness chains
//   reduce      Wadge reduction witness between two subsets
//   degrees     quotient degree structure of a family of subsets
//   partitions  quotient degree structure of k-partitions
//   verify      exhaustive property suites over small posets
//   gallery     build the standard example spaces
//
// Exit codes: 0 success, 1 input error, 2 cap exceeded, 3 suite failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wadge/wadge.hpp"

namespace {

using wadge::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitSuite = 3;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw wadge::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

wadge::io::PosetDocument load(const std::string& path) { return wadge::io::parse_document(read_text(path)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw wadge::ParseError("cannot write '" + path + "'");
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

wadge::ReducibilityKind parse_kind(const std::string& kind) {
  if (kind == "wadge") return wadge::ReducibilityKind::Wadge;
  if (kind == "any") return wadge::ReducibilityKind::AllFunctions;
  throw wadge::ParseError("--kind must be 'wadge' or 'any'");
}

struct Options {
  std::string file;
  std::optional<std::size_t> cap;
  std::string dot;
  std::string out;
  std::string kind = "wadge";
  bool all = false;
  bool oracle = false;
  bool constants = false;
  std::size_t k = 2;
  std::size_t max = 4;
  std::vector<std::string> sets;
  std::string suite;
  std::string gallery_name;
  std::vector<std::size_t> params;
};

int cmd_space(const Options& o) {
  const auto doc = load(o.file);
  const auto& space = doc.space;
  const std::size_t cap = o.cap.value_or(16);
  Json j;
  j["elements"] = space.size();
  if (space.size() <= cap) {
    j["opens"] = wadge::enumerate_opens(space, {.max_elements = cap}).size();
  } else {
    j["opens"] = "capped";
  }
  j["dimension"] = wadge::dimension(space);
  const auto trace = wadge::derivative_trace(space);
  j["scattered_rank"] = trace.scattered_rank();
  Json ranks = Json::object();
  for (wadge::Element i = 0; i < space.size(); ++i) ranks[space.label(i)] = trace.rank_of[i];
  j["rank_of"] = ranks;
  emit(o.out, j.dump(2) + "\n");
  if (!o.dot.empty()) write_text(o.dot, wadge::io::hasse_dot(space));
  return kExitOk;
}

int cmd_classify(const Options& o) {
  const auto doc = load(o.file);
  if (o.sets.size() != 1) throw wadge::ParseError("classify expects exactly one subset");
  const auto a = wadge::io::parse_subset(doc.space, o.sets.front(), doc.sets);
  auto j = wadge::io::classification_json(doc.space, a);
  if (o.oracle) {
    const auto level = wadge::oracle_level(doc.space, a, doc.space.size() + 1, {.max_elements = o.cap.value_or(8)});
    j["oracle_label"] = level.label();
  }
  emit(o.out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  const auto doc = load(o.file);
  if (o.sets.size() != 2) throw wadge::ParseError("reduce expects two subsets");
  const auto a = wadge::io::parse_subset(doc.space, o.sets[0], doc.sets);
  const auto b = wadge::io::parse_subset(doc.space, o.sets[1], doc.sets);
  const auto f = wadge::wadge_reduces(doc.space, a, b, parse_kind(o.kind));
  std::ostringstream os;
  if (!f) {
    os << "NONE\n";
  } else {
    for (wadge::Element x = 0; x < doc.space.size(); ++x) {
      os << doc.space.label(x) << " -> " << doc.space.label((*f)(x)) << "\n";
    }
  }
  emit(o.out, os.str());
  return kExitOk;
}

int cmd_degrees(const Options& o) {
  const auto doc = load(o.file);
  const auto kind = parse_kind(o.kind);
  std::vector<wadge::SubsetMask> items;
  if (o.all) {
    items = wadge::all_subsets(doc.space, {.max_elements = o.cap.value_or(6)});
  } else if (!o.sets.empty()) {
    for (const auto& s : o.sets) items.push_back(wadge::io::parse_subset(doc.space, s, doc.sets));
  } else {
    for (const auto& [name, set] : doc.sets) items.push_back(set);
  }
  if (items.empty()) throw wadge::ParseError("degrees needs --all, subsets, or named sets in the document");
  const auto d = wadge::degree_structure(doc.space, std::move(items), kind);
  emit(o.out, wadge::io::degrees_json(doc.space, d, kind).dump(2) + "\n");
  if (!o.dot.empty()) write_text(o.dot, wadge::io::degrees_dot(d));
  return kExitOk;
}

int cmd_partitions(const Options& o) {
  const auto doc = load(o.file);
  const auto kind = parse_kind(o.kind);
  if (o.k == 0) throw wadge::ParseError("-k must be positive");
  std::vector<wadge::KPartition> items;
  if (o.constants) {
    for (std::size_t c = 0; c < o.k; ++c) items.push_back(wadge::KPartition::constant(doc.space, o.k, c));
  }
  for (const auto& s : o.sets) items.push_back(wadge::io::parse_partition(doc.space, o.k, s));
  if (o.all) {
    const std::size_t cap = o.cap.value_or(6);
    if (doc.space.size() > cap) {
      throw wadge::CapExceeded("all-partitions degree structure refuses " + std::to_string(doc.space.size()) +
                               " elements (cap " + std::to_string(cap) + ")");
    }
    std::vector<std::size_t> colors(doc.space.size(), 0);
    for (;;) {
      items.emplace_back(doc.space, o.k, colors);
      std::size_t i = 0;
      while (i < colors.size() && ++colors[i] == o.k) colors[i++] = 0;
      if (i == colors.size()) break;
    }
  }
  if (items.empty()) throw wadge::ParseError("partitions needs --constants, --all, or explicit colorings");
  const auto d = wadge::degree_structure(doc.space, std::move(items), kind);
  emit(o.out, wadge::io::degrees_json(doc.space, d, kind).dump(2) + "\n");
  if (!o.dot.empty()) write_text(o.dot, wadge::io::degrees_dot(d));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto result = wadge::suites::run_suite(o.suite, {.max_size = o.max, .cap = o.cap.value_or(5)});
  std::ostringstream os;
  os << "suite " << result.name << ": " << result.posets << " posets, " << result.cases << " cases, "
     << result.findings.size() << " findings\n";
  for (const auto& f : result.findings) os << "  FINDING " << f << "\n";
  os << (result.passed() ? "PASS" : "FAIL") << "\n";
  emit(o.out, os.str());
  return result.passed() ? kExitOk : kExitSuite;
}

int cmd_gallery(const Options& o) {
  namespace g = wadge::gallery;
  auto param = [&](std::size_t fallback) { return o.params.empty() ? fallback : o.params.front(); };
  const std::string& name = o.gallery_name;
  wadge::FinitePoset space;
  std::map<std::string, wadge::SubsetMask> sets;
  if (name == "chain") {
    space = g::chain(param(3));
  } else if (name == "antichain") {
    space = g::antichain(param(2));
  } else if (name == "c-infinity") {
    space = g::truncated_c_infinity(param(3));
  } else if (name == "fan") {
    auto f = g::fan(param(1));
    space = f.space;
    sets = f.named_sets();
  } else if (name == "expected") {
    space = g::expected_structure(param(1));
  } else {
    throw wadge::ParseError("unknown gallery space '" + name + "' (chain, antichain, c-infinity, fan, expected)");
  }
  emit(o.out, wadge::io::to_json(space, sets).dump(2) + "\n");
  if (!o.dot.empty()) write_text(o.dot, wadge::io::hasse_dot(space));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wadge reducibility and difference hierarchy on finite posets"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Override the size cap of exponential computations");
    sub->add_option("--out", o.out, "Write the report to a file instead of stdout");
  };

  auto* space = app.add_subcommand("space", "Summarize a poset document");
  space->add_option("file", o.file, "Poset document ('-' for stdin)")->required();
  space->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
  add_common(space);

  auto* classify = app.add_subcommand("classify", "Difference-hierarchy level of a subset");
  classify->add_option("file", o.file, "Poset document")->required();
  classify->add_option("subset", o.sets, "Subset: [\"a\"], {a,b}, 0/1 string, or set name")->required();
  classify->add_flag("--oracle", o.oracle, "Also run the brute-force oracle");
  add_common(classify);

  auto* reduce = app.add_subcommand("reduce", "Find a reduction A <= B");
  reduce->add_option("file", o.file, "Poset document")->required();
  reduce->add_option("subsets", o.sets, "A and B")->required()->expected(2);
  reduce->add_option("--kind", o.kind, "wadge or any");
  add_common(reduce);

  auto* degrees = app.add_subcommand("degrees", "Degree structure of subsets");
  degrees->add_option("file", o.file, "Poset document")->required();
  degrees->add_option("subsets", o.sets, "Subsets (default: named sets of the document)");
  degrees->add_flag("--all", o.all, "Use every subset");
  degrees->add_option("--kind", o.kind, "wadge or any");
  degrees->add_option("--dot", o.dot, "Write the quotient Hasse diagram as DOT");
  add_common(degrees);

  auto* partitions = app.add_subcommand("partitions", "Degree structure of k-partitions");
  partitions->add_option("file", o.file, "Poset document")->required();
  partitions->add_option("colorings", o.sets, "Colorings as digit strings or JSON arrays");
  partitions->add_option("-k", o.k, "Number of colors")->required();
  partitions->add_flag("--constants", o.constants, "Include the k constant partitions");
  partitions->add_flag("--all", o.all, "Use every k-partition");
  partitions->add_option("--kind", o.kind, "wadge or any");
  partitions->add_option("--dot", o.dot, "Write the quotient Hasse diagram as DOT");
  add_common(partitions);

  auto* verify = app.add_subcommand("verify", "Run a property suite over all small posets");
  verify->add_option("suite", o.suite,
                     "finite-t0-very-good, classify-oracle, duality, level-coherence, dimension-monotone, "
                     "d2-triviality")
      ->required();
  verify->add_option("--max", o.max, "Largest poset size");
  add_common(verify);

  auto* gallery = app.add_subcommand("gallery", "Example spaces");
  gallery->require_subcommand(1);
  auto* build = gallery->add_subcommand("build", "Write a gallery space as a poset document");
  build->add_option("name", o.gallery_name, "chain, antichain, c-infinity, fan, expected")->required();
  build->add_option("params", o.params, "Size parameter");
  build->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
  add_common(build);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*space) return cmd_space(o);
    if (*classify) return cmd_classify(o);
    if (*reduce) return cmd_reduce(o);
    if (*degrees) return cmd_degrees(o);
    if (*partitions) return cmd_partitions(o);
    if (*verify) return cmd_verify(o);
    if (*gallery) return cmd_gallery(o);
  } catch (const wadge::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const wadge::CycleError& e) {
    std::cerr << "CycleError: " << e.what() << "\n";
    return kExitInput;
  } catch (const wadge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
