// Command-line front end: tree enumeration, triangulation export,
// validation, parking-function tables, and count tables.
//
// Exit codes: 0 success, 1 domain or validation failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parktri/io.hpp"

namespace {

using namespace parktri;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

struct TreesArgs {
  int n = 0;
  bool count_only = false;
  bool no_coords = false;
  std::string format = "text";
  std::string out_path;
};

int cmd_trees(const TreesArgs& args) {
  if (args.n < 0) return usage_error("trees: --n must be nonnegative");
  const int bound = (args.count_only || args.no_coords) ? 20 : 12;
  if (args.n > bound)
    return usage_error("trees: --n exceeds the limit " + std::to_string(bound) +
                       " for this mode");

  if (args.count_only)
    return write_output(tree_count(args.n).str() + "\n", args.out_path);

  std::vector<Tree> trees = enumerate_trees(args.n);
  if (args.format == "json") {
    Json list = Json::array();
    for (const Tree& t : trees) {
      Json entry{{"code", t.code()}};
      if (!args.no_coords) entry["coords"] = args.n == 0 ? Coord{} : tree_point(t);
      list.push_back(std::move(entry));
    }
    Json doc{{"meta", Json{{"kind", "trees"}, {"n", args.n}, {"version", version_string}}},
             {"count", trees.size()},
             {"trees", std::move(list)}};
    return write_output(doc.dump(2) + "\n", args.out_path);
  }
  if (args.format != "text") return usage_error("trees: --format must be text or json");
  std::string text;
  for (const Tree& t : trees) {
    text += t.code();
    if (!args.no_coords) {
      Coord c = args.n == 0 ? Coord{} : tree_point(t);
      text += " (";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(c[i]);
      }
      text += ")";
    }
    text += "\n";
  }
  return write_output(text, args.out_path);
}

struct TriangulateArgs {
  std::string polytope;
  int n = 0;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::string out_path;
};

const Triangulation& build(const std::string& polytope, int n) {
  if (polytope == "assoc") return triangulate_associahedron(n);
  if (polytope == "perm") return triangulate_permutohedron(n);
  throw std::domain_error("unknown polytope " + polytope);
}

ValidationReport run_validation(const std::string& polytope, int n, std::uint64_t seed,
                                int samples, int hull_samples) {
  if (polytope == "assoc") return validate_association(n, seed, samples, hull_samples);
  return validate_permutohedron(n, seed, samples, hull_samples);
}

int cmd_triangulate(const TriangulateArgs& args) {
  if (args.polytope != "assoc" && args.polytope != "perm")
    return usage_error("triangulate: --polytope must be assoc or perm");
  if (args.n < 0) return usage_error("triangulate: --n must be nonnegative");
  const int bound = args.polytope == "assoc" ? 6 : 3;
  if (args.n > bound)
    return usage_error("triangulate: --n exceeds the limit " + std::to_string(bound) +
                       " for polytope " + args.polytope);
  if (args.format == "off") {
    if (args.n > 3) return usage_error("triangulate: OFF output requires --n <= 3");
    return write_output(off_export(build(args.polytope, args.n)), args.out_path);
  }
  if (args.format != "json") return usage_error("triangulate: --format must be json or off");
  const Triangulation& tri = build(args.polytope, args.n);
  ValidationReport report = run_validation(args.polytope, args.n, args.seed, 50, 200);
  Json bundle = bundle_json(tri, args.seed, &report);
  int rc = write_output(bundle.dump(2) + "\n", args.out_path);
  if (rc != 0) return rc;
  return report.overall() ? 0 : 1;
}

struct VerifyArgs {
  std::string polytope;
  int n = 0;
  int samples = 50;
  int hull_samples = 200;
  std::uint64_t seed = 42;
  std::string check_file;
};

int cmd_verify(const VerifyArgs& args) {
  ValidationReport report;
  if (!args.check_file.empty()) {
    std::ifstream in(args.check_file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << args.check_file << "\n";
      return 1;
    }
    Json bundle;
    try {
      bundle = Json::parse(in);
      report = check_bundle(bundle);
      const Json& meta = bundle.at("meta");
      report.merge(run_validation(meta.at("kind").get<std::string>(), meta.at("n").get<int>(),
                                  args.seed, args.samples, args.hull_samples));
    } catch (const Json::exception& e) {
      std::cerr << "error: malformed bundle: " << e.what() << "\n";
      return 1;
    }
  } else {
    if (args.polytope != "assoc" && args.polytope != "perm")
      return usage_error("verify: --polytope must be assoc or perm (or use --check-file)");
    if (args.n < 0) return usage_error("verify: --n must be nonnegative");
    const int bound = args.polytope == "assoc" ? 6 : 3;
    if (args.n > bound)
      return usage_error("verify: --n exceeds the limit " + std::to_string(bound) +
                         " for polytope " + args.polytope);
    report = run_validation(args.polytope, args.n, args.seed, args.samples, args.hull_samples);
  }
  std::cout << report.to_json().dump(2) << "\n";
  return report.overall() ? 0 : 1;
}

struct ParkingArgs {
  int n = 0;
  std::string decompose;
};

int cmd_parking(const ParkingArgs& args) {
  if (!args.decompose.empty()) {
    ParkingFunction pf;
    std::stringstream ss(args.decompose);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        pf.push_back(value);
      } catch (const std::exception&) {
        std::cerr << "error: cannot parse entry '" << item << "' in --decompose\n";
        return 1;
      }
    }
    if (!is_parking(pf)) {
      std::cerr << "error: " << format_parking(pf) << " is not a parking function\n";
      return 1;
    }
    std::cout << format_decomposition(decompose_pf(pf));
    return 0;
  }
  if (args.n < 1 || args.n > 8) return usage_error("parking: --n must be in 1..8");
  std::cout << format_parking_table(args.n);
  return 0;
}

struct CountsArgs {
  std::string what;
  int n_max = 0;
};

int cmd_counts(const CountsArgs& args) {
  if (args.what != "simplices" && args.what != "parking" && args.what != "zp")
    return usage_error("counts: --what must be simplices, parking, or zp");
  const int lo = args.what == "zp" ? 0 : 1;
  const int hi = args.what == "zp" ? 8 : 30;
  if (args.n_max < lo || args.n_max > hi)
    return usage_error("counts: --n-max must be in " + std::to_string(lo) + ".." +
                       std::to_string(hi) + " for " + args.what);
  std::cout << format_counts(args.what, args.n_max);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial decompositions of associahedra and permutohedra"};
  app.set_version_flag("--version", parktri::version_string);
  app.require_subcommand(1);

  TreesArgs trees_args;
  CLI::App* trees = app.add_subcommand("trees", "Enumerate planar binary trees");
  trees->add_option("--n", trees_args.n, "Number of internal vertices")->required();
  trees->add_flag("--count-only", trees_args.count_only, "Print only the number of trees");
  trees->add_flag("--no-coords", trees_args.no_coords, "Omit vertex coordinates");
  trees->add_option("--format", trees_args.format, "Output format: text or json");
  trees->add_option("--out", trees_args.out_path, "Write to file instead of stdout");

  TriangulateArgs tri_args;
  CLI::App* triangulate = app.add_subcommand("triangulate", "Export a triangulated polytope");
  triangulate->add_option("--polytope", tri_args.polytope, "assoc or perm")->required();
  triangulate->add_option("--n", tri_args.n, "Polytope dimension")->required();
  triangulate->add_option("--format", tri_args.format, "Output format: json or off");
  triangulate->add_option("--seed", tri_args.seed, "Seed recorded for validation sampling");
  triangulate->add_option("--out", tri_args.out_path, "Write to file instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run validation checks");
  verify->add_option("--polytope", verify_args.polytope, "assoc or perm");
  verify->add_option("--n", verify_args.n, "Polytope dimension");
  verify->add_option("--samples", verify_args.samples, "Interior sample count per simplex");
  verify->add_option("--hull-samples", verify_args.hull_samples, "Coverage sample count");
  verify->add_option("--seed", verify_args.seed, "Sampling seed");
  verify->add_option("--check-file", verify_args.check_file,
                     "Re-check a previously exported JSON bundle");

  ParkingArgs parking_args;
  CLI::App* parking = app.add_subcommand("parking", "Parking function tables and decomposition");
  parking->add_option("--n", parking_args.n, "Table of all parking functions of this length");
  parking->add_option("--decompose", parking_args.decompose,
                      "Comma-separated sequence to decompose");

  CountsArgs counts_args;
  CLI::App* counts = app.add_subcommand("counts", "Count tables");
  counts->add_option("--what", counts_args.what, "simplices, parking, or zp")->required();
  counts->add_option("--n-max", counts_args.n_max, "Largest dimension to tabulate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (trees->parsed()) return cmd_trees(trees_args);
    if (triangulate->parsed()) return cmd_triangulate(tri_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (parking->parsed()) return cmd_parking(parking_args);
    if (counts->parsed()) return cmd_counts(counts_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
