#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "parktri/assoc.hpp"
#include "parktri/permutohedron.hpp"
#include "parktri/version.hpp"

namespace parktri {

/// JSON form of a simplex recipe.  Base recipes (dimension 0) are null.
/// The "a" slot carries the root-edge index for the associahedron and the
/// facet position subset for the permutohedron.
inline Json recipe_json(const SimplexRecipe& recipe, PolytopeKind kind) {
  if (recipe.is_base()) return Json();
  Json out{{"p", recipe.p},
           {"q", recipe.q},
           {"theta", recipe.theta},
           {"left", recipe.left},
           {"right", recipe.right}};
  if (kind == PolytopeKind::associahedron)
    out["a"] = recipe.a;
  else
    out["a"] = recipe.subset;
  return out;
}

/// Full export bundle: metadata, vertex table, simplex table, and (when
/// given) the validation report.  Deterministic: keys are sorted and every
/// list is in canonical construction order.
inline Json bundle_json(const Triangulation& tri, std::uint64_t seed,
                        const ValidationReport* validation = nullptr) {
  Json meta{{"kind", kind_name(tri.kind)},
            {"n", tri.dim},
            {"seed", seed},
            {"version", version_string}};
  Json vertices = Json::array();
  for (int i = 0; i < tri.vertex_count(); ++i) {
    Json v{{"id", i}, {"coords", tri.coords[i]}};
    if (tri.kind == PolytopeKind::associahedron)
      v["tree"] = tri.trees[i].code();
    else
      v["perm"] = tri.perms[i];
    vertices.push_back(std::move(v));
  }
  Json simplices = Json::array();
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    const Simplex& s = tri.simplices[i];
    Json entry{{"id", i},
               {"vertices", s.vertices},
               {"recipe", recipe_json(s.recipe, tri.kind)}};
    if (tri.kind == PolytopeKind::associahedron)
      entry["label"] = s.label;
    else
      entry["label"] = Json();
    simplices.push_back(std::move(entry));
  }
  Json out{{"meta", std::move(meta)},
           {"vertices", std::move(vertices)},
           {"simplices", std::move(simplices)}};
  if (validation) out["validation"] = validation->to_json();
  return out;
}

/// Checks a previously exported bundle against a freshly built
/// triangulation of the same kind and dimension: metadata sane, vertex and
/// simplex tables identical.
inline ValidationReport check_bundle(const Json& bundle) {
  const Json& meta = bundle.at("meta");
  const std::string kind = meta.at("kind").get<std::string>();
  const int n = meta.at("n").get<int>();
  const std::uint64_t seed = meta.at("seed").get<std::uint64_t>();
  if (kind != "assoc" && kind != "perm")
    throw std::domain_error("check_bundle: unknown polytope kind " + kind);
  const Triangulation& fresh =
      kind == "assoc" ? triangulate_associahedron(n) : triangulate_permutohedron(n);
  Json expected = bundle_json(fresh, seed);

  ValidationReport report;
  bool vertices_ok = expected.at("vertices") == bundle.at("vertices");
  bool simplices_ok = expected.at("simplices") == bundle.at("simplices");
  Json details{{"kind", kind},
               {"n", n},
               {"vertices_match", vertices_ok},
               {"simplices_match", simplices_ok}};
  report.add("bundle_match", vertices_ok && simplices_ok, std::move(details));
  return report;
}

/// OFF mesh of a triangulation of dimension <= 3: vertices are projected
/// isometrically from the ambient hyperplane via Gram-Schmidt applied to
/// e_1-e_2, e_2-e_3, ... in that order, printed with 9 decimal digits;
/// each top simplex becomes one face record.
inline std::string off_export(const Triangulation& tri) {
  if (tri.dim > 3) throw std::domain_error("off_export: dimension > 3 unsupported");
  const int m = tri.dim + 1;

  std::vector<std::vector<double>> basis;
  for (int k = 0; k + 1 < m; ++k) {
    std::vector<double> v(m, 0.0);
    v[k] = 1.0;
    v[k + 1] = -1.0;
    for (const auto& b : basis) {
      double dot = 0;
      for (int c = 0; c < m; ++c) dot += v[c] * b[c];
      for (int c = 0; c < m; ++c) v[c] -= dot * b[c];
    }
    double norm = 0;
    for (int c = 0; c < m; ++c) norm += v[c] * v[c];
    norm = std::sqrt(norm);
    for (int c = 0; c < m; ++c) v[c] /= norm;
    basis.push_back(std::move(v));
  }

  std::string out = "OFF\n";
  out += std::to_string(tri.vertex_count()) + " " + std::to_string(tri.simplices.size()) + " 0\n";
  char line[128];
  for (const Coord& coord : tri.coords) {
    double xyz[3] = {0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < basis.size() && k < 3; ++k) {
      double dot = 0;
      for (int c = 0; c < m; ++c) dot += coord[c] * basis[k][c];
      xyz[k] = dot;
    }
    std::snprintf(line, sizeof line, "%.9f %.9f %.9f\n", xyz[0], xyz[1], xyz[2]);
    out += line;
  }
  for (const Simplex& s : tri.simplices) {
    out += std::to_string(s.vertices.size());
    for (int v : s.vertices) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

inline std::string format_parking(const ParkingFunction& pf) {
  std::string out = "(";
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pf[i]);
  }
  return out + ")";
}

/// The classification table of all parking functions of length n, grouped
/// by the (a, p, q) of their decomposition: rows ordered by a ascending then
/// p descending, members lexicographic.  One row per line:
/// "a=1 p=2 q=0: (1,1,1) (1,1,2) (1,2,1)".
inline std::string format_parking_table(int n) {
  if (n < 1) throw std::domain_error("format_parking_table: n >= 1 required");
  std::map<std::pair<int, int>, std::vector<ParkingFunction>> rows;
  for (const ParkingFunction& pf : enumerate_parking(n)) {
    PiDecomposition d = decompose_pf(pf);
    rows[{d.a, d.q}].push_back(pf);
  }
  std::string out;
  for (const auto& [key, members] : rows) {
    const auto& [a, q] = key;
    out += "a=" + std::to_string(a) + " p=" + std::to_string(n - 1 - q) +
           " q=" + std::to_string(q) + ":";
    for (const ParkingFunction& pf : members) out += " " + format_parking(pf);
    out += "\n";
  }
  return out;
}

/// One-line rendering of a decomposition:
/// "a=3 p=4 q=3 f=(1,2,1,3) g=(1,2,1) theta=VUVUUUV".
inline std::string format_decomposition(const PiDecomposition& d) {
  return "a=" + std::to_string(d.a) + " p=" + std::to_string(d.p) +
         " q=" + std::to_string(d.q) + " f=" + format_parking(d.f) +
         " g=" + format_parking(d.g) + " theta=" + d.theta.word + "\n";
}

/// Count table, one "<n> <value>" line per dimension.  Counts with both a
/// recursion and a closed form are computed both ways and must agree.
inline std::string format_counts(const std::string& what, int n_max) {
  std::string out;
  if (what == "zp") {
    if (n_max < 0 || n_max > 8) throw std::domain_error("format_counts: zp table covers 0..8");
    for (int n = 0; n <= n_max; ++n) out += std::to_string(n) + " " + zp_count(n).str() + "\n";
    return out;
  }
  if (what != "simplices" && what != "parking")
    throw std::domain_error("format_counts: unknown table " + what);
  if (n_max < 1 || n_max > 30) throw std::domain_error("format_counts: n_max must be in 1..30");
  for (int n = 1; n <= n_max; ++n) {
    const BigInt& recursion = simplex_count_recursive(n);
    BigInt closed = parking_count(n);
    if (recursion != closed)
      throw std::logic_error("format_counts: recursion and closed form disagree at n=" +
                             std::to_string(n));
    out += std::to_string(n) + " " + closed.str() + "\n";
  }
  return out;
}

} // namespace parktri
