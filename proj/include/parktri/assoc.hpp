#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "parktri/common.hpp"
#include "parktri/geometry.hpp"
#include "parktri/parking.hpp"
#include "parktri/shuffles.hpp"
#include "parktri/trees.hpp"
#include "parktri/triangulation.hpp"

namespace parktri {

/// Cone-basis face gamma(a; p, q) of the n-dimensional associahedron,
/// isomorphic to the product of the p- and q-dimensional ones.  The root
/// edge index a is counted right to left; the cone basis uses a >= 1.
struct FaceGamma {
  int a = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const FaceGamma&, const FaceGamma&) = default;
};

/// All faces (a; p, q) with p+q = n-1 and 1 <= a <= p+1, ordered by p
/// ascending then a ascending.  Their union is the cone basis opposite the
/// apex vertex; count n(n+1)/2.
inline std::vector<FaceGamma> enumerate_cone_faces(int n) {
  if (n < 1) throw std::domain_error("enumerate_cone_faces: n >= 1 required");
  std::vector<FaceGamma> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int p = 0; p < n; ++p)
    for (int a = 1; a <= p + 1; ++a) out.push_back({a, p, n - 1 - p});
  return out;
}

/// Embeds the vertex pair (s, t) of the face product into the big polytope:
/// grafts t onto leaf a (right to left) of s.
inline Tree face_vertex(const FaceGamma& gamma, const Tree& s, const Tree& t) {
  if (gamma.p < 0 || gamma.q < 0 || gamma.a < 0 || gamma.a > gamma.p + 1)
    throw std::domain_error("face_vertex: malformed face");
  if (s.internal_vertices() != gamma.p + 1)
    throw std::domain_error("face_vertex: left tree size does not match the face");
  if (t.internal_vertices() != gamma.q + 1)
    throw std::domain_error("face_vertex: right tree size does not match the face");
  return graft(s, gamma.a, t);
}

namespace detail {

inline std::shared_ptr<const Triangulation> build_associahedron(
    int n, const std::map<int, std::shared_ptr<const Triangulation>>& lower) {
  auto tri = std::make_shared<Triangulation>();
  tri->kind = PolytopeKind::associahedron;
  tri->dim = n;
  tri->trees = enumerate_trees(n + 1);
  tri->coords.reserve(tri->trees.size());
  for (const Tree& t : tri->trees) tri->coords.push_back(tree_point(t));

  if (n == 0) {
    Simplex point;
    point.vertices = {0};
    tri->simplices.push_back(std::move(point));
    return tri;
  }

  const TamariPoset& poset = tamari_poset(n + 1);
  const int apex = poset.index_of(right_comb(n + 1));

  for (const FaceGamma& face : enumerate_cone_faces(n)) {
    const Triangulation& tp = *lower.at(face.p);
    const Triangulation& tq = *lower.at(face.q);
    const std::vector<Shuffle> shuffles = enumerate_shuffles(face.p, face.q);
    for (std::size_t ai = 0; ai < tp.simplices.size(); ++ai) {
      const Simplex& alpha = tp.simplices[ai];
      for (std::size_t bi = 0; bi < tq.simplices.size(); ++bi) {
        const Simplex& beta = tq.simplices[bi];
        for (const Shuffle& theta : shuffles) {
          Simplex s;
          s.recipe.a = face.a;
          s.recipe.p = face.p;
          s.recipe.q = face.q;
          s.recipe.theta = theta.word;
          s.recipe.left = static_cast<int>(ai);
          s.recipe.right = static_cast<int>(bi);
          s.vertices.reserve(n + 1);
          int prev = -1;
          for (const auto& [i, j] : staircase(theta)) {
            Tree v = face_vertex(face, tp.trees[alpha.vertices[i]], tq.trees[beta.vertices[j]]);
            int id = poset.index_of(v);
            if (prev >= 0 && !(prev != id && poset.leq(prev, id)))
              throw std::logic_error("staircase order is not increasing in the rotation order");
            s.vertices.push_back(id);
            prev = id;
          }
          if (prev == apex || !poset.leq(prev, apex))
            throw std::logic_error("cone basis touches the apex");
          s.vertices.push_back(apex);
          s.label = compose_pf({face.a, face.p, face.q, theta, alpha.label, beta.label});
          tri->simplices.push_back(std::move(s));
        }
      }
    }
  }
  return tri;
}

inline std::shared_ptr<const Triangulation> associahedron_cache(int n) {
  if (n < 0) throw std::domain_error("triangulate_associahedron: n >= 0 required");
  if (n > 6) throw capacity_error("triangulate_associahedron: n > 6 exceeds capacity");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Triangulation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int k = 0; k <= n; ++k)
    if (!cache.contains(k)) cache[k] = build_associahedron(k, cache);
  return cache.at(n);
}

} // namespace detail

/// The cone triangulation of the n-dimensional associahedron: one simplex
/// per (face, sub-simplex pair, shuffle) choice, each a strictly increasing
/// rotation-order chain ending at the apex.  Simplex count (n+1)^(n-1).
/// Memoized; the reference stays valid for the process lifetime.
inline const Triangulation& triangulate_associahedron(int n) {
  return *detail::associahedron_cache(n);
}

/// Parking-function label of a simplex, recomputed from its recipe:
/// (a, theta_*(label(alpha), p+1+label(beta))), empty in dimension 0.
inline ParkingFunction phi_label(const SimplexRecipe& recipe) {
  if (recipe.is_base()) return {};
  if (recipe.q < 0 || recipe.a < 1 || recipe.a > recipe.p + 1)
    throw std::domain_error("phi_label: malformed recipe");
  const Triangulation& tp = triangulate_associahedron(recipe.p);
  const Triangulation& tq = triangulate_associahedron(recipe.q);
  if (recipe.left < 0 || recipe.left >= static_cast<int>(tp.simplices.size()) ||
      recipe.right < 0 || recipe.right >= static_cast<int>(tq.simplices.size()))
    throw std::domain_error("phi_label: sub-simplex index out of range");
  return compose_pf({recipe.a, recipe.p, recipe.q, Shuffle(recipe.theta),
                     phi_label(tp.simplices[recipe.left].recipe),
                     phi_label(tq.simplices[recipe.right].recipe)});
}

/// Full validation of the associahedron triangulation: combinatorial checks
/// at every supported n, exact geometric checks for n <= 4.
inline ValidationReport validate_association(int n, std::uint64_t seed = 42, int samples = 50,
                                             int hull_samples = 200) {
  const Triangulation& tri = triangulate_associahedron(n);
  ValidationReport report;

  const BigInt expected = (n == 0) ? BigInt(1) : parking_count(n);
  report.add("simplex_count", BigInt(tri.simplices.size()) == expected,
             {{"actual", tri.simplices.size()}, {"expected", expected.str()}});

  const TamariPoset& poset = tamari_poset(n + 1);
  const int apex = poset.index_of(right_comb(n + 1));
  bool apex_ok = true;
  bool chain_ok = true;
  Json chain_bad = Json();
  for (std::size_t si = 0; si < tri.simplices.size(); ++si) {
    const auto& verts = tri.simplices[si].vertices;
    apex_ok = apex_ok && verts.back() == apex;
    for (std::size_t i = 0; i < verts.size() && chain_ok; ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (verts[i] == verts[j] || !poset.leq(verts[i], verts[j])) {
          chain_ok = false;
          chain_bad = Json{{"simplex", si}, {"pair", {verts[i], verts[j]}}};
          break;
        }
  }
  report.add("apex", apex_ok, {{"apex", apex}});
  Json chain_details{{"simplices", tri.simplices.size()}};
  if (!chain_bad.is_null()) chain_details["first_violation"] = chain_bad;
  report.add("tamari_chain", chain_ok, std::move(chain_details));

  std::set<ParkingFunction> labels;
  bool duplicate = false;
  for (const Simplex& s : tri.simplices) duplicate = duplicate || !labels.insert(s.label).second;
  const auto all = enumerate_parking(n);
  const bool bijective =
      !duplicate && labels.size() == all.size() && std::equal(labels.begin(), labels.end(), all.begin());
  report.add("label_bijection", bijective,
             {{"labels", labels.size()}, {"expected", all.size()}, {"duplicates", duplicate}});

  report.add("hyperplane", hyperplane_check(tri.coords, n + 1),
             {{"points", tri.coords.size()}, {"sum", (n + 1) * (n + 2) / 2}});

  if (n <= 4) {
    report.merge(nondegeneracy_check(tri));
    report.merge(facet_pairing_check(tri));
    report.merge(sample_membership_check(tri, seed, samples, hull_samples));
  }
  return report;
}

} // namespace parktri
