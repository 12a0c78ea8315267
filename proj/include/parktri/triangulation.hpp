#pragma once

#include <string>
#include <vector>

#include "parktri/common.hpp"
#include "parktri/parking.hpp"
#include "parktri/trees.hpp"

namespace parktri {

enum class PolytopeKind { associahedron, permutohedron };

inline const char* kind_name(PolytopeKind kind) {
  return kind == PolytopeKind::associahedron ? "assoc" : "perm";
}

/// How a top simplex was assembled.  A base recipe (p < 0) is the single
/// vertex of the zero-dimensional polytope.  Otherwise the simplex is the
/// cone over a staircase simplex of the boundary cell selected by `a`
/// (associahedron) or `subset` (permutohedron); `left` and `right` index the
/// sub-simplices in the triangulations of the two factors, of dimensions
/// p and q.
struct SimplexRecipe {
  int a = 0;
  int p = -1;
  int q = -1;
  std::vector<int> subset;  // permutohedron only
  std::string theta;
  int left = -1;
  int right = -1;

  bool is_base() const { return p < 0; }
};

/// Top-dimensional simplex: vertex indices into the owning triangulation's
/// vertex table, listed in increasing order of the vertex partial order with
/// the apex (South pole) last.
struct Simplex {
  std::vector<int> vertices;
  ParkingFunction label;  // associahedron only
  SimplexRecipe recipe;
};

/// Full triangulation of one polytope.  Exactly one of `trees` / `perms` is
/// populated, matching `kind`; `coords` holds the integer coordinates of
/// every polytope vertex in the same order.
struct Triangulation {
  PolytopeKind kind = PolytopeKind::associahedron;
  int dim = 0;
  std::vector<Tree> trees;
  std::vector<Permutation> perms;
  std::vector<Coord> coords;
  std::vector<Simplex> simplices;

  int vertex_count() const { return static_cast<int>(coords.size()); }
};

} // namespace parktri
