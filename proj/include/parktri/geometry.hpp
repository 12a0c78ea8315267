#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parktri/common.hpp"
#include "parktri/triangulation.hpp"

namespace parktri {

using Json = nlohmann::json;

/// Exact determinant by the Bareiss fraction-free scheme.
inline BigInt int_det(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Adjugate matrix: adj(B) * B = det(B) * I.  Computed from cofactors.
inline std::vector<std::vector<BigInt>> int_adjugate(const std::vector<std::vector<BigInt>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<BigInt>> adj(n, std::vector<BigInt>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      BigInt d = int_det(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

/// Determinant of the square matrix whose rows are the edge vectors
/// points[i] - points[0] (i >= 1) plus the all-ones row.  Nonzero exactly
/// when the points span a full-dimensional simplex of the common hyperplane
/// sum(x_i) = const.  Requires as many points as ambient coordinates and a
/// shared coordinate sum.
inline BigInt simplex_det(const std::vector<Coord>& points) {
  if (points.empty()) throw std::domain_error("simplex_det: no points");
  const std::size_t m = points[0].size();
  if (points.size() != m)
    throw std::domain_error("simplex_det: point count must equal ambient dimension");
  long long sum0 = 0;
  for (int x : points[0]) sum0 += x;
  for (const Coord& p : points) {
    if (p.size() != m) throw std::domain_error("simplex_det: ragged points");
    long long s = 0;
    for (int x : p) s += x;
    if (s != sum0) throw std::domain_error("simplex_det: points not in a common hyperplane");
  }
  std::vector<std::vector<BigInt>> rows(m, std::vector<BigInt>(m));
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) rows[i - 1][c] = points[i][c] - points[0][c];
  for (std::size_t c = 0; c < m; ++c) rows[m - 1][c] = 1;
  return int_det(rows);
}

/// True iff every point has n coordinates summing to n(n+1)/2.
inline bool hyperplane_check(const std::vector<Coord>& points, int n) {
  const long long expected = static_cast<long long>(n) * (n + 1) / 2;
  for (const Coord& p : points) {
    if (static_cast<int>(p.size()) != n) return false;
    long long s = 0;
    for (int x : p) s += x;
    if (s != expected) return false;
  }
  return true;
}

struct CheckResult {
  bool pass = false;
  Json details = Json::object();
};

/// Named check outcomes, in insertion order; serializes to a JSON object
/// mapping check name to {pass, ...details}.
struct ValidationReport {
  std::vector<std::pair<std::string, CheckResult>> checks;

  void add(const std::string& name, bool pass, Json details = Json::object()) {
    checks.push_back({name, CheckResult{pass, std::move(details)}});
  }

  void merge(const ValidationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& [n, c] : checks)
      if (n == name) return &c;
    return nullptr;
  }

  bool overall() const {
    for (const auto& [name, c] : checks)
      if (!c.pass) return false;
    return true;
  }

  Json to_json() const {
    Json out = Json::object();
    for (const auto& [name, c] : checks) {
      Json entry = c.details;
      entry["pass"] = c.pass;
      out[name] = entry;
    }
    return out;
  }
};

namespace detail {

inline int sign_of(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

/// Per-simplex solver for barycentric sign tests, precomputed once.
/// B has columns (vertex coords without the last row; 1); membership of the
/// rational point y/W reduces to sign agreement of adj(B)*(y', W) with det(B).
struct SimplexSolver {
  std::vector<std::vector<BigInt>> adj;
  int det_sign = 0;

  SimplexSolver(const Triangulation& tri, const Simplex& s) {
    const std::size_t m = tri.coords[0].size();
    std::vector<std::vector<BigInt>> b(m, std::vector<BigInt>(m));
    for (std::size_t j = 0; j < m; ++j) {
      const Coord& v = tri.coords[s.vertices[j]];
      for (std::size_t r = 0; r + 1 < m; ++r) b[r][j] = v[r];
      b[m - 1][j] = 1;
    }
    adj = int_adjugate(b);
    det_sign = sign_of(int_det(b));
  }

  // y = W * point, both exact; strict demands the open simplex.
  bool contains(const std::vector<BigInt>& y, const BigInt& w, bool strict) const {
    const std::size_t m = adj.size();
    for (std::size_t i = 0; i < m; ++i) {
      BigInt z = 0;
      for (std::size_t j = 0; j + 1 < m; ++j) z += adj[i][j] * y[j];
      z += adj[i][m - 1] * w;
      int s = sign_of(z);
      if (s == 0 ? strict : s != det_sign) return false;
    }
    return true;
  }
};

} // namespace detail

/// Checks that every top simplex is full-dimensional (nonzero simplex_det)
/// and records the orientation sign census and the exact sum of |det|.
inline ValidationReport nondegeneracy_check(const Triangulation& tri) {
  int positive = 0;
  int negative = 0;
  int first_bad = -1;
  BigInt abs_sum = 0;
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    std::vector<Coord> pts;
    pts.reserve(tri.simplices[i].vertices.size());
    for (int v : tri.simplices[i].vertices) pts.push_back(tri.coords[v]);
    BigInt d = simplex_det(pts);
    if (d > 0)
      ++positive;
    else if (d < 0)
      ++negative;
    else if (first_bad < 0)
      first_bad = static_cast<int>(i);
    abs_sum += abs(d);
  }
  ValidationReport report;
  Json details{{"simplices", tri.simplices.size()},
               {"positive", positive},
               {"negative", negative},
               {"abs_det_sum", abs_sum.str()}};
  if (first_bad >= 0) details["first_degenerate"] = first_bad;
  report.add("nondegenerate", first_bad < 0, std::move(details));
  return report;
}

/// Side of the affine span of `facet` (within the common hyperplane) on
/// which x lies: 0 on the span, otherwise a consistent +1 / -1.
inline int facet_side(const std::vector<Coord>& facet, const Coord& x) {
  const std::size_t m = x.size();
  if (facet.size() + 1 != m) throw std::domain_error("facet_side: facet size mismatch");
  std::vector<std::vector<BigInt>> rows(m, std::vector<BigInt>(m));
  for (std::size_t i = 1; i < facet.size(); ++i)
    for (std::size_t c = 0; c < m; ++c) rows[i - 1][c] = facet[i][c] - facet[0][c];
  for (std::size_t c = 0; c < m; ++c) {
    rows[m - 2][c] = x[c] - facet[0][c];
    rows[m - 1][c] = 1;
  }
  return detail::sign_of(int_det(rows));
}

/// Pseudo-manifold census: every codimension-one face of a top simplex is
/// shared by exactly two simplices, or lies on the boundary (one simplex)
/// with every polytope vertex weakly on one side of its affine span.
inline ValidationReport facet_pairing_check(const Triangulation& tri) {
  ValidationReport report;
  if (tri.dim == 0) {
    report.add("facet_pairing", true, {{"internal", 0}, {"boundary", 0}});
    return report;
  }
  std::map<std::vector<int>, std::vector<int>> incidence;
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    const auto& verts = tri.simplices[i].vertices;
    for (std::size_t omit = 0; omit < verts.size(); ++omit) {
      std::vector<int> key;
      key.reserve(verts.size() - 1);
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != omit) key.push_back(verts[j]);
      std::sort(key.begin(), key.end());
      incidence[key].push_back(static_cast<int>(i));
    }
  }
  int internal = 0;
  int boundary = 0;
  Json bad = Json();
  for (const auto& [facet, owners] : incidence) {
    if (owners.size() == 2) {
      ++internal;
      continue;
    }
    if (owners.size() != 1) {
      if (bad.is_null())
        bad = Json{{"facet", facet}, {"owners", owners}, {"reason", "multiplicity"}};
      continue;
    }
    std::vector<Coord> pts;
    pts.reserve(facet.size());
    for (int v : facet) pts.push_back(tri.coords[v]);
    bool has_pos = false;
    bool has_neg = false;
    for (const Coord& x : tri.coords) {
      int s = facet_side(pts, x);
      has_pos |= s > 0;
      has_neg |= s < 0;
      if (has_pos && has_neg) break;
    }
    if (has_pos && has_neg) {
      if (bad.is_null())
        bad = Json{{"facet", facet}, {"owners", owners}, {"reason", "unsupported"}};
      continue;
    }
    ++boundary;
  }
  Json details{{"internal", internal}, {"boundary", boundary}};
  if (!bad.is_null()) details["first_violation"] = bad;
  report.add("facet_pairing", bad.is_null(), std::move(details));
  return report;
}

/// Seeded sampling checks: (i) pseudo-random rational points strictly inside
/// each simplex lie in no other simplex; (ii) pseudo-random rational convex
/// combinations of all polytope vertices lie in at least one simplex.
/// Deterministic for a given seed; draws are indexed, not sequential, so the
/// result does not depend on evaluation order.
inline ValidationReport sample_membership_check(const Triangulation& tri, std::uint64_t seed,
                                                int interior_count, int coverage_count) {
  constexpr std::uint64_t weight_modulus = 1000003;
  constexpr std::uint64_t coverage_stream = 1ULL << 40;
  const std::size_t m = tri.coords[0].size();

  std::vector<detail::SimplexSolver> solvers;
  solvers.reserve(tri.simplices.size());
  for (const Simplex& s : tri.simplices) solvers.emplace_back(tri, s);

  auto weighted_point = [&](const std::vector<int>& verts, std::uint64_t stream,
                            std::uint64_t sample, std::vector<BigInt>& y, BigInt& w) {
    y.assign(m, 0);
    w = 0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      std::uint64_t draw =
          1 + mix_draw(seed, stream, sample * verts.size() + j) % weight_modulus;
      BigInt wj = draw;
      const Coord& v = tri.coords[verts[j]];
      for (std::size_t c = 0; c < m; ++c) y[c] += wj * v[c];
      w += wj;
    }
  };

  ValidationReport report;
  std::vector<BigInt> y;
  BigInt w;

  long long violations = 0;
  Json first_violation = Json();
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    for (int sample = 0; sample < interior_count; ++sample) {
      weighted_point(tri.simplices[i].vertices, static_cast<std::uint64_t>(i), sample, y, w);
      if (!solvers[i].contains(y, w, true)) {
        ++violations;
        if (first_violation.is_null())
          first_violation = Json{{"simplex", i}, {"sample", sample}, {"reason", "not_interior"}};
        continue;
      }
      for (std::size_t other = 0; other < tri.simplices.size(); ++other) {
        if (other == i) continue;
        if (solvers[other].contains(y, w, false)) {
          ++violations;
          if (first_violation.is_null())
            first_violation = Json{{"simplex", i}, {"sample", sample}, {"also_in", other}};
        }
      }
    }
  }
  Json disjoint_details{{"points", tri.simplices.size() * static_cast<std::size_t>(interior_count)},
                        {"violations", violations}};
  if (!first_violation.is_null()) disjoint_details["first_violation"] = first_violation;
  report.add("sampling_disjoint", violations == 0, std::move(disjoint_details));

  std::vector<int> all(tri.vertex_count());
  for (int v = 0; v < tri.vertex_count(); ++v) all[v] = v;
  long long misses = 0;
  Json first_miss = Json();
  for (int sample = 0; sample < coverage_count; ++sample) {
    weighted_point(all, coverage_stream, sample, y, w);
    bool hit = false;
    for (const auto& solver : solvers)
      if (solver.contains(y, w, false)) {
        hit = true;
        break;
      }
    if (!hit) {
      ++misses;
      if (first_miss.is_null()) first_miss = Json{{"sample", sample}};
    }
  }
  Json coverage_details{{"points", coverage_count}, {"misses", misses}};
  if (!first_miss.is_null()) coverage_details["first_miss"] = first_miss;
  report.add("sampling_coverage", misses == 0, std::move(coverage_details));
  return report;
}

inline ValidationReport sample_membership_check(const Triangulation& tri, std::uint64_t seed,
                                                int count) {
  return sample_membership_check(tri, seed, count, count);
}

} // namespace parktri
