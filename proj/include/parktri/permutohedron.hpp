#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "parktri/common.hpp"
#include "parktri/geometry.hpp"
#include "parktri/shuffles.hpp"
#include "parktri/triangulation.hpp"

namespace parktri {

inline void require_permutation(const Permutation& sigma) {
  if (sigma.empty()) throw std::domain_error("permutation must be nonempty");
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1])
      throw std::domain_error("not a permutation of 1..m");
    seen[v - 1] = 1;
  }
}

inline Permutation identity_permutation(int m) {
  Permutation out(m);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

inline Permutation reversal_permutation(int m) {
  Permutation out(m);
  for (int i = 0; i < m; ++i) out[i] = m - i;
  return out;
}

/// The vertex of the permutohedron named by sigma: (sigma(1), ..., sigma(m)).
inline Coord permuto_point(const Permutation& sigma) {
  require_permutation(sigma);
  return Coord(sigma.begin(), sigma.end());
}

/// Covers of sigma in the weak order whose covering pairs are exactly the
/// polytope edges: swap the values k and k+1 wherever k stands left of k+1.
/// The identity is the unique minimum, the reversal the unique maximum.
/// Results are sorted lexicographically.
inline std::vector<Permutation> bruhat_covers(const Permutation& sigma) {
  require_permutation(sigma);
  const int m = static_cast<int>(sigma.size());
  std::vector<int> pos(m + 1);
  for (int i = 0; i < m; ++i) pos[sigma[i]] = i;
  std::vector<Permutation> out;
  for (int k = 1; k < m; ++k)
    if (pos[k] < pos[k + 1]) {
      Permutation next = sigma;
      std::swap(next[pos[k]], next[pos[k + 1]]);
      out.push_back(std::move(next));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// The weak order on all permutations of {1..m}, with reachability
/// precomputed.  Elements are in lexicographic order.
class WeakOrderPoset {
 public:
  explicit WeakOrderPoset(int m) : m_(m) {
    if (m < 1) throw std::domain_error("WeakOrderPoset: m >= 1 required");
    if (m > 6) throw capacity_error("WeakOrderPoset: m > 6 exceeds capacity");
    Permutation p = identity_permutation(m);
    do {
      elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int size = static_cast<int>(elements_.size());
    for (int i = 0; i < size; ++i) index_[elements_[i]] = i;
    covers_.resize(size);
    std::vector<int> indegree(size, 0);
    for (int i = 0; i < size; ++i)
      for (const Permutation& c : bruhat_covers(elements_[i])) {
        int j = index_.at(c);
        covers_[i].push_back(j);
        ++indegree[j];
      }
    leq_.assign(size, std::vector<std::uint8_t>(size, 0));
    std::vector<int> stack;
    for (int i = 0; i < size; ++i) {
      leq_[i][i] = 1;
      stack.assign(1, i);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : covers_[u])
          if (!leq_[i][v]) {
            leq_[i][v] = 1;
            stack.push_back(v);
          }
      }
    }
    min_ = max_ = -1;
    for (int i = 0; i < size; ++i) {
      if (indegree[i] == 0) {
        if (min_ >= 0) throw std::logic_error("WeakOrderPoset: multiple minima");
        min_ = i;
      }
      if (covers_[i].empty()) {
        if (max_ >= 0) throw std::logic_error("WeakOrderPoset: multiple maxima");
        max_ = i;
      }
    }
    if (elements_[min_] != identity_permutation(m) || elements_[max_] != reversal_permutation(m))
      throw std::logic_error("WeakOrderPoset: unexpected extremes");
  }

  int m() const { return m_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_.at(i); }

  int index_of(const Permutation& sigma) const {
    auto it = index_.find(sigma);
    if (it == index_.end()) throw std::domain_error("WeakOrderPoset: unknown permutation");
    return it->second;
  }

  const std::vector<int>& covers(int i) const { return covers_.at(i); }
  bool leq(int i, int j) const { return leq_.at(i).at(j) != 0; }
  int minimum() const { return min_; }
  int maximum() const { return max_; }

 private:
  int m_;
  std::vector<Permutation> elements_;
  std::map<Permutation, int> index_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<std::uint8_t>> leq_;
  int min_;
  int max_;
};

inline const WeakOrderPoset& weak_order_poset(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WeakOrderPoset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<WeakOrderPoset>(m);
  return *slot;
}

inline bool bruhat_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::domain_error("bruhat_leq: size mismatch");
  const WeakOrderPoset& poset = weak_order_poset(static_cast<int>(sigma.size()));
  return poset.leq(poset.index_of(sigma), poset.index_of(tau));
}

/// Weakly increasing surjection {0..n+1} ->> {0..p+1}, stored by values.
/// An alternative facet label; used here only for counting cross-checks.
struct OrderedSurjection {
  std::vector<int> values;

  explicit OrderedSurjection(std::vector<int> v) : values(std::move(v)) {
    if (values.size() < 2 || values.front() != 0)
      throw std::domain_error("OrderedSurjection: must start at 0");
    for (std::size_t i = 1; i < values.size(); ++i) {
      int step = values[i] - values[i - 1];
      if (step < 0 || step > 1)
        throw std::domain_error("OrderedSurjection: steps must be 0 or 1");
    }
  }

  int n() const { return static_cast<int>(values.size()) - 2; }
  int p() const { return values.back() - 1; }
};

inline BigInt ordered_surjection_count(int n, int p) {
  if (n < 0 || p < 0 || p > n) throw std::domain_error("ordered_surjection_count: bad arguments");
  return binomial(n + 1, p + 1);
}

/// Number of cone-basis facets of size p+1: all such subsets except the one
/// containing the apex.
inline BigInt sm_count(int n, int p) {
  if (n < 1 || p < 0 || p > n - 1) throw std::domain_error("sm_count: p out of range");
  return binomial(n + 1, p + 1) - 1;
}

/// Facet of the permutohedron: the set of positions carrying the smallest
/// values 1..|positions|.
struct FacetSubset {
  std::vector<int> positions;

  friend bool operator==(const FacetSubset&, const FacetSubset&) = default;
};

/// All cone-basis facets: for each size p+1 (p ascending), the size-(p+1)
/// subsets of {1..n+1} in lexicographic order, excluding the suffix set
/// {n-p+1..n+1} whose facet contains the apex.
inline std::vector<FacetSubset> enumerate_cone_facets(int n) {
  if (n < 1) throw std::domain_error("enumerate_cone_facets: n >= 1 required");
  const int m = n + 1;
  std::vector<FacetSubset> out;
  for (int p = 0; p <= n - 1; ++p) {
    const int k = p + 1;
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
      out.push_back({subset});
      int i = k - 1;
      while (i >= 0 && subset[i] == m - (k - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (out.back().positions.front() != m - p)
      throw std::logic_error("enumerate_cone_facets: suffix set is not last");
    out.pop_back();
  }
  return out;
}

/// Embeds a vertex pair of the facet product into the big polytope: the
/// positions in A carry the pattern of s1 on the values 1..|A|, the others
/// the pattern of s2 shifted up by |A|.
inline Permutation facet_embed(const FacetSubset& A, const Permutation& s1,
                               const Permutation& s2) {
  require_permutation(s1);
  require_permutation(s2);
  const int k = static_cast<int>(s1.size());
  const int m = k + static_cast<int>(s2.size());
  if (static_cast<int>(A.positions.size()) != k)
    throw std::domain_error("facet_embed: subset size does not match the first pattern");
  for (std::size_t i = 0; i < A.positions.size(); ++i) {
    int pos = A.positions[i];
    if (pos < 1 || pos > m || (i > 0 && A.positions[i - 1] >= pos))
      throw std::domain_error("facet_embed: subset must be sorted within 1..m");
  }
  Permutation out(m, 0);
  for (int i = 0; i < k; ++i) out[A.positions[i] - 1] = s1[i];
  int j = 0;
  for (int pos = 0; pos < m; ++pos)
    if (out[pos] == 0) out[pos] = k + s2[j++];
  return out;
}

/// Number of top simplices of the n-dimensional permutohedron:
/// ZP_0 = 1, ZP_n = sum_p (C(n+1,p+1)-1) C(n-1,p) ZP_p ZP_{n-1-p}.
inline const BigInt& zp_count(int n) {
  if (n < 0) throw std::domain_error("zp_count: n >= 0 required");
  if (n > 200) throw capacity_error("zp_count: n > 200 exceeds capacity");
  static std::mutex mu;
  static std::vector<BigInt> memo = [] {
    std::vector<BigInt> v;
    v.reserve(201);
    v.push_back(1);
    return v;
  }();
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    const int k = static_cast<int>(memo.size());
    BigInt total = 0;
    for (int p = 0; p <= k - 1; ++p)
      total += (binomial(k + 1, p + 1) - 1) * binomial(k - 1, p) * memo[p] * memo[k - 1 - p];
    memo.push_back(total);
  }
  return memo[n];
}

namespace detail {

inline std::shared_ptr<const Triangulation> build_permutohedron(
    int n, const std::map<int, std::shared_ptr<const Triangulation>>& lower) {
  auto tri = std::make_shared<Triangulation>();
  tri->kind = PolytopeKind::permutohedron;
  tri->dim = n;
  const int m = n + 1;
  Permutation p = identity_permutation(m);
  do {
    tri->perms.push_back(p);
    tri->coords.push_back(Coord(p.begin(), p.end()));
  } while (std::next_permutation(p.begin(), p.end()));

  if (n == 0) {
    Simplex point;
    point.vertices = {0};
    tri->simplices.push_back(std::move(point));
    return tri;
  }

  const WeakOrderPoset& poset = weak_order_poset(m);
  const int apex = poset.maximum();

  for (const FacetSubset& A : enumerate_cone_facets(n)) {
    const int fp = static_cast<int>(A.positions.size()) - 1;
    const int fq = n - 1 - fp;
    const Triangulation& tp = *lower.at(fp);
    const Triangulation& tq = *lower.at(fq);
    const std::vector<Shuffle> shuffles = enumerate_shuffles(fp, fq);
    for (std::size_t ai = 0; ai < tp.simplices.size(); ++ai) {
      const Simplex& alpha = tp.simplices[ai];
      for (std::size_t bi = 0; bi < tq.simplices.size(); ++bi) {
        const Simplex& beta = tq.simplices[bi];
        for (const Shuffle& theta : shuffles) {
          Simplex s;
          s.recipe.subset = A.positions;
          s.recipe.p = fp;
          s.recipe.q = fq;
          s.recipe.theta = theta.word;
          s.recipe.left = static_cast<int>(ai);
          s.recipe.right = static_cast<int>(bi);
          s.vertices.reserve(n + 1);
          int prev = -1;
          for (const auto& [i, j] : staircase(theta)) {
            Permutation sigma =
                facet_embed(A, tp.perms[alpha.vertices[i]], tq.perms[beta.vertices[j]]);
            int id = poset.index_of(sigma);
            if (prev >= 0 && !(prev != id && poset.leq(prev, id)))
              throw std::logic_error("staircase order is not increasing in the weak order");
            s.vertices.push_back(id);
            prev = id;
          }
          if (prev == apex || !poset.leq(prev, apex))
            throw std::logic_error("cone basis touches the apex");
          s.vertices.push_back(apex);
          tri->simplices.push_back(std::move(s));
        }
      }
    }
  }
  return tri;
}

inline std::shared_ptr<const Triangulation> permutohedron_cache(int n) {
  if (n < 0) throw std::domain_error("triangulate_permutohedron: n >= 0 required");
  if (n > 3) throw capacity_error("triangulate_permutohedron: n > 3 exceeds capacity");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Triangulation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int k = 0; k <= n; ++k)
    if (!cache.contains(k)) cache[k] = build_permutohedron(k, cache);
  return cache.at(n);
}

} // namespace detail

/// The cone triangulation of the n-dimensional permutohedron: one simplex
/// per (facet, sub-simplex pair, shuffle) choice, each a strictly increasing
/// weak-order chain ending at the apex.  Simplex count zp_count(n).
/// Memoized; the reference stays valid for the process lifetime.
inline const Triangulation& triangulate_permutohedron(int n) {
  return *detail::permutohedron_cache(n);
}

/// Full validation of the permutohedron triangulation; all supported sizes
/// get the exact geometric checks.
inline ValidationReport validate_permutohedron(int n, std::uint64_t seed = 42, int samples = 50,
                                               int hull_samples = 200) {
  const Triangulation& tri = triangulate_permutohedron(n);
  ValidationReport report;

  report.add("simplex_count", BigInt(tri.simplices.size()) == zp_count(n),
             {{"actual", tri.simplices.size()}, {"expected", zp_count(n).str()}});

  const WeakOrderPoset& poset = weak_order_poset(n + 1);
  const int apex = poset.maximum();
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
  report.add("bruhat_chain", chain_ok, std::move(chain_details));

  report.add("hyperplane", hyperplane_check(tri.coords, n + 1),
             {{"points", tri.coords.size()}, {"sum", (n + 1) * (n + 2) / 2}});

  report.merge(nondegeneracy_check(tri));
  report.merge(facet_pairing_check(tri));
  report.merge(sample_membership_check(tri, seed, samples, hull_samples));
  return report;
}

} // namespace parktri
