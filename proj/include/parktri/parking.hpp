#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "parktri/common.hpp"
#include "parktri/shuffles.hpp"

namespace parktri {

/// Sequence of integers (i_1,...,i_n); it is a parking function when the
/// sorted rearrangement (j_1 <= ... <= j_n) satisfies 1 <= j_k <= k.
using ParkingFunction = std::vector<int>;

inline bool is_parking(const ParkingFunction& seq) {
  ParkingFunction sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] < 1 || sorted[k] > static_cast<int>(k) + 1) return false;
  return true;
}

/// Number of parking functions of length n, exact: (n+1)^(n-1).
inline BigInt parking_count(int n) {
  if (n < 1) throw std::domain_error("parking_count: n >= 1 required");
  return ipow(n + 1, n - 1);
}

/// Streams parking functions of length n in lexicographic order.
inline void for_each_parking(int n, const std::function<void(const ParkingFunction&)>& fn) {
  if (n < 0) throw std::domain_error("for_each_parking: negative n");
  if (n > 8) throw capacity_error("for_each_parking: n > 8 exceeds capacity");
  if (n == 0) {
    fn(ParkingFunction{});
    return;
  }
  ParkingFunction seq;
  seq.reserve(n);
  // below[k] = how many chosen entries are <= k+1
  std::vector<int> below(n, 0);
  auto feasible = [&]() {
    const int placed = static_cast<int>(seq.size());
    for (int k = 0; k < n; ++k)
      if (below[k] + (n - placed) < k + 1) return false;
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == n) {
      fn(seq);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      seq.push_back(v);
      for (int k = v - 1; k < n; ++k) ++below[k];
      if (feasible()) self(self);
      for (int k = v - 1; k < n; ++k) --below[k];
      seq.pop_back();
    }
  };
  rec(rec);
}

/// All parking functions of length n in lexicographic order.
inline std::vector<ParkingFunction> enumerate_parking(int n) {
  std::vector<ParkingFunction> out;
  for_each_parking(n, [&](const ParkingFunction& f) { out.push_back(f); });
  return out;
}

/// Decomposition of a parking function of length n into its first entry a,
/// a shuffle theta of the remaining n-1 entries, and two shorter parking
/// functions f (length p) and g (length q), with p + q = n - 1 and
/// 1 <= a <= p + 1.
struct PiDecomposition {
  int a = 0;
  int p = 0;
  int q = 0;
  Shuffle theta;
  ParkingFunction f;
  ParkingFunction g;

  friend bool operator==(const PiDecomposition& x, const PiDecomposition& y) {
    return x.a == y.a && x.p == y.p && x.q == y.q && x.theta == y.theta && x.f == y.f &&
           x.g == y.g;
  }
};

/// Assembles (a, theta_*(f, p+1+g)): the tail interleaves f with g shifted
/// up by p+1, following theta.
inline ParkingFunction compose_pf(const PiDecomposition& d) {
  if (d.p < 0 || d.q < 0) throw std::domain_error("compose_pf: negative block length");
  if (d.a < 1 || d.a > d.p + 1) throw std::domain_error("compose_pf: a out of range");
  if (static_cast<int>(d.f.size()) != d.p || !is_parking(d.f))
    throw std::domain_error("compose_pf: f is not a parking function of length p");
  if (static_cast<int>(d.g.size()) != d.q || !is_parking(d.g))
    throw std::domain_error("compose_pf: g is not a parking function of length q");
  if (d.theta.p() != d.p || d.theta.q() != d.q)
    throw std::domain_error("compose_pf: shuffle type mismatch");
  ParkingFunction shifted = d.g;
  for (int& x : shifted) x += d.p + 1;
  ParkingFunction tail = interleave(d.theta, d.f, shifted);
  ParkingFunction out;
  out.reserve(tail.size() + 1);
  out.push_back(d.a);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

/// Inverse of compose_pf.  Writing x for the sorted rearrangement of pf,
/// a = pf[0], j = least index with x_j = a (1-based), k = least index > j
/// with x_k = k (or n+1 if none), p = k-2, q = n-1-p; the tail splits at the
/// threshold p+1: entries <= p+1 form f, entries >= p+2 drop by p+1 to form
/// g, and theta records the split pattern.
inline PiDecomposition decompose_pf(const ParkingFunction& pf) {
  const int n = static_cast<int>(pf.size());
  if (n < 1 || !is_parking(pf)) throw std::domain_error("decompose_pf: not a parking function");
  ParkingFunction x = pf;
  std::sort(x.begin(), x.end());
  const int a = pf[0];
  int j = 0;
  while (x[j] != a) ++j;  // exists: a occurs in pf
  ++j;                    // 1-based
  int k = n + 1;
  for (int i = j + 1; i <= n; ++i)
    if (x[i - 1] == i) {
      k = i;
      break;
    }
  PiDecomposition d;
  d.a = a;
  d.p = k - 2;
  d.q = n - 1 - d.p;
  std::string word;
  word.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    if (pf[i] <= d.p + 1) {
      d.f.push_back(pf[i]);
      word += 'U';
    } else {
      d.g.push_back(pf[i] - (d.p + 1));
      word += 'V';
    }
  }
  d.theta = Shuffle(std::move(word));
  return d;
}

/// Kernel of the simplex-counting recursion:
/// d_0 = 1, d_n = sum_p (p+1) C(n-1,p) d_p d_{n-p-1}.
inline const BigInt& simplex_count_recursive(int n) {
  if (n < 0) throw std::domain_error("simplex_count_recursive: negative n");
  if (n > 200) throw capacity_error("simplex_count_recursive: n > 200 exceeds capacity");
  static std::mutex mu;
  static std::vector<BigInt> memo = [] {
    std::vector<BigInt> v;
    v.reserve(201);
    v.push_back(1);
    return v;
  }();
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    BigInt total = 0;
    for (int p = 0; p <= m - 1; ++p)
      total += BigInt(p + 1) * binomial(m - 1, p) * memo[p] * memo[m - 1 - p];
    memo.push_back(total);
  }
  return memo[n];
}

/// Evaluates both sides of the counting identity: the recursion value d_n and
/// the closed form (n+1)^(n-1).  They agree for every n >= 1.
inline std::pair<BigInt, BigInt> abel_check(int n) {
  if (n < 1) throw std::domain_error("abel_check: n >= 1 required");
  return {simplex_count_recursive(n), parking_count(n)};
}

} // namespace parktri
