#pragma once

// Independent reference computations used to pin expected values.  These
// deliberately avoid the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

// Catalan numbers by the convolution recurrence C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
inline Big catalan(int n) {
  std::vector<Big> c{1};
  for (int m = 1; m <= n; ++m) {
    Big s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

// Binomial coefficients by Pascal's triangle.
inline Big pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<Big> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Big> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[k];
}

// Direct check of the parking property, written independently of the library.
inline bool parking_property(std::vector<int> seq) {
  std::sort(seq.begin(), seq.end());
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (!(1 <= seq[k] && seq[k] <= static_cast<int>(k + 1))) return false;
  return true;
}

// Brute-force count of parking functions among all n^n sequences over 1..n.
inline std::int64_t parking_brute_count(int n) {
  std::int64_t count = 0;
  std::vector<int> seq(n, 1);
  for (;;) {
    if (parking_property(seq)) ++count;
    int i = n - 1;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
  return count;
}

// Count of weakly increasing surjections from a chain of n+2 elements onto a
// chain of p+2 elements, enumerated directly.
inline std::int64_t weakly_increasing_surjections(int n, int p) {
  std::int64_t count = 0;
  std::function<void(int, int)> rec = [&](int placed, int top) {
    if (placed == n + 2) {
      if (top == p + 1) ++count;
      return;
    }
    if (placed == 0) {
      rec(1, 0);  // first element must map to 0
      return;
    }
    rec(placed + 1, top);  // repeat current value
    if (top < p + 1) rec(placed + 1, top + 1);
  };
  rec(0, 0);
  return count;
}

// 3x3 determinant by the Sarrus rule.
inline long long det3(const long long m[3][3]) {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] +
         m[0][2] * m[1][0] * m[2][1] - m[0][2] * m[1][1] * m[2][0] -
         m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

} // namespace oracle
