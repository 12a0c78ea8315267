#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parktri/common.hpp"

namespace parktri {

/// A (p,q)-shuffle stored as a word over {U, V} with p letters U and q
/// letters V.  Lexicographic order with U < V is the canonical order.
struct Shuffle {
  std::string word;

  Shuffle() = default;
  explicit Shuffle(std::string w) : word(std::move(w)) { validate(); }

  static Shuffle parse(std::string_view w) { return Shuffle(std::string(w)); }

  int p() const { return static_cast<int>(std::count(word.begin(), word.end(), 'U')); }
  int q() const { return static_cast<int>(word.size()) - p(); }
  int size() const { return static_cast<int>(word.size()); }

  friend bool operator==(const Shuffle& a, const Shuffle& b) { return a.word == b.word; }
  friend bool operator<(const Shuffle& a, const Shuffle& b) { return a.word < b.word; }

 private:
  void validate() const {
    for (char c : word)
      if (c != 'U' && c != 'V')
        throw std::invalid_argument("shuffle word may contain only U and V");
  }
};

inline BigInt shuffle_count(int p, int q) {
  if (p < 0 || q < 0) throw std::domain_error("shuffle_count: negative block size");
  return binomial(p + q, p);
}

/// All (p,q)-shuffles in lexicographic order (U < V).
inline std::vector<Shuffle> enumerate_shuffles(int p, int q) {
  if (p < 0 || q < 0) throw std::domain_error("enumerate_shuffles: negative block size");
  std::vector<Shuffle> out;
  std::string word;
  word.reserve(static_cast<std::size_t>(p) + q);
  auto rec = [&](auto&& self, int u, int v) -> void {
    if (u == 0 && v == 0) {
      Shuffle s;
      s.word = word;
      out.push_back(s);
      return;
    }
    if (u > 0) {
      word += 'U';
      self(self, u - 1, v);
      word.pop_back();
    }
    if (v > 0) {
      word += 'V';
      self(self, u, v - 1);
      word.pop_back();
    }
  };
  rec(rec, p, q);
  return out;
}

/// Merges us and vs into one sequence: position k takes the next unused
/// element of us when word[k] is U, of vs when it is V.
template <typename T>
std::vector<T> interleave(const Shuffle& theta, const std::vector<T>& us, const std::vector<T>& vs) {
  if (static_cast<int>(us.size()) != theta.p() || static_cast<int>(vs.size()) != theta.q())
    throw std::domain_error("interleave: block sizes do not match the shuffle");
  std::vector<T> out;
  out.reserve(us.size() + vs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  for (char c : theta.word) out.push_back(c == 'U' ? us[i++] : vs[j++]);
  return out;
}

/// Monotone lattice path of theta: starts at (0,0); U advances the first
/// component, V the second.  Returns all p+q+1 path points in order.
inline std::vector<std::pair<int, int>> staircase(const Shuffle& theta) {
  std::vector<std::pair<int, int>> out;
  out.reserve(theta.word.size() + 1);
  int i = 0;
  int j = 0;
  out.emplace_back(i, j);
  for (char c : theta.word) {
    if (c == 'U')
      ++i;
    else
      ++j;
    out.emplace_back(i, j);
  }
  return out;
}

/// One-line permutation encoding: the U positions carry 1..p in order, the V
/// positions carry p+1..p+q in order.
inline Permutation shuffle_to_permutation(const Shuffle& theta) {
  Permutation out;
  out.reserve(theta.word.size());
  int u = 1;
  int v = theta.p() + 1;
  for (char c : theta.word) out.push_back(c == 'U' ? u++ : v++);
  return out;
}

/// Inverse of shuffle_to_permutation.  perm must be a permutation of
/// 1..p+q in which both 1..p and p+1..p+q appear in increasing order.
inline Shuffle shuffle_from_permutation(const Permutation& perm, int p) {
  const int m = static_cast<int>(perm.size());
  if (p < 0 || p > m) throw std::domain_error("shuffle_from_permutation: bad block size");
  std::string word;
  word.reserve(m);
  int u = 1;
  int v = p + 1;
  for (int x : perm) {
    if (x == u && x <= p) {
      word += 'U';
      ++u;
    } else if (x == v) {
      word += 'V';
      ++v;
    } else {
      throw std::domain_error("shuffle_from_permutation: not a shuffle permutation");
    }
  }
  return Shuffle(std::move(word));
}

} // namespace parktri
