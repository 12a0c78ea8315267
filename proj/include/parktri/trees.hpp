#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parktri/common.hpp"

namespace parktri {

/// Planar binary rooted tree, stored as its parenthesis code: a leaf is "."
/// and an internal vertex is "(" left right ")".  Codes are prefix-free, so
/// comparing codes lexicographically gives the canonical enumeration order
/// used everywhere in this library.
class Tree {
 public:
  Tree() : code_(".") {}

  static Tree leaf() { return Tree(); }

  static Tree node(const Tree& l, const Tree& r) {
    Tree t;
    t.code_.clear();
    t.code_.reserve(l.code_.size() + r.code_.size() + 2);
    t.code_ += '(';
    t.code_ += l.code_;
    t.code_ += r.code_;
    t.code_ += ')';
    return t;
  }

  /// Parses and validates a code.  Throws std::invalid_argument on anything
  /// that is not exactly one well-formed tree.
  static Tree parse(std::string_view code) {
    std::size_t pos = 0;
    if (!scan(code, pos) || pos != code.size())
      throw std::invalid_argument("malformed tree code: " + std::string(code));
    Tree t;
    t.code_.assign(code);
    return t;
  }

  const std::string& code() const { return code_; }
  bool is_leaf() const { return code_.size() == 1; }

  /// Number of internal vertices (the n of Y_n).
  int internal_vertices() const {
    return static_cast<int>(std::count(code_.begin(), code_.end(), '('));
  }

  int leaf_count() const { return internal_vertices() + 1; }

  Tree left() const {
    require_internal();
    Tree t;
    t.code_.assign(code_, 1, subtree_end(1) - 1);
    return t;
  }

  Tree right() const {
    require_internal();
    std::size_t mid = subtree_end(1);
    Tree t;
    t.code_.assign(code_, mid, code_.size() - 1 - mid);
    return t;
  }

  friend bool operator==(const Tree& a, const Tree& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::string code_;

  void require_internal() const {
    if (is_leaf()) throw std::domain_error("leaf tree has no children");
  }

  // Index one past the end of the subtree starting at pos.
  std::size_t subtree_end(std::size_t pos) const {
    if (code_[pos] == '.') return pos + 1;
    int depth = 0;
    for (std::size_t i = pos;; ++i) {
      if (code_[i] == '(') ++depth;
      if (code_[i] == ')' && --depth == 0) return i + 1;
    }
  }

  static bool scan(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) return false;
    if (s[pos] == '.') {
      ++pos;
      return true;
    }
    if (s[pos] != '(') return false;
    ++pos;
    if (!scan(s, pos) || !scan(s, pos)) return false;
    if (pos >= s.size() || s[pos] != ')') return false;
    ++pos;
    return true;
  }
};

/// Streams every tree of Y_n in canonical (lexicographic) order without
/// materializing the list.  Refuses n > 20.
inline void for_each_tree(int n, const std::function<void(const Tree&)>& fn) {
  if (n < 0) throw std::domain_error("for_each_tree: negative n");
  if (n > 20) throw capacity_error("for_each_tree: n > 20 exceeds capacity");
  std::string out;
  out.reserve(3 * static_cast<std::size_t>(n) + 1);
  // frames[i] = children completed of the i-th open vertex; frames[0] is a
  // virtual root slot of capacity one.
  std::vector<int> frames{0};
  int rem_open = n;
  int rem_dots = n + 1;
  int fresh = 1;  // subtree positions not yet begun
  std::function<void()> step = [&]() {
    if (frames.size() == 1 && frames[0] == 1) {
      fn(Tree::parse(out));
      return;
    }
    if (frames.back() == 2) {
      out += ')';
      frames.pop_back();
      ++frames.back();
      step();
      --frames.back();
      frames.push_back(2);
      out.pop_back();
      return;
    }
    if (rem_open > 0) {
      out += '(';
      --rem_open;
      ++fresh;
      frames.push_back(0);
      step();
      frames.pop_back();
      --fresh;
      ++rem_open;
      out.pop_back();
    }
    if (fresh >= 2 || rem_open == 0) {
      out += '.';
      --rem_dots;
      --fresh;
      ++frames.back();
      step();
      --frames.back();
      ++fresh;
      ++rem_dots;
      out.pop_back();
    }
  };
  step();
}

/// All trees of Y_n in canonical order.  Memory-bound; prefer for_each_tree
/// for large n.
inline std::vector<Tree> enumerate_trees(int n) {
  std::vector<Tree> out;
  for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

/// |Y_n| (the n-th Catalan number), exact.
inline BigInt tree_count(int n) {
  if (n < 0) throw std::domain_error("tree_count: negative n");
  return binomial(2 * n, n) / (n + 1);
}

inline Tree left_comb(int n) {
  Tree t = Tree::leaf();
  for (int i = 0; i < n; ++i) t = Tree::node(t, Tree::leaf());
  return t;
}

inline Tree right_comb(int n) {
  Tree t = Tree::leaf();
  for (int i = 0; i < n; ++i) t = Tree::node(Tree::leaf(), t);
  return t;
}

/// Integer coordinates of a tree with n internal vertices: entry i is the
/// product (leaves of left subtree) * (leaves of right subtree) at the i-th
/// internal vertex in left-to-right (in-order) position.  The coordinates of
/// every tree in Y_n sum to n(n+1)/2.
inline Coord tree_point(const Tree& t) {
  if (t.is_leaf()) throw std::domain_error("tree_point: leaf tree has no vertices");
  const std::string& s = t.code();
  Coord out;
  std::function<int(std::size_t&)> walk = [&](std::size_t& pos) -> int {
    if (s[pos] == '.') {
      ++pos;
      return 1;
    }
    ++pos;  // '('
    int a = walk(pos);
    std::size_t at = out.size();
    out.push_back(0);
    int b = walk(pos);
    ++pos;  // ')'
    out[at] = a * b;
    return a + b;
  };
  std::size_t pos = 0;
  walk(pos);
  return out;
}

/// Trees covering t in the rotation order: each is obtained by one local
/// replacement of a subtree ((A B) C) with (A (B C)).  Sorted by code.
inline std::vector<Tree> tamari_covers(const Tree& t) {
  std::vector<Tree> out;
  if (t.is_leaf()) return out;
  Tree l = t.left();
  Tree r = t.right();
  if (!l.is_leaf()) out.push_back(Tree::node(l.left(), Tree::node(l.right(), r)));
  for (const Tree& c : tamari_covers(l)) out.push_back(Tree::node(c, r));
  for (const Tree& c : tamari_covers(r)) out.push_back(Tree::node(l, c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Rotation order on Y_n: reflexive-transitive closure of tamari_covers,
/// precomputed as a reachability table.  The left comb is the unique minimum
/// and the right comb the unique maximum.
class TamariPoset {
 public:
  explicit TamariPoset(int n) : n_(n) {
    if (n < 1) throw std::domain_error("TamariPoset: n >= 1 required");
    if (n > 9) throw capacity_error("TamariPoset: n > 9 exceeds capacity");
    elements_ = enumerate_trees(n);
    const int m = static_cast<int>(elements_.size());
    for (int i = 0; i < m; ++i) index_[elements_[i].code()] = i;
    covers_.resize(m);
    std::vector<int> indegree(m, 0);
    for (int i = 0; i < m; ++i) {
      for (const Tree& c : tamari_covers(elements_[i])) {
        int j = index_.at(c.code());
        covers_[i].push_back(j);
        ++indegree[j];
      }
    }
    leq_.assign(m, std::vector<std::uint8_t>(m, 0));
    std::vector<int> stack;
    for (int i = 0; i < m; ++i) {
      stack.assign(1, i);
      leq_[i][i] = 1;
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
    for (int i = 0; i < m; ++i) {
      if (indegree[i] == 0) {
        if (min_ >= 0) throw std::logic_error("TamariPoset: multiple minima");
        min_ = i;
      }
      if (covers_[i].empty()) {
        if (max_ >= 0) throw std::logic_error("TamariPoset: multiple maxima");
        max_ = i;
      }
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Tree>& elements() const { return elements_; }
  const Tree& element(int i) const { return elements_.at(i); }

  int index_of(const Tree& t) const {
    auto it = index_.find(t.code());
    if (it == index_.end()) throw std::domain_error("TamariPoset: tree not in Y_" + std::to_string(n_));
    return it->second;
  }

  const std::vector<int>& covers(int i) const { return covers_.at(i); }
  bool leq(int i, int j) const { return leq_.at(i).at(j) != 0; }
  int minimum() const { return min_; }
  int maximum() const { return max_; }

 private:
  int n_;
  std::vector<Tree> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<std::uint8_t>> leq_;
  int min_;
  int max_;
};

/// Shared per-n poset instances; built once, then read-only.
inline const TamariPoset& tamari_poset(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TamariPoset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TamariPoset>(n);
  return *slot;
}

/// True iff u is reachable from t by rotations (reflexive).  Both trees must
/// have the same number of internal vertices.
inline bool tamari_leq(const Tree& t, const Tree& u) {
  const int n = t.internal_vertices();
  if (u.internal_vertices() != n)
    throw std::domain_error("tamari_leq: trees of different sizes");
  if (n == 0) return true;
  const TamariPoset& poset = tamari_poset(n);
  return poset.leq(poset.index_of(t), poset.index_of(u));
}

/// Substitutes t for the leaf of s with right-to-left index a (the rightmost
/// leaf has index 0).  For s in Y_{p+1} and t in Y_{q+1} the result lies in
/// Y_{p+q+2}.
inline Tree graft(const Tree& s, int a, const Tree& t) {
  const int leaves = s.leaf_count();
  if (a < 0 || a >= leaves)
    throw std::domain_error("graft: leaf index out of range");
  const int target = leaves - 1 - a;
  std::string out;
  out.reserve(s.code().size() + t.code().size());
  int seen = 0;
  for (char c : s.code()) {
    if (c == '.' && seen++ == target)
      out += t.code();
    else
      out += c;
  }
  return Tree::parse(out);
}

} // namespace parktri
