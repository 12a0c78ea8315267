// Acceptance suite: one line per criterion, exit code = number of failures.
// Every check is exact; timings use the wall clock.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "parktri/io.hpp"

using namespace parktri;

namespace {

int failures = 0;

void criterion(int k, bool pass, const std::string& detail) {
  std::printf("CRITERION %d: %s (%s)\n", k, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_counts_1() {
  const long long expected[] = {1, 3, 16, 125, 1296, 16807};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 6; ++n) {
    long long count = static_cast<long long>(triangulate_associahedron(n).simplices.size());
    ok = ok && count == expected[n - 1];
    got += (n > 1 ? "," : "") + std::to_string(count);
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=1..6 simplex counts %s in %.2fs, limit 60s", got.c_str(), dt);
  criterion(1, ok, buf);
}

void check_labels_2() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 5; ++n) {
    const Triangulation& tri = triangulate_associahedron(n);
    std::set<ParkingFunction> labels;
    for (const Simplex& s : tri.simplices) labels.insert(s.label);
    bool dup_free = labels.size() == tri.simplices.size();
    auto all = enumerate_parking(n);
    bool equal = std::set<ParkingFunction>(all.begin(), all.end()) == labels;
    ok = ok && dup_free && equal;
    if (!(dup_free && equal) && detail.empty()) detail = "mismatch at n=" + std::to_string(n);
  }
  if (detail.empty()) detail = "labels of n=1..5 are exactly the parking functions, no duplicates";
  criterion(2, ok, detail);
}

void check_round_trip_3() {
  bool ok = true;
  long long forward = 0;
  for (int n = 1; n <= 7 && ok; ++n)
    for_each_parking(n, [&](const ParkingFunction& pf) {
      ++forward;
      if (compose_pf(decompose_pf(pf)) != pf) ok = false;
    });
  long long backward = 0;
  for (int n = 1; n <= 5 && ok; ++n)
    for (int p = 0; p <= n - 1 && ok; ++p) {
      int q = n - 1 - p;
      auto fs = enumerate_parking(p);
      auto gs = enumerate_parking(q);
      auto thetas = enumerate_shuffles(p, q);
      for (int a = 1; a <= p + 1 && ok; ++a)
        for (const auto& theta : thetas)
          for (const auto& f : fs)
            for (const auto& g : gs) {
              PiDecomposition d{a, p, q, theta, f, g};
              ++backward;
              if (!(decompose_pf(compose_pf(d)) == d)) {
                ok = false;
                break;
              }
            }
    }
  criterion(3, ok,
            std::to_string(forward) + " compose(decompose) cases for n<=7, " +
                std::to_string(backward) + " decompose(compose) cases for n<=5");
}

void check_tables_4() {
  const std::string parking_table =
      "a=1 p=2 q=0: (1,1,1) (1,1,2) (1,2,1)\n"
      "a=1 p=1 q=1: (1,1,3) (1,3,1)\n"
      "a=1 p=0 q=2: (1,2,2) (1,2,3) (1,3,2)\n"
      "a=2 p=2 q=0: (2,1,1) (2,1,2) (2,2,1)\n"
      "a=2 p=1 q=1: (2,1,3) (2,3,1)\n"
      "a=3 p=2 q=0: (3,1,1) (3,1,2) (3,2,1)\n";
  const std::string zp_table =
      "0 1\n1 1\n2 4\n3 34\n4 488\n5 10512\n6 316224\n7 12649104\n8 649094752\n";
  bool table_ok = format_parking_table(3) == parking_table;
  bool zp_ok = format_counts("zp", 8) == zp_table;
  criterion(4, table_ok && zp_ok,
            std::string("classification table n=3 ") + (table_ok ? "exact" : "differs") +
                ", zp table 0..8 " + (zp_ok ? "exact" : "differs"));
}

void check_worked_example_5() {
  PiDecomposition d = decompose_pf({3, 6, 1, 7, 2, 1, 3, 6});
  bool ok = d.a == 3 && d.p == 4 && d.q == 3 && d.f == ParkingFunction{1, 2, 1, 3} &&
            d.g == ParkingFunction{1, 2, 1} && d.theta.word == "VUVUUUV";
  criterion(5, ok, format_decomposition(d).substr(0, 47));
}

void check_abel_6() {
  bool ok = true;
  int first_bad = 0;
  for (int n = 1; n <= 30; ++n) {
    BigInt recursion = 0;
    for (int p = 0; p <= n - 1; ++p)
      recursion += BigInt(p + 1) * binomial(n - 1, p) * simplex_count_recursive(p) *
                   simplex_count_recursive(n - 1 - p);
    if (recursion != parking_count(n)) {
      ok = false;
      if (!first_bad) first_bad = n;
    }
  }
  criterion(6, ok,
            ok ? "recursion equals (n+1)^(n-1) for n=1..30"
               : "first mismatch at n=" + std::to_string(first_bad));
}

void check_assoc_geometry_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 4; ++n) {
    const Triangulation& tri = triangulate_associahedron(n);
    ValidationReport report;
    report.merge(nondegeneracy_check(tri));
    report.merge(facet_pairing_check(tri));
    report.merge(sample_membership_check(tri, 42, 50, 200));
    if (!report.overall()) {
      ok = false;
      for (const auto& [name, result] : report.checks)
        if (!result.pass && detail.empty()) detail = "n=" + std::to_string(n) + " " + name;
    }
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 120.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%s, 50 interior + 200 hull samples per dimension, %.2fs, limit 120s",
                detail.empty() ? "nondegenerate + paired + disjoint + covered for n<=4"
                               : detail.c_str(),
                dt);
  criterion(7, ok, buf);
}

void check_permutohedron_8() {
  const long long expected[] = {1, 1, 4, 34};
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 3; ++n) {
    const Triangulation& tri = triangulate_permutohedron(n);
    long long count = static_cast<long long>(tri.simplices.size());
    if (count != expected[n] || BigInt(count) != zp_count(n)) {
      ok = false;
      if (detail.empty()) detail = "count mismatch at n=" + std::to_string(n);
    }
    if (!validate_permutohedron(n).overall()) {
      ok = false;
      if (detail.empty()) detail = "validation failed at n=" + std::to_string(n);
    }
    const Permutation reversal = reversal_permutation(n + 1);
    const WeakOrderPoset& poset = weak_order_poset(n + 1);
    for (const Simplex& s : tri.simplices) {
      for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i)
        if (!poset.leq(s.vertices[i], s.vertices[i + 1])) ok = false;
      if (tri.perms[s.vertices.back()] != reversal) ok = false;
    }
  }
  if (detail.empty())
    detail = "counts 1,1,4,34 = zp, geometry valid, all simplices Bruhat chains into the reversal";
  criterion(8, ok, detail);
}

void check_coordinates_9() {
  bool ok = true;
  ok = ok && tree_point(Tree::parse("(..)")) == Coord{1};
  ok = ok && tree_point(Tree::parse("((..).)")) == Coord{1, 2};
  ok = ok && tree_point(Tree::parse("(.(..))")) == Coord{2, 1};
  ok = ok && tree_point(Tree::parse("(((..).).)")) == Coord{1, 2, 3};
  ok = ok && tree_point(Tree::parse("((..)(..))")) == Coord{1, 4, 1};
  ok = ok && tree_point(Tree::parse("(((..).)(..))")) == Coord{1, 2, 6, 1};
  bool plane_ok = true;
  for (int n = 1; n <= 7; ++n) {
    const int target = n * (n + 1) / 2;
    for_each_tree(n, [&](const Tree& t) {
      Coord c = tree_point(t);
      int sum = 0;
      for (int x : c) sum += x;
      if (sum != target || static_cast<int>(c.size()) != n) plane_ok = false;
    });
  }
  criterion(9, ok && plane_ok,
            std::string("five reference points ") + (ok ? "exact" : "differ") +
                ", coordinate sums n(n+1)/2 for all trees with n<=7 " +
                (plane_ok ? "hold" : "fail"));
}

void check_tamari_10() {
  const TamariPoset& poset = tamari_poset(3);
  bool size_ok = poset.size() == 5;
  int edges = 0;
  for (int i = 0; i < poset.size(); ++i) edges += static_cast<int>(poset.covers(i).size());
  bool edges_ok = edges == 5;
  bool min_ok = tree_point(poset.element(poset.minimum())) == Coord{1, 2, 3};
  bool max_ok = tree_point(poset.element(poset.maximum())) == Coord{3, 2, 1};
  int incomparable = 0;
  for (int i = 0; i < poset.size(); ++i)
    for (int j = i + 1; j < poset.size(); ++j)
      if (!poset.leq(i, j) && !poset.leq(j, i)) ++incomparable;
  bool unique_ok = incomparable == 1;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "5 vertices %s, 5 cover edges %s, min (1,2,3) %s, max (3,2,1) %s, "
                "incomparable pairs expected 1 actual %d",
                size_ok ? "ok" : "bad", edges_ok ? "ok" : "bad", min_ok ? "ok" : "bad",
                max_ok ? "ok" : "bad", incomparable);
  criterion(10, size_ok && edges_ok && min_ok && max_ok && unique_ok, buf);
}

} // namespace

int main() {
  check_counts_1();
  check_labels_2();
  check_round_trip_3();
  check_tables_4();
  check_worked_example_5();
  check_abel_6();
  check_assoc_geometry_7();
  check_permutohedron_8();
  check_coordinates_9();
  check_tamari_10();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
