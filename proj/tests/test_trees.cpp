#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "anc/noncrossing.hpp"
#include "anc/trees.hpp"

using namespace anc;

static Perm long_cycle(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i + 1;
  return Perm::from_cycles(n, {c});
}

static std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

TEST_CASE("phi: basics") {
  BicoloredPlaneTree t1 = phi(Perm(1));
  t1.validate();
  CHECK(t1.edge_count() == 1);

  BicoloredPlaneTree star = phi(long_cycle(6));
  star.validate();
  CHECK(star.degree_distribution(true) == std::vector<int>{6});
  CHECK(star.degree_distribution(false) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});

  CHECK_THROWS_WITH_AS(phi(Perm::parse("(1 3)(2 4)", 4)),
                       doctest::Contains("NotNoncrossing"), Error);
}

TEST_CASE("phi: the degree-17 worked example") {
  Perm x = Perm::parse("(1 14 15)(3 4 7)(8 9 10 11 12)", 17);
  BicoloredPlaneTree t = phi(x);
  t.validate();
  CHECK(t.edge_count() == 17);
  CHECK(sorted_desc(t.degree_distribution(true)) ==
        std::vector<int>{5, 3, 3, 1, 1, 1, 1, 1, 1});
  CHECK(sorted_desc(t.degree_distribution(false)) ==
        std::vector<int>{5, 3, 3, 1, 1, 1, 1, 1, 1});
  CHECK(phi_inverse(t) == x);
  // The black side realizes the Kreweras complement's cycle type.
  Perm kc = kreweras(long_cycle(17), x);
  CHECK(kc.str() == "(1 2 7 12 13)(4 5 6)(15 16 17)");
}

TEST_CASE("phi: round trip and degree dictionary on NC_N, N <= 9") {
  for (int N = 1; N <= 9; ++N) {
    auto nc = enumerate_nc(N);
    if (N == 9) CHECK(nc.size() == 4862);  // Catalan number
    std::set<std::string> seen;
    for (auto& x : nc) {
      BicoloredPlaneTree t = phi(x);
      t.validate();
      CHECK(phi_inverse(t) == x);
      seen.insert(t.str());
      std::vector<int> wt;
      for (auto& c : x.cycles(true)) wt.push_back(int(c.size()));
      CHECK(sorted_desc(t.degree_distribution(true)) == sorted_desc(wt));
      std::vector<int> bt;
      for (auto& c : kreweras(long_cycle(N), x).cycles(true))
        bt.push_back(int(c.size()));
      CHECK(sorted_desc(t.degree_distribution(false)) == sorted_desc(bt));
    }
    CHECK(seen.size() == nc.size());  // injective on serializations
  }
}

TEST_CASE("odd membership = all vertex degrees odd, N in {5,7,9}") {
  for (int N : {5, 7, 9})
    for (auto& x : enumerate_nc(N)) {
      BicoloredPlaneTree t = phi(x);
      bool all_odd = true;
      for (bool side : {true, false})
        for (int d : t.degree_distribution(side))
          if (d % 2 == 0) all_odd = false;
      CHECK(all_odd == onc_membership(x).member());
    }
}

TEST_CASE("even N: all degrees odd except the black vertex owning N") {
  // The exceptional vertex is the black cycle whose support contains N.
  // Vertex indexing in phi: white cycles of x first, then black cycles of
  // the complement, both in canonical (min-element) order.
  for (int N : {4, 6, 8})
    for (auto& x : enumerate_nc(N)) {
      BicoloredPlaneTree t = phi(x);
      Perm y = kreweras(long_cycle(N), x);
      int nw = int(x.cycles(true).size());
      int exceptional = -1;
      auto bc = y.cycles(true);
      for (int i = 0; i < int(bc.size()); ++i)
        for (int v : bc[i])
          if (v == N) exceptional = nw + i;
      REQUIRE(exceptional >= 0);
      CHECK_FALSE(t.white[exceptional]);
      bool ok = true;
      for (int v = 0; v < t.vertex_count(); ++v) {
        int d = int(t.rot[v].size());
        if (v == exceptional) {
          if (d % 2 != 0) ok = false;  // N even forces an even vertex here
        } else if (d % 2 == 0) {
          ok = false;
        }
      }
      CHECK(ok == onc_membership(x).member());
    }
}

TEST_CASE("onc_tree_pair") {
  auto [w1, b1] = onc_tree_pair(Perm(1));
  CHECK(w1.edge_count() == 0);
  CHECK(b1.edge_count() == 0);

  CHECK_THROWS_WITH_AS(onc_tree_pair(Perm::parse("(2 4 5)", 5)),
                       doctest::Contains("NotOnc"), Error);

  for (int N : {5, 7, 9}) {
    auto onc = enumerate_onc(N);
    std::set<std::pair<std::string, std::string>> images;
    for (auto& x : onc) {
      auto [w, b] = onc_tree_pair(x);
      CHECK(w.is_even_tree());
      CHECK(b.is_even_tree());
      CHECK(w.edge_count() + b.edge_count() == N - 1);
      CHECK(onc_tree_pair_inverse(w, b) == x);
      images.insert({w.str(), b.str()});
    }
    CHECK(images.size() == onc.size());
  }
}

TEST_CASE("even/ternary bijection") {
  PlaneTree empty;
  CHECK(even_to_ternary(empty) == empty);

  CHECK_THROWS_WITH_AS(even_to_ternary(PlaneTree{{PlaneTree{}}}),
                       doctest::Contains("WrongFlavor"), Error);

  for (int edges = 0; edges <= 10; edges += 2) {
    auto evens = enumerate_even_trees(edges);
    CHECK(Int(evens.size()) == count_even_trees(edges));
    std::set<std::string> images;
    for (auto& t : evens) {
      PlaneTree u = even_to_ternary(t);
      CHECK(u.is_ternary_tree());
      CHECK(u.edge_count() == (edges / 2) * 3);
      CHECK(ternary_to_even(u) == t);
      images.insert(u.str());
    }
    CHECK(images.size() == evens.size());
  }
  CHECK(count_even_trees(4) == 3);
}

TEST_CASE("pair counting reproduces the degree-9 cardinality") {
  // |ONC_9| = sum over splits 2a + 2b = 8 of |T^e_2a| * |T^e_2b| = 143.
  Int total = 0;
  for (int a = 0; a <= 8; a += 2)
    total += count_even_trees(a) * count_even_trees(8 - a);
  CHECK(total == 143);
  CHECK(total == closed_count(4, ClosedCount::CardinalityOdd));
}

TEST_CASE("plane tree enumeration is Catalan") {
  std::vector<int> catalan = {1, 1, 2, 5, 14, 42, 132};
  for (int e = 0; e <= 6; ++e)
    CHECK(int(enumerate_plane_trees(e).size()) == catalan[e]);
}
