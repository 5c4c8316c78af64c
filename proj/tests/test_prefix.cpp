#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "anc/prefix.hpp"

using namespace anc;

static Perm long_cycle(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i + 1;
  return Perm::from_cycles(n, {c});
}

TEST_CASE("length: closed forms") {
  GenCtx t3(5, Family::ThreeCycles);
  CHECK(t3.length(Perm(5)) == 0);

  GenCtx t34(4, Family::ThreeCycles);
  CHECK(t34.length(Perm::parse("(1 2)(3 4)", 4)) == 2);  // (4-0)/2

  GenCtx k4(7, Family::KCycles, 4);
  CHECK(k4.length(long_cycle(7)) == 2);  // ell2/3 = 6/3

  CHECK_THROWS_WITH_AS(t34.length(Perm::parse("(1 2)", 4)),
                       doctest::Contains("NotInGeneratedGroup"), Error);
}

TEST_CASE("length: closed form equals BFS oracle, N <= 7") {
  for (int n = 3; n <= 7; ++n) {
    GenCtx cf2(n, Family::Transpositions);
    GenCtx bf2(n, Family::Transpositions, 0, LengthMode::BfsOracle);
    for (auto& x : enumerate_symmetric(n)) CHECK(cf2.length(x) == bf2.length(x));
    GenCtx cf3(n, Family::ThreeCycles);
    GenCtx bf3(n, Family::ThreeCycles, 0, LengthMode::BfsOracle);
    for (auto& x : enumerate_alternating(n))
      CHECK(cf3.length(x) == bf3.length(x));
  }
}

TEST_CASE("is_below") {
  GenCtx t2(5, Family::Transpositions);
  GenCtx t3(5, Family::ThreeCycles);
  Perm x = Perm::parse("(2 4 5)", 5);
  Perm c5 = long_cycle(5);
  CHECK(t2.is_below(x, c5));
  CHECK_FALSE(t3.is_below(x, c5));
  CHECK(t3.is_below(Perm::parse("(1 2 3)", 5), c5));
  for (auto& y : enumerate_alternating(5)) CHECK(t3.is_below(Perm(5), y));
}

TEST_CASE("lower_covers") {
  GenCtx t3(3, Family::ThreeCycles);
  auto cov = t3.lower_covers(Perm::parse("(1 2 3)", 3));
  std::set<std::string> xs;
  for (auto& [x, a] : cov) xs.insert(x.str());
  CHECK(xs == std::set<std::string>{"e"});

  CHECK(t3.lower_covers(Perm(3)).empty());

  GenCtx t35(5, Family::ThreeCycles);
  auto cov5 = t35.lower_covers(long_cycle(5));
  std::set<std::string> xs5;
  for (auto& [x, a] : cov5) xs5.insert(x.str());
  CHECK(xs5.size() == 5);  // the five rank-1 elements of the degree-5 poset
  for (auto& [x, a] : cov5) {
    CHECK(t35.length(x) == 1);
    CHECK(x * a.as_perm(5) == long_cycle(5));
  }
}

TEST_CASE("interval construction") {
  GenCtx t3(7, Family::ThreeCycles);
  IntervalPoset P = build_interval(t3, Perm(7), long_cycle(7));
  CHECK(P.size() == 30);
  auto rv = P.rank_vector_counts();
  CHECK(rv == std::vector<Int>{1, 14, 14, 1});

  GenCtx t38(8, Family::ThreeCycles);
  Perm x4 = Perm::parse("(1 2)(3 4)(5 6)(7 8)", 8);
  CHECK(build_interval(t38, Perm(8), x4).size() == 296);

  Perm z = Perm::parse("(1 2 3)", 7);
  IntervalPoset single = build_interval(t3, z, z);
  CHECK(single.size() == 1);

  CHECK_THROWS_WITH_AS(
      build_interval(t3, Perm::parse("(1 3 2)", 7), long_cycle(7)),
      doctest::Contains("NotComparable"), Error);
}

TEST_CASE("kreweras and anti-automorphism") {
  Perm c3 = long_cycle(3);
  CHECK(kreweras(c3, Perm(3)) == c3);
  CHECK(kreweras(c3, c3) == Perm(3));
  CHECK(kreweras(c3, Perm::parse("(1 2)", 3)).str() == "(2 3)");

  Perm c17 = long_cycle(17);
  Perm x = Perm::parse("(1 14 15)(3 4 7)(8 9 10 11 12)", 17);
  CHECK(kreweras(c17, x).str() == "(1 2 7 12 13)(4 5 6)(15 16 17)");
}

TEST_CASE("anti-automorphism reverses every small interval") {
  GenCtx t3(7, Family::ThreeCycles);
  Perm y(7), z = long_cycle(7);
  IntervalPoset P = build_interval(t3, y, z);
  std::vector<int> to(P.size());
  for (int i = 0; i < P.size(); ++i) {
    Perm img = anti_automorphism(y, z, P.elements[i]);
    int j = P.index_of(img);
    REQUIRE(j >= 0);
    to[i] = j;
    CHECK(P.ranks[j] == P.top_rank - P.ranks[i]);
  }
  CHECK(covers_isomorphic_via(P, P, to, /*order_reversing=*/true));
}

TEST_CASE("shift isomorphism [y,z] ~ [e, y^-1 z]") {
  GenCtx t3(7, Family::ThreeCycles);
  Perm y = Perm::parse("(1 2 3)", 7), z = long_cycle(7);
  REQUIRE(t3.is_below(y, z));
  IntervalPoset P = build_interval(t3, y, z);
  IntervalPoset Q = build_interval(t3, Perm(7), y.inverse() * z);
  REQUIRE(P.size() == Q.size());
  std::vector<int> to(P.size());
  for (int i = 0; i < P.size(); ++i) {
    // K_z then K_{y^-1 z} sends [y,z] to [e, y^-1 z] order-preservingly.
    Perm img = kreweras(y.inverse() * z, kreweras(z, P.elements[i]));
    int j = Q.index_of(img);
    REQUIRE(j >= 0);
    to[i] = j;
  }
  CHECK(covers_isomorphic_via(P, Q, to));
}

TEST_CASE("conjugation invariance of [e,x]") {
  GenCtx t3(6, Family::ThreeCycles);
  Perm x = Perm::parse("(1 2 3)(4 5 6)", 6);
  Perm w = Perm::parse("(1 4)(2 6 3 5)", 6);
  IntervalPoset P = build_interval(t3, Perm(6), x);
  IntervalPoset Q = build_interval(t3, Perm(6), x.conjugate(w));
  std::vector<int> to(P.size());
  for (int i = 0; i < P.size(); ++i) {
    int j = Q.index_of(P.elements[i].conjugate(w));
    REQUIRE(j >= 0);
    to[i] = j;
  }
  CHECK(covers_isomorphic_via(P, Q, to));
}

TEST_CASE("count_maximal_chains") {
  GenCtx t5(5, Family::ThreeCycles);
  CHECK(count_maximal_chains(build_interval(t5, Perm(5), long_cycle(5))) == 5);
  GenCtx t7(7, Family::ThreeCycles);
  CHECK(count_maximal_chains(build_interval(t7, Perm(7), long_cycle(7))) ==
        49);
  GenCtx t4(4, Family::ThreeCycles);
  CHECK(count_maximal_chains(
            build_interval(t4, Perm(4), Perm::parse("(1 2)(3 4)", 4))) == 8);
}

TEST_CASE("count_multichains") {
  GenCtx t5(5, Family::ThreeCycles);
  IntervalPoset P = build_interval(t5, Perm(5), long_cycle(5));
  CHECK(count_multichains(P, 1) == 1);
  CHECK(count_multichains(P, 2) == P.size());
  // Spec sheet floated 33 for m=3; the closed form (3/13)C(13,2) = 18 and
  // the brute-force DP agree on 18, so 18 is the frozen value.
  CHECK(count_multichains(P, 3) == 18);

  GenCtx t3(3, Family::ThreeCycles);
  IntervalPoset C2 = build_interval(t3, Perm(3), long_cycle(3));
  CHECK(count_multichains(C2, 3) == 3);
}

TEST_CASE("zeta polynomial and moebius") {
  GenCtx t3(3, Family::ThreeCycles);
  IntervalPoset C2 = build_interval(t3, Perm(3), long_cycle(3));
  Poly z2 = zeta_polynomial(C2);
  CHECK(z2 == Poly({0, 1}));  // Z(q) = q
  CHECK(moebius(C2) == -1);

  GenCtx t5(5, Family::ThreeCycles);
  IntervalPoset P5 = build_interval(t5, Perm(5), long_cycle(5));
  CHECK(moebius(P5) == 4);
  CHECK(zeta_polynomial(P5).eval(-1) == 4);

  GenCtx t7(7, Family::ThreeCycles);
  IntervalPoset P7 = build_interval(t7, Perm(7), long_cycle(7));
  CHECK(zeta_polynomial(P7).eval(2) == 30);
}

TEST_CASE("moebius equals Z(-1) and leading coeff ties to chains") {
  GenCtx t7(7, Family::ThreeCycles);
  for (auto top : {std::string("(1 2 3 4 5 6 7)"), std::string("(1 2 3)(4 5 6)"),
                   std::string("(1 2)(3 4)")}) {
    Perm z = Perm::parse(top, 7);
    IntervalPoset P = build_interval(t7, Perm(7), z);
    Poly Z = zeta_polynomial(P);
    CHECK(Rat(moebius(P)) == Z.eval(-1));
    int n = P.top_rank;
    CHECK(Z.coeff(n) * Rat(factorial(n)) == Rat(count_maximal_chains(P)));
  }
}

TEST_CASE("k-cycle context without niceness falls back to BFS") {
  GenCtx k4(6, Family::KCycles, 4, LengthMode::BfsOracle);
  // 4-cycles are odd permutations; they generate S_6.
  CHECK(k4.length(Perm::parse("(1 2)", 6)) > 0);
  CHECK(k4.length(Perm(6)) == 0);
  GenCtx k4cf(6, Family::KCycles, 4);
  CHECK_FALSE(k4cf.is_nice(Perm::parse("(1 2 3)", 6)));
  CHECK(k4cf.is_nice(Perm::parse("(1 2 3 4)", 6)));
}
