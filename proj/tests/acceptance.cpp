// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "anc/altorder.hpp"
#include "anc/hurwitz.hpp"
#include "anc/mdiv.hpp"
#include "anc/noncrossing.hpp"
#include "anc/prefix.hpp"
#include "anc/trees.hpp"

#include <random>

using namespace anc;

static Perm long_cycle(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i + 1;
  return Perm::from_cycles(n, {c});
}

static bool require(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

int main() {
  int failed = 0;
  auto criterion = [&](int id, const std::string& name,
                       const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failed;
  };

  criterion(1, "rank generating polynomials of the alternating groups, N <= 7",
            [](std::string& d) {
              // N=6 middle coefficient frozen at 229 (row sums to |A_6|=360).
              std::vector<std::string> expect = {
                  "1",      "1",        "1;2",         "1;8;3",
                  "1;20;39", "1;40;229;90", "1;70;889;1560"};
              bool ok = true;
              for (int n = 1; n <= 7; ++n)
                ok &= require(rank_generating_polynomial(n)
                                      .distribution.coeff_list() ==
                                  expect[n - 1],
                              "N=" + std::to_string(n), d);
              return ok;
            });

  criterion(2, "rank vectors of the odd noncrossing posets, n <= 5",
            [](std::string& d) {
              std::vector<std::vector<Int>> expect = {
                  {1, 1},
                  {1, 5, 1},
                  {1, 14, 14, 1},
                  {1, 30, 81, 30, 1},
                  {1, 55, 308, 308, 55, 1}};
              bool ok = true;
              for (int n = 1; n <= 5; ++n) {
                GenCtx t3(2 * n + 1, Family::ThreeCycles);
                IntervalPoset P = build_interval(t3, Perm(2 * n + 1),
                                                 long_cycle(2 * n + 1));
                ok &= require(P.rank_vector_counts() == expect[n - 1],
                              "n=" + std::to_string(n), d);
              }
              return ok;
            });

  criterion(3, "two-even-cycle interval numerology, p+q <= 5",
            [](std::string& d) {
              struct Row {
                int p, q;
                Int m, t, mu;
                std::vector<Int> r;
              };
              std::vector<Row> rows = {
                  {1, 1, 8, 10, 7, {1, 8, 1}},
                  {1, 2, 48, 58, -73, {1, 28, 28, 1}},
                  {1, 3, 294, 350, 671, {1, 66, 216, 66, 1}},
                  {2, 2, 336, 386, 863, {1, 72, 240, 72, 1}},
                  {1, 4, 1824, 2154, -6041, {1, 128, 948, 948, 128, 1}},
                  {2, 3, 2208, 2488, -8495, {1, 142, 1101, 1101, 142, 1}}};
              bool ok = true;
              for (auto& row : rows) {
                auto x = xpq_numerology(row.p, row.q);
                ok &= require(x.mixed == row.m && x.total == row.t &&
                                  x.moebius == row.mu && x.rank_vector == row.r,
                              "(p,q)=(" + std::to_string(row.p) + "," +
                                  std::to_string(row.q) + ")",
                              d);
              }
              return ok;
            });

  criterion(4, "multichain closed form, n <= 3, q <= 5", [](std::string& d) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      GenCtx t3(2 * n + 1, Family::ThreeCycles);
      IntervalPoset P =
          build_interval(t3, Perm(2 * n + 1), long_cycle(2 * n + 1));
      for (int q = 1; q <= 5; ++q)
        ok &= require(count_multichains(P, q) == closed_zeta(n, q),
                      "n=" + std::to_string(n) + " q=" + std::to_string(q), d);
    }
    return ok;
  });

  criterion(5, "closed-form cardinalities, chains, intervals, Moebius",
            [](std::string& d) {
              bool ok = true;
              std::vector<Int> chains = {1, 5, 49, 729};
              std::vector<Int> cards = {2, 7, 30, 143};
              std::vector<Int> mus = {-1, 4, -22, 143};  // mu, n=1..4
              for (int n = 1; n <= 4; ++n) {
                ok &= require(
                    closed_count(n, ClosedCount::MaxChains) == chains[n - 1],
                    "chains", d);
                ok &= require(closed_count(n, ClosedCount::CardinalityOdd) ==
                                  cards[n - 1],
                              "cards", d);
                ok &= require(Int(enumerate_onc(2 * n).size()) ==
                                  closed_count(n, ClosedCount::CardinalityEven),
                              "even card", d);
              }
              for (int n = 1; n <= 3; ++n) {
                GenCtx t3(2 * n + 1, Family::ThreeCycles);
                IntervalPoset P = build_interval(t3, Perm(2 * n + 1),
                                                 long_cycle(2 * n + 1));
                ok &= require(count_maximal_chains(P) == chains[n - 1],
                              "built chains", d);
                ok &= require(Int(P.size()) == cards[n - 1], "built size", d);
                ok &= require(moebius(P) == mus[n - 1], "moebius", d);
                Int intervals = 0;
                for (int j = 0; j < P.size(); ++j)
                  intervals += P.leq_matrix()[j].count();
                ok &= require(
                    intervals == closed_count(n, ClosedCount::IntervalCount),
                    "interval count", d);
              }
              return ok;
            });

  criterion(6, "rank-jump multichain counts vs brute force, n <= 3, q <= 4",
            [](std::string& d) {
              bool ok = true;
              for (int n = 1; n <= 3; ++n) {
                GenCtx t3(2 * n + 1, Family::ThreeCycles);
                IntervalPoset P = build_interval(t3, Perm(2 * n + 1),
                                                 long_cycle(2 * n + 1));
                for (int q = 1; q <= 4; ++q) {
                  std::vector<int> r(q, 0);
                  r[0] = n;
                  while (true) {
                    ok &= require(
                        rank_jump_count(n, r) == rank_jump_count_brute(P, r),
                        "n=" + std::to_string(n), d);
                    int i = 0;
                    while (i < q - 1 && r[i] == 0) ++i;
                    if (i == q - 1) break;
                    int v = r[i];
                    r[i] = 0;
                    r[i + 1] += 1;
                    r[0] = v - 1;
                  }
                }
              }
              return ok;
            });

  criterion(7, "Hurwitz orbit counts and per-orbit invariants",
            [](std::string& d) {
              bool ok = true;
              for (auto s : {"(1 2 3 4 5 6 7)", "(1 2 3 4 5)",
                             "(1 2 3)(4 5 6)", "(1 2 3)(4 6 7)"}) {
                OrbitReport r = orbit_decomposition(Perm::parse(s, 7));
                ok &= require(r.orbits.size() == 1, s, d);
              }
              ok &= require(orbit_decomposition(Perm::parse("(1 2)(3 4)", 4))
                                    .orbits.size() == 2,
                            "(1 2)(3 4)", d);
              ok &= require(
                  orbit_decomposition(Perm::parse("(1 2)(3 4)(5 6 7)", 7))
                          .orbits.size() == 2,
                  "(1 2)(3 4)(5 6 7)", d);
              OrbitReport big =
                  orbit_decomposition(Perm::parse("(1 2)(3 4)(5 6)(7 8)", 8));
              ok &= require(big.orbits.size() == 12, "12 orbits", d);
              // Matching/parity constancy is asserted inside
              // orbit_decomposition; recheck one translate per orbit.
              for (auto& orb : big.orbits) {
                FactorizationWord w = orb.canonical;
                for (int i = 1; i < int(w.letters.size()); ++i)
                  w = hurwitz_step(w, i, +1);
                ok &= require(word_invariants(w, big.x) == orb.invariants,
                              "invariant drift", d);
              }
              return ok;
            });

  criterion(8, "two-even-cycle chain and pure-element closed forms, p+q <= 4",
            [](std::string& d) {
              bool ok = true;
              for (auto [p, q] : std::vector<std::pair<int, int>>{
                       {1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
                auto x = xpq_numerology(p, q);
                ok &= require(x.max_chains == x.max_chains_closed &&
                                  x.pure_even == x.pure_closed &&
                                  x.pure_odd == x.pure_closed,
                              "(p,q)=(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")",
                              d);
                if (p == 1 && q == 1)
                  ok &= require(
                      x.max_chains == 8 && x.pure_even == 1 && x.pure_odd == 1,
                      "(1,1) values", d);
              }
              return ok;
            });

  criterion(9, "structural exhaustives", [](std::string& d) {
    bool ok = true;
    for (int N : {5, 7, 9}) {
      GenCtx t3(N, Family::ThreeCycles);
      Perm c = long_cycle(N);
      for (auto& x : enumerate_alternating(N))
        ok &= require(onc_membership(x).member() == t3.is_below(x, c),
                      "membership vs order", d);
    }
    for (int N = 1; N <= 9; ++N)
      for (auto& x : enumerate_nc(N)) {
        OncWitness w = onc_membership(x);
        ok &= require(w.od_ok == w.p_ok, "cycle/value property", d);
      }
    for (int N : {5, 7, 9}) {
      GenCtx t2(N, Family::Transpositions);
      GenCtx t3(N, Family::ThreeCycles);
      auto onc = enumerate_onc(N);
      std::set<Perm> members(onc.begin(), onc.end());
      for (auto& x : onc)
        for (auto& y : onc) {
          bool b2 = t2.is_below(x, y);
          ok &= require(b2 == t3.is_below(x, y), "order equivalence", d);
          if (b2)
            ok &= require(members.count(kreweras(y, x)) == 1,
                          "complement closure", d);
        }
    }
    auto gens = enumerate_generators(6, Family::ThreeCycles);
    GenCtx t36(6, Family::ThreeCycles);
    for (auto& x : enumerate_alternating(6))
      for (auto& a : gens) {
        auto cc = classify_multiplication(x, a);  // self-checks vs lengths
        int delta = t36.length(x * a.as_perm(6)) - t36.length(x);
        ok &= require(delta == (cc.direction == CoverDirection::Up      ? 1
                                : cc.direction == CoverDirection::Down ? -1
                                                                       : 0),
                      "cover classification", d);
      }
    return ok;
  });

  criterion(10, "tree bijections", [](std::string& d) {
    bool ok = true;
    for (int N = 1; N <= 9; ++N)
      for (auto& x : enumerate_nc(N))
        ok &= require(phi_inverse(phi(x)) == x, "round trip", d);
    for (int N = 5; N <= 9; ++N)
      for (auto& x : enumerate_nc(N)) {
        BicoloredPlaneTree t = phi(x);
        bool all_odd = true;
        for (bool side : {true, false})
          for (int deg : t.degree_distribution(side))
            if (deg % 2 == 0) all_odd = false;
        bool member = onc_membership(x).member();
        if (N % 2 == 1)
          ok &= require(all_odd == member, "odd degree dictionary", d);
        else if (member)
          ok &= require(!all_odd, "even case has one even vertex", d);
      }
    for (int e = 0; e <= 10; e += 2) {
      auto evens = enumerate_even_trees(e);
      ok &= require(Int(evens.size()) == count_even_trees(e), "even count", d);
      std::set<std::string> img;
      for (auto& t : evens) {
        PlaneTree u = even_to_ternary(t);
        ok &= require(u.is_ternary_tree() && ternary_to_even(u) == t,
                      "ternary round trip", d);
        img.insert(u.str());
      }
      ok &= require(img.size() == evens.size(), "ternary injective", d);
    }
    return ok;
  });

  criterion(11, "convolution identity on 100 seeded parameter sets",
            [](std::string& d) {
              std::mt19937_64 rng(12345);
              int done = 0;
              bool ok = true;
              while (done < 100) {
                int r = 1 + int(rng() % 4), n = int(rng() % 6);
                Int b = Int(int(rng() % 7)) - 3;
                std::vector<Int> a(r);
                for (auto& ai : a) ai = Int(int(rng() % 13)) - 6;
                try {
                  auto [lhs, rhs] = rothe_hagen(a, b, n);
                  ok &= require(lhs == rhs, "identity", d);
                  ++done;
                } catch (const Error& e) {
                  ok &= require(e.code == "ZeroDenominator", "error kind", d);
                }
              }
              return ok;
            });

  criterion(12, "multichain-poset conjecture report, n <= 2, m <= 3",
            [](std::string& d) {
              ConjectureReport r = conjecture_report(2, 3);
              bool ok = require(r.cells.size() == 6, "cell count", d);
              for (auto& cell : r.cells) {
                std::cout << "      n=" << cell.n << " m=" << cell.m
                          << "  max_chains " << cell.max_chains << "/"
                          << cell.conj_max_chains << " mu_hat " << cell.mu_hat
                          << "/" << cell.conj_mu_hat << " mu_bar "
                          << cell.mu_bar << "/" << cell.conj_mu_bar
                          << (cell.agree_max_chains && cell.agree_zeta &&
                                      cell.agree_mu_hat && cell.agree_mu_bar
                                  ? "  (agree)"
                                  : "  (REPORT)")
                          << "\n";
                if (cell.m == 1 || cell.n == 1) {
                  // Reducible to proven statements (m=1) or confirmed by the
                  // brute-force oracle (n=1): asserted.
                  ok &= require(cell.agree_max_chains && cell.agree_zeta &&
                                    cell.agree_mu_hat && cell.agree_mu_bar,
                                "n=" + std::to_string(cell.n) +
                                    " m=" + std::to_string(cell.m),
                                d);
                }
              }
              return ok;
            });

  criterion(13, "k-cycle generalization", [](std::string& d) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      ok &= require(k_count_below_long_cycle(n, 3) ==
                        closed_count(n, ClosedCount::CardinalityOdd),
                    "k=3 count", d);
      for (int q = 1; q <= 5; ++q)
        ok &= require(k_zeta(n, 3, q) == closed_zeta(n, q), "k=3 zeta", d);
    }
    GenCtx k4(7, Family::KCycles, 4, LengthMode::BfsOracle);
    Perm c7 = long_cycle(7);
    int below = 0;
    for (auto& x : enumerate_symmetric(7))
      if (k4.is_below(x, c7)) ++below;
    ok &= require(Int(below) == k_count_below_long_cycle(2, 4),
                  "k=4 BFS cross-check", d);
    return ok;
  });

  std::cout << (failed == 0 ? "ALL CRITERIA PASSED"
                            : std::to_string(failed) + " CRITERIA FAILED")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
