#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "anc/altorder.hpp"
#include "anc/hurwitz.hpp"
#include "anc/mdiv.hpp"
#include "anc/noncrossing.hpp"
#include "anc/prefix.hpp"
#include "anc/trees.hpp"

namespace {

using namespace anc;

Perm long_cycle(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm::from_cycles(n, {v});
}

GenCtx make_ctx(int degree, int family) {
  if (family == 2) return GenCtx(degree, Family::Transpositions);
  if (family == 3) return GenCtx(degree, Family::ThreeCycles);
  if (family >= 4) return GenCtx(degree, Family::KCycles, family);
  throw Error("ParameterOutOfRange", "family must be 2, 3 or k >= 4");
}

struct IntervalOpts {
  std::string top, bottom = "e";
  int n = 0;
  int family = 3;
  int onc = 0;  // shorthand: the full poset below the long cycle
  long long max_elements = 500000;
};

IntervalPoset build_from_opts(const IntervalOpts& o) {
  int degree = o.onc > 0 ? o.onc : o.n;
  GenCtx ctx = make_ctx(degree, o.family);
  Perm top = o.onc > 0 ? long_cycle(o.onc) : Perm::parse(o.top, degree);
  Perm bottom = o.onc > 0 ? Perm(degree) : Perm::parse(o.bottom, degree);
  return build_interval(ctx, bottom, top, o.max_elements);
}

void add_interval_opts(CLI::App* cmd, IntervalOpts& o, bool need_top) {
  auto* top = cmd->add_option("--top,--perm", o.top,
                              "top element in cycle notation");
  cmd->add_option("--bottom", o.bottom, "bottom element (default identity)");
  auto* n = cmd->add_option("--n", o.n, "degree of the permutations");
  cmd->add_option("--family", o.family,
                  "generating family: 2, 3 (default) or k >= 4");
  auto* onc =
      cmd->add_option("--onc", o.onc,
                      "use the interval below the long cycle of this degree");
  cmd->add_option("--max-elements", o.max_elements, "interval size cap");
  if (need_top) {
    top->excludes(onc);
    n->excludes(onc);
  }
}

// ---------------------------------------------------------------- verify

struct VerifyState {
  int passed = 0, failed = 0;
  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    (ok ? passed : failed)++;
  }
};

void verify_covers(VerifyState& v) {
  bool all = true;
  GenCtx ctx(6, Family::ThreeCycles);
  for (const auto& x : enumerate_alternating(6))
    for (const auto& a : ctx.generators())
      classify_multiplication(x, a);  // throws on any mismatch
  v.check("cover classification agrees with the length function on A6", all);
  bool certified = true;
  for (const auto& s : {"(1 2 3)(4 5)(6 7)", "(1 2 3 4 5)(6 7 8)(9 10)(11 12)"}) {
    Perm x = Perm::parse(s, 12);
    certified = certified && decompose_interval(x).certified;
  }
  v.check("interval product decomposition certified", certified);
}

void verify_onc(VerifyState& v) {
  bool counts = true;
  for (int n = 1; n <= 4; ++n) {
    counts = counts &&
             Int(enumerate_onc(2 * n + 1).size()) ==
                 closed_count(n, ClosedCount::CardinalityOdd) &&
             Int(enumerate_onc(2 * n).size()) ==
                 closed_count(n, ClosedCount::CardinalityEven);
  }
  v.check("ONC cardinalities match closed forms (n <= 4)", counts);
  bool equiv = true;
  for (int N : {5, 7}) {
    GenCtx three(N, Family::ThreeCycles);
    Perm c = long_cycle(N);
    for (const auto& x : enumerate_alternating(N))
      equiv = equiv && onc_membership(x).member() ==
                           (three.is_below(Perm(N), x) && three.is_below(x, c));
  }
  v.check("ONC membership matches the 3-cycle interval (N = 5, 7)", equiv);
}

void verify_zeta(VerifyState& v) {
  bool zeta = true;
  for (int n = 1; n <= 3; ++n) {
    GenCtx ctx(2 * n + 1, Family::ThreeCycles);
    IntervalPoset P = build_interval(ctx, Perm(2 * n + 1), long_cycle(2 * n + 1));
    for (int q = 1; q <= 4; ++q)
      zeta = zeta && count_multichains(P, q) == closed_zeta(n, q);
  }
  v.check("multichain counts match the zeta closed form (n <= 3, q <= 4)", zeta);
  bool mob = true, chains = true;
  for (int n = 2; n <= 3; ++n) {
    GenCtx ctx(2 * n + 1, Family::ThreeCycles);
    IntervalPoset P = build_interval(ctx, Perm(2 * n + 1), long_cycle(2 * n + 1));
    Int expect = closed_count(n, ClosedCount::Moebius);
    mob = mob && moebius(P) == (n % 2 == 0 ? expect : -expect);
    chains = chains && count_maximal_chains(P) ==
                           closed_count(n, ClosedCount::MaxChains);
  }
  v.check("Moebius numbers match the closed form (n = 2, 3)", mob);
  v.check("maximal chain counts match the closed form (n = 2, 3)", chains);
}

void verify_hurwitz(VerifyState& v) {
  auto orbits = [](const std::string& s, int n) {
    return orbit_decomposition(Perm::parse(s, n)).orbits.size();
  };
  v.check("long odd cycle is Hurwitz transitive",
          orbits("(1 2 3 4 5)", 5) == 1);
  v.check("two even cycles give 2 orbits", orbits("(1 2)(3 4)", 4) == 2);
  v.check("even pair plus odd cycle gives 2 orbits",
          orbits("(1 2)(3 4)(5 6 7)", 7) == 2);
  v.check("four even cycles give 12 orbits",
          orbits("(1 2)(3 4)(5 6)(7 8)", 8) == 12);
}

void verify_trees(VerifyState& v) {
  bool round = true;
  for (const auto& x : enumerate_nc(7)) round = round && phi_inverse(phi(x)) == x;
  v.check("phi round trip on NC7", round);
  bool sizes = true;
  for (int e = 0; e <= 8; ++e) {
    auto evens = enumerate_even_trees(e);
    sizes = sizes && Int(evens.size()) == count_even_trees(e);
    for (const auto& t : evens)
      sizes = sizes && ternary_to_even(even_to_ternary(t)) == t;
  }
  v.check("even/ternary bijection and counts (<= 8 edges)", sizes);
}

int run_verify(const std::string& suite) {
  VerifyState v;
  if (suite == "covers" || suite == "all") verify_covers(v);
  if (suite == "onc" || suite == "all") verify_onc(v);
  if (suite == "zeta" || suite == "all") verify_zeta(v);
  if (suite == "hurwitz" || suite == "all") verify_hurwitz(v);
  if (suite == "trees" || suite == "all") verify_trees(v);
  std::cout << v.passed << " passed, " << v.failed << " failed\n";
  return v.failed == 0 ? 0 : 2;
}

// ---------------------------------------------------------------- tables

std::string table1_csv(int max_n) {
  std::string out = "N,f_coeffs,rank_generating_coeffs\n";
  for (int n = 1; n <= max_n; ++n) {
    auto rg = rank_generating_polynomial(n);
    out += std::to_string(n) + "," + rg.f.coeff_list() + "," +
           rg.distribution.coeff_list() + "\n";
  }
  return out;
}

std::string table2_csv(int max_n) {
  std::string out = "n,rank_vector\n";
  for (int n = 1; n <= max_n; ++n) {
    GenCtx ctx(2 * n + 1, Family::ThreeCycles);
    IntervalPoset P = build_interval(ctx, Perm(2 * n + 1), long_cycle(2 * n + 1));
    out += std::to_string(n) + ",";
    auto rv = P.rank_vector_counts();
    for (std::size_t i = 0; i < rv.size(); ++i)
      out += (i ? ";" : "") + rv[i].str();
    out += "\n";
  }
  return out;
}

std::string table3_csv(int max_sum) {
  std::string out = "p,q,mixed,total,moebius,rank_vector\n";
  for (int s = 2; s <= max_sum; ++s)
    for (int p = 1; 2 * p <= s; ++p) {
      int q = s - p;
      XpqNumerology x = xpq_numerology(p, q);
      out += std::to_string(p) + "," + std::to_string(q) + "," +
             x.mixed.str() + "," + x.total.str() + "," + x.moebius.str() + ",";
      for (std::size_t i = 0; i < x.rank_vector.size(); ++i)
        out += (i ? ";" : "") + x.rank_vector[i].str();
      out += "\n";
    }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the 3-cycle prefix order on alternating groups"};
  app.require_subcommand(1);
  std::uint64_t seed = 12345;
  int threads = 1;
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--threads", threads, "worker count (output is identical)");

  int exit_code = 0;

  // interval
  IntervalOpts iv;
  auto* interval = app.add_subcommand("interval", "build an interval poset");
  add_interval_opts(interval, iv, true);
  std::string interval_format = "json";
  interval->add_option("--format", interval_format, "json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  interval->callback([&] {
    IntervalPoset P = build_from_opts(iv);
    if (interval_format == "json") {
      std::cout << P.to_json() << "\n";
    } else if (interval_format == "dot") {
      std::cout << P.to_dot();
    } else {
      std::cout << "degree: " << P.degree << "\nelements: " << P.size()
                << "\nrank vector:";
      for (const auto& r : P.rank_vector_counts()) std::cout << " " << r.str();
      std::cout << "\nmaximal chains: " << count_maximal_chains(P).str()
                << "\nmoebius: " << moebius(P).str() << "\n";
    }
  });

  // zeta
  IntervalOpts zv;
  auto* zeta = app.add_subcommand("zeta", "zeta polynomial / multichain counts");
  add_interval_opts(zeta, zv, true);
  int zeta_q = 0;
  zeta->add_option("--q", zeta_q, "evaluate at q (otherwise print coefficients)");
  zeta->callback([&] {
    IntervalPoset P = build_from_opts(zv);
    if (zeta_q > 0)
      std::cout << count_multichains(P, zeta_q).str() << "\n";
    else
      std::cout << zeta_polynomial(P).coeff_list() << "\n";
  });

  // moebius
  IntervalOpts mv;
  auto* moeb = app.add_subcommand("moebius", "Moebius number of an interval");
  add_interval_opts(moeb, mv, true);
  moeb->callback([&] {
    std::cout << moebius(build_from_opts(mv)).str() << "\n";
  });

  // onc
  auto* onc = app.add_subcommand("onc", "odd noncrossing partitions");
  int onc_n = 0;
  std::string onc_perm;
  bool onc_list = false;
  onc->add_option("--n", onc_n, "degree")->required();
  onc->add_option("--perm", onc_perm, "test membership of one permutation");
  onc->add_flag("--list", onc_list, "list the elements");
  onc->callback([&] {
    if (!onc_perm.empty()) {
      OncWitness w = onc_membership(Perm::parse(onc_perm, onc_n));
      std::cout << "member: " << (w.member() ? "yes" : "no")
                << "\nnoncrossing: " << (w.is_nc ? "yes" : "no")
                << "\nodd cycles with odd gaps: " << (w.od_ok ? "yes" : "no")
                << "\n";
      exit_code = w.member() ? 0 : 2;
      return;
    }
    auto elems = enumerate_onc(onc_n);
    std::cout << "count: " << elems.size() << "\n";
    if (onc_list)
      for (const auto& x : elems) std::cout << x.str() << "\n";
  });

  // tables
  auto* tables = app.add_subcommand("tables", "reproduce the reference tables");
  int table_id = 0, table_max_n = 0;
  tables->add_option("--table", table_id, "1, 2 or 3")->required();
  tables->add_option("--max-n", table_max_n,
                     "largest degree / largest p+q (table 3)");
  tables->callback([&] {
    if (table_id == 1)
      std::cout << table1_csv(table_max_n ? table_max_n : 7);
    else if (table_id == 2)
      std::cout << table2_csv(table_max_n ? table_max_n : 5);
    else if (table_id == 3)
      std::cout << table3_csv(table_max_n ? table_max_n : 5);
    else
      throw CLI::ValidationError("--table must be 1, 2 or 3");
  });

  // hurwitz
  auto* hur = app.add_subcommand("hurwitz", "Hurwitz orbits on reduced words");
  std::string hur_perm, hur_report = "text";
  int hur_n = 0;
  long long max_words = 1000000;
  bool hur_graph = false;
  hur->add_option("--perm", hur_perm, "target permutation")->required();
  hur->add_option("--n", hur_n, "degree")->required();
  hur->add_option("--report", hur_report, "text | json");
  hur->add_option("--max-words", max_words, "reduced word cap");
  hur->add_flag("--orbit-graph", hur_graph, "emit the word graph as DOT");
  hur->callback([&] {
    Perm x = Perm::parse(hur_perm, hur_n);
    if (hur_graph) {
      std::cout << orbit_graph_dot(x, max_words);
      return;
    }
    OrbitReport r = orbit_decomposition(x, max_words);
    if (hur_report == "json") {
      std::cout << r.to_json().dump(2) << "\n";
    } else {
      std::cout << "words: " << r.total_words << "\norbits: " << r.orbits.size()
                << "\n";
      for (const auto& o : r.orbits)
        std::cout << "  size " << o.size << "  min " << o.canonical.str()
                  << "\n";
    }
  });

  // bijection phi
  auto* bij = app.add_subcommand("bijection", "tree bijections");
  auto* phi_cmd = bij->add_subcommand("phi", "noncrossing partition to tree");
  std::string phi_perm, phi_format = "json";
  int phi_n = 0;
  phi_cmd->add_option("--perm", phi_perm, "noncrossing permutation")->required();
  phi_cmd->add_option("--n", phi_n, "degree")->required();
  phi_cmd->add_option("--format", phi_format, "json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  bij->require_subcommand(1);
  phi_cmd->callback([&] {
    BicoloredPlaneTree t = phi(Perm::parse(phi_perm, phi_n));
    if (phi_format == "json")
      std::cout << t.to_json().dump(2) << "\n";
    else if (phi_format == "dot")
      std::cout << t.to_dot();
    else
      std::cout << t.str() << "\n";
  });

  // mdiv
  auto* mdiv_cmd = app.add_subcommand("mdiv", "multichain divisibility poset");
  int mdiv_n = 0, mdiv_m = 0, mdiv_max_n = 2, mdiv_max_m = 3;
  bool conjectures = false;
  std::string mdiv_report = "text", mdiv_format = "csv";
  mdiv_cmd->add_option("--n", mdiv_n, "rank parameter");
  mdiv_cmd->add_option("--m", mdiv_m, "multichain length");
  mdiv_cmd->add_flag("--conjectures", conjectures, "emit the comparison report");
  mdiv_cmd->add_option("--max-n", mdiv_max_n, "report cap for n");
  mdiv_cmd->add_option("--max-m", mdiv_max_m, "report cap for m");
  mdiv_cmd->add_option("--report", mdiv_report, "text | json");
  mdiv_cmd->add_option("--format", mdiv_format, "csv | json (report mode)");
  mdiv_cmd->callback([&] {
    if (conjectures) {
      ConjectureReport r = conjecture_report(mdiv_max_n, mdiv_max_m);
      if (mdiv_format == "json")
        std::cout << r.to_json().dump(2) << "\n";
      else
        std::cout << r.to_csv();
      return;
    }
    if (mdiv_n < 1 || mdiv_m < 1)
      throw CLI::ValidationError("mdiv needs --n and --m (or --conjectures)");
    MdivPoset P = build_mdiv(mdiv_n, mdiv_m);
    MdivStats s = mdiv_stats(P, mdiv_n + 2);
    MoebiusVariants mu = mdiv_moebius_variants(P);
    if (mdiv_report == "json") {
      nlohmann::json j;
      j["n"] = P.n;
      j["m"] = P.m;
      j["elements"] = P.size();
      j["minimal"] = s.minimal_count;
      j["max_chains"] = s.max_chains.str();
      j["zeta"] = nlohmann::json::array();
      for (const auto& z : s.zeta) j["zeta"].push_back(z.str());
      j["mu_hat"] = mu.mu_hat.str();
      j["mu_bar"] = mu.mu_bar.str();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "elements: " << P.size() << "\nminimal: " << s.minimal_count
                << "\nmax chains: " << s.max_chains.str() << "\nzeta:";
      for (const auto& z : s.zeta) std::cout << " " << z.str();
      std::cout << "\nmu_hat: " << mu.mu_hat.str()
                << "\nmu_bar: " << mu.mu_bar.str() << "\n";
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "covers|onc|zeta|hurwitz|trees|all")
      ->required()
      ->check(CLI::IsMember({"covers", "onc", "zeta", "hurwitz", "trees", "all"}));
  verify->callback([&] { exit_code = run_verify(suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const anc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
