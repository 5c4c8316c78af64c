#include "anc/mdiv.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "anc/noncrossing.hpp"

namespace anc {

namespace {

Perm long_cycle(int degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 1);
  return Perm::from_cycles(degree, {v});
}

void chains_rec(const IntervalPoset& onc, int m, std::vector<int>& cur,
                std::vector<std::vector<int>>& out, long long cap) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    if (static_cast<long long>(out.size()) > cap)
      throw Error("TooManyElements", "mdiv element cap exceeded");
    return;
  }
  const auto& leq = onc.leq_matrix();
  for (int j = 0; j < onc.size(); ++j) {
    if (!cur.empty() && !leq[j].test(cur.back())) continue;
    cur.push_back(j);
    chains_rec(onc, m, cur, out, cap);
    cur.pop_back();
  }
}

}  // namespace

MdivPoset build_mdiv(int n, int m, long long max_elements) {
  if (n < 1 || m < 1) throw Error("ParameterOutOfRange", "n, m >= 1");
  int degree = 2 * n + 1;
  GenCtx ctx(degree, Family::ThreeCycles);
  Perm c = long_cycle(degree);
  IntervalPoset onc = build_interval(ctx, Perm(degree), c);

  std::vector<std::vector<int>> index_chains;
  std::vector<int> cur;
  chains_rec(onc, m, cur, index_chains, max_elements);

  MdivPoset P;
  P.n = n;
  P.m = m;
  for (const auto& ic : index_chains) {
    Multichain mc;
    for (int idx : ic) mc.chain.push_back(onc.elements[idx]);
    // delta = (d_0; d_1..d_m) with d_i = x_i^-1 x_{i+1}, x_0 = e, x_{m+1} = c
    Perm x_prev(degree);
    for (int i = 0; i <= m; ++i) {
      const Perm& next = i == m ? c : mc.chain[i];
      mc.delta.push_back(x_prev.inverse() * next);
      x_prev = next;
    }
    P.ranks.push_back(ctx.length(mc.chain.front()));
    P.elements.push_back(std::move(mc));
  }

  int E = P.size();
  P.leq.assign(E, boost::dynamic_bitset<>(E));
  for (int j = 0; j < E; ++j)
    for (int i = 0; i < E; ++i) {
      bool below = true;
      for (int t = 1; t <= m && below; ++t)
        below = ctx.is_below(P.elements[j].delta[t], P.elements[i].delta[t]);
      if (below) P.leq[j].set(i);
    }
  // order axioms
  for (int i = 0; i < E; ++i) {
    if (!P.leq[i].test(i)) throw Error("OrderAxiomViolation", "reflexivity");
    for (int j = 0; j < E; ++j) {
      if (i != j && P.leq[i].test(j) && P.leq[j].test(i))
        throw Error("OrderAxiomViolation", "antisymmetry");
      if (P.leq[j].test(i) && (P.leq[i] & ~P.leq[j]).any())
        throw Error("OrderAxiomViolation", "transitivity");
    }
  }
  for (int i = 0; i < E; ++i) {
    if (P.leq[i].count() == P.leq[i].size()) P.top = i;
    if (P.leq[i].count() == 1) P.minimal.push_back(i);
  }
  if (P.top < 0) throw Error("OrderAxiomViolation", "no greatest element");
  // covers by transitive reduction
  for (int j = 0; j < E; ++j)
    for (int i = 0; i < E; ++i) {
      if (i == j || !P.leq[j].test(i)) continue;
      bool direct = true;
      for (int z = 0; z < E && direct; ++z)
        if (z != i && z != j && P.leq[z].test(i) && P.leq[j].test(z))
          direct = false;
      if (direct) P.covers.emplace_back(i, j);
    }
  return P;
}

MdivStats mdiv_stats(const MdivPoset& P, int max_q) {
  MdivStats s;
  s.minimal_count = static_cast<int>(P.minimal.size());

  int E = P.size();
  std::vector<std::vector<int>> lower(E);
  for (const auto& [lo, hi] : P.covers) lower[hi].push_back(lo);
  std::vector<int> order(E);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return P.ranks[a] < P.ranks[b]; });
  std::vector<Int> f(E, 0);
  for (int i : P.minimal) f[i] = 1;
  for (int i : order)
    for (int lo : lower[i]) f[i] += f[lo];
  s.max_chains = f[P.top];

  std::vector<Int> g(E, 1);
  s.zeta.push_back(1);  // q = 1
  for (int q = 2; q <= max_q; ++q) {
    Int total = 0;
    for (int i = 0; i < E; ++i) total += g[i];
    s.zeta.push_back(total);
    if (q == max_q) break;
    std::vector<Int> h(E, 0);
    for (int i = 0; i < E; ++i)
      for (int j = 0; j < E; ++j)
        if (P.leq[i].test(j)) h[i] += g[j];
    g = std::move(h);
  }
  return s;
}

MoebiusVariants mdiv_moebius_variants(const MdivPoset& P) {
  int E = P.size();
  std::vector<int> order(E);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return P.ranks[a] < P.ranks[b]; });

  // hat: adjoin a minimum below everything
  std::vector<Int> hm(E, 0);
  for (int i : order) {
    Int acc = 1;  // mu of the adjoined bottom
    for (int j = 0; j < E; ++j)
      if (j != i && P.leq[i].test(j)) acc += hm[j];
    hm[i] = -acc;
  }

  // bar: identify the minimal elements; below every non-minimal element
  std::vector<char> minimal(E, 0);
  for (int i : P.minimal) minimal[i] = 1;
  std::vector<Int> bm(E, 0);
  for (int i : order) {
    if (minimal[i]) continue;
    Int acc = 1;  // mu of the collapsed class
    for (int j = 0; j < E; ++j)
      if (j != i && !minimal[j] && P.leq[i].test(j)) acc += bm[j];
    bm[i] = -acc;
  }
  // degenerate case: the top is itself minimal (single-element poset)
  Int mu_bar = minimal[P.top] ? Int(1) : bm[P.top];
  return {hm[P.top], mu_bar};
}

Int mdiv_conjectured_max_chains(int n, int m) {
  Int r = 1;
  for (int i = 0; i < n; ++i) r *= m;
  for (int i = 0; i < n - 1; ++i) r *= 2 * n + 1;
  return r;
}

Int mdiv_conjectured_zeta(int n, int m, int q) {
  Int d = Int(2 * m * (q - 1) + 1) * n + m * (q - 1) + 1;
  Rat v = Rat(m * (q - 1) + 1) / Rat(d) * Rat(binomial(d, n));
  if (boost::multiprecision::denominator(v) != 1)
    throw Error("InterpolationInconsistent", "conjectured zeta not integral");
  return Int(boost::multiprecision::numerator(v));
}

Int mdiv_conjectured_mu_hat(int n, int m) {
  Int d = Int(m) * (2 * n + 1) - 1;
  Rat v = Rat(m - 1) / Rat(d) * Rat(binomial(d, n));
  Int out = Int(boost::multiprecision::numerator(v)) /
            Int(boost::multiprecision::denominator(v));
  return (n - 1) % 2 == 0 ? out : -out;
}

Int mdiv_conjectured_mu_bar(int n, int m) {
  Int d1 = Int(m + 1) * (2 * n + 1) - 1;
  Int d2 = Int(m) * (2 * n + 1) - 1;
  Rat v = Rat(m) / Rat(d1) * Rat(binomial(d1, n)) -
          Rat(m - 1) / Rat(d2) * Rat(binomial(d2, n));
  Int out = Int(boost::multiprecision::numerator(v)) /
            Int(boost::multiprecision::denominator(v));
  return n % 2 == 0 ? out : -out;
}

ConjectureReport conjecture_report(int n_max, int m_max) {
  ConjectureReport report;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) {
      MdivPoset P = build_mdiv(n, m);
      MdivStats stats = mdiv_stats(P, n + 2);
      MoebiusVariants mv = mdiv_moebius_variants(P);
      ConjectureCell cell;
      cell.n = n;
      cell.m = m;
      cell.max_chains = stats.max_chains;
      cell.conj_max_chains = mdiv_conjectured_max_chains(n, m);
      cell.zeta = stats.zeta;
      for (int q = 1; q <= n + 2; ++q)
        cell.conj_zeta.push_back(mdiv_conjectured_zeta(n, m, q));
      cell.mu_hat = mv.mu_hat;
      cell.conj_mu_hat = mdiv_conjectured_mu_hat(n, m);
      cell.mu_bar = mv.mu_bar;
      cell.conj_mu_bar = mdiv_conjectured_mu_bar(n, m);
      cell.agree_max_chains = cell.max_chains == cell.conj_max_chains;
      cell.agree_zeta = cell.zeta == cell.conj_zeta;
      cell.agree_mu_hat = cell.mu_hat == cell.conj_mu_hat;
      cell.agree_mu_bar = cell.mu_bar == cell.conj_mu_bar;
      report.cells.push_back(std::move(cell));
    }
  return report;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ";";
    s += v[i].str();
  }
  return s;
}

}  // namespace

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json jc;
    jc["n"] = c.n;
    jc["m"] = c.m;
    jc["max_chains"] = c.max_chains.str();
    jc["conjectured_max_chains"] = c.conj_max_chains.str();
    jc["agree_max_chains"] = c.agree_max_chains;
    jc["zeta"] = nlohmann::json::array();
    for (const auto& z : c.zeta) jc["zeta"].push_back(z.str());
    jc["conjectured_zeta"] = nlohmann::json::array();
    for (const auto& z : c.conj_zeta) jc["conjectured_zeta"].push_back(z.str());
    jc["agree_zeta"] = c.agree_zeta;
    jc["mu_hat"] = c.mu_hat.str();
    jc["conjectured_mu_hat"] = c.conj_mu_hat.str();
    jc["agree_mu_hat"] = c.agree_mu_hat;
    jc["mu_bar"] = c.mu_bar.str();
    jc["conjectured_mu_bar"] = c.conj_mu_bar.str();
    jc["agree_mu_bar"] = c.agree_mu_bar;
    j.push_back(jc);
  }
  return j;
}

std::string ConjectureReport::to_csv() const {
  std::ostringstream os;
  os << "n,m,max_chains,conj_max_chains,agree_max_chains,zeta,conj_zeta,"
        "agree_zeta,mu_hat,conj_mu_hat,agree_mu_hat,mu_bar,conj_mu_bar,"
        "agree_mu_bar\n";
  for (const auto& c : cells)
    os << c.n << ',' << c.m << ',' << c.max_chains.str() << ','
       << c.conj_max_chains.str() << ',' << (c.agree_max_chains ? 1 : 0) << ','
       << join_ints(c.zeta) << ',' << join_ints(c.conj_zeta) << ','
       << (c.agree_zeta ? 1 : 0) << ',' << c.mu_hat.str() << ','
       << c.conj_mu_hat.str() << ',' << (c.agree_mu_hat ? 1 : 0) << ','
       << c.mu_bar.str() << ',' << c.conj_mu_bar.str() << ','
       << (c.agree_mu_bar ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace anc
