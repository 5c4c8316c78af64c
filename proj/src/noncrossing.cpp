#include "anc/noncrossing.hpp"

#include <algorithm>
#include <map>

namespace anc {

OncWitness onc_membership(const Perm& x) {
  int n = x.degree();
  OncWitness w;
  Perm c = Perm::from_cycles(n, {[&] {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
  }()});
  GenCtx two(n, Family::Transpositions);
  w.is_nc = two.is_below(Perm(n), x) && two.is_below(x, c);

  w.od_ok = true;
  for (const auto& cyc : x.cycles(false)) {
    bool ok = cyc.size() % 2 == 1;
    for (std::size_t i = 0; ok && i + 1 < cyc.size(); ++i)
      ok = cyc[i] < cyc[i + 1] && (cyc[i + 1] - cyc[i]) % 2 == 1;
    if (!ok) {
      w.od_ok = false;
      w.violating_cycle = cyc;
      break;
    }
  }

  w.p_ok = true;
  for (int j = 1; j <= n; ++j) {
    int v = x.apply(j);
    if (v == j) continue;
    if ((j < v) != ((v - j) % 2 != 0)) {
      w.p_ok = false;
      w.violating_index = j;
      break;
    }
  }
  return w;
}

bool noncrossing_geometric(const Perm& x) {
  auto cycles = x.cycles(false);
  for (const auto& c : cycles)
    if (!std::is_sorted(c.begin(), c.end())) return false;
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      for (std::size_t i = 0; i + 1 < cycles[a].size(); ++i)
        for (std::size_t k = 0; k + 1 < cycles[b].size(); ++k) {
          // blocks cross iff i < k < j < l with i,j in one, k,l in other
          int lo1 = cycles[a][i], hi1 = cycles[a][i + 1];
          int lo2 = cycles[b][k], hi2 = cycles[b][k + 1];
          if ((lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
              (lo2 < lo1 && lo1 < hi2 && hi2 < hi1))
            return false;
        }
  return true;
}

namespace {

Perm long_cycle(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Perm::from_cycles(n, {v});
}

}  // namespace

std::vector<Perm> enumerate_nc(int n, int cap) {
  if (n > cap) throw Error("DegreeAboveCap", std::to_string(n));
  if (n == 1) return {Perm(1)};
  GenCtx two(n, Family::Transpositions);
  return build_interval(two, Perm(n), long_cycle(n)).elements;
}

std::vector<Perm> enumerate_onc(int n, int cap) {
  if (n > cap) throw Error("DegreeAboveCap", std::to_string(n));
  if (n == 1) return {Perm(1)};
  if (n % 2 == 1) {
    GenCtx three(n, Family::ThreeCycles);
    return build_interval(three, Perm(n), long_cycle(n)).elements;
  }
  std::vector<Perm> out;
  for (const auto& x : enumerate_nc(n, cap))
    if (onc_membership(x).member()) out.push_back(x);
  return out;
}

namespace {

Int rat_to_int(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw Error("InterpolationInconsistent",
                std::string("non-integer value for ") + what);
  return Int(boost::multiprecision::numerator(r));
}

}  // namespace

Int closed_count(int n, ClosedCount kind) {
  if (n < 1) throw Error("ParameterOutOfRange", "n >= 1");
  switch (kind) {
    case ClosedCount::CardinalityOdd:
      return binomial(3 * n + 1, n) / (n + 1);
    case ClosedCount::CardinalityEven:
      return binomial(3 * n, n) / (2 * n + 1);
    case ClosedCount::MaxChains: {
      Int r = 1;
      for (int i = 0; i < n - 1; ++i) r *= 2 * n + 1;
      return r;
    }
    case ClosedCount::Moebius:
      return binomial(4 * n + 1, n) / (4 * n + 1);
    case ClosedCount::IntervalCount:
      return rat_to_int(Rat(3) / (5 * n + 3) * Rat(binomial(5 * n + 3, n)),
                        "interval count");
  }
  throw Error("ParameterOutOfRange", "kind");
}

Int closed_rank_count(int n, int k) {
  if (k < 0 || k > n) throw Error("ParameterOutOfRange", "0 <= k <= n");
  Rat v = Rat(2 * n + 1) /
          (Rat(2 * n + 1 - k) * Rat(2 * n + 1 - (n - k))) *
          Rat(binomial(2 * n + 1 - k, k)) *
          Rat(binomial(n + 1 + k, n - k));
  return rat_to_int(v, "rank count");
}

Int closed_zeta(int n, const Int& q) {
  Int top = q * (2 * n + 1) - n;
  return rat_to_int(Rat(q) / Rat(top) * Rat(binomial(top, n)), "zeta");
}

Int rank_jump_count(int n, const std::vector<int>& r) {
  Int sum = 0;
  for (int v : r) {
    if (v < 0) throw Error("RankJumpMismatch", "negative jump");
    sum += v;
  }
  if (sum != n) throw Error("RankJumpMismatch", "jumps must sum to n");
  int q = static_cast<int>(r.size());
  Rat out = 1;
  for (int i = 0; i < q - 1; ++i) out *= 2 * n + 1;
  for (int v : r)
    out *= Rat(binomial(2 * n + 1 - v, v)) / Rat(2 * n + 1 - v);
  return rat_to_int(out, "rank jump count");
}

Int rank_jump_count_brute(const IntervalPoset& onc,
                          const std::vector<int>& r) {
  int q = static_cast<int>(r.size());
  int n = onc.top_rank;
  std::vector<int> partial(q + 1, 0);
  for (int i = 1; i <= q; ++i) partial[i] = partial[i - 1] + r[i - 1];
  if (partial[q] != n) throw Error("RankJumpMismatch", "jumps must sum to n");
  const auto& leq = onc.leq_matrix();
  // f[j] = chains (x_1 <= ... <= x_step) with prescribed ranks, x_step = j
  std::vector<Int> f(onc.size(), 0);
  f[0] = 1;  // x_0 = bottom (index 0)
  std::vector<int> prev{0};
  for (int step = 1; step <= q - 1; ++step) {
    std::vector<Int> g(onc.size(), 0);
    std::vector<int> cur;
    for (int j = 0; j < onc.size(); ++j) {
      if (onc.ranks[j] != partial[step]) continue;
      for (int i : prev)
        if (leq[j].test(i)) g[j] += f[i];
      if (g[j] != 0) cur.push_back(j);
    }
    f = std::move(g);
    prev = std::move(cur);
  }
  // close the chain at the top (rank n, index size-1)
  Int total = 0;
  int topi = onc.size() - 1;
  for (int i : prev)
    if (leq[topi].test(i)) total += f[i];
  return total;
}

std::pair<Rat, Rat> rothe_hagen(const std::vector<Int>& a_vec, const Int& b,
                                int n) {
  Int a = 0;
  for (const auto& ai : a_vec) a += ai;
  for (const auto& ai : a_vec)
    for (int m = 0; m <= n; ++m)
      if (ai + b * m == 0) throw Error("ZeroDenominator", "a_i + b*n_i = 0");
  if (a + b * n == 0) throw Error("ZeroDenominator", "a + b*n = 0");

  int r = static_cast<int>(a_vec.size());
  Rat lhs = 0;
  std::vector<int> comp(r, 0);
  // iterate over weak compositions of n into r parts
  for (;;) {
    int used = 0;
    for (int i = 0; i + 1 < r; ++i) used += comp[i];
    comp[r - 1] = n - used;
    Rat term = 1;
    for (int i = 0; i < r; ++i) {
      Int top = a_vec[i] + b * comp[i];
      term *= Rat(a_vec[i]) / Rat(top) * Rat(binomial(top, comp[i]));
    }
    lhs += term;
    // advance the first r-1 free coordinates (odometer on the simplex)
    int i = 0;
    for (; i + 1 < r; ++i) {
      int suffix = 0;
      for (int j = i; j + 1 < r; ++j) suffix += comp[j];
      if (suffix < n) {
        ++comp[i];
        for (int j = 0; j < i; ++j) comp[j] = 0;
        break;
      }
    }
    if (i + 1 >= r) break;
  }
  Rat rhs = Rat(a) / Rat(a + b * n) * Rat(binomial(a + b * n, n));
  return {lhs, rhs};
}

TwoEvenCycleTarget TwoEvenCycleTarget::standard(int p, int q) {
  TwoEvenCycleTarget t;
  t.p = p;
  t.q = q;
  for (int i = 1; i <= 2 * p; ++i) t.a_labels.push_back(i);
  for (int j = 1; j <= 2 * q; ++j) t.b_labels.push_back(2 * p + j);
  return t;
}

Perm TwoEvenCycleTarget::as_perm() const {
  return Perm::from_cycles(degree(), {a_labels, b_labels});
}

GeneratorClass classify_generator(const TwoEvenCycleTarget& target,
                                  const CycleGen& a) {
  if (a.k() != 3) throw Error("ParameterOutOfRange", "3-cycles only");
  auto pos_in = [](const std::vector<int>& labels, int v) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == v) return static_cast<int>(i) + 1;
    return 0;
  };
  std::array<int, 3> in_a{}, in_b{};
  int na = 0;
  for (int t = 0; t < 3; ++t) {
    in_a[t] = pos_in(target.a_labels, a.entries[t]);
    in_b[t] = pos_in(target.b_labels, a.entries[t]);
    if (!in_a[t] && !in_b[t])
      throw Error("SupportOutsideTarget", a.str());
    if (in_a[t]) ++na;
  }
  GeneratorClass out{GenKind::Mixed, std::nullopt};
  if (na == 3) {
    out.kind = GenKind::PureA;
    return out;
  }
  if (na == 0) {
    out.kind = GenKind::PureB;
    return out;
  }
  // Rotate the oriented cycle to the form (a_i a_j b_k) or (a_i b_j b_k)
  // per the parity definition; the parity is that of k - i.
  for (int rot = 0; rot < 3; ++rot) {
    int t0 = rot, t1 = (rot + 1) % 3, t2 = (rot + 2) % 3;
    if (na == 2 && in_a[t0] && in_a[t1] && in_b[t2]) {
      int diff = in_b[t2] - in_a[t0];
      out.parity = diff % 2 != 0 ? GenParity::Odd : GenParity::Even;
      return out;
    }
    if (na == 1 && in_a[t0] && in_b[t1] && in_b[t2]) {
      int diff = in_b[t2] - in_a[t0];
      out.parity = diff % 2 != 0 ? GenParity::Odd : GenParity::Even;
      return out;
    }
  }
  throw Error("SupportOutsideTarget", "unreachable");
}

XpqNumerology xpq_numerology(int p, int q, long long max_elements) {
  if (p < 1 || q < 1) throw Error("ParameterOutOfRange", "need p, q >= 1");
  TwoEvenCycleTarget t = TwoEvenCycleTarget::standard(p, q);
  Perm x = t.as_perm();
  int n = t.degree();
  GenCtx ctx(n, Family::ThreeCycles);
  IntervalPoset P = build_interval(ctx, Perm(n), x, max_elements);

  XpqNumerology out;
  out.total = P.size();
  out.rank_vector = P.rank_vector_counts();
  out.moebius = moebius(P);
  out.max_chains = count_maximal_chains(P);

  auto within = [](const std::vector<int>& c, int lo, int hi) {
    for (int v : c)
      if (v < lo || v > hi) return false;
    return true;
  };
  for (const auto& y : P.elements) {
    bool pure = true, has_even = false;
    for (const auto& c : y.cycles(false)) {
      if (!within(c, 1, 2 * p) && !within(c, 2 * p + 1, 2 * (p + q)))
        pure = false;
      if (c.size() % 2 == 0) has_even = true;
    }
    if (!pure)
      ++out.mixed;
    else if (has_even)
      ++out.pure_even;
    else
      ++out.pure_odd;
  }

  out.max_chains_closed = 2 * factorial(p + q - 1);
  for (int i = 0; i < p; ++i) out.max_chains_closed *= 2 * p;
  for (int i = 0; i < q; ++i) out.max_chains_closed *= 2 * q;
  out.max_chains_closed /= factorial(p - 1) * factorial(q - 1);
  out.pure_closed = binomial(3 * p - 1, p - 1) * binomial(3 * q - 1, q - 1);
  return out;
}

Int k_count_below_long_cycle(int n, int k) {
  if (k < 3 || n < 1) throw Error("ParameterOutOfRange", "k >= 3, n >= 1");
  return rat_to_int(
      Rat(2) / Rat((k - 1) * n + 2) * Rat(binomial(Int(k) * n + 1, n)),
      "k-cycle count");
}

Int k_zeta(int n, int k, const Int& q) {
  if (k < 3 || n < 1) throw Error("ParameterOutOfRange", "k >= 3, n >= 1");
  Int denom = (q - 1) * (k - 1) * n + q;
  if (denom == 0) throw Error("ZeroDenominator", "k_zeta");
  return rat_to_int(Rat(q) / Rat(denom) * Rat(binomial(denom + n - 1, n)),
                    "k-cycle zeta");
}

int k_nice_length(const Perm& x, int k) {
  for (const auto& c : x.cycles(true))
    if ((static_cast<int>(c.size()) - 1) % (k - 1) != 0)
      throw Error("NotNiceElement", x.str());
  return cycle_stats(x).ell2 / (k - 1);
}

}  // namespace anc
