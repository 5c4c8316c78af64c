#include "anc/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "anc/prefix.hpp"

namespace anc {

Perm FactorizationWord::product() const {
  Perm p(degree);
  for (const auto& t : letters) p = p * t.as_perm(degree);
  return p;
}

std::string FactorizationWord::str() const {
  if (letters.empty()) return "e";
  std::string s;
  for (const auto& t : letters) s += t.str();
  return s;
}

namespace {

CycleGen conjugated(const CycleGen& g, const Perm& by) {
  // entries of w^-1 g w are the w^-1 images of the entries of g
  Perm winv = by.inverse();
  std::vector<int> e;
  e.reserve(g.entries.size());
  for (int v : g.entries) e.push_back(winv.apply(v));
  return CycleGen(std::move(e));
}

}  // namespace

FactorizationWord hurwitz_step(const FactorizationWord& w, int i,
                               int direction) {
  int len = static_cast<int>(w.letters.size());
  if (i < 1 || i >= len) throw Error("IndexOutOfRange", std::to_string(i));
  FactorizationWord out = w;
  const CycleGen& ti = w.letters[i - 1];
  const CycleGen& tj = w.letters[i];
  if (direction > 0) {
    // sigma_i: (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1})
    out.letters[i - 1] = tj;
    out.letters[i] = conjugated(ti, tj.as_perm(w.degree));
  } else {
    // sigma_i^-1: (t_i, t_{i+1}) -> (t_i t_{i+1} t_i^-1, t_i)
    out.letters[i - 1] =
        conjugated(tj, ti.inverse().as_perm(w.degree));
    out.letters[i] = ti;
  }
  return out;
}

FactorizationWord apply_braid(const FactorizationWord& w,
                              const BraidWord& braid) {
  FactorizationWord out = w;
  // rightmost operator acts first
  for (auto it = braid.rbegin(); it != braid.rend(); ++it)
    out = hurwitz_step(out, std::abs(*it), *it > 0 ? +1 : -1);
  return out;
}

BraidWord braid_gamma(int n) {
  BraidWord b;
  for (int rep = 0; rep < n; ++rep)
    for (int i = n - 1; i >= 1; --i) b.push_back(-i);
  return b;
}

BraidWord braid_omega(int i) {
  BraidWord b{-1, -2, -2};
  for (int s = 3; s <= i + 1; ++s) b.push_back(s);
  return b;
}

BraidWord braid_tau(int i, int k) {
  BraidWord b{1, 1};
  for (int s = 2; s <= k - 1; ++s) b.push_back(s);
  b.push_back(-k);
  b.push_back(-k);
  for (int s = k + 1; s <= i + k - 1; ++s) b.push_back(s);
  return b;
}

BraidWord braid_beta_pk(int p, int k) {
  if (k == 2) return braid_omega(p);
  BraidWord b;
  for (int s = k; s >= 3; --s)
    for (int v : braid_tau(p, s)) b.push_back(v);
  for (int v : braid_omega(p)) b.push_back(v);
  return b;
}

BraidWord braid_mu_k(int k) {
  BraidWord b{1, 1};
  for (int s = 2; s <= k - 2; ++s) b.push_back(s);
  b.push_back(k - 1);
  b.push_back(k - 1);
  return b;
}

BraidWord braid_alpha(int p, int k, int j) {
  BraidWord b;
  for (int rep = 0; rep < j; ++rep)
    for (int v : braid_mu_k(k)) b.push_back(v);
  for (int v : braid_beta_pk(p, k)) b.push_back(v);
  return b;
}

BraidWord braid_mu2(int i) { return {i, i, i + 1}; }

BraidWord braid_nu(int i) {
  BraidWord b;
  for (int s = 3; s <= i + 1; ++s) b.push_back(-s);
  return b;
}

BraidWord braid_omega2(int i) {
  BraidWord b;
  for (int s = i + 1; s >= 2; --s)
    for (int v : braid_mu2(s)) b.push_back(v);
  return b;
}

BraidWord braid_xi(int j, int i) {
  BraidWord b = braid_nu(j);
  for (int s = i; s >= 2; --s)
    for (int v : braid_nu(s)) b.push_back(v);
  return b;
}

BraidWord braid_beta_kj(int k, int j) {
  BraidWord b{-1};
  for (int v : braid_omega2(j)) b.push_back(v);
  b.push_back(-1);
  b.push_back(-2);
  for (int v : braid_xi(k, j)) b.push_back(v);
  return b;
}

BraidWord make_braid(const std::string& kind, const std::vector<int>& p) {
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw Error("IndexOutOfRange", "wrong parameter count for " + kind);
  };
  if (kind == "gamma") return need(1), braid_gamma(p[0]);
  if (kind == "omega") return need(1), braid_omega(p[0]);
  if (kind == "tau") return need(2), braid_tau(p[0], p[1]);
  if (kind == "beta_pk") return need(2), braid_beta_pk(p[0], p[1]);
  if (kind == "mu_k") return need(1), braid_mu_k(p[0]);
  if (kind == "alpha") return need(3), braid_alpha(p[0], p[1], p[2]);
  if (kind == "mu2") return need(1), braid_mu2(p[0]);
  if (kind == "nu") return need(1), braid_nu(p[0]);
  if (kind == "omega2") return need(1), braid_omega2(p[0]);
  if (kind == "xi") return need(2), braid_xi(p[0], p[1]);
  if (kind == "beta_kj") return need(2), braid_beta_kj(p[0], p[1]);
  throw Error("IndexOutOfRange", "unknown braid kind " + kind);
}

FactorizationWord canonical_word_long_cycle(int degree) {
  if (degree < 3 || degree % 2 == 0)
    throw Error("ParameterOutOfRange", "odd degree >= 3 required");
  FactorizationWord w;
  w.degree = degree;
  for (int i = 1; i + 2 <= degree; i += 2)
    w.letters.push_back(CycleGen::of({i, i + 1, i + 2}));
  return w;
}

namespace {

FactorizationWord pure_tail(const TwoEvenCycleTarget& t) {
  FactorizationWord w;
  w.degree = t.degree();
  const auto& a = t.a_labels;
  const auto& b = t.b_labels;
  for (int i = 2; i + 2 <= 2 * t.p; i += 2)
    w.letters.push_back(CycleGen({a[i - 1], a[i], a[i + 1]}));
  for (int i = 2; i + 2 <= 2 * t.q; i += 2)
    w.letters.push_back(CycleGen({b[i - 1], b[i], b[i + 1]}));
  return w;
}

}  // namespace

FactorizationWord canonical_x1(const TwoEvenCycleTarget& t) {
  FactorizationWord w = pure_tail(t);
  const auto& a = t.a_labels;
  const auto& b = t.b_labels;
  w.letters.insert(w.letters.begin(),
                   {CycleGen({a[0], a[1], b[1]}), CycleGen({a[1], b[1], b[0]})});
  return w;
}

FactorizationWord canonical_x2(const TwoEvenCycleTarget& t) {
  FactorizationWord w = pure_tail(t);
  const auto& a = t.a_labels;
  const auto& b = t.b_labels;
  w.letters.insert(w.letters.begin(),
                   {CycleGen({a[1], a[0], b[1]}), CycleGen({a[0], b[1], b[0]})});
  return w;
}

namespace {

void enumerate_rec(const GenCtx& ctx, const Perm& x,
                   std::vector<CycleGen>& suffix,
                   std::vector<FactorizationWord>& out, long long cap) {
  if (x.is_identity()) {
    FactorizationWord w;
    w.degree = x.degree();
    w.letters.assign(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(w));
    if (static_cast<long long>(out.size()) > cap)
      throw Error("TooManyWords", "reduced word cap exceeded");
    return;
  }
  for (const auto& [y, a] : ctx.lower_covers(x)) {
    suffix.push_back(a);
    enumerate_rec(ctx, y, suffix, out, cap);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<FactorizationWord> enumerate_reduced(const Perm& x,
                                                 long long cap) {
  GenCtx ctx(x.degree(), Family::ThreeCycles);
  ctx.length(x);  // throws for elements outside the generated group
  std::vector<FactorizationWord> out;
  std::vector<CycleGen> suffix;
  enumerate_rec(ctx, x, suffix, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

bool WordInvariants::operator==(const WordInvariants& o) const {
  if (pairs.size() != o.pairs.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].cycle_a != o.pairs[i].cycle_a ||
        pairs[i].cycle_b != o.pairs[i].cycle_b ||
        pairs[i].parity != o.pairs[i].parity)
      return false;
  return true;
}

WordInvariants word_invariants(const FactorizationWord& w, const Perm& x) {
  GenCtx ctx(x.degree(), Family::ThreeCycles);
  if (w.product() != x ||
      static_cast<int>(w.letters.size()) != ctx.length(x))
    throw Error("NotReducedWord", w.str());

  std::vector<std::vector<int>> even_cycles;
  for (const auto& c : x.cycles(false))
    if (c.size() % 2 == 0) even_cycles.push_back(c);
  int ne = static_cast<int>(even_cycles.size());
  std::vector<int> owner(x.degree() + 1, -1);
  for (int i = 0; i < ne; ++i)
    for (int v : even_cycles[i]) owner[v] = i;

  // union-find over even cycles
  std::vector<int> parent(ne);
  for (int i = 0; i < ne; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& t : w.letters) {
    int first = -1;
    for (int v : t.entries) {
      int c = owner[v];
      if (c < 0) continue;
      if (first < 0)
        first = c;
      else
        parent[find(c)] = find(first);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < ne; ++i) classes[find(i)].push_back(i);

  WordInvariants inv;
  for (const auto& [root, members] : classes) {
    if (members.size() != 2)
      throw Error("NotReducedWord",
                  "even-cycle class of size " + std::to_string(members.size()));
    TwoEvenCycleTarget target;
    target.a_labels = even_cycles[members[0]];
    target.b_labels = even_cycles[members[1]];
    target.p = static_cast<int>(target.a_labels.size()) / 2;
    target.q = static_cast<int>(target.b_labels.size()) / 2;
    std::optional<GenParity> parity;
    for (const auto& t : w.letters) {
      bool meets_a = false, meets_b = false;
      for (int v : t.entries) {
        if (owner[v] == members[0]) meets_a = true;
        if (owner[v] == members[1]) meets_b = true;
      }
      if (!meets_a || !meets_b) continue;
      GeneratorClass gc = classify_generator(target, t);
      if (gc.kind != GenKind::Mixed || !gc.parity)
        throw Error("NotReducedWord", "unclassifiable mixed letter");
      if (parity && *parity != *gc.parity)
        throw Error("NotReducedWord", "inconsistent mixed parity");
      parity = gc.parity;
    }
    if (!parity) throw Error("NotReducedWord", "pair without mixed letter");
    inv.pairs.push_back({target.a_labels, target.b_labels, *parity});
  }
  std::sort(inv.pairs.begin(), inv.pairs.end(),
            [](const PairInvariant& a, const PairInvariant& b) {
              return a.cycle_a < b.cycle_a;
            });
  return inv;
}

namespace {

struct OrbitScan {
  std::vector<FactorizationWord> words;
  std::vector<int> component;  // per word index
  int n_components = 0;
};

OrbitScan scan_orbits(const Perm& x, long long cap) {
  OrbitScan s;
  s.words = enumerate_reduced(x, cap);
  std::map<std::vector<CycleGen>, int> index;
  for (std::size_t i = 0; i < s.words.size(); ++i)
    index[s.words[i].letters] = static_cast<int>(i);
  s.component.assign(s.words.size(), -1);
  int len = s.words.empty() ? 0 : static_cast<int>(s.words[0].letters.size());
  for (std::size_t seed = 0; seed < s.words.size(); ++seed) {
    if (s.component[seed] >= 0) continue;
    int id = s.n_components++;
    std::deque<int> queue{static_cast<int>(seed)};
    s.component[seed] = id;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int i = 1; i < len; ++i)
        for (int dir : {+1, -1}) {
          auto next = hurwitz_step(s.words[cur], i, dir);
          int j = index.at(next.letters);
          if (s.component[j] < 0) {
            s.component[j] = id;
            queue.push_back(j);
          }
        }
    }
  }
  return s;
}

}  // namespace

OrbitReport orbit_decomposition(const Perm& x, long long cap) {
  OrbitScan s = scan_orbits(x, cap);
  OrbitReport report;
  report.x = x;
  report.total_words = static_cast<long long>(s.words.size());
  report.orbits.resize(s.n_components);
  std::vector<bool> seen(s.n_components, false);
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    auto& orbit = report.orbits[s.component[i]];
    orbit.size++;
    // words are sorted, so the first word of a component is its minimum
    if (!seen[s.component[i]]) {
      seen[s.component[i]] = true;
      orbit.canonical = s.words[i];
      orbit.invariants = word_invariants(s.words[i], x);
    } else if (!(word_invariants(s.words[i], x) == orbit.invariants)) {
      throw Error("NotReducedWord", "invariants vary inside an orbit");
    }
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const HurwitzOrbit& a, const HurwitzOrbit& b) {
              return a.canonical < b.canonical;
            });
  return report;
}

Int predicted_orbit_count(const Perm& x) {
  int evens = 0;
  for (const auto& c : x.cycles(false))
    if (c.size() % 2 == 0) ++evens;
  return rising_half(evens / 2);
}

nlohmann::json OrbitReport::to_json() const {
  nlohmann::json j;
  j["x"] = x.str();
  j["degree"] = x.degree();
  j["total_words"] = total_words;
  j["orbit_count"] = orbits.size();
  j["predicted_orbit_count"] = predicted_orbit_count(x).str();
  j["orbits"] = nlohmann::json::array();
  for (const auto& o : orbits) {
    nlohmann::json jo;
    jo["size"] = o.size;
    jo["canonical"] = o.canonical.str();
    jo["pairs"] = nlohmann::json::array();
    for (const auto& p : o.invariants.pairs) {
      nlohmann::json jp;
      jp["cycle_a"] = p.cycle_a;
      jp["cycle_b"] = p.cycle_b;
      jp["parity"] = p.parity == GenParity::Odd ? "odd" : "even";
      jo["pairs"].push_back(jp);
    }
    j["orbits"].push_back(jo);
  }
  return j;
}

std::string orbit_graph_dot(const Perm& x, long long cap) {
  OrbitScan s = scan_orbits(x, cap);
  static const char* palette[] = {"red",    "blue",   "green",  "orange",
                                  "purple", "brown",  "cyan",   "magenta",
                                  "gold",   "gray",   "pink",   "olive"};
  std::map<std::vector<CycleGen>, int> index;
  for (std::size_t i = 0; i < s.words.size(); ++i)
    index[s.words[i].letters] = static_cast<int>(i);
  std::ostringstream os;
  os << "graph orbits {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < s.words.size(); ++i)
    os << "  w" << i << " [label=\"" << s.words[i].str() << "\", color="
       << palette[s.component[i] % 12] << "];\n";
  int len = s.words.empty() ? 0 : static_cast<int>(s.words[0].letters.size());
  for (std::size_t i = 0; i < s.words.size(); ++i)
    for (int pos = 1; pos < len; ++pos) {
      int j = index.at(hurwitz_step(s.words[i], pos, +1).letters);
      if (static_cast<int>(i) < j)
        os << "  w" << i << " -- w" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace anc
