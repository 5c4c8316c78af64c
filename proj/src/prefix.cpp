#include "anc/prefix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace anc {

GenCtx::GenCtx(int degree, Family family, int k, LengthMode mode,
               int oracle_cap)
    : degree_(degree),
      family_(family),
      k_(family == Family::Transpositions ? 2
         : family == Family::ThreeCycles  ? 3
                                          : k),
      mode_(mode),
      oracle_cap_(oracle_cap) {
  if (family == Family::KCycles && k < 3)
    throw Error("ParameterOutOfRange", "KCycles needs k >= 3");
}

const std::vector<CycleGen>& GenCtx::generators() const {
  if (gens_.empty()) gens_ = enumerate_generators(degree_, family_, k_);
  return gens_;
}

bool GenCtx::is_nice(const Perm& x) const {
  for (const auto& c : x.cycles(true))
    if ((static_cast<int>(c.size()) - 1) % (k_ - 1) != 0) return false;
  return true;
}

int GenCtx::bfs_length(const Perm& x) const {
  if (degree_ > oracle_cap_)
    throw Error("DegreeAboveOracleCap", std::to_string(degree_));
  if (!oracle_) {
    auto dist = std::make_shared<std::unordered_map<std::uint64_t, int>>();
    std::deque<Perm> frontier;
    Perm e(degree_);
    (*dist)[e.key()] = 0;
    frontier.push_back(e);
    std::vector<Perm> gen_perms;
    for (const auto& g : generators()) gen_perms.push_back(g.as_perm(degree_));
    while (!frontier.empty()) {
      Perm u = frontier.front();
      frontier.pop_front();
      int d = (*dist)[u.key()];
      for (const auto& g : gen_perms) {
        Perm v = u * g;
        auto [it, fresh] = dist->try_emplace(v.key(), d + 1);
        if (fresh) frontier.push_back(v);
      }
    }
    oracle_ = std::move(dist);
  }
  auto it = oracle_->find(x.key());
  if (it == oracle_->end())
    throw Error("NotInGeneratedGroup", x.str());
  return it->second;
}

int GenCtx::length(const Perm& x) const {
  if (x.degree() != degree_) throw Error("DegreeMismatch", "length");
  if (mode_ == LengthMode::BfsOracle) return bfs_length(x);
  CycleStats s = cycle_stats(x);
  switch (family_) {
    case Family::Transpositions:
      return s.ell2;
    case Family::ThreeCycles:
      if (!s.is_even) throw Error("NotInGeneratedGroup", x.str());
      return (degree_ - s.ocyc) / 2;
    case Family::KCycles: {
      // k odd generates A_N, k even generates S_N.
      if (k_ % 2 == 1 && !s.is_even)
        throw Error("NotInGeneratedGroup", x.str());
      if (is_nice(x)) return s.ell2 / (k_ - 1);
      return bfs_length(x);
    }
  }
  throw Error("ParameterOutOfRange", "family");
}

bool GenCtx::is_below(const Perm& x, const Perm& y) const {
  return length(y) == length(x) + length(x.inverse() * y);
}

std::vector<std::pair<Perm, CycleGen>> GenCtx::lower_covers(
    const Perm& y) const {
  std::vector<std::pair<Perm, CycleGen>> out;
  int ly = length(y);
  for (const auto& a : generators()) {
    Perm x = y * a.inverse().as_perm(degree_);
    if (length(x) == ly - 1) out.emplace_back(std::move(x), a);
  }
  return out;
}

int IntervalPoset::index_of(const Perm& x) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == x) return i;
  return -1;
}

const std::vector<boost::dynamic_bitset<>>& IntervalPoset::leq_matrix() const {
  if (!leq_.empty()) return leq_;
  int n = size();
  leq_.assign(n, boost::dynamic_bitset<>(n));
  std::vector<std::vector<int>> down(n);
  for (auto [lo, hi] : covers) down[hi].push_back(lo);
  // Elements are sorted by rank, so ascending index order is a
  // topological order of the cover DAG.
  for (int j = 0; j < n; ++j) {
    leq_[j].set(j);
    for (int i : down[j]) leq_[j] |= leq_[i];
  }
  return leq_;
}

std::vector<std::vector<int>> IntervalPoset::down_adjacency() const {
  std::vector<std::vector<int>> down(size());
  for (auto [lo, hi] : covers) down[hi].push_back(lo);
  return down;
}

std::vector<std::vector<int>> IntervalPoset::up_adjacency() const {
  std::vector<std::vector<int>> up(size());
  for (auto [lo, hi] : covers) up[lo].push_back(hi);
  return up;
}

std::vector<Int> IntervalPoset::rank_vector_counts() const {
  std::vector<Int> rv(top_rank + 1, 0);
  for (int r : ranks) ++rv[r];
  return rv;
}

namespace {

std::string family_name(Family f, int k) {
  switch (f) {
    case Family::Transpositions:
      return "transpositions";
    case Family::ThreeCycles:
      return "three_cycles";
    case Family::KCycles:
      return "k_cycles_" + std::to_string(k);
  }
  return "?";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string IntervalPoset::to_json() const {
  std::ostringstream os;
  os << "{\"degree\": " << degree << ", \"family\": \""
     << family_name(family, k) << "\", \"bottom\": \""
     << json_escape(bottom.str()) << "\", \"top\": \""
     << json_escape(top.str()) << "\", \"elements\": [";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << '"' << json_escape(elements[i].str()) << '"';
  }
  os << "], \"ranks\": [";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << ranks[i];
  }
  os << "], \"covers\": [";
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (i) os << ", ";
    os << '[' << covers[i].first << ", " << covers[i].second << ']';
  }
  os << "]}";
  return os.str();
}

std::string IntervalPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int r = 0; r <= top_rank; ++r) {
    os << "  { rank=same;";
    for (int i = 0; i < size(); ++i)
      if (ranks[i] == r) os << " n" << i << ";";
    os << " }\n";
  }
  for (int i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << json_escape(elements[i].str())
       << "\"];\n";
  for (auto [lo, hi] : covers)
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

IntervalPoset build_interval(const GenCtx& ctx, const Perm& y, const Perm& z,
                             long long max_elements) {
  if (!ctx.is_below(y, z)) throw Error("NotComparable", y.str() + " vs " + z.str());
  IntervalPoset P;
  P.degree = ctx.degree();
  P.family = ctx.family();
  P.k = ctx.cycle_length();
  P.bottom = y;
  P.top = z;
  int rank_bottom = ctx.length(y);
  P.top_rank = ctx.length(z) - rank_bottom;

  std::map<std::uint64_t, Perm> discovered;
  discovered.emplace(z.key(), z);
  std::deque<Perm> frontier{z};
  while (!frontier.empty()) {
    Perm u = frontier.front();
    frontier.pop_front();
    for (auto& [v, a] : ctx.lower_covers(u)) {
      if (!ctx.is_below(y, v)) continue;
      auto [it, fresh] = discovered.emplace(v.key(), v);
      if (fresh) {
        if (static_cast<long long>(discovered.size()) > max_elements)
          throw Error("IntervalTooLarge", std::to_string(discovered.size()));
        frontier.push_back(it->second);
      }
    }
  }

  struct Keyed {
    int rank;
    std::string notation;
    Perm perm;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(discovered.size());
  for (auto& [k, p] : discovered)
    keyed.push_back({ctx.length(p) - rank_bottom, p.str(), p});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.rank, a.notation) < std::tie(b.rank, b.notation);
  });

  std::unordered_map<std::uint64_t, int> index;
  for (auto& kv : keyed) {
    P.elements.push_back(kv.perm);
    P.ranks.push_back(kv.rank);
    index[kv.perm.key()] = static_cast<int>(P.elements.size()) - 1;
  }
  for (int j = 0; j < P.size(); ++j) {
    std::set<int> seen;
    for (auto& [v, a] : ctx.lower_covers(P.elements[j])) {
      auto it = index.find(v.key());
      if (it == index.end()) continue;
      if (seen.insert(it->second).second)
        P.covers.emplace_back(it->second, j);
    }
  }
  std::sort(P.covers.begin(), P.covers.end());
  return P;
}

Perm kreweras(const Perm& z, const Perm& x) { return x.inverse() * z; }

Perm anti_automorphism(const Perm& y, const Perm& z, const Perm& x) {
  return y * x.inverse() * z;
}

Int count_maximal_chains(const IntervalPoset& P) {
  auto down = P.down_adjacency();
  std::vector<Int> paths(P.size(), 0);
  for (int j = 0; j < P.size(); ++j) {
    if (P.ranks[j] == 0) {
      paths[j] = 1;
      continue;
    }
    for (int i : down[j]) paths[j] += paths[i];
  }
  return paths[P.size() - 1];
}

Int count_multichains(const IntervalPoset& P, int m) {
  if (m < 1) throw Error("ParameterOutOfRange", "m >= 1");
  if (m == 1) return 1;
  const auto& leq = P.leq_matrix();
  int n = P.size();
  std::vector<Int> f(n, 1);
  for (int step = 0; step < m - 2; ++step) {
    std::vector<Int> g(n, 0);
    for (int j = 0; j < n; ++j) {
      const auto& row = leq[j];
      for (int i = static_cast<int>(row.find_first());
           i != static_cast<int>(boost::dynamic_bitset<>::npos);
           i = static_cast<int>(row.find_next(i)))
        g[j] += f[i];
    }
    f = std::move(g);
  }
  Int total = 0;
  for (const auto& v : f) total += v;
  return total;
}

Int moebius(const IntervalPoset& P) {
  const auto& leq = P.leq_matrix();
  int n = P.size();
  std::vector<Int> mu(n, 0);
  mu[0] = 1;  // bottom has index 0 (unique rank-0 element)
  for (int j = 1; j < n; ++j) {
    Int s = 0;
    const auto& row = leq[j];
    for (int i = static_cast<int>(row.find_first());
         i != static_cast<int>(boost::dynamic_bitset<>::npos);
         i = static_cast<int>(row.find_next(i)))
      if (i != j) s += mu[i];
    mu[j] = -s;
  }
  return mu[n - 1];
}

Poly zeta_polynomial(const IntervalPoset& P) {
  int n = P.top_rank;
  std::vector<std::pair<Rat, Rat>> pts;
  for (int m = 1; m <= n + 2; ++m)
    pts.emplace_back(Rat(m), Rat(count_multichains(P, m)));
  Poly Z = Poly::interpolate(pts);
  if (Z.degree() > n)
    throw Error("InterpolationInconsistent",
                "degree " + std::to_string(Z.degree()) + " exceeds rank");
  for (int m = n + 3; m <= n + 4; ++m) {
    Rat v = Z.eval(m);
    if (boost::multiprecision::denominator(v) != 1 ||
        Int(boost::multiprecision::numerator(v)) != count_multichains(P, m))
      throw Error("InterpolationInconsistent", "check point m=" +
                                                   std::to_string(m));
  }
  Rat at_minus1 = Z.eval(-1);
  if (boost::multiprecision::denominator(at_minus1) != 1 ||
      Int(boost::multiprecision::numerator(at_minus1)) != moebius(P))
    throw Error("InterpolationInconsistent", "Z(-1) != moebius");
  return Z;
}

bool covers_isomorphic_via(const IntervalPoset& P, const IntervalPoset& Q,
                           const std::vector<int>& map_p_to_q,
                           bool order_reversing) {
  if (P.size() != Q.size() ||
      static_cast<int>(map_p_to_q.size()) != P.size() ||
      P.covers.size() != Q.covers.size())
    return false;
  std::vector<bool> hit(Q.size(), false);
  for (int m : map_p_to_q) {
    if (m < 0 || m >= Q.size() || hit[m]) return false;
    hit[m] = true;
  }
  std::set<std::pair<int, int>> qcovers(Q.covers.begin(), Q.covers.end());
  for (auto [lo, hi] : P.covers) {
    std::pair<int, int> mapped =
        order_reversing ? std::make_pair(map_p_to_q[hi], map_p_to_q[lo])
                        : std::make_pair(map_p_to_q[lo], map_p_to_q[hi]);
    if (!qcovers.count(mapped)) return false;
  }
  return true;
}

}  // namespace anc
