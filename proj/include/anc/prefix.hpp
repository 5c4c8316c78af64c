#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "anc/bigmath.hpp"
#include "anc/perm.hpp"
#include "anc/poly.hpp"

namespace anc {

enum class LengthMode { ClosedForm, BfsOracle };

/// A generating family (transpositions / 3-cycles / k-cycles) of a
/// permutation group of degree N, with its word length and prefix order.
class GenCtx {
 public:
  GenCtx(int degree, Family family, int k = 0,
         LengthMode mode = LengthMode::ClosedForm, int oracle_cap = 10);

  int degree() const { return degree_; }
  Family family() const { return family_; }
  int cycle_length() const { return k_; }
  LengthMode mode() const { return mode_; }

  const std::vector<CycleGen>& generators() const;

  /// ell_T(x). Closed forms: N - cyc (transpositions), (N - ocyc)/2
  /// (3-cycles, even x), ell_2/(k-1) (k-cycles, all cycle lengths
  /// congruent to 1 mod k-1). Everything else falls back to a cached
  /// whole-group BFS, capped at the oracle cap.
  int length(const Perm& x) const;

  /// x <= y iff ell(y) = ell(x) + ell(x^-1 y).
  bool is_below(const Perm& x, const Perm& y) const;

  /// All (x, a) with x = y * a^-1 and ell(x) = ell(y) - 1. The same x
  /// reached via several generators is reported once per generator.
  std::vector<std::pair<Perm, CycleGen>> lower_covers(const Perm& y) const;

  /// True iff all cycle lengths of x are congruent to 1 mod (k-1),
  /// i.e. the k-cycle closed form applies.
  bool is_nice(const Perm& x) const;

 private:
  int bfs_length(const Perm& x) const;

  int degree_;
  Family family_;
  int k_;
  LengthMode mode_;
  int oracle_cap_;
  mutable std::vector<CycleGen> gens_;
  mutable std::shared_ptr<std::unordered_map<std::uint64_t, int>> oracle_;
};

/// Explicit element set + cover DAG + rank function of an interval [y,z].
struct IntervalPoset {
  int degree = 0;
  Family family = Family::ThreeCycles;
  int k = 0;
  Perm bottom{0}, top{0};
  std::vector<Perm> elements;  // sorted by (rank, canonical notation)
  std::vector<int> ranks;      // relative to bottom
  std::vector<std::pair<int, int>> covers;  // (lower index, upper index)
  int top_rank = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const Perm& x) const;  // -1 if absent

  /// leq_matrix()[j] has bit i set iff elements[i] <= elements[j].
  const std::vector<boost::dynamic_bitset<>>& leq_matrix() const;
  std::vector<std::vector<int>> down_adjacency() const;
  std::vector<std::vector<int>> up_adjacency() const;
  std::vector<Int> rank_vector_counts() const;

  std::string to_json() const;
  std::string to_dot() const;

 private:
  mutable std::vector<boost::dynamic_bitset<>> leq_;
};

/// Downward cover BFS from z intersected with the up-set of y.
IntervalPoset build_interval(const GenCtx& ctx, const Perm& y, const Perm& z,
                             long long max_elements = 500000);

/// Kreweras complement K_z(x) = x^-1 z.
Perm kreweras(const Perm& z, const Perm& x);
/// The antiisomorphism x -> y x^-1 z of [y,z].
Perm anti_automorphism(const Perm& y, const Perm& z, const Perm& x);

Int count_maximal_chains(const IntervalPoset& P);
/// Number of (m-1)-multichains of P; m=1 gives 1, m=2 gives |P|.
Int count_multichains(const IntervalPoset& P, int m);
/// Mobius number mu(bottom, top) by the recursive definition.
Int moebius(const IntervalPoset& P);
/// Exact interpolation through m = 1..n+2 with degree and integrality
/// checks at n+3, n+4, and a mu = Z(-1) cross-check.
Poly zeta_polynomial(const IntervalPoset& P);

/// True iff index map P -> Q is a bijection sending cover pairs exactly
/// onto cover pairs (reversed when order_reversing is set).
bool covers_isomorphic_via(const IntervalPoset& P, const IntervalPoset& Q,
                           const std::vector<int>& map_p_to_q,
                           bool order_reversing = false);

}  // namespace anc
