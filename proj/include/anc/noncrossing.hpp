#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anc/bigmath.hpp"
#include "anc/perm.hpp"
#include "anc/poly.hpp"
#include "anc/prefix.hpp"

namespace anc {

struct OncWitness {
  bool is_nc = false;  // x <= (1...N) under transpositions
  bool od_ok = false;  // every cycle odd with odd consecutive gaps
  bool p_ok = false;   // j < x(j) iff x(j) - j odd, for all j
  std::optional<std::vector<int>> violating_cycle;
  std::optional<int> violating_index;
  bool member() const { return is_nc && od_ok; }
};

/// Membership of x in ONC_N (N = degree of x, either parity).
OncWitness onc_membership(const Perm& x);

/// Independent geometric test: all cycles increasing and pairwise
/// noncrossing. Cross-check for the <=_2 route.
bool noncrossing_geometric(const Perm& x);

/// All of NC_N = [e, (1...N)]_2 by downward cover BFS.
std::vector<Perm> enumerate_nc(int n, int cap = 15);

/// ONC_N: for odd N the interval below the long cycle under 3-cycles;
/// for even N the OD-filtered noncrossing partitions.
std::vector<Perm> enumerate_onc(int n, int cap = 15);

enum class ClosedCount {
  CardinalityOdd,   // |ONC_{2n+1}| = C(3n+1, n)/(n+1)
  CardinalityEven,  // |ONC_{2n}|   = C(3n, n)/(2n+1)
  MaxChains,        // (2n+1)^{n-1}
  Moebius,          // (-1)^n mu = C(4n+1, n)/(4n+1)
  IntervalCount     // 3/(5n+3) C(5n+3, n)
};

Int closed_count(int n, ClosedCount kind);
/// Rank count |R(ONC_{2n+1}, k)|.
Int closed_rank_count(int n, int k);
/// The zeta polynomial value q/(q(2n+1)-n) * C(q(2n+1)-n, n).
Int closed_zeta(int n, const Int& q);

/// Number of (q-1)-multichains of ONC_{2n+1} with rank jump vector r
/// (length q, entries summing to n).
Int rank_jump_count(int n, const std::vector<int>& r);

/// Brute-force companion: counts multichains with the given rank jump
/// vector directly on a built ONC interval.
Int rank_jump_count_brute(const IntervalPoset& onc, const std::vector<int>& r);

/// Both sides of the multi-parameter Rothe-Hagen identity.
std::pair<Rat, Rat> rothe_hagen(const std::vector<Int>& a_vec, const Int& b,
                                int n);

// -- two even cycles ---------------------------------------------------

struct TwoEvenCycleTarget {
  int p = 1, q = 1;
  std::vector<int> a_labels;  // default a_i = i
  std::vector<int> b_labels;  // default b_j = 2p + j

  static TwoEvenCycleTarget standard(int p, int q);
  int degree() const { return 2 * (p + q); }
  Perm as_perm() const;
};

enum class GenKind { PureA, PureB, Mixed };
enum class GenParity { Odd, Even };

struct GeneratorClass {
  GenKind kind;
  std::optional<GenParity> parity;  // Mixed only
};

GeneratorClass classify_generator(const TwoEvenCycleTarget& target,
                                  const CycleGen& a);

struct XpqNumerology {
  Int mixed = 0, total = 0, moebius = 0;
  std::vector<Int> rank_vector;
  Int max_chains = 0;
  Int pure_even = 0, pure_odd = 0;
  Int max_chains_closed = 0;  // 2(p+q-1)!(2p)^p(2q)^q/((p-1)!(q-1)!)
  Int pure_closed = 0;        // C(3p-1,p-1) C(3q-1,q-1)
};

XpqNumerology xpq_numerology(int p, int q, long long max_elements = 500000);

// -- k-cycle generalization --------------------------------------------

/// (2/((k-1)n+2)) * C(kn+1, n): elements below the long cycle of degree
/// (k-1)n+1 under the k-cycle prefix order.
Int k_count_below_long_cycle(int n, int k);
/// q/((q-1)(k-1)n+q) * C((q-1)(k-1)n+q+n-1, n).
Int k_zeta(int n, int k, const Int& q);
/// ell2/(k-1) for elements whose cycle lengths are all 1 mod (k-1).
int k_nice_length(const Perm& x, int k);

}  // namespace anc
