#pragma once

#include <optional>
#include <vector>

#include "anc/perm.hpp"
#include "anc/poly.hpp"
#include "anc/prefix.hpp"

namespace anc {

enum class CoverDirection { Up, Down, Level };
enum class CoverTag { DisjointCycles, TwoCycles, OneCycle };

struct CoverCase {
  CoverDirection direction;
  CoverTag tag;
  std::vector<int> r_values;  // the relevant r(t,t') distances, if any
};

/// Smallest r >= 1 with x^r(t) = t'; t and t' must share a cycle and be
/// distinct (one more than the gap between t and t' in cycle notation).
int cycle_distance(const Perm& x, int t, int t_prime);

/// Classifies ell3(x*a) - ell3(x) by the case conditions on the cycles
/// of x meeting supp(a), and cross-checks the verdict against the
/// closed-form lengths. x must be even.
CoverCase classify_multiplication(const Perm& x, const CycleGen& a);

struct IntervalDecomposition {
  std::vector<Perm> odd_factors;  // the odd nontrivial cycles, degree N
  Perm even_part{1};              // product of the even cycles
  Int product_of_sizes = 0;       // prod |[e,zeta_i]| * |[e,xi]|
  Int interval_size = 0;          // |[e,x]|
  bool certified = false;         // sizes match + product map bijective
};

/// Prop-style product decomposition of [e,x]_3 with a verification
/// certificate (built intervals capped at max_elements).
IntervalDecomposition decompose_interval(const Perm& x,
                                         long long max_elements = 500000);

struct RankGenerating {
  Poly f;             // sum over A_n of q^{ocyc(x)}
  Poly distribution;  // sum over A_n of q^{ell3(x)}
};

RankGenerating rank_generating_polynomial(int n, int cap = 10);

/// Truncated expansion of ((1+t)^{(q-1)/2}(1-t)^{-(q+1)/2}
///  + (1+t)^{(q+1)/2}(1-t)^{-(q-1)/2})/2; coefficient of t^N/N! is the
/// rank generating polynomial of A_N.
SeriesTQ series_closed_form(int order);

}  // namespace anc
