#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "anc/noncrossing.hpp"
#include "anc/perm.hpp"

namespace anc {

/// A factorization of a permutation into oriented 3-cycles, letters
/// multiplied left to right.
struct FactorizationWord {
  int degree = 0;
  std::vector<CycleGen> letters;

  Perm product() const;
  std::string str() const;

  bool operator==(const FactorizationWord& o) const {
    return degree == o.degree && letters == o.letters;
  }
  bool operator<(const FactorizationWord& o) const {
    return letters < o.letters;
  }
};

/// Braid word: +i encodes sigma_i, -i encodes sigma_i^{-1}.  Words are
/// written left to right but act like function composition: the rightmost
/// operator is applied first.
using BraidWord = std::vector<int>;

FactorizationWord hurwitz_step(const FactorizationWord& w, int i,
                               int direction);
FactorizationWord apply_braid(const FactorizationWord& w,
                              const BraidWord& braid);

// The shift braid and the auxiliary families used in the orbit analysis.
BraidWord braid_gamma(int n);
BraidWord braid_omega(int i);             // sigma_1^-1 sigma_2^-2 sigma_3 ... sigma_{i+1}
BraidWord braid_tau(int i, int k);
BraidWord braid_beta_pk(int p, int k);
BraidWord braid_mu_k(int k);
BraidWord braid_alpha(int p, int k, int j);
BraidWord braid_mu2(int i);               // sigma_i^2 sigma_{i+1}
BraidWord braid_nu(int i);
BraidWord braid_omega2(int i);            // mu2_{i+1} mu2_i ... mu2_2
BraidWord braid_xi(int j, int i);
BraidWord braid_beta_kj(int k, int j);
BraidWord make_braid(const std::string& kind, const std::vector<int>& params);

// Canonical reduced words.
FactorizationWord canonical_word_long_cycle(int degree);  // u_1 u_3 ... u_{2n-1}
FactorizationWord canonical_x1(const TwoEvenCycleTarget& t);
FactorizationWord canonical_x2(const TwoEvenCycleTarget& t);

std::vector<FactorizationWord> enumerate_reduced(const Perm& x,
                                                 long long cap = 1000000);

struct PairInvariant {
  std::vector<int> cycle_a, cycle_b;  // the matched even cycles, min(a) < min(b)
  GenParity parity;
};

struct WordInvariants {
  std::vector<PairInvariant> pairs;  // sorted by min(cycle_a)
  bool operator==(const WordInvariants& o) const;
};

WordInvariants word_invariants(const FactorizationWord& w, const Perm& x);

struct HurwitzOrbit {
  long long size = 0;
  FactorizationWord canonical;  // lexicographically minimal word
  WordInvariants invariants;
};

struct OrbitReport {
  Perm x;
  long long total_words = 0;
  std::vector<HurwitzOrbit> orbits;

  OrbitReport() : x(1) {}
  nlohmann::json to_json() const;
};

OrbitReport orbit_decomposition(const Perm& x, long long cap = 1000000);

/// (2k)_k = (k+1)(k+2)...(2k), the predicted orbit count for 2k even cycles.
Int predicted_orbit_count(const Perm& x);

std::string orbit_graph_dot(const Perm& x, long long cap = 1000000);

}  // namespace anc
