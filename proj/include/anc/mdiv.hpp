#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include <nlohmann/json.hpp>

#include "anc/bigmath.hpp"
#include "anc/perm.hpp"
#include "anc/prefix.hpp"

namespace anc {

/// An m-multichain x_1 <= ... <= x_m of the odd noncrossing poset of degree
/// 2n+1, together with its extended delta sequence d_0..d_m where
/// d_i = x_i^-1 x_{i+1}, x_0 = e, x_{m+1} = (1 2 ... 2n+1).
struct Multichain {
  std::vector<Perm> chain;
  std::vector<Perm> delta;
};

struct MdivPoset {
  int n = 0, m = 0;
  std::vector<Multichain> elements;
  std::vector<int> ranks;  // rank = ell_3(x_1)
  int top = -1;
  std::vector<int> minimal;  // indices of minimal elements

  int size() const { return static_cast<int>(elements.size()); }
  /// leq[j] bit i set iff element i <= element j.
  std::vector<boost::dynamic_bitset<>> leq;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
};

/// Multichains of the degree-(2n+1) odd noncrossing poset, ordered by
/// componentwise reverse comparison of the delta entries d_1..d_m.
MdivPoset build_mdiv(int n, int m, long long max_elements = 100000);

struct MdivStats {
  Int max_chains;
  std::vector<Int> zeta;  // zeta[q-1] = number of (q-1)-multichains, q = 1..
  int minimal_count = 0;
};

MdivStats mdiv_stats(const MdivPoset& P, int max_q);

struct MoebiusVariants {
  Int mu_hat;  // after adjoining a global minimum
  Int mu_bar;  // after identifying all minimal elements
};

MoebiusVariants mdiv_moebius_variants(const MdivPoset& P);

// Conjectured closed forms for the mdiv poset invariants.
Int mdiv_conjectured_max_chains(int n, int m);
Int mdiv_conjectured_zeta(int n, int m, int q);
Int mdiv_conjectured_mu_hat(int n, int m);
Int mdiv_conjectured_mu_bar(int n, int m);

struct ConjectureCell {
  int n = 0, m = 0;
  Int max_chains, conj_max_chains;
  std::vector<Int> zeta, conj_zeta;  // q = 1..n+2
  Int mu_hat, conj_mu_hat;
  Int mu_bar, conj_mu_bar;
  bool agree_max_chains = false, agree_zeta = false, agree_mu_hat = false,
       agree_mu_bar = false;
};

struct ConjectureReport {
  std::vector<ConjectureCell> cells;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

ConjectureReport conjecture_report(int n_max, int m_max);

}  // namespace anc
