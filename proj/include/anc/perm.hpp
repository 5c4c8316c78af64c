#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anc {

// Every error the library throws derives from this; `code` carries the
// machine-readable error name tested in the unit suites.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& msg)
      : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

/// A permutation of [N], N fixed at construction.
///
/// Composition convention used throughout the project:
///   (x * y)(p) = x(y(p))   -- rightmost factor applied first.
/// With this convention, right-multiplying w by a transposition (i j)
/// joins the cycles of w ending at i and j.
class Perm {
 public:
  explicit Perm(int degree);  // identity

  static Perm from_images(std::vector<int> one_based_images);
  static Perm from_cycles(int degree,
                          const std::vector<std::vector<int>>& cycles);
  /// Grammar: permutation := "e" | cycle+ ; cycle := "(" int (sep int)* ")" ;
  /// sep := whitespace | "," ; integers 1-based.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int p) const { return img_[p - 1] + 1; }  // 1-based

  Perm operator*(const Perm& rhs) const;  // compose
  Perm inverse() const;
  Perm conjugate(const Perm& w) const;  // w^{-1} * (*this) * w
  Perm power(int e) const;

  bool is_identity() const;

  /// Canonical cycle decomposition: each cycle rotated minimum-first,
  /// cycles sorted by minimum. Fixed points included iff requested.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  /// Canonical cycle notation; "e" for the identity. Fixed points omitted.
  std::string str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Dense encoding, usable as a hash-map key for degree <= 16.
  std::uint64_t key() const;

 private:
  std::vector<int> img_;  // 0-based: img_[i] = x(i+1) - 1
};

struct CycleStats {
  std::vector<int> cycle_type;  // partition of N, decreasing
  int cyc = 0;                  // cycles including fixed points
  int ocyc = 0;                 // odd-length cycles including fixed points
  std::vector<int> support;     // sorted, fixed points excluded
  bool is_even = false;
  int ell2 = 0;  // reflection length N - cyc
};

CycleStats cycle_stats(const Perm& x);

/// A k-cycle generator (e1 e2 ... ek), stored in canonical rotation
/// (minimum entry first). (i j k) and (i k j) are distinct values.
struct CycleGen {
  std::vector<int> entries;

  CycleGen() = default;
  explicit CycleGen(std::vector<int> e);
  static CycleGen of(std::initializer_list<int> e) {
    return CycleGen(std::vector<int>(e));
  }

  int k() const { return static_cast<int>(entries.size()); }
  Perm as_perm(int degree) const;
  CycleGen inverse() const;
  std::string str() const;

  bool operator==(const CycleGen& o) const { return entries == o.entries; }
  bool operator<(const CycleGen& o) const { return entries < o.entries; }
};

enum class Family { Transpositions, ThreeCycles, KCycles };

/// All k-cycles of [n] for the family, duplicate-free.
/// ThreeCycles yields 2*C(n,3) values; Transpositions C(n,2).
std::vector<CycleGen> enumerate_generators(int n, Family family, int k = 0);

/// Every element of A_n, identity first (BFS order not guaranteed;
/// order is deterministic). Throws DegreeAboveOracleCap past the cap.
std::vector<Perm> enumerate_alternating(int n, int cap = 10);

/// Every element of S_n. Same cap as enumerate_alternating.
std::vector<Perm> enumerate_symmetric(int n, int cap = 10);

}  // namespace anc
