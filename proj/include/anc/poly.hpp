#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anc/bigmath.hpp"

namespace anc {

/// Polynomial with exact rational coefficients, low degree first.
/// Trailing zero coefficients are trimmed.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> cs) : coeffs_(cs) { trim(); }
  explicit Poly(std::vector<Rat> cs) : coeffs_(std::move(cs)) { trim(); }
  static Poly constant(Rat c) { return Poly({std::move(c)}); }
  static Poly monomial(Rat c, unsigned deg);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Rat eval(const Rat& q) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  /// Coefficient list "c0;c1;...;cn", rationals rendered as "p/q".
  std::string coeff_list() const;
  /// Human-readable form in the given variable.
  std::string str(const std::string& var = "q") const;

  /// Unique polynomial of degree < points.size() through (x_i, y_i),
  /// exact Newton interpolation.
  static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Truncated power series in t whose coefficients are polynomials in q.
class SeriesTQ {
 public:
  explicit SeriesTQ(int order) : coeffs_(order + 1) {}
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Poly& at(int j) { return coeffs_[j]; }
  const Poly& at(int j) const { return coeffs_[j]; }

  SeriesTQ operator+(const SeriesTQ& o) const;
  SeriesTQ operator*(const SeriesTQ& o) const;
  SeriesTQ scaled(const Rat& c) const;

  /// (1 + sign*t)^alpha where alpha is a degree<=1 polynomial in q,
  /// via generalized binomials C(alpha, j).
  static SeriesTQ binomial_power(const Poly& alpha, int sign, int order);

 private:
  std::vector<Poly> coeffs_;
};

}  // namespace anc
