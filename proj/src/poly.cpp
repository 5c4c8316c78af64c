#include "anc/poly.hpp"

#include <sstream>

namespace anc {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(Rat c, unsigned deg) {
  std::vector<Rat> cs(deg + 1);
  cs[deg] = std::move(c);
  return Poly(std::move(cs));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
  return Poly(std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      cs[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(cs));
}

Poly Poly::scaled(const Rat& c) const {
  std::vector<Rat> cs = coeffs_;
  for (auto& x : cs) x *= c;
  return Poly(std::move(cs));
}

Rat Poly::eval(const Rat& q) const {
  Rat r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

std::string Poly::coeff_list() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ';';
    os << coeffs_[i];
  }
  return os.str();
}

std::string Poly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Rat c = coeff(d);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = c < 0 ? Rat(-c) : c;
    if (a != 1 || d == 0) os << a;
    if (d >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

Poly Poly::interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  // Newton form: divided differences, then expand.
  std::size_t n = points.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) /
              (points[i].first - points[i - level].first);
  Poly result;
  Poly basis = Poly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result = result + basis.scaled(dd[i]);
    basis = basis * Poly({-points[i].first, 1});
  }
  return result;
}

SeriesTQ SeriesTQ::operator+(const SeriesTQ& o) const {
  SeriesTQ r(std::min(order(), o.order()));
  for (int j = 0; j <= r.order(); ++j) r.coeffs_[j] = coeffs_[j] + o.coeffs_[j];
  return r;
}

SeriesTQ SeriesTQ::operator*(const SeriesTQ& o) const {
  SeriesTQ r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i)
    for (int j = 0; i + j <= r.order(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  return r;
}

SeriesTQ SeriesTQ::scaled(const Rat& c) const {
  SeriesTQ r(order());
  for (int j = 0; j <= order(); ++j) r.coeffs_[j] = coeffs_[j].scaled(c);
  return r;
}

SeriesTQ SeriesTQ::binomial_power(const Poly& alpha, int sign, int order) {
  SeriesTQ r(order);
  Poly term = Poly::constant(1);  // C(alpha, 0)
  Rat s = 1;
  for (int j = 0; j <= order; ++j) {
    r.coeffs_[j] = term.scaled(s);
    term = term * (alpha - Poly::constant(j));
    term = term.scaled(Rat(1, j + 1));
    s *= sign;
  }
  return r;
}

}  // namespace anc
