#include "anc/bigmath.hpp"

namespace anc {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(const Int& n, unsigned k) {
  Int num = 1;
  for (unsigned j = 0; j < k; ++j) num *= n - j;
  return num / factorial(k);
}

Rat binomial_rat(const Rat& a, unsigned k) {
  Rat num = 1;
  for (unsigned j = 0; j < k; ++j) num *= a - j;
  return num / Rat(factorial(k));
}

Int rising_half(unsigned k) {
  Int r = 1;
  for (unsigned i = k + 1; i <= 2 * k; ++i) r *= i;
  return r;
}

}  // namespace anc
