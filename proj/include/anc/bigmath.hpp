#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace anc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

/// Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k! for any integer n
/// (including negative); the result is always an integer.
Int binomial(const Int& n, unsigned k);

/// Generalized binomial with a rational upper argument.
Rat binomial_rat(const Rat& a, unsigned k);

/// Rising product (k+1)(k+2)...(2k).
Int rising_half(unsigned k);

}  // namespace anc
