#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace recip {

using Integer = mpz_class;

// Exact rational, always in lowest terms with positive denominator (GMP's
// canonical form); zero is 0/1.  Construct through make_rational or
// parse_rational so canonicalization is never skipped.
using Rational = mpq_class;

int sign(const Integer& a);
int sign(const Rational& a);

Integer pow_integer(const Integer& base, unsigned long exp);

// base^exp mod m, m > 0, exp >= 0.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m);

// Deterministic Miller-Rabin, witness set {2,...,37}: exact for |n| < 2^64.
bool is_prime(const Integer& n);

// Trial-division factorization of |n| >= 1 into (prime, exponent) pairs,
// ascending.  Desk scale only: throws LimitError past a 10^12 cofactor guard.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

std::vector<long> divisors(long n);
long euler_phi(long n);

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);  // "5", "-3", "7/2"
Integer parse_integer(const std::string& text);

}  // namespace recip
