#pragma once

#include <complex>
#include <string>
#include <vector>

#include "recip/numeric.hpp"

namespace recip {

// Orders above this bound are refused (LimitError); Phi_n tables and power
// reductions stay cheap below it.
inline constexpr long kMaxCyclotomicOrder = 10'000;

// Phi_n as ascending integer coefficients (monic, degree phi(n)), computed by
// iterated exact division of x^n - 1 by the Phi_d for proper divisors d.
// Cached; the cache is write-once per key and safe under concurrent lookup.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
// reduced modulo Phi_n.  All arithmetic is exact; approx() is the only float
// surface and is never used for equality decisions.
class Cyclotomic {
public:
    Cyclotomic();  // 0 in order 1

    static Cyclotomic zero(long order);
    static Cyclotomic from_rational(const Rational& value, long order = 1);
    static Cyclotomic root_of_unity(long order, long exponent);  // zeta_order^exponent

    long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    const Rational& rational_value() const;  // pre: is_rational()

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& other) const;
    Cyclotomic operator-(const Cyclotomic& other) const;
    Cyclotomic operator*(const Cyclotomic& other) const;
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);

    Cyclotomic operator*(const Rational& scalar) const;
    Cyclotomic operator+(const Rational& scalar) const;
    Cyclotomic operator-(const Rational& scalar) const;

    // Coefficient-wise; both operands must share an order (embed first
    // otherwise).
    bool operator==(const Cyclotomic& other) const;
    bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

    Cyclotomic conjugate() const;            // zeta |-> zeta^(-1)
    Cyclotomic embedded(long new_order) const;  // pre: order() | new_order

    // Numeric image under zeta_n |-> exp(2*pi*i/n); diagnostics only.
    std::complex<double> approx() const;

    std::string str() const;  // "[c0, c1, ...]"

private:
    Cyclotomic(long order, std::vector<Rational> reduced);

    long order_;
    std::vector<Rational> coeffs_;  // size phi(order_)
};

inline Cyclotomic operator*(const Rational& scalar, const Cyclotomic& x) { return x * scalar; }

// mu_8 as an exponent mod 8: zeta_8^e with zeta_8 = exp(i*pi/4).
class Mu8 {
public:
    Mu8() : e_(0) {}
    explicit Mu8(long e) : e_(static_cast<int>(((e % 8) + 8) % 8)) {}

    int exponent() const { return e_; }

    Mu8 operator*(const Mu8& other) const { return Mu8(e_ + other.e_); }
    Mu8 operator/(const Mu8& other) const { return Mu8(e_ - other.e_); }
    bool operator==(const Mu8& other) const { return e_ == other.e_; }
    bool operator!=(const Mu8& other) const { return e_ != other.e_; }

    Mu8 conjugate() const { return Mu8(-e_); }

    static Mu8 from_sign(int s);            // +1 -> exp 0, -1 -> exp 4
    bool is_real_sign() const { return e_ == 0 || e_ == 4; }
    int as_sign() const;                    // pre: is_real_sign()

    Cyclotomic to_cyclotomic() const;       // order 8

    std::string str() const;                // "zeta8^e"

private:
    int e_;
};

}  // namespace recip
