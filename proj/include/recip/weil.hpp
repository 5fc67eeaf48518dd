#pragma once

#include <complex>
#include <vector>

#include "recip/arith.hpp"
#include "recip/cyclotomic.hpp"
#include "recip/numeric.hpp"
#include "recip/place.hpp"

namespace recip {

// Weil index gamma_v(a) of the quadratic character x -> psi_v(a x^2), an
// eighth root of unity.  Characters: psi_inf(x) = e^(2 pi i x),
// psi_p(x) = e^(-2 pi i {x}_p).  Values are produced by the defining
// identity, never transcribed from tables.

struct WeilOracleResult {
    Mu8 value;
    double snap_distance;  // distance from the normalized sum to the snapped root
    double magnitude;      // |sum| before normalization
};

// Stabilization floor for the oracle level: ceil(|v_p(a)|/2) + 3 at odd p,
// + 5 at p = 2; 1 at the real place (the quadrature needs no level).
int weil_stabilization_floor(const Rational& a, const Place& v);

// Finite v: phase of S_N(a) = sum over y mod p^M of psi_p(a p^(-2N) y^2),
// M = 2N - v_p(a) (one extra digit at p = 2), snapped to the nearest eighth
// root (snap tolerance 1e-6).  Real v: trapezoid quadrature of the defining
// identity against a width-1 Gaussian.  Levels below the floor are refused.
WeilOracleResult weil_oracle_detailed(const Rational& a, const Place& v, int level);
Mu8 weil_oracle(const Rational& a, const Place& v, int level);

// Per-place table of gamma_v on square classes, built lazily from the oracle
// at two consecutive levels (which must agree).  Write-once per place, safe
// under concurrent lookup.
class WeilTable {
public:
    static const WeilTable& for_place(const Place& v);

    const Place& place() const { return place_; }
    Mu8 value(const SquareClass& cls) const;
    const std::vector<std::pair<SquareClass, Mu8>>& entries() const { return entries_; }

private:
    explicit WeilTable(const Place& v);

    Place place_;
    std::vector<std::pair<SquareClass, Mu8>> entries_;
};

// gamma_v(a) via square-class reduction and the table.
Mu8 weil_index(const Rational& a, const Place& v);

// mu_v(a,b) = gamma_v(a) gamma_v(b) / (gamma_v(1) gamma_v(ab)).
// Lands in {zeta8^0, zeta8^4}, i.e. {+1,-1}, and equals <a,b>_v.
Mu8 defect(const Rational& a, const Rational& b, const Place& v);

// Diagonal quadratic form <a_1, ..., a_n>, entries nonzero.
class DiagonalForm {
public:
    explicit DiagonalForm(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    long dimension() const { return static_cast<long>(coeffs_.size()); }
    Rational determinant() const;

private:
    std::vector<Rational> coeffs_;
};

// h(q) = prod_{i<j} <a_i, a_j>_v; the 1-dimensional form has h = +1.
int hasse_invariant(const DiagonalForm& q, const Place& v);

// gamma_v(q) = gamma_v(1)^(n-1) gamma_v(det q) h(q).
Mu8 weil_index_of_form(const DiagonalForm& q, const Place& v);

namespace detail {

// sum over y mod p^K of e^(-2 pi i (c y^2 mod p^K) / p^K), evaluated through
// the orthogonality recursion; exposed so tests can pit it against literal
// summation.  Pre: gcd(c, p) = 1 (the oracle always passes the unit part),
// else the recursion's level-lowering step is invalid.
std::complex<double> quadratic_character_sum(const Integer& c, const Integer& p, long K);

}  // namespace detail

}  // namespace recip
