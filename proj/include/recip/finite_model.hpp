#pragma once

#include <vector>

#include "recip/cyclotomic.hpp"
#include "recip/numeric.hpp"

namespace recip {

// Residue model of the degenerate theta transport: states are formal sums of
// the residue classes 0..c-1, operators are c x c matrices over Q(zeta_c)
// carrying a symbolic power of c^(1/2) as their scale.

struct ResidueSector {
    explicit ResidueSector(long modulus);  // odd, 1 <= modulus <= bound
    long modulus;
};

class FiniteOperator {
public:
    FiniteOperator(long modulus, int scale_half_power, std::vector<Cyclotomic> entries);

    static FiniteOperator identity(long modulus);

    long modulus() const { return modulus_; }
    // Scale is c^(scale_half_power/2); kept symbolic so matrices stay exact.
    int scale_half_power() const { return scale_half_power_; }

    const Cyclotomic& at(long row, long col) const;

    // Matrix product this * rhs (apply rhs first); scales add.
    FiniteOperator compose(const FiniteOperator& rhs) const;
    FiniteOperator conjugate_transpose() const;
    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& state) const;

    bool operator==(const FiniteOperator& other) const;
    bool operator!=(const FiniteOperator& other) const { return !(*this == other); }

private:
    long modulus_;
    int scale_half_power_;
    std::vector<Cyclotomic> entries_;  // row-major, size modulus^2
};

// G(a,c) = sum over x mod c of zeta_c^(a x^2), c odd >= 1 (even c refused:
// the half-integer lattice shifts needed there are outside this model).
Cyclotomic gauss_sum(const Integer& a, long c);

// diag(zeta_c^(a r^2)), scale 0.
FiniteOperator quadratic_phase_operator(const Integer& a, const ResidueSector& sector);

// Entries zeta_c^(r m) at scale c^(-1/2); the unnormalized matrix is the
// character table of Z/c.
FiniteOperator finite_fourier(const ResidueSector& sector);

// Transport coefficient Gamma(a, c), gcd(a, c) = 1: the coefficient of the
// unshifted residue class after the composed operator
// finite_fourier . quadratic_phase_operator(a) acts on the all-ones comb,
// read unnormalized (scale dropped).  Equals gauss_sum(a, c); computed
// through the full matrix path as an independent route.
Cyclotomic transport_coefficient(const Integer& a, long c);

// epsilon_c: 1 if c = 1 mod 4, i if c = 3 mod 4 (as Mu8 exponents 0 / 2).
Mu8 epsilon_factor(long c);

struct GaussEvaluationReport {
    long c = 0;
    bool square_identity = false;     // G(1,c)^2 == epsilon_c^2 * c exactly
    bool conjugate_identity = false;  // conj(G(1,c)) * G(1,c) == c exactly
    bool numeric_sign = false;        // |approx(G) - epsilon_c sqrt(c)| small
    double numeric_error = 0.0;
    bool pass() const { return square_identity && conjugate_identity && numeric_sign; }
};

// Checks G(1,c) = epsilon_c sqrt(c) in the two exact forms plus the numeric
// sign disambiguation (tolerance 1e-6).
GaussEvaluationReport verify_gauss_evaluation(long c);

struct CrtFactorizationReport {
    Integer p, q;
    bool crt_identity = false;   // G(1,pq) == G(q,p) G(p,q) in Q(zeta_pq)
    bool sign_identity = false;  // eps_pq/(eps_p eps_q) == (p|q)(q|p) == (-1)^((p-1)(q-1)/4)
    int legendre_product = 0;
    Mu8 epsilon_ratio;
    bool pass() const { return crt_identity && sign_identity; }
};

// p, q distinct odd primes.  The CRT factorization of the Gauss sum plus the
// sign bookkeeping that yields quadratic reciprocity.
CrtFactorizationReport verify_crt_factorization(const Integer& p, const Integer& q);

}  // namespace recip
