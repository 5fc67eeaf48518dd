// Residue model of the degenerate transport: c x c operators over Q(zeta_c)
// with a symbolic power of c^(1/2) as scale.  The transport coefficient is
// read off the composed Fourier / quadratic-phase word acting on the all-ones
// comb, so it exercises the full matrix algebra rather than the one-line sum
// it must reproduce.

#include "recip/finite_model.hpp"

#include <cmath>
#include <complex>
#include <utility>

#include "recip/arith.hpp"
#include "recip/errors.hpp"

namespace recip {

namespace {

void check_sector_modulus(long c) {
    if (c < 1 || c % 2 == 0) {
        throw InvalidModulusError("residue sector: modulus must be a positive odd integer");
    }
    if (c > kMaxCyclotomicOrder) {
        throw LimitError("residue sector: modulus exceeds the cyclotomic order bound");
    }
}

// a x^2 mod c as a nonnegative long; c is small, so plain words suffice.
long quadratic_residue_exponent(const Integer& a, long x, long c) {
    const unsigned long am = mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(c));
    const unsigned long cu = static_cast<unsigned long>(c);
    const unsigned long xu = static_cast<unsigned long>(x);
    return static_cast<long>(am * (xu * xu % cu) % cu);
}

}  // namespace

ResidueSector::ResidueSector(long m) : modulus(m) { check_sector_modulus(m); }

FiniteOperator::FiniteOperator(long modulus, int scale_half_power, std::vector<Cyclotomic> entries)
    : modulus_(modulus), scale_half_power_(scale_half_power), entries_(std::move(entries)) {
    check_sector_modulus(modulus_);
    if (entries_.size() != static_cast<std::size_t>(modulus_) * static_cast<std::size_t>(modulus_)) {
        throw OutOfDomainError("finite operator: entry count must be modulus^2");
    }
    for (const auto& e : entries_) {
        if (e.order() != modulus_) {
            throw IncompatibleOrderError("finite operator: entries must live in Q(zeta_modulus)");
        }
    }
}

FiniteOperator FiniteOperator::identity(long modulus) {
    check_sector_modulus(modulus);
    std::vector<Cyclotomic> entries(static_cast<std::size_t>(modulus) * modulus,
                                    Cyclotomic::zero(modulus));
    for (long r = 0; r < modulus; ++r) {
        entries[static_cast<std::size_t>(r) * modulus + r] = Cyclotomic::from_rational(1, modulus);
    }
    return FiniteOperator(modulus, 0, std::move(entries));
}

const Cyclotomic& FiniteOperator::at(long row, long col) const {
    if (row < 0 || row >= modulus_ || col < 0 || col >= modulus_) {
        throw OutOfDomainError("finite operator: index outside the residue range");
    }
    return entries_[static_cast<std::size_t>(row) * modulus_ + col];
}

FiniteOperator FiniteOperator::compose(const FiniteOperator& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw IncompatibleOrderError("finite operator: compose needs a shared sector");
    }
    const long c = modulus_;
    std::vector<Cyclotomic> out(static_cast<std::size_t>(c) * c, Cyclotomic::zero(c));
    for (long i = 0; i < c; ++i) {
        for (long k = 0; k < c; ++k) {
            const Cyclotomic& lik = entries_[static_cast<std::size_t>(i) * c + k];
            if (lik.is_zero()) continue;
            for (long j = 0; j < c; ++j) {
                const Cyclotomic& rkj = rhs.entries_[static_cast<std::size_t>(k) * c + j];
                if (rkj.is_zero()) continue;
                out[static_cast<std::size_t>(i) * c + j] += lik * rkj;
            }
        }
    }
    return FiniteOperator(c, scale_half_power_ + rhs.scale_half_power_, std::move(out));
}

FiniteOperator FiniteOperator::conjugate_transpose() const {
    const long c = modulus_;
    std::vector<Cyclotomic> out(static_cast<std::size_t>(c) * c, Cyclotomic::zero(c));
    for (long i = 0; i < c; ++i) {
        for (long j = 0; j < c; ++j) {
            out[static_cast<std::size_t>(i) * c + j] =
                entries_[static_cast<std::size_t>(j) * c + i].conjugate();
        }
    }
    // The scale c^(k/2) is a positive real, fixed by conjugation.
    return FiniteOperator(c, scale_half_power_, std::move(out));
}

std::vector<Cyclotomic> FiniteOperator::apply(const std::vector<Cyclotomic>& state) const {
    if (state.size() != static_cast<std::size_t>(modulus_)) {
        throw OutOfDomainError("finite operator: state dimension must equal the modulus");
    }
    const long c = modulus_;
    std::vector<Cyclotomic> out(static_cast<std::size_t>(c), Cyclotomic::zero(c));
    for (long i = 0; i < c; ++i) {
        for (long j = 0; j < c; ++j) {
            const Cyclotomic& eij = entries_[static_cast<std::size_t>(i) * c + j];
            if (eij.is_zero() || state[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(i)] += eij * state[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

bool FiniteOperator::operator==(const FiniteOperator& other) const {
    return modulus_ == other.modulus_ && scale_half_power_ == other.scale_half_power_ &&
           entries_ == other.entries_;
}

Cyclotomic gauss_sum(const Integer& a, long c) {
    check_sector_modulus(c);
    Cyclotomic acc = Cyclotomic::zero(c);
    for (long x = 0; x < c; ++x) {
        acc += Cyclotomic::root_of_unity(c, quadratic_residue_exponent(a, x, c));
    }
    return acc;
}

FiniteOperator quadratic_phase_operator(const Integer& a, const ResidueSector& sector) {
    const long c = sector.modulus;
    std::vector<Cyclotomic> entries(static_cast<std::size_t>(c) * c, Cyclotomic::zero(c));
    for (long r = 0; r < c; ++r) {
        entries[static_cast<std::size_t>(r) * c + r] =
            Cyclotomic::root_of_unity(c, quadratic_residue_exponent(a, r, c));
    }
    return FiniteOperator(c, 0, std::move(entries));
}

FiniteOperator finite_fourier(const ResidueSector& sector) {
    const long c = sector.modulus;
    std::vector<Cyclotomic> entries;
    entries.reserve(static_cast<std::size_t>(c) * c);
    for (long r = 0; r < c; ++r) {
        for (long m = 0; m < c; ++m) {
            entries.push_back(Cyclotomic::root_of_unity(c, r * m % c));
        }
    }
    return FiniteOperator(c, -1, std::move(entries));
}

Cyclotomic transport_coefficient(const Integer& a, long c) {
    const ResidueSector sector(c);
    Integer g;
    const Integer cz(c);
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), cz.get_mpz_t());
    if (g != 1) throw NonCoprimeError("transport coefficient: a must be coprime to the modulus");
    const FiniteOperator word = finite_fourier(sector).compose(quadratic_phase_operator(a, sector));
    const std::vector<Cyclotomic> comb(static_cast<std::size_t>(c),
                                       Cyclotomic::from_rational(1, c));
    return word.apply(comb)[0];
}

Mu8 epsilon_factor(long c) {
    if (c < 1 || c % 2 == 0) {
        throw InvalidModulusError("epsilon factor: modulus must be a positive odd integer");
    }
    return c % 4 == 1 ? Mu8(0) : Mu8(2);
}

GaussEvaluationReport verify_gauss_evaluation(long c) {
    GaussEvaluationReport report;
    report.c = c;
    const Cyclotomic g = gauss_sum(1, c);
    const Mu8 eps = epsilon_factor(c);

    const Rational eps_squared_c = eps.exponent() == 0 ? Rational(c) : Rational(-c);
    report.square_identity = (g * g == Cyclotomic::from_rational(eps_squared_c, c));
    report.conjugate_identity = (g.conjugate() * g == Cyclotomic::from_rational(Rational(c), c));

    const double root = std::sqrt(static_cast<double>(c));
    const std::complex<double> expected =
        eps.exponent() == 0 ? std::complex<double>(root, 0.0) : std::complex<double>(0.0, root);
    report.numeric_error = std::abs(g.approx() - expected);
    report.numeric_sign = report.numeric_error < 1e-6;
    return report;
}

CrtFactorizationReport verify_crt_factorization(const Integer& p, const Integer& q) {
    if (p == 2 || q == 2 || p == q || !is_prime(p) || !is_prime(q)) {
        throw InvalidModulusError("crt factorization: needs two distinct odd primes");
    }
    if (!p.fits_slong_p() || !q.fits_slong_p()) {
        throw LimitError("crt factorization: primes exceed the sector range");
    }
    const long pl = p.get_si();
    const long ql = q.get_si();
    CrtFactorizationReport report;
    report.p = p;
    report.q = q;

    const long pq = pl * ql;
    const Cyclotomic lhs = gauss_sum(1, pq);
    const Cyclotomic rhs = gauss_sum(q, pl).embedded(pq) * gauss_sum(p, ql).embedded(pq);
    report.crt_identity = (lhs == rhs);

    report.legendre_product = legendre(p, q) * legendre(q, p);
    report.epsilon_ratio = epsilon_factor(pq) / (epsilon_factor(pl) * epsilon_factor(ql));
    const long exponent = ((pl - 1) / 2) * ((ql - 1) / 2);
    const int sign_formula = exponent % 2 == 0 ? 1 : -1;
    report.sign_identity = report.epsilon_ratio.is_real_sign() &&
                           report.epsilon_ratio.as_sign() == report.legendre_product &&
                           report.legendre_product == sign_formula;
    return report;
}

}  // namespace recip
