// Weil indices from the defining identity
//
//   int phihat(x) psi_v(a x^2) dx
//     = gamma_v(a) |2a|_v^(-1/2) int phi(x) psi_v(-x^2/(4a)) dx.
//
// Finite places: taking phihat = indicator of p^(-N) Z_p makes both sides
// exact once N clears the conductor, so gamma_v(a) is the phase of the finite
// sum S_N(a) = sum over y mod p^M of psi_p(a p^(-2N) y^2), M = 2N - v_p(a)
// (one extra digit at p = 2).  The sum is evaluated exactly through the
// orthogonality splitting y = z + p^(J-1) w, which collapses
// G(d, p^K) = p G(d, p^(K-2)) (odd p, K >= 2) and G(d, 2^K) = 2 G(d, 2^(K-2))
// (K >= 4) down to at most eight or p base terms; the discarded multipliers
// are positive reals, so the snapped phase is untouched.  Real place:
// trapezoid quadrature of the identity against the width-1 Gaussian.
//
// No eighth root of unity is ever transcribed from a table; every value is
// snapped (tolerance 1e-6) from one of these two computations.

#include "recip/weil.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "recip/errors.hpp"
#include "recip/hilbert.hpp"

namespace recip {

namespace {

constexpr double kSnapTolerance = 1e-6;
constexpr double kMagnitudeFloor = 1e-9;

Integer nonneg_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long strip_factor(Integer& n, const Integer& p) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

WeilOracleResult snap_to_mu8(const std::complex<double>& s, const char* who) {
    const double mag = std::abs(s);
    if (mag < kMagnitudeFloor) {
        throw StabilizationError(std::string(who) + ": sum magnitude below 1e-9");
    }
    const std::complex<double> unit = s / mag;
    int best = 0;
    double best_dist = 8.0;
    for (int k = 0; k < 8; ++k) {
        const double d = std::abs(unit - std::polar(1.0, std::numbers::pi * k / 4.0));
        if (d < best_dist) {
            best_dist = d;
            best = k;
        }
    }
    if (best_dist > kSnapTolerance) {
        throw StabilizationError(std::string(who) +
                                 ": phase does not snap to an eighth root of unity");
    }
    return {Mu8(best), best_dist, mag};
}

// int exp(-pi x^2) exp(2 pi i b x^2) dx; trapezoid is spectrally accurate on
// analytic Gaussian-decay integrands, and this step keeps the discretization
// error far below 1e-8 for the frequencies that reach it.
std::complex<long double> gaussian_quadratic_integral(long double b) {
    const long double pi = std::numbers::pi_v<long double>;
    const long double X = 6.0L;
    const long double h = 1.0L / (8.0L * (1.0L + std::fabs(static_cast<double>(b))));
    const long n = static_cast<long>(std::ceil(static_cast<double>(X / h)));
    std::complex<long double> acc(0.0L, 0.0L);
    for (long k = -n; k <= n; ++k) {
        const long double x = static_cast<long double>(k) * h;
        const long double x2 = x * x;
        acc += std::exp(std::complex<long double>(-pi * x2, 2.0L * pi * b * x2));
    }
    return acc * h;
}

WeilOracleResult weil_real_oracle(const Rational& a) {
    const long double av = std::fabs(a.get_d());
    const long double as = static_cast<long double>(a.get_d());
    const auto i1 = gaussian_quadratic_integral(as);
    const auto i2 = gaussian_quadratic_integral(-1.0L / (4.0L * as));
    const std::complex<long double> gamma = std::sqrt(2.0L * av) * i1 / i2;
    const std::complex<double> g(static_cast<double>(gamma.real()),
                                 static_cast<double>(gamma.imag()));
    if (std::fabs(std::abs(g) - 1.0) > 1e-6) {
        throw StabilizationError("weil oracle (real): quadrature ratio drifted off the unit circle");
    }
    return snap_to_mu8(g, "weil oracle (real)");
}

WeilOracleResult weil_finite_oracle(const Rational& a, const Place& v, int level) {
    const Integer& p = v.prime();
    if (p > 10'000'000) throw LimitError("weil oracle: prime exceeds the desk-scale range");
    const long alpha = valuation(a, p);
    const long K = 2L * level - alpha;

    Integer num = a.get_num();
    Integer den = a.get_den();
    strip_factor(num, p);
    strip_factor(den, p);
    const Integer m = pow_integer(p, static_cast<unsigned long>(K));
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw Error("weil oracle: unit part denominator not invertible");
    }
    const Integer c = nonneg_mod(num * den_inv, m);  // unit part of a, mod p^K

    // S_N(a) up to the positive factor p^(M-K); at p = 2 the extra digit
    // (M = K+1) doubles the sum, which also leaves the phase alone.
    const std::complex<double> s = detail::quadratic_character_sum(c, p, K);
    return snap_to_mu8(s, "weil oracle");
}

}  // namespace

namespace detail {

std::complex<double> quadratic_character_sum(const Integer& c, const Integer& p, long K) {
    if (K < 0) throw OutOfDomainError("quadratic_character_sum: negative exponent");
    long k0 = K;
    double mult = 1.0;
    if (p == 2) {
        while (k0 >= 4) {
            k0 -= 2;
            mult *= 2.0;
        }
    } else {
        while (k0 >= 2) {
            k0 -= 2;
            mult *= p.get_d();
        }
    }
    const Integer m_big = pow_integer(p, static_cast<unsigned long>(k0));
    if (!m_big.fits_ulong_p()) throw LimitError("quadratic_character_sum: base modulus too large");
    const unsigned long m = m_big.get_ui();
    const unsigned long cm = mpz_fdiv_ui(c.get_mpz_t(), m);
    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> acc(0.0, 0.0);
    for (unsigned long y = 0; y < m; ++y) {
        const unsigned long e =
            static_cast<unsigned long>(static_cast<unsigned __int128>(cm) * y % m * y % m);
        acc += std::polar(1.0, -two_pi * static_cast<double>(e) / static_cast<double>(m));
    }
    return mult * acc;
}

}  // namespace detail

int weil_stabilization_floor(const Rational& a, const Place& v) {
    if (sign(a) == 0) throw ZeroArgumentError("weil: argument must be nonzero");
    if (v.is_real()) return 1;
    const long alpha = valuation(a, v.prime());
    const long half = (std::labs(alpha) + 1) / 2;
    return static_cast<int>(half + (v.is_two() ? 5 : 3));
}

WeilOracleResult weil_oracle_detailed(const Rational& a, const Place& v, int level) {
    if (sign(a) == 0) throw ZeroArgumentError("weil_oracle: argument must be nonzero");
    if (v.is_real()) return weil_real_oracle(a);
    if (level < weil_stabilization_floor(a, v)) {
        throw StabilizationError("weil_oracle: level below the stabilization floor");
    }
    return weil_finite_oracle(a, v, level);
}

Mu8 weil_oracle(const Rational& a, const Place& v, int level) {
    return weil_oracle_detailed(a, v, level).value;
}

WeilTable::WeilTable(const Place& v) : place_(v) {
    for (const SquareClass& cls : all_square_classes(v)) {
        const Rational rep = cls.representative();
        const int floor = weil_stabilization_floor(rep, v);
        const WeilOracleResult first = weil_oracle_detailed(rep, v, floor);
        const WeilOracleResult second = weil_oracle_detailed(rep, v, floor + 1);
        if (first.value != second.value) {
            throw StabilizationError("weil table: consecutive oracle levels disagree at " +
                                     cls.str());
        }
        entries_.emplace_back(cls, first.value);
    }
}

namespace {

std::mutex g_table_mutex;
std::map<Place, std::unique_ptr<WeilTable>> g_tables;

}  // namespace

const WeilTable& WeilTable::for_place(const Place& v) {
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(v);
        if (it != g_tables.end()) return *it->second;
    }
    std::unique_ptr<WeilTable> table(new WeilTable(v));
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto [it, inserted] = g_tables.emplace(v, std::move(table));
    return *it->second;
}

Mu8 WeilTable::value(const SquareClass& cls) const {
    for (const auto& [key, val] : entries_) {
        if (key == cls) return val;
    }
    throw Error("weil table: square class not in table");
}

Mu8 weil_index(const Rational& a, const Place& v) {
    if (sign(a) == 0) throw ZeroArgumentError("weil_index: argument must be nonzero");
    return WeilTable::for_place(v).value(square_class(a, v));
}

Mu8 defect(const Rational& a, const Rational& b, const Place& v) {
    if (sign(a) == 0 || sign(b) == 0) throw ZeroArgumentError("defect: arguments must be nonzero");
    const Mu8 ga = weil_index(a, v);
    const Mu8 gb = weil_index(b, v);
    const Mu8 g1 = weil_index(Rational(1), v);
    const Mu8 gab = weil_index(a * b, v);
    return ga * gb / (g1 * gab);
}

DiagonalForm::DiagonalForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw OutOfDomainError("diagonal form: dimension must be at least 1");
    for (const auto& c : coeffs_) {
        if (sign(c) == 0) throw ZeroArgumentError("diagonal form: coefficients must be nonzero");
    }
}

Rational DiagonalForm::determinant() const {
    Rational det(1);
    for (const auto& c : coeffs_) det *= c;
    return det;
}

int hasse_invariant(const DiagonalForm& q, const Place& v) {
    int h = 1;
    const auto& a = q.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            h *= hilbert(a[i], a[j], v);
        }
    }
    return h;
}

Mu8 weil_index_of_form(const DiagonalForm& q, const Place& v) {
    const Mu8 g1 = weil_index(Rational(1), v);
    Mu8 acc(static_cast<long>(g1.exponent()) * (q.dimension() - 1));
    return acc * weil_index(q.determinant(), v) * Mu8::from_sign(hasse_invariant(q, v));
}

}  // namespace recip
