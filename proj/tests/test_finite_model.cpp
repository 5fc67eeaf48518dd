#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "recip/arith.hpp"
#include "recip/errors.hpp"
#include "recip/finite_model.hpp"

using namespace recip;

TEST_CASE("gauss sums: pinned values") {
    CHECK(gauss_sum(1, 3).str() == "[1, 2]");
    CHECK(gauss_sum(2, 3) == -gauss_sum(1, 3));
    CHECK(gauss_sum(1, 1) == Cyclotomic::from_rational(1, 1));
    CHECK(gauss_sum(1, 9) == Cyclotomic::from_rational(3, 9));

    const Cyclotomic g5 = gauss_sum(1, 5);
    CHECK(g5 * g5 == Cyclotomic::from_rational(5, 5));
    CHECK(g5.conjugate() * g5 == Cyclotomic::from_rational(5, 5));

    const Cyclotomic g3 = gauss_sum(1, 3);
    CHECK(g3 * g3 == Cyclotomic::from_rational(-3, 3));

    CHECK_THROWS_AS(gauss_sum(1, 4), InvalidModulusError);
    CHECK_THROWS_AS(gauss_sum(1, 0), InvalidModulusError);
    CHECK_THROWS_AS(gauss_sum(1, -3), InvalidModulusError);
    CHECK_THROWS_AS(gauss_sum(1, kMaxCyclotomicOrder + 1), LimitError);
}

TEST_CASE("gauss sums: multiplicativity through the jacobi symbol") {
    for (long c : {3L, 5L, 9L, 15L, 21L}) {
        const Cyclotomic base = gauss_sum(1, c);
        for (long a = 1; a < c; ++a) {
            Integer g;
            const Integer az(a);
            const Integer cz(c);
            mpz_gcd(g.get_mpz_t(), az.get_mpz_t(), cz.get_mpz_t());
            if (g != 1) continue;
            CAPTURE(a);
            CAPTURE(c);
            CHECK(gauss_sum(az, c) == base * Rational(jacobi(az, cz)));
        }
    }
}

TEST_CASE("epsilon factor") {
    CHECK(epsilon_factor(1) == Mu8(0));
    CHECK(epsilon_factor(3) == Mu8(2));
    CHECK(epsilon_factor(5) == Mu8(0));
    CHECK(epsilon_factor(7) == Mu8(2));
    CHECK(epsilon_factor(9) == Mu8(0));
    CHECK_THROWS_AS(epsilon_factor(4), InvalidModulusError);
    CHECK_THROWS_AS(epsilon_factor(-3), InvalidModulusError);
}

TEST_CASE("residue sectors and operator plumbing") {
    CHECK(ResidueSector(7).modulus == 7);
    CHECK_THROWS_AS(ResidueSector(6), InvalidModulusError);
    CHECK_THROWS_AS(ResidueSector(0), InvalidModulusError);
    CHECK_THROWS_AS(ResidueSector(kMaxCyclotomicOrder + 1), LimitError);

    const ResidueSector sector(5);
    const FiniteOperator id = FiniteOperator::identity(5);
    const FiniteOperator f = finite_fourier(sector);
    CHECK(f.scale_half_power() == -1);
    CHECK(id.compose(f) == f);
    CHECK(f.compose(id) == f.compose(FiniteOperator::identity(5)));
    CHECK(f.at(2, 3) == Cyclotomic::root_of_unity(5, 6));
    CHECK_THROWS_AS(f.at(5, 0), OutOfDomainError);
    CHECK_THROWS_AS(f.compose(FiniteOperator::identity(7)), IncompatibleOrderError);

    std::vector<Cyclotomic> state;
    for (long r = 0; r < 5; ++r) state.push_back(Cyclotomic::root_of_unity(5, r));
    CHECK(id.apply(state) == state);
    CHECK_THROWS_AS(id.apply(std::vector<Cyclotomic>(4, Cyclotomic::zero(5))),
                    OutOfDomainError);
}

TEST_CASE("finite fourier: unitarity and reflection") {
    for (long c : {3L, 5L, 7L}) {
        const ResidueSector sector(c);
        const FiniteOperator f = finite_fourier(sector);

        // F Fbar^T = c * Id before scale normalization; scales add to -2
        const FiniteOperator product = f.compose(f.conjugate_transpose());
        CHECK(product.scale_half_power() == -2);
        const Cyclotomic c_val = Cyclotomic::from_rational(Rational(c), c);
        for (long r = 0; r < c; ++r) {
            for (long m = 0; m < c; ++m) {
                CHECK(product.at(r, m) == (r == m ? c_val : Cyclotomic::zero(c)));
            }
        }

        // F^2 = c * (reflection r -> -r)
        const FiniteOperator square = f.compose(f);
        for (long r = 0; r < c; ++r) {
            for (long m = 0; m < c; ++m) {
                const bool hit = (r + m) % c == 0;
                CHECK(square.at(r, m) == (hit ? c_val : Cyclotomic::zero(c)));
            }
        }
    }
}

TEST_CASE("quadratic phase operator is the expected diagonal") {
    const ResidueSector sector(7);
    const FiniteOperator d = quadratic_phase_operator(3, sector);
    CHECK(d.scale_half_power() == 0);
    for (long r = 0; r < 7; ++r) {
        for (long m = 0; m < 7; ++m) {
            if (r == m) {
                CHECK(d.at(r, m) == Cyclotomic::root_of_unity(7, 3 * r * r % 7));
            } else {
                CHECK(d.at(r, m).is_zero());
            }
        }
    }
}

TEST_CASE("transport coefficient equals the gauss sum") {
    for (long c : {1L, 3L, 5L, 9L, 15L}) {
        for (long a = 1; a <= c; ++a) {
            Integer g;
            const Integer az(a);
            const Integer cz(c);
            mpz_gcd(g.get_mpz_t(), az.get_mpz_t(), cz.get_mpz_t());
            if (g != 1) continue;
            CAPTURE(a);
            CAPTURE(c);
            CHECK(transport_coefficient(az, c) == gauss_sum(az, c));
        }
    }
    CHECK_THROWS_AS(transport_coefficient(3, 9), NonCoprimeError);
    CHECK_THROWS_AS(transport_coefficient(1, 4), InvalidModulusError);
}

TEST_CASE("gauss evaluation reports") {
    for (long c = 1; c <= 25; c += 2) {
        const GaussEvaluationReport report = verify_gauss_evaluation(c);
        CAPTURE(c);
        CHECK(report.pass());
        CHECK(report.numeric_error < 1e-6);
    }
    // numeric route pins the epsilon sign, not just the square
    const Cyclotomic g7 = gauss_sum(1, 7);
    CHECK(std::abs(g7.approx() - std::complex<double>(0.0, std::sqrt(7.0))) < 1e-9);
}

TEST_CASE("crt factorization reports") {
    const CrtFactorizationReport r35 = verify_crt_factorization(3, 5);
    CHECK(r35.pass());
    CHECK(r35.legendre_product == 1);
    CHECK(r35.epsilon_ratio == Mu8(0));

    const CrtFactorizationReport r37 = verify_crt_factorization(3, 7);
    CHECK(r37.pass());
    CHECK(r37.legendre_product == -1);
    CHECK(r37.epsilon_ratio == Mu8(4));

    CHECK(verify_crt_factorization(5, 13).pass());
    CHECK(verify_crt_factorization(7, 11).pass());

    CHECK_THROWS_AS(verify_crt_factorization(3, 3), InvalidModulusError);
    CHECK_THROWS_AS(verify_crt_factorization(2, 5), InvalidModulusError);
    CHECK_THROWS_AS(verify_crt_factorization(3, 9), InvalidModulusError);
}
