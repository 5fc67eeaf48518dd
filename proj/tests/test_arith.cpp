#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "recip/arith.hpp"
#include "recip/errors.hpp"
#include "recip/place.hpp"

using namespace recip;

namespace {

// Independent Legendre oracle: enumerate the nonzero squares mod p.
int legendre_by_squares(long a, long p) {
    const long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    std::set<long> squares;
    for (long x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares.count(r) ? 1 : -1;
}

}  // namespace

TEST_CASE("legendre matches the squares-set oracle for all residues, p <= 50") {
    for (long p = 3; p <= 50; p += 2) {
        if (!is_prime(Integer(p))) continue;
        for (long a = -p; a <= 2 * p; ++a) {
            CAPTURE(a);
            CAPTURE(p);
            CHECK(legendre(Integer(a), Integer(p)) == legendre_by_squares(a, p));
        }
    }
}

TEST_CASE("legendre pinned values and multiplicativity") {
    CHECK(legendre(3, 5) == -1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(1, 97) == 1);
    CHECK(legendre(10, 5) == 0);
    for (long p : {3L, 7L, 11L, 31L}) {
        for (long a = 1; a < p; ++a) {
            for (long b = 1; b < p; ++b) {
                CHECK(legendre(Integer(a * b), Integer(p)) ==
                      legendre(Integer(a), Integer(p)) * legendre(Integer(b), Integer(p)));
            }
        }
    }
    CHECK_THROWS_AS(legendre(3, 2), InvalidModulusError);
    CHECK_THROWS_AS(legendre(3, 15), InvalidModulusError);
}

TEST_CASE("jacobi pinned values, prime agreement, gmp cross-check") {
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(7, 1) == 1);
    CHECK(jacobi(3, 5) == -1);
    CHECK(jacobi(6, 15) == 0);
    // factorization route vs GMP's binary algorithm
    for (long c = 1; c <= 99; c += 2) {
        for (long a = -50; a <= 50; ++a) {
            const Integer az(a);
            const Integer cz(c);
            CAPTURE(a);
            CAPTURE(c);
            CHECK(jacobi(az, cz) == mpz_jacobi(az.get_mpz_t(), cz.get_mpz_t()));
        }
    }
    // multiplicativity in the modulus
    for (long c1 : {3L, 5L, 9L, 15L}) {
        for (long c2 : {3L, 7L, 11L}) {
            for (long a = 1; a <= 20; ++a) {
                CHECK(jacobi(Integer(a), Integer(c1 * c2)) ==
                      jacobi(Integer(a), Integer(c1)) * jacobi(Integer(a), Integer(c2)));
            }
        }
    }
    CHECK_THROWS_AS(jacobi(3, 4), InvalidModulusError);
    CHECK_THROWS_AS(jacobi(3, -5), InvalidModulusError);
}

TEST_CASE("valuation pinned values and additivity") {
    CHECK(valuation(Rational(12), 2) == 2);
    CHECK(valuation(make_rational(3, 50), 5) == -2);
    CHECK(valuation(Rational(7), 3) == 0);
    CHECK(valuation(make_rational(-8, 27), 3) == -3);
    for (long n1 : {2L, 3L, -12L, 50L}) {
        for (long n2 : {5L, -9L, 14L}) {
            for (long p : {2L, 3L, 5L, 7L}) {
                CHECK(valuation(Rational(n1) * Rational(n2), Integer(p)) ==
                      valuation(Rational(n1), Integer(p)) + valuation(Rational(n2), Integer(p)));
            }
        }
    }
    CHECK_THROWS_AS(valuation(Rational(0), 3), UndefinedValuationError);
    CHECK_THROWS_AS(valuation(Rational(5), 6), InvalidModulusError);
}

TEST_CASE("least nonresidue") {
    CHECK(least_nonresidue(3) == 2);
    CHECK(least_nonresidue(5) == 2);
    CHECK(least_nonresidue(7) == 3);
    CHECK(least_nonresidue(73) == 5);
}

TEST_CASE("square classes: pinned examples") {
    const SquareClass c18 = square_class(Rational(18), Place::finite(2));
    CHECK(c18.valuation_parity() == 1);
    CHECK(c18.unit_class() == 1);

    const SquareClass cneg = square_class(Rational(-4), Place::real());
    CHECK(cneg.unit_class() == -1);

    const SquareClass c50 = square_class(Rational(50), Place::finite(5));
    CHECK(c50.valuation_parity() == 0);
    CHECK(c50.unit_class() == least_nonresidue(5));

    CHECK_THROWS_AS(square_class(Rational(0), Place::real()), ZeroArgumentError);
}

TEST_CASE("square classes: canonical, idempotent, square-invariant") {
    const std::vector<Place> places{Place::real(), Place::finite(2), Place::finite(3),
                                    Place::finite(5), Place::finite(7), Place::finite(11)};
    for (const Place& v : places) {
        const auto classes = all_square_classes(v);
        const std::size_t expected =
            v.is_real() ? 2 : (v.is_two() ? 8 : 4);
        CHECK(classes.size() == expected);
        for (const SquareClass& cls : classes) {
            CHECK(square_class(cls.representative(), v) == cls);
        }
    }
    for (const Place& v : places) {
        for (long a = -30; a <= 30; ++a) {
            if (a == 0) continue;
            for (long c : {1L, 2L, 3L, 5L, 7L, 10L}) {
                CHECK(square_class(Rational(a) * Rational(c * c), v) ==
                      square_class(Rational(a), v));
            }
        }
    }
    // rationals reduce like their numerator-times-denominator
    CHECK(square_class(make_rational(3, 5), Place::finite(5)) ==
          square_class(Rational(15), Place::finite(5)));
}

TEST_CASE("places: certification and ordering") {
    CHECK(Place::real().is_real());
    CHECK(Place::finite(2).is_two());
    CHECK(Place::finite(97).prime() == 97);
    CHECK_THROWS_AS(Place::finite(4), InvalidModulusError);
    CHECK_THROWS_AS(Place::finite(-3), InvalidModulusError);
    CHECK_THROWS_AS(Place::real().prime(), OutOfDomainError);
    const Integer too_big = pow_integer(2, 64) + 1;
    CHECK_THROWS_AS(Place::finite(too_big), LimitError);
    CHECK(Place::real() < Place::finite(2));
    CHECK(Place::finite(2) < Place::finite(3));
    CHECK(Place::real().str() == "inf");
    CHECK(Place::finite(7).str() == "7");
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK(is_prime(Integer("2147483647")));
    CHECK_FALSE(is_prime(Integer("2147483649")));

    const auto f360 = factorize(360);
    REQUIRE(f360.size() == 3);
    CHECK(f360[0] == std::pair<Integer, int>(2, 3));
    CHECK(f360[1] == std::pair<Integer, int>(3, 2));
    CHECK(f360[2] == std::pair<Integer, int>(5, 1));
    CHECK(factorize(1).empty());
    CHECK(factorize(-7).size() == 1);
    CHECK_THROWS_AS(factorize(0), ZeroArgumentError);
}

TEST_CASE("divisors and euler phi") {
    CHECK(divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(49) == 42);
    long sum = 0;
    for (long d : divisors(360)) sum += euler_phi(d);
    CHECK(sum == 360);  // sum of phi over divisors
}

TEST_CASE("parsing") {
    CHECK(parse_rational("7/2") == make_rational(7, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_integer("-12") == Integer(-12));
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(parse_integer("3/2"), UsageError);
    CHECK_THROWS_AS(make_rational(1, 0), ZeroArgumentError);
}
