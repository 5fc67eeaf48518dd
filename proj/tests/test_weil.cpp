#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "recip/errors.hpp"
#include "recip/hilbert.hpp"
#include "recip/weil.hpp"

using namespace recip;

namespace {

// Literal summation of sum_{y mod p^K} e^(-2 pi i c y^2 / p^K), the quantity
// quadratic_character_sum computes through the orthogonality recursion.
std::complex<double> literal_character_sum(long c, long p, long K) {
    long m = 1;
    for (long i = 0; i < K; ++i) m *= p;
    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> acc(0.0, 0.0);
    for (long y = 0; y < m; ++y) {
        const long e = (c % m) * (y * y % m) % m;
        acc += std::polar(1.0, -two_pi * static_cast<double>(e) / static_cast<double>(m));
    }
    return acc;
}

}  // namespace

TEST_CASE("character-sum recursion matches literal summation") {
    for (long p : {3L, 5L, 7L}) {
        for (long K = 0; K <= 4; ++K) {
            long m = 1;
            for (long i = 0; i < K; ++i) m *= p;
            for (long c : {1L, 2L, m - 1, 5L}) {
                if (c <= 0 || c % p == 0) continue;  // the sum takes unit parts only
                const auto fast = detail::quadratic_character_sum(Integer(c), Integer(p), K);
                const auto slow = literal_character_sum(c, p, K);
                CAPTURE(p);
                CAPTURE(K);
                CAPTURE(c);
                CHECK(std::abs(fast - slow) < 1e-6 * std::max(1.0, std::abs(slow)));
            }
        }
    }
    for (long K = 0; K <= 7; ++K) {
        for (long c : {1L, 3L, 5L, 7L}) {
            const auto fast = detail::quadratic_character_sum(Integer(c), Integer(2), K);
            const auto slow = literal_character_sum(c, 2, K);
            CAPTURE(K);
            CAPTURE(c);
            CHECK(std::abs(fast - slow) < 1e-6 * std::max(1.0, std::abs(slow)));
        }
    }
}

TEST_CASE("stabilization floors") {
    CHECK(weil_stabilization_floor(Rational(1), Place::finite(3)) == 3);
    CHECK(weil_stabilization_floor(Rational(8), Place::finite(2)) == 7);
    CHECK(weil_stabilization_floor(make_rational(1, 9), Place::finite(3)) == 4);
    CHECK(weil_stabilization_floor(Rational(5), Place::real()) == 1);
    CHECK_THROWS_AS(weil_stabilization_floor(Rational(0), Place::real()), ZeroArgumentError);
    CHECK_THROWS_AS(weil_oracle(Rational(1), Place::finite(3), 2), StabilizationError);
}

TEST_CASE("weil oracle: derived values at the real place") {
    const WeilOracleResult plus = weil_oracle_detailed(Rational(1), Place::real(), 1);
    CHECK(plus.value == Mu8(1));
    CHECK(plus.snap_distance < 1e-6);
    const WeilOracleResult minus = weil_oracle_detailed(Rational(-1), Place::real(), 1);
    CHECK(minus.value == Mu8(7));
    CHECK(minus.snap_distance < 1e-6);
    // gamma depends only on the sign at the real place
    CHECK(weil_oracle(Rational(5), Place::real(), 1) == Mu8(1));
    CHECK(weil_oracle(make_rational(-2, 7), Place::real(), 1) == Mu8(7));
}

TEST_CASE("weil oracle: derived values at finite places") {
    const Place two = Place::finite(2);
    CHECK(weil_oracle(Rational(1), two, 5) == Mu8(7));
    CHECK(weil_oracle(Rational(-1), two, 5) == Mu8(1));

    const Place three = Place::finite(3);
    CHECK(weil_oracle(Rational(1), three, 3) == Mu8(0));
    CHECK(weil_oracle(Rational(2), three, 3) == Mu8(0));  // units at odd p
    CHECK(weil_oracle(Rational(3), three, 4) == Mu8(6));

    for (const Integer& p : {Integer(5), Integer(7), Integer(11)}) {
        const Place v = Place::finite(p);
        CHECK(weil_oracle(Rational(1), v, 3) == Mu8(0));
        CHECK(weil_oracle(Rational(least_nonresidue(p)), v, 3) == Mu8(0));
    }
}

TEST_CASE("weil tables: class counts and oracle agreement") {
    CHECK(WeilTable::for_place(Place::real()).entries().size() == 2);
    CHECK(WeilTable::for_place(Place::finite(3)).entries().size() == 4);
    CHECK(WeilTable::for_place(Place::finite(2)).entries().size() == 8);
    for (const auto& [cls, value] : WeilTable::for_place(Place::finite(3)).entries()) {
        const int floor = weil_stabilization_floor(cls.representative(), Place::finite(3));
        CHECK(value == weil_oracle(cls.representative(), Place::finite(3), floor));
        CHECK(value.exponent() % 2 == 0);  // 4th roots at odd p
    }
}

TEST_CASE("weil index: square-class invariance and lookups") {
    CHECK(weil_index(Rational(1), Place::real()) == Mu8(1));
    CHECK(weil_index(Rational(4), Place::real()) == Mu8(1));
    CHECK(weil_index(Rational(1), Place::finite(2)) == Mu8(7));
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(5)}) {
        for (long a : {1L, -3L, 10L, 7L}) {
            for (long c : {2L, 3L, 6L}) {
                CHECK(weil_index(Rational(a) * Rational(c * c), v) ==
                      weil_index(Rational(a), v));
            }
        }
        CHECK(weil_index(make_rational(3, 5), v) == weil_index(Rational(15), v));
    }
    CHECK_THROWS_AS(weil_index(Rational(0), Place::real()), ZeroArgumentError);
}

TEST_CASE("conjugation pairing: gamma(a) gamma(-a) = gamma(1) gamma(-1)") {
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5)}) {
        const int base =
            (weil_index(Rational(1), v) * weil_index(Rational(-1), v)).exponent();
        for (long a : {1L, 2L, 3L, 5L, 6L, -7L, 15L}) {
            const int sum =
                (weil_index(Rational(a), v) * weil_index(Rational(-a), v)).exponent();
            CAPTURE(v.str());
            CAPTURE(a);
            CHECK(sum == base);
        }
    }
}

TEST_CASE("defect: pinned values and the bridge on small classes") {
    CHECK(defect(Rational(1), Rational(7), Place::finite(3)) == Mu8(0));
    CHECK(defect(Rational(-1), Rational(-1), Place::real()) == Mu8(4));
    CHECK(defect(Rational(-1), Rational(-1), Place::finite(2)) == Mu8(4));
    CHECK(defect(Rational(3), Rational(2), Place::finite(3)) == Mu8(4));
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3)}) {
        for (const SquareClass& ca : all_square_classes(v)) {
            for (const SquareClass& cb : all_square_classes(v)) {
                const Rational a = ca.representative();
                const Rational b = cb.representative();
                CHECK(defect(a, b, v) == Mu8::from_sign(hilbert(a, b, v)));
            }
        }
    }
    CHECK_THROWS_AS(defect(Rational(0), Rational(1), Place::real()), ZeroArgumentError);
}

TEST_CASE("diagonal forms: hasse invariant") {
    CHECK_THROWS_AS(DiagonalForm({}), OutOfDomainError);
    CHECK_THROWS_AS(DiagonalForm({Rational(1), Rational(0)}), ZeroArgumentError);

    CHECK(hasse_invariant(DiagonalForm({Rational(7)}), Place::finite(3)) == 1);
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(5)}) {
        CHECK(hasse_invariant(DiagonalForm({Rational(3), Rational(5)}), v) ==
              hilbert(Rational(3), Rational(5), v));
    }
    CHECK(hasse_invariant(DiagonalForm({Rational(3), Rational(5), Rational(7)}),
                          Place::finite(2)) == -1);
}

TEST_CASE("weil index of forms: Hasse formula") {
    const Place inf = Place::real();
    CHECK(weil_index_of_form(DiagonalForm({Rational(1)}), inf) == weil_index(Rational(1), inf));
    CHECK(weil_index_of_form(DiagonalForm({Rational(1), Rational(1)}), inf) == Mu8(2));

    // the formula equals the orthogonal-sum product of indices
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<long> coeff(-10, 10);
    std::uniform_int_distribution<int> dims(1, 4);
    const std::vector<Place> places{Place::real(), Place::finite(2), Place::finite(3),
                                    Place::finite(5), Place::finite(7)};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> coeffs;
        const int n = dims(rng);
        while (static_cast<int>(coeffs.size()) < n) {
            const long c = coeff(rng);
            if (c != 0) coeffs.emplace_back(c);
        }
        const DiagonalForm q(coeffs);
        for (const Place& v : places) {
            Mu8 product(0);
            for (const Rational& a : coeffs) product = product * weil_index(a, v);
            CHECK(weil_index_of_form(q, v) == product);
        }
    }
}
