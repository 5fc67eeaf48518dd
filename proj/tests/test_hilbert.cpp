#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "recip/errors.hpp"
#include "recip/hilbert.hpp"

using namespace recip;

namespace {

std::vector<std::string> place_names(const std::vector<Place>& places) {
    std::vector<std::string> names;
    for (const Place& v : places) names.push_back(v.str());
    return names;
}

}  // namespace

TEST_CASE("hilbert: pinned values") {
    CHECK(hilbert(Rational(3), Rational(5), Place::finite(7)) == 1);
    CHECK(hilbert(Rational(3), Rational(7), Place::finite(2)) == -1);
    CHECK(hilbert(Rational(-1), Rational(-1), Place::real()) == -1);
    CHECK(hilbert(Rational(3), Rational(5), Place::finite(3)) == -1);
    CHECK(hilbert(Rational(2), Rational(5), Place::finite(5)) == -1);
    CHECK(hilbert(Rational(-1), Rational(-1), Place::finite(2)) == -1);
    CHECK(hilbert(Rational(-1), Rational(-1), Place::finite(3)) == 1);
    CHECK(hilbert(make_rational(1, 3), Rational(5), Place::finite(3)) == -1);
    CHECK_THROWS_AS(hilbert(Rational(0), Rational(5), Place::real()), ZeroArgumentError);
}

TEST_CASE("hilbert: a paired with -a and with 1-a is trivial") {
    for (long a = -20; a <= 20; ++a) {
        if (a == 0) continue;
        const Rational ra(a);
        for (const Place& v : support(ra, -ra)) {
            CAPTURE(a);
            CHECK(hilbert(ra, -ra, v) == 1);
        }
        if (a == 1) continue;
        const Rational complement = Rational(1) - ra;
        for (const Place& v : support(ra, complement)) {
            CAPTURE(a);
            CHECK(hilbert(ra, complement, v) == 1);
        }
    }
    // the same norm identity off the integer grid
    const Rational a = make_rational(3, 7);
    for (const Place& v : support(a, 1 - a)) CHECK(hilbert(a, 1 - a, v) == 1);
}

TEST_CASE("hilbert: symmetry on the grid") {
    for (long a = -30; a <= 30; ++a) {
        for (long b = -30; b <= 30; ++b) {
            if (a == 0 || b == 0) continue;
            const Rational ra(a);
            const Rational rb(b);
            for (const Place& v : support(ra, rb)) {
                CHECK(hilbert(ra, rb, v) == hilbert(rb, ra, v));
            }
        }
    }
}

TEST_CASE("hilbert: bilinearity on the grid") {
    for (long a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        for (long a2 = -30; a2 <= 30; ++a2) {
            if (a2 == 0) continue;
            const Rational product = Rational(a) * Rational(a2);
            for (long b = -30; b <= 30; b += 7) {
                if (b == 0) continue;
                const Rational rb(b);
                for (const Place& v : support(product, rb)) {
                    CHECK(hilbert(product, rb, v) ==
                          hilbert(Rational(a), rb, v) * hilbert(Rational(a2), rb, v));
                }
            }
        }
    }
}

TEST_CASE("hilbert: square-class invariance") {
    for (long a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        for (long b = -30; b <= 30; b += 5) {
            if (b == 0) continue;
            for (long c : {2L, 3L, 10L}) {
                const Rational scaled = Rational(a) * Rational(c * c);
                for (const Place& v : support(scaled, Rational(b))) {
                    CHECK(hilbert(scaled, Rational(b), v) ==
                          hilbert(Rational(a), Rational(b), v));
                }
            }
        }
    }
}

TEST_CASE("conic oracle: pinned values") {
    CHECK(hilbert_oracle(1, 7, Place::finite(5)) == 1);
    CHECK(hilbert_oracle(3, 7, Place::finite(2)) == -1);
    CHECK(hilbert_oracle(2, 5, Place::finite(5)) == -1);
    CHECK(hilbert_oracle(-1, -1, Place::real()) == -1);
    CHECK(hilbert_oracle(-1, 2, Place::real()) == 1);
}

TEST_CASE("conic oracle agrees with the closed formula on all class pairs") {
    for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                           Place::finite(7), Place::finite(11), Place::finite(13)}) {
        for (const SquareClass& ca : all_square_classes(v)) {
            for (const SquareClass& cb : all_square_classes(v)) {
                const Rational a = ca.representative();
                const Rational b = cb.representative();
                CAPTURE(v.str());
                CAPTURE(a.get_str());
                CAPTURE(b.get_str());
                CHECK(hilbert(a, b, v) ==
                      hilbert_oracle(Integer(a.get_num()), Integer(b.get_num()), v));
            }
        }
    }
}

TEST_CASE("support: pinned place lists") {
    CHECK(place_names(support(Rational(3), Rational(5))) ==
          std::vector<std::string>({"inf", "2", "3", "5"}));
    CHECK(place_names(support(Rational(1), Rational(1))) ==
          std::vector<std::string>({"inf", "2"}));
    CHECK(place_names(support(make_rational(9, 10), Rational(7))) ==
          std::vector<std::string>({"inf", "2", "3", "5", "7"}));
    CHECK_THROWS_AS(support(Rational(0), Rational(1)), ZeroArgumentError);
}

TEST_CASE("hilbert is trivial off the support") {
    for (long a : {3L, 15L, -7L}) {
        for (long b : {5L, 11L, -21L}) {
            for (long ell : {13L, 17L, 97L}) {
                if (a % ell == 0 || b % ell == 0) continue;
                CHECK(hilbert(Rational(a), Rational(b), Place::finite(ell)) == 1);
            }
        }
    }
}
