#include "recip/arith.hpp"

#include <sstream>

#include "recip/errors.hpp"

namespace recip {

namespace {

long strip_factor(Integer& n, const Integer& p) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

void require_prime(const Integer& p, const char* who) {
    if (p < 2 || !is_prime(p)) {
        throw InvalidModulusError(std::string(who) + ": " + p.get_str() + " is not a prime");
    }
}

Integer nonneg_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

long valuation(const Rational& a, const Integer& p) {
    if (sign(a) == 0) throw UndefinedValuationError();
    require_prime(p, "valuation");
    Integer num = a.get_num();
    Integer den = a.get_den();
    return strip_factor(num, p) - strip_factor(den, p);
}

int legendre(const Integer& a, const Integer& p) {
    if (p == 2) throw InvalidModulusError("legendre: modulus must be an odd prime");
    require_prime(p, "legendre");
    Integer r = nonneg_mod(a, p);
    if (r == 0) return 0;
    Integer t = mod_pow(r, (p - 1) / 2, p);  // Euler's criterion
    if (t == 1) return 1;
    if (t == p - 1) return -1;
    throw Error("legendre: Euler's criterion returned a non-unit; modulus not prime?");
}

int jacobi(const Integer& a, const Integer& c) {
    if (c < 1 || mpz_even_p(c.get_mpz_t())) {
        throw InvalidModulusError("jacobi: modulus must be odd and positive");
    }
    if (c == 1) return 1;
    int result = 1;
    for (const auto& [p, e] : factorize(c)) {
        int l = legendre(a, p);
        if (l == 0) return 0;
        if (e % 2 == 1) result *= l;
    }
    return result;
}

Integer least_nonresidue(const Integer& p) {
    if (p == 2) throw InvalidModulusError("least_nonresidue: modulus must be an odd prime");
    require_prime(p, "least_nonresidue");
    for (Integer n = 2; n < p; ++n) {
        if (legendre(n, p) == -1) return n;
    }
    throw Error("least_nonresidue: none found; modulus not an odd prime?");
}

SquareClass::SquareClass(Place place, int valuation_parity, Integer unit_class)
    : place_(std::move(place)), parity_(valuation_parity), unit_(std::move(unit_class)) {}

Rational SquareClass::representative() const {
    if (place_.is_real()) return Rational(unit_);
    Rational rep(unit_);
    if (parity_ == 1) rep *= Rational(place_.prime());
    return rep;
}

bool SquareClass::operator==(const SquareClass& other) const {
    return place_ == other.place_ && parity_ == other.parity_ && unit_ == other.unit_;
}

bool SquareClass::operator<(const SquareClass& other) const {
    if (place_ != other.place_) return place_ < other.place_;
    if (parity_ != other.parity_) return parity_ < other.parity_;
    return unit_ < other.unit_;
}

std::string SquareClass::str() const {
    std::ostringstream os;
    os << "class(" << place_.str() << ", parity " << parity_ << ", unit " << unit_.get_str() << ")";
    return os.str();
}

SquareClass square_class(const Rational& a, const Place& v) {
    if (sign(a) == 0) throw ZeroArgumentError("square_class: argument must be nonzero");
    if (v.is_real()) return SquareClass(v, 0, Integer(sign(a)));

    const Integer& p = v.prime();
    Integer num = a.get_num();
    Integer den = a.get_den();
    long alpha = strip_factor(num, p) - strip_factor(den, p);
    int parity = static_cast<int>(((alpha % 2) + 2) % 2);

    if (p == 2) {
        // num, den odd: den^(-1) = den mod 8, so the unit part mod 8 is num*den.
        Integer u = nonneg_mod(num * den, Integer(8));
        return SquareClass(v, parity, u);
    }
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw Error("square_class: denominator not invertible after stripping");
    }
    Integer u = nonneg_mod(num * den_inv, p);
    int l = legendre(u, p);
    return SquareClass(v, parity, l == 1 ? Integer(1) : least_nonresidue(p));
}

std::vector<SquareClass> all_square_classes(const Place& v) {
    std::vector<SquareClass> out;
    if (v.is_real()) {
        out.emplace_back(v, 0, Integer(1));
        out.emplace_back(v, 0, Integer(-1));
        return out;
    }
    if (v.is_two()) {
        for (int parity = 0; parity <= 1; ++parity) {
            for (long u : {1, 3, 5, 7}) out.emplace_back(v, parity, Integer(u));
        }
        return out;
    }
    Integer nr = least_nonresidue(v.prime());
    for (int parity = 0; parity <= 1; ++parity) {
        out.emplace_back(v, parity, Integer(1));
        out.emplace_back(v, parity, nr);
    }
    return out;
}

}  // namespace recip
