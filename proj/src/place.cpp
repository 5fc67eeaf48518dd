#include "recip/place.hpp"

#include <ostream>

#include "recip/errors.hpp"

namespace recip {

Place Place::real() { return Place(true, Integer(0)); }

Place Place::finite(const Integer& p) {
    if (p < 2) throw InvalidModulusError("place: " + p.get_str() + " is not a prime");
    Integer two_64 = pow_integer(Integer(2), 64);
    if (p >= two_64) throw LimitError("place: primes above 2^64 are beyond the certified range");
    if (!is_prime(p)) throw InvalidModulusError("place: " + p.get_str() + " is not a prime");
    return Place(false, p);
}

const Integer& Place::prime() const {
    if (real_) throw OutOfDomainError("place: the real place has no prime");
    return prime_;
}

bool Place::operator==(const Place& other) const {
    return real_ == other.real_ && (real_ || prime_ == other.prime_);
}

bool Place::operator<(const Place& other) const {
    if (real_ != other.real_) return real_;
    if (real_) return false;
    return prime_ < other.prime_;
}

std::string Place::str() const { return real_ ? "inf" : prime_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.str(); }

}  // namespace recip
