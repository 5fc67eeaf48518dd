#pragma once

#include <iosfwd>
#include <string>

#include "recip/numeric.hpp"

namespace recip {

// A place of Q: the real place or a finite place at a certified prime.
// Certification is deterministic Miller-Rabin, valid below 2^64; larger
// primes are rejected as beyond desk scale.
class Place {
public:
    static Place real();
    static Place finite(const Integer& p);

    bool is_real() const { return real_; }
    bool is_finite() const { return !real_; }
    bool is_two() const { return !real_ && prime_ == 2; }
    const Integer& prime() const;  // pre: is_finite()

    bool operator==(const Place& other) const;
    bool operator!=(const Place& other) const { return !(*this == other); }
    // Order: real, then finite by prime.  Used for deterministic sweeps.
    bool operator<(const Place& other) const;

    std::string str() const;  // "inf" or the prime in decimal

private:
    Place(bool real, Integer p) : real_(real), prime_(std::move(p)) {}

    bool real_;
    Integer prime_;
};

std::ostream& operator<<(std::ostream& os, const Place& v);

}  // namespace recip
