#pragma once

#include <string>
#include <vector>

#include "recip/numeric.hpp"
#include "recip/place.hpp"

namespace recip {

// v_p(a) for a != 0 (UndefinedValuationError on 0), p prime.
// v_p(n/d) = v_p(n) - v_p(d).
long valuation(const Rational& a, const Integer& p);

// Legendre symbol (a/p), p an odd prime, by Euler's criterion (reciprocity
// never enters; this is the non-circular leg of the reciprocity checks).
int legendre(const Integer& a, const Integer& p);

// Jacobi symbol (a/c), c odd >= 1: product of Legendre symbols over the
// factorization of c.  jacobi(a, 1) = +1.
int jacobi(const Integer& a, const Integer& c);

// Least positive quadratic nonresidue mod an odd prime.
Integer least_nonresidue(const Integer& p);

// Square class of a nonzero rational at a place:
//   real    -- unit_class is the sign, valuation parity 0;
//   odd p   -- valuation parity plus unit_class 1 (residue) or the least
//              nonresidue mod p;
//   p = 2   -- valuation parity plus the odd unit part mod 8 in {1,3,5,7}.
class SquareClass {
public:
    SquareClass(Place place, int valuation_parity, Integer unit_class);

    const Place& place() const { return place_; }
    int valuation_parity() const { return parity_; }
    const Integer& unit_class() const { return unit_; }

    // Canonical representative: sign at the real place, unit_class * p^parity
    // at a finite place.  square_class(representative()) round-trips.
    Rational representative() const;

    bool operator==(const SquareClass& other) const;
    bool operator!=(const SquareClass& other) const { return !(*this == other); }
    bool operator<(const SquareClass& other) const;  // for ordered containers

    std::string str() const;

private:
    Place place_;
    int parity_;
    Integer unit_;
};

SquareClass square_class(const Rational& a, const Place& v);

// All square classes at v in a fixed deterministic order:
// 2 at the real place, 4 at odd p, 8 at p = 2.
std::vector<SquareClass> all_square_classes(const Place& v);

}  // namespace recip
