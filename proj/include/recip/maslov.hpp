#pragma once

#include <string>

#include "recip/cyclotomic.hpp"
#include "recip/numeric.hpp"
#include "recip/place.hpp"

namespace recip {

// Slope of a line in the standard symplectic plane: a rational t (the line
// spanned by e + t f) or infinity (the line spanned by f).
class Slope {
public:
    static Slope infinity();
    static Slope finite(const Rational& t);

    bool is_infinite() const { return infinite_; }
    const Rational& value() const;  // pre: !is_infinite()

    bool operator==(const Slope& other) const;
    bool operator!=(const Slope& other) const { return !(*this == other); }

    std::string str() const;  // "inf" or the rational

private:
    Slope(bool infinite, Rational t) : infinite_(infinite), t_(std::move(t)) {}

    bool infinite_;
    Rational t_;
};

struct LagrangianTriple {
    Slope first, second, third;
};

// omega(e_s, e_t) = t - s on finite slopes; omega(e_inf, e_t) = -1,
// omega(e_t, e_inf) = +1, omega(e_inf, e_inf) = 0.
Rational symplectic_pairing(const Slope& s, const Slope& t);

// Coefficient of the Kashiwara form of a pairwise transverse triple:
//   finite (a,b,c)  -> -(a-b)(b-c)(c-a)
//   (inf, a, b)     -> a - b, extended by cyclic invariance and
//                      transposition antisymmetry.
// Nonzero on transverse triples; NonTransverseError otherwise.
Rational kashiwara_form(const LagrangianTriple& T);

// kappa(T) = sgn(omega(v1,v2) omega(v2,v3) omega(v3,v1)) for finite triples;
// triples containing the infinite slope are out of domain.
int kappa(const LagrangianTriple& T);

// gamma_v(kashiwara_form(T)).
Mu8 triple_phase(const LagrangianTriple& T, const Place& v);

}  // namespace recip
