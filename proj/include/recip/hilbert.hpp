#pragma once

#include <vector>

#include "recip/arith.hpp"
#include "recip/numeric.hpp"
#include "recip/place.hpp"

namespace recip {

// Hilbert symbol <a,b>_v in {+1,-1} by the closed local formulas
// (arguments are reduced to square-class data first):
//   real:   -1 iff a < 0 and b < 0;
//   odd p:  a = p^alpha u, b = p^beta w ->
//           (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha;
//   p = 2:  a = 2^alpha u, b = 2^beta w ->
//           (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)),
//           eps(u) = (u-1)/2 mod 2, omega(u) = (u^2-1)/8 mod 2.
int hilbert(const Rational& a, const Rational& b, const Place& v);

// Independent decision of the same symbol: is z^2 = a x^2 + b y^2 solvable
// over Q_v?  Real place: sign check.  Finite place: search for primitive
// solutions modulo p^K, K = v_p(4ab) + 3, organized as the three
// unit-coordinate scalings (binary affine conics) lifted level by level with
// a Hensel early-exit.  Never consults the closed formulas.
int hilbert_oracle(const Integer& a, const Integer& b, const Place& v);

// {real, 2} together with every prime dividing a numerator or denominator of
// a or b; away from these places <a,b> = +1.  Sorted, deduplicated.
std::vector<Place> support(const Rational& a, const Rational& b);

}  // namespace recip
