#include "recip/maslov.hpp"

#include "recip/errors.hpp"
#include "recip/weil.hpp"

namespace recip {

Slope Slope::infinity() { return Slope(true, Rational(0)); }

Slope Slope::finite(const Rational& t) { return Slope(false, t); }

const Rational& Slope::value() const {
    if (infinite_) throw OutOfDomainError("slope: the infinite slope has no rational value");
    return t_;
}

bool Slope::operator==(const Slope& other) const {
    if (infinite_ != other.infinite_) return false;
    return infinite_ || t_ == other.t_;
}

std::string Slope::str() const { return infinite_ ? "inf" : t_.get_str(); }

Rational symplectic_pairing(const Slope& s, const Slope& t) {
    if (s.is_infinite() && t.is_infinite()) return Rational(0);
    if (s.is_infinite()) return Rational(-1);
    if (t.is_infinite()) return Rational(1);
    return t.value() - s.value();
}

namespace {

void require_transverse(const LagrangianTriple& T) {
    if (T.first == T.second || T.second == T.third || T.third == T.first) {
        throw NonTransverseError("kashiwara form: slopes must be pairwise distinct");
    }
}

}  // namespace

Rational kashiwara_form(const LagrangianTriple& T) {
    require_transverse(T);
    // Rotate an infinite slope to the front; the form is cyclically invariant.
    if (T.second.is_infinite()) return kashiwara_form({T.second, T.third, T.first});
    if (T.third.is_infinite()) return kashiwara_form({T.third, T.first, T.second});
    if (T.first.is_infinite()) return T.second.value() - T.third.value();
    const Rational& a = T.first.value();
    const Rational& b = T.second.value();
    const Rational& c = T.third.value();
    return -(a - b) * (b - c) * (c - a);
}

int kappa(const LagrangianTriple& T) {
    if (T.first.is_infinite() || T.second.is_infinite() || T.third.is_infinite()) {
        throw OutOfDomainError("kappa: defined on finite slopes only");
    }
    require_transverse(T);
    const Rational& t1 = T.first.value();
    const Rational& t2 = T.second.value();
    const Rational& t3 = T.third.value();
    return sign((t2 - t1) * (t3 - t2) * (t1 - t3));
}

Mu8 triple_phase(const LagrangianTriple& T, const Place& v) {
    return weil_index(kashiwara_form(T), v);
}

}  // namespace recip
