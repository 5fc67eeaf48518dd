#include "recip/hilbert.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "recip/errors.hpp"

namespace recip {

int hilbert(const Rational& a, const Rational& b, const Place& v) {
    if (sign(a) == 0 || sign(b) == 0) throw ZeroArgumentError("hilbert: arguments must be nonzero");
    SquareClass ca = square_class(a, v);
    SquareClass cb = square_class(b, v);

    if (v.is_real()) {
        return (ca.unit_class() == -1 && cb.unit_class() == -1) ? -1 : 1;
    }

    const int alpha = ca.valuation_parity();
    const int beta = cb.valuation_parity();

    if (v.is_two()) {
        const long u = ca.unit_class().get_si();  // odd unit part mod 8
        const long w = cb.unit_class().get_si();
        const int eps_u = (u % 4 == 3) ? 1 : 0;  // (u-1)/2 mod 2
        const int eps_w = (w % 4 == 3) ? 1 : 0;
        const int om_u = (u == 3 || u == 5) ? 1 : 0;  // (u^2-1)/8 mod 2
        const int om_w = (w == 3 || w == 5) ? 1 : 0;
        const int e = eps_u * eps_w + alpha * om_w + beta * om_u;
        return (e % 2 == 0) ? 1 : -1;
    }

    const Integer& p = v.prime();
    const int half = (((p - 1) / 2) % 2 == 1) ? 1 : 0;  // (p-1)/2 mod 2
    const int leg_u = (ca.unit_class() == 1) ? 1 : -1;
    const int leg_w = (cb.unit_class() == 1) ? 1 : -1;
    int result = (alpha * beta * half) % 2 == 0 ? 1 : -1;
    if (beta == 1) result *= leg_u;
    if (alpha == 1) result *= leg_w;
    return result;
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mod_u64(const Integer& x, u64 m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

long val_u64(u64 x, u64 p) {
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Does A s^2 + B t^2 + C = 0 have a Z_p solution?  Levels J = 1..K hold the
// full solution set mod p^J; a point where f == 0 mod p^J and a gradient
// coordinate has exact valuation d with J >= 2d+1 certifies a p-adic root
// (one-variable Newton), and a nonempty set at the depth cutoff
// K = v_p(4ab) + 3 decides solvable.  Empty at any level decides unsolvable
// outright.
bool binary_conic_solvable(const Integer& A, const Integer& B, const Integer& C,
                           const Integer& p_big, long K) {
    constexpr u64 kModulusLimit = 1ull << 62;
    constexpr std::size_t kLevelCap = 4'000'000;

    Integer top = pow_integer(p_big, static_cast<unsigned long>(K));
    if (top >= Integer(static_cast<unsigned long>(kModulusLimit))) {
        throw LimitError("hilbert_oracle: p^K exceeds the desk-scale search range");
    }
    const u64 p = p_big.get_ui();
    std::vector<u64> pj(K + 1);
    pj[0] = 1;
    for (long j = 1; j <= K; ++j) pj[j] = pj[j - 1] * p;

    struct Pt {
        u64 s, t;
    };

    auto f_mod = [](u64 s, u64 t, u64 m, u64 Am, u64 Bm, u64 Cm) -> u64 {
        u64 s2 = static_cast<u64>(static_cast<u128>(s) * s % m);
        u64 t2 = static_cast<u64>(static_cast<u128>(t) * t % m);
        u128 acc = static_cast<u128>(Am) * s2 + static_cast<u128>(Bm) * t2 + Cm;
        return static_cast<u64>(acc % m);
    };

    std::vector<Pt> level;
    {
        const u64 m = pj[1];
        const u64 Am = mod_u64(A, m), Bm = mod_u64(B, m), Cm = mod_u64(C, m);
        for (u64 s = 0; s < p; ++s) {
            for (u64 t = 0; t < p; ++t) {
                if (f_mod(s, t, m, Am, Bm, Cm) == 0) level.push_back({s, t});
            }
        }
    }

    for (long J = 1; J <= K; ++J) {
        if (level.empty()) return false;
        const u64 m = pj[J];
        const u64 As2 = mod_u64(2 * A, m), Bs2 = mod_u64(2 * B, m);
        for (const Pt& pt : level) {
            const u64 g1 = static_cast<u64>(static_cast<u128>(As2) * pt.s % m);
            const u64 g2 = static_cast<u64>(static_cast<u128>(Bs2) * pt.t % m);
            long d = -1;
            if (g1 != 0) d = val_u64(g1, p);
            if (g2 != 0) {
                long d2 = val_u64(g2, p);
                if (d < 0 || d2 < d) d = d2;
            }
            if (d >= 0 && J >= 2 * d + 1) return true;
        }
        if (J == K) return true;  // primitive solution mod p^K exists

        const u64 m1 = pj[J + 1];
        const u64 Am = mod_u64(A, m1), Bm = mod_u64(B, m1), Cm = mod_u64(C, m1);
        std::vector<Pt> next;
        for (const Pt& pt : level) {
            for (u64 i = 0; i < p; ++i) {
                const u64 s = pt.s + pj[J] * i;
                for (u64 j = 0; j < p; ++j) {
                    const u64 t = pt.t + pj[J] * j;
                    if (f_mod(s, t, m1, Am, Bm, Cm) == 0) next.push_back({s, t});
                }
            }
            if (next.size() > kLevelCap) {
                throw LimitError("hilbert_oracle: search exceeded the desk-scale budget");
            }
        }
        level = std::move(next);
    }
    return false;  // unreachable: the J == K branch returns first
}

}  // namespace

int hilbert_oracle(const Integer& a, const Integer& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroArgumentError("hilbert_oracle: arguments must be nonzero");
    if (v.is_real()) return (a > 0 || b > 0) ? 1 : -1;

    const Integer& p = v.prime();
    const long K = valuation(Rational(4 * a * b), p) + 3;
    // A primitive triple mod p^K has a unit coordinate; scaling it to 1 turns
    // z^2 = a x^2 + b y^2 into one of three binary problems.
    if (binary_conic_solvable(Integer(1), -b, -a, p, K)) return 1;  // x = 1
    if (binary_conic_solvable(Integer(1), -a, -b, p, K)) return 1;  // y = 1
    if (binary_conic_solvable(a, b, Integer(-1), p, K)) return 1;   // z = 1
    return -1;
}

std::vector<Place> support(const Rational& a, const Rational& b) {
    if (sign(a) == 0 || sign(b) == 0) throw ZeroArgumentError("support: arguments must be nonzero");
    std::set<Integer> primes{Integer(2)};
    for (const Rational* r : {&a, &b}) {
        for (Integer part : {Integer(r->get_num()), Integer(r->get_den())}) {
            for (const auto& [prime, exp] : factorize(part)) primes.insert(prime);
        }
    }
    std::vector<Place> out;
    out.push_back(Place::real());
    for (const Integer& prime : primes) out.push_back(Place::finite(prime));
    return out;
}

}  // namespace recip
