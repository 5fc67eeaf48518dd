// Exact arithmetic in Q(zeta_n), power basis modulo Phi_n.
//
// Reduction never divides: exponents fold mod n (zeta^n = 1) and the few
// residual degrees in [phi(n), n) come from a cached table of reduced powers,
// so monomial products cost O(phi) instead of O(phi^2).  Floats appear only
// in approx().

#include "recip/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

namespace {

void check_order(long n) {
    if (n < 1) throw InvalidModulusError("cyclotomic: order must be positive");
    if (n > kMaxCyclotomicOrder) {
        throw LimitError("cyclotomic: order exceeds the configured bound of 10^4");
    }
}

// Exact division in Z[x] by a monic divisor; num becomes the quotient.
void divide_exact(std::vector<Integer>& num, const std::vector<Integer>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    std::vector<Integer> q(dn - dd + 1);
    for (long i = dn - dd; i >= 0; --i) {
        Integer c = num[i + dd];
        q[i] = c;
        if (c != 0) {
            for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
        }
    }
    for (long j = 0; j < dd; ++j) {
        if (num[j] != 0) throw Error("cyclotomic: inexact polynomial division");
    }
    num = std::move(q);
}

std::mutex g_phi_mutex;
std::map<long, std::vector<Integer>> g_phi_cache;

struct OrderContext {
    long n = 1;
    long degree = 1;  // phi(n)
    // pow[t] = x^(degree + t) mod Phi_n, 0 <= t < n - degree.
    std::vector<std::vector<Rational>> pow;
};

std::mutex g_ctx_mutex;
std::map<long, std::unique_ptr<OrderContext>> g_ctx_cache;

const OrderContext& order_context(long n) {
    check_order(n);
    {
        std::lock_guard<std::mutex> lock(g_ctx_mutex);
        auto it = g_ctx_cache.find(n);
        if (it != g_ctx_cache.end()) return *it->second;
    }
    auto ctx = std::make_unique<OrderContext>();
    ctx->n = n;
    const auto& phi = cyclotomic_polynomial(n);
    ctx->degree = static_cast<long>(phi.size()) - 1;
    const long rows = n - ctx->degree;
    if (rows > 0) {
        std::vector<Rational> cur(ctx->degree);
        for (long i = 0; i < ctx->degree; ++i) cur[i] = Rational(-phi[i]);  // x^degree, Phi monic
        for (long t = 0; t < rows; ++t) {
            ctx->pow.push_back(cur);
            if (t + 1 == rows) break;
            std::vector<Rational> next(ctx->degree);
            Rational carry = cur[ctx->degree - 1];
            for (long i = ctx->degree - 1; i >= 1; --i) next[i] = cur[i - 1];
            if (sign(carry) != 0) {
                const auto& base = ctx->pow[0];
                for (long i = 0; i < ctx->degree; ++i) {
                    if (sign(base[i]) != 0) next[i] += carry * base[i];
                }
            }
            cur = std::move(next);
        }
    }
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto [it, inserted] = g_ctx_cache.emplace(n, std::move(ctx));
    return *it->second;
}

// raw holds coefficients of arbitrary degree; fold into the power basis.
std::vector<Rational> reduce_raw(const OrderContext& ctx, const std::vector<Rational>& raw) {
    std::vector<Rational> out(ctx.degree);
    for (long e = 0; e < static_cast<long>(raw.size()); ++e) {
        const Rational& c = raw[e];
        if (sign(c) == 0) continue;
        const long e2 = e % ctx.n;
        if (e2 < ctx.degree) {
            out[e2] += c;
        } else {
            const auto& row = ctx.pow[e2 - ctx.degree];
            for (long i = 0; i < ctx.degree; ++i) {
                if (sign(row[i]) != 0) out[i] += c * row[i];
            }
        }
    }
    return out;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    check_order(n);
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    std::vector<Integer> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (long d : divisors(n)) {
        if (d < n) divide_exact(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto [it, inserted] = g_phi_cache.emplace(n, std::move(poly));
    return it->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> reduced)
    : order_(order), coeffs_(std::move(reduced)) {}

Cyclotomic Cyclotomic::zero(long order) {
    const auto& ctx = order_context(order);
    return Cyclotomic(order, std::vector<Rational>(ctx.degree));
}

Cyclotomic Cyclotomic::from_rational(const Rational& value, long order) {
    Cyclotomic out = zero(order);
    out.coeffs_[0] = value;
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(long order, long exponent) {
    const auto& ctx = order_context(order);
    long e = ((exponent % order) + order) % order;
    std::vector<Rational> coeffs(ctx.degree);
    if (e < ctx.degree) {
        coeffs[e] = 1;
    } else {
        coeffs = ctx.pow[e - ctx.degree];
    }
    return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sign(c) != 0) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sign(coeffs_[i]) != 0) return false;
    }
    return true;
}

const Rational& Cyclotomic::rational_value() const {
    if (!is_rational()) throw OutOfDomainError("cyclotomic: element is not rational");
    return coeffs_[0];
}

namespace {

void require_same_order(long a, long b, const char* op) {
    if (a != b) {
        throw IncompatibleOrderError(std::string("cyclotomic: ") + op + " needs equal orders (" +
                                     std::to_string(a) + " vs " + std::to_string(b) +
                                     "); embed first");
    }
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
    Cyclotomic out = *this;
    out += other;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
    Cyclotomic out = *this;
    out -= other;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    require_same_order(order_, other.order_, "addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
    require_same_order(order_, other.order_, "subtraction");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
    require_same_order(order_, other.order_, "multiplication");
    const auto& ctx = order_context(order_);
    std::vector<std::pair<long, const Rational*>> lhs, rhs;
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i) {
        if (sign(coeffs_[i]) != 0) lhs.emplace_back(i, &coeffs_[i]);
    }
    for (long j = 0; j < static_cast<long>(other.coeffs_.size()); ++j) {
        if (sign(other.coeffs_[j]) != 0) rhs.emplace_back(j, &other.coeffs_[j]);
    }
    if (lhs.empty() || rhs.empty()) return zero(order_);
    std::vector<Rational> raw(lhs.back().first + rhs.back().first + 1);
    for (const auto& [i, a] : lhs) {
        for (const auto& [j, b] : rhs) {
            raw[i + j] += (*a) * (*b);
        }
    }
    return Cyclotomic(order_, reduce_raw(ctx, raw));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
    *this = *this * other;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& scalar) const {
    if (sign(scalar) == 0) return zero(order_);
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sign(coeffs_[i]) != 0) out[i] = coeffs_[i] * scalar;
    }
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Rational& scalar) const {
    Cyclotomic out = *this;
    out.coeffs_[0] += scalar;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Rational& scalar) const {
    Cyclotomic out = *this;
    out.coeffs_[0] -= scalar;
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
    require_same_order(order_, other.order_, "comparison");
    return coeffs_ == other.coeffs_;
}

Cyclotomic Cyclotomic::conjugate() const {
    const auto& ctx = order_context(order_);
    std::vector<Rational> raw(order_);
    for (long j = 0; j < static_cast<long>(coeffs_.size()); ++j) {
        if (sign(coeffs_[j]) != 0) raw[(order_ - j) % order_] += coeffs_[j];
    }
    return Cyclotomic(order_, reduce_raw(ctx, raw));
}

Cyclotomic Cyclotomic::embedded(long new_order) const {
    check_order(new_order);
    if (new_order % order_ != 0) {
        throw IncompatibleOrderError("cyclotomic: embed needs order " + std::to_string(order_) +
                                     " to divide " + std::to_string(new_order));
    }
    if (new_order == order_) return *this;
    const auto& ctx = order_context(new_order);
    const long ratio = new_order / order_;
    std::vector<Rational> raw(static_cast<long>(coeffs_.size() - 1) * ratio + 1);
    for (long j = 0; j < static_cast<long>(coeffs_.size()); ++j) {
        if (sign(coeffs_[j]) != 0) raw[j * ratio] += coeffs_[j];
    }
    return Cyclotomic(new_order, reduce_raw(ctx, raw));
}

std::complex<double> Cyclotomic::approx() const {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::complex<long double> acc(0.0L, 0.0L);
    for (long j = 0; j < static_cast<long>(coeffs_.size()); ++j) {
        if (sign(coeffs_[j]) == 0) continue;
        const long double c = static_cast<long double>(coeffs_[j].get_d());
        acc += c * std::polar(1.0L, two_pi * static_cast<long double>(j) /
                                        static_cast<long double>(order_));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "]";
    return os.str();
}

Mu8 Mu8::from_sign(int s) {
    if (s == 1) return Mu8(0);
    if (s == -1) return Mu8(4);
    throw OutOfDomainError("mu8: sign must be +1 or -1");
}

int Mu8::as_sign() const {
    if (e_ == 0) return 1;
    if (e_ == 4) return -1;
    throw OutOfDomainError("mu8: zeta8^" + std::to_string(e_) + " is not a real sign");
}

Cyclotomic Mu8::to_cyclotomic() const { return Cyclotomic::root_of_unity(8, e_); }

std::string Mu8::str() const { return "zeta8^" + std::to_string(e_); }

}  // namespace recip
