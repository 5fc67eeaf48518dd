#pragma once

#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "recip/cyclotomic.hpp"
#include "recip/numeric.hpp"
#include "recip/place.hpp"

namespace recip {

// Product of mu_v(a,b) over the joint support; exponent 0 is the global
// cancellation statement.
Mu8 global_defect_product(const Rational& a, const Rational& b);

// Product of <a,b>_v over the joint support; +1 is Hilbert reciprocity.
int hilbert_product(const Rational& a, const Rational& b);

struct QrRecord {
    Integer p, q;
    int lhs = 0;     // (p|q)(q|p), Euler's criterion only
    int rhs = 0;     // (-1)^((p-1)(q-1)/4)
    int at_p = 0;    // <p,q>_p
    int at_q = 0;    // <p,q>_q
    int at_two = 0;  // <p,q>_2
    int at_inf = 0;  // <p,q>_inf
};

// p, q distinct odd primes.  lhs == rhs, the four local factors multiply to
// +1, at_inf == +1, and at_two == rhs; the checks live in the suites.
QrRecord quadratic_reciprocity(const Integer& p, const Integer& q);

struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string law;
    long instances = 0;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};
    bool pass() const { return failures.empty(); }
};

struct SuiteConfig {
    long max = 0;  // 0: the law's default bound (the acceptance bound)
    int jobs = 1;  // worker threads for the sweep
};

// Laws: bridge, defect-product, hilbert-reciprocity, qr, gauss-law, crt,
// cocycle, factor-two, oracle-agreement, all.  Unknown law: UsageError.
// Sweeps are deterministic; reports are reproducible except elapsed.
VerificationReport run_suite(std::string_view law, const SuiteConfig& config = {});

const std::vector<std::string>& known_laws();
long default_bound(std::string_view law);

struct QrTableRow {
    Integer p, q;
    int legendre_pq = 0;  // (p|q)
    int legendre_qp = 0;  // (q|p)
    int sign = 0;         // (-1)^((p-1)(q-1)/4)
    int at_two = 0;       // <p,q>_2
};

// Rows for all odd prime pairs p < q < max.
std::vector<QrTableRow> qr_table(long max);

}  // namespace recip
