// Verification engine: deterministic sweeps over the laws the library is
// built to check.  Every sweep enumerates its instances in a fixed order,
// fans out over worker threads by index, and merges results back in index
// order, so reports are byte-stable for a given bound regardless of --jobs.

#include "recip/engine.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include "recip/arith.hpp"
#include "recip/errors.hpp"
#include "recip/finite_model.hpp"
#include "recip/hilbert.hpp"
#include "recip/maslov.hpp"
#include "recip/weil.hpp"

namespace recip {

Mu8 global_defect_product(const Rational& a, const Rational& b) {
    Mu8 acc(0);
    for (const Place& v : support(a, b)) acc = acc * defect(a, b, v);
    return acc;
}

int hilbert_product(const Rational& a, const Rational& b) {
    int acc = 1;
    for (const Place& v : support(a, b)) acc *= hilbert(a, b, v);
    return acc;
}

QrRecord quadratic_reciprocity(const Integer& p, const Integer& q) {
    if (p == 2 || q == 2 || p == q || !is_prime(p) || !is_prime(q)) {
        throw InvalidModulusError("quadratic reciprocity: needs two distinct odd primes");
    }
    QrRecord rec;
    rec.p = p;
    rec.q = q;
    rec.lhs = legendre(p, q) * legendre(q, p);
    const Integer exponent = ((p - 1) / 2) * ((q - 1) / 2);
    rec.rhs = mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
    const Rational rp(p);
    const Rational rq(q);
    rec.at_p = hilbert(rp, rq, Place::finite(p));
    rec.at_q = hilbert(rp, rq, Place::finite(q));
    rec.at_two = hilbert(rp, rq, Place::finite(2));
    rec.at_inf = hilbert(rp, rq, Place::real());
    return rec;
}

namespace {

struct TaskOutcome {
    long instances = 0;
    std::vector<Failure> failures;
};

// Runs task(0..count-1) across the workers and merges outcomes in index
// order.  A throwing task aborts the sweep and rethrows.
template <typename Fn>
TaskOutcome indexed_sweep(long count, int jobs, const Fn& task) {
    TaskOutcome merged;
    if (jobs <= 1 || count < 2) {
        for (long i = 0; i < count; ++i) {
            TaskOutcome one = task(i);
            merged.instances += one.instances;
            for (auto& f : one.failures) merged.failures.push_back(std::move(f));
        }
        return merged;
    }
    const int workers = static_cast<int>(std::min<long>(jobs, count));
    std::vector<TaskOutcome> per(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const long i = next.fetch_add(1);
                    if (i >= count) break;
                    per[static_cast<std::size_t>(i)] = task(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& one : per) {
        merged.instances += one.instances;
        for (auto& f : one.failures) merged.failures.push_back(std::move(f));
    }
    return merged;
}

std::string sign_str(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

std::vector<Integer> odd_primes_up_to(long bound) {
    std::vector<Integer> primes;
    for (long p = 3; p <= bound; p += 2) {
        if (is_prime(Integer(p))) primes.emplace_back(p);
    }
    return primes;
}

// The place grid of the acceptance sweeps: infinity, 2, odd p <= bound.
std::vector<Place> place_grid(long bound) {
    std::vector<Place> places;
    places.push_back(Place::real());
    places.push_back(Place::finite(2));
    for (const Integer& p : odd_primes_up_to(bound)) places.push_back(Place::finite(p));
    return places;
}

// Grid index i -> the i-th nonzero integer in [-max, max].
long nonzero_grid_value(long i, long max) { return i < max ? i - max : i - max + 1; }

// Representatives are integers once cleared of denominators within the square
// class; the conic oracle works on those.
Integer integral_representative(const SquareClass& cls) {
    const Rational rep = cls.representative();
    return Integer(rep.get_num() * rep.get_den());
}

// Conic-oracle results memoized per (place, class, class): the symbol factors
// through square classes, so a handful of oracle runs covers the whole grid.
class ConicOracleMemo {
public:
    int value(const Place& v, const SquareClass& ca, const SquareClass& cb) {
        const auto key = std::make_tuple(v, ca, cb);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        const int computed = hilbert_oracle(integral_representative(ca),
                                            integral_representative(cb), v);
        std::lock_guard<std::mutex> lock(mutex_);
        return memo_.emplace(key, computed).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<Place, SquareClass, SquareClass>, int> memo_;
};

// --- bridge: defect(a,b,v) == <a,b>_v on all square-class pairs ------------

VerificationReport law_bridge(long max, int jobs) {
    const auto places = place_grid(max);
    auto outcome = indexed_sweep(static_cast<long>(places.size()), jobs, [&](long idx) {
        const Place& v = places[static_cast<std::size_t>(idx)];
        const auto classes = all_square_classes(v);
        TaskOutcome out;
        for (const SquareClass& ca : classes) {
            for (const SquareClass& cb : classes) {
                const Rational a = ca.representative();
                const Rational b = cb.representative();
                ++out.instances;
                const int h = hilbert(a, b, v);
                const Mu8 d = defect(a, b, v);
                if (d != Mu8::from_sign(h)) {
                    out.failures.push_back({"v=" + v.str() + ", a=" + a.get_str() +
                                                ", b=" + b.get_str(),
                                            sign_str(h), d.str()});
                }
            }
        }
        return out;
    });
    return {"bridge", outcome.instances, std::move(outcome.failures), {}};
}

// --- defect-product: prod_v mu_v(a,b) == 1 over the joint support ----------

VerificationReport law_defect_product(long max, int jobs) {
    const long values = 2 * max;
    auto outcome = indexed_sweep(values, jobs, [&](long i) {
        const Rational a(nonzero_grid_value(i, max));
        TaskOutcome out;
        for (long j = 0; j < values; ++j) {
            const Rational b(nonzero_grid_value(j, max));
            ++out.instances;
            const Mu8 product = global_defect_product(a, b);
            if (product.exponent() != 0) {
                out.failures.push_back(
                    {"a=" + a.get_str() + ", b=" + b.get_str(), "zeta8^0", product.str()});
            }
        }
        return out;
    });
    return {"defect-product", outcome.instances, std::move(outcome.failures), {}};
}

// --- hilbert-reciprocity: prod_v <a,b>_v == 1, formula vs conic oracle -----

VerificationReport law_hilbert_reciprocity(long max, int jobs) {
    const long values = 2 * max;
    ConicOracleMemo memo;
    auto outcome = indexed_sweep(values, jobs, [&](long i) {
        const Rational a(nonzero_grid_value(i, max));
        TaskOutcome out;
        for (long j = 0; j < values; ++j) {
            const Rational b(nonzero_grid_value(j, max));
            ++out.instances;
            const int product = hilbert_product(a, b);
            if (product != 1) {
                out.failures.push_back(
                    {"a=" + a.get_str() + ", b=" + b.get_str(), "+1", sign_str(product)});
                continue;
            }
            for (const Place& v : support(a, b)) {
                const int formula = hilbert(a, b, v);
                const int oracle = memo.value(v, square_class(a, v), square_class(b, v));
                if (formula != oracle) {
                    out.failures.push_back({"v=" + v.str() + ", a=" + a.get_str() +
                                                ", b=" + b.get_str() + " (formula vs oracle)",
                                            sign_str(oracle), sign_str(formula)});
                }
            }
        }
        return out;
    });
    return {"hilbert-reciprocity", outcome.instances, std::move(outcome.failures), {}};
}

// --- qr: quadratic reciprocity against squares-only Legendre ---------------

// Legendre symbol by enumerating squares mod q; deliberately independent of
// the exponentiation route in legendre().
int brute_legendre(long a, long q) {
    const long r = ((a % q) + q) % q;
    if (r == 0) return 0;
    for (long x = 1; x <= (q - 1) / 2; ++x) {
        if (x * x % q == r) return 1;
    }
    return -1;
}

VerificationReport law_qr(long max, int jobs) {
    const auto primes = odd_primes_up_to(max - 1);
    std::vector<std::pair<long, long>> pairs;
    for (const Integer& p : primes) {
        for (const Integer& q : primes) {
            if (p != q) pairs.emplace_back(p.get_si(), q.get_si());
        }
    }
    auto outcome = indexed_sweep(static_cast<long>(pairs.size()), jobs, [&](long i) {
        const auto [p, q] = pairs[static_cast<std::size_t>(i)];
        TaskOutcome out;
        out.instances = 1;
        const int lhs = brute_legendre(p, q) * brute_legendre(q, p);
        const QrRecord rec = quadratic_reciprocity(Integer(p), Integer(q));
        const int local_product = rec.at_p * rec.at_q * rec.at_two * rec.at_inf;
        const bool ok = lhs == rec.rhs && rec.lhs == lhs && local_product == 1 &&
                        rec.at_inf == 1 && rec.at_two == rec.rhs;
        if (!ok) {
            out.failures.push_back(
                {"p=" + std::to_string(p) + ", q=" + std::to_string(q),
                 "lhs=rhs=" + sign_str(rec.rhs) + ", local product +1",
                 "lhs=" + sign_str(lhs) + ", record lhs=" + sign_str(rec.lhs) +
                     ", local product=" + sign_str(local_product) +
                     ", at_two=" + sign_str(rec.at_two) + ", at_inf=" + sign_str(rec.at_inf)});
        }
        return out;
    });
    return {"qr", outcome.instances, std::move(outcome.failures), {}};
}

// --- gauss-law: evaluation, multiplicativity, conjugate product, transport -

VerificationReport law_gauss(long max, int jobs) {
    std::vector<long> moduli;
    for (long c = 1; c <= max; c += 2) moduli.push_back(c);
    const long transport_bound = std::min<long>(max, 49);
    auto outcome = indexed_sweep(static_cast<long>(moduli.size()), jobs, [&](long idx) {
        const long c = moduli[static_cast<std::size_t>(idx)];
        TaskOutcome out;

        ++out.instances;
        const GaussEvaluationReport eval = verify_gauss_evaluation(c);
        if (!eval.pass()) {
            out.failures.push_back({"c=" + std::to_string(c),
                                    "G(1,c) = eps_c sqrt(c) (both exact identities + numeric sign)",
                                    std::string("square=") + (eval.square_identity ? "ok" : "bad") +
                                        ", conjugate=" + (eval.conjugate_identity ? "ok" : "bad") +
                                        ", numeric_error=" + std::to_string(eval.numeric_error)});
        }

        const Cyclotomic g1 = gauss_sum(1, c);
        const Cyclotomic c_exact = Cyclotomic::from_rational(Rational(c), c);
        const Integer cz(c);
        for (long a = 1; a < c; ++a) {
            Integer g;
            const Integer az(a);
            mpz_gcd(g.get_mpz_t(), az.get_mpz_t(), cz.get_mpz_t());
            if (g != 1) continue;
            const Cyclotomic ga = gauss_sum(az, c);

            ++out.instances;
            const int jac = jacobi(az, cz);
            if (ga != g1 * Rational(jac)) {
                out.failures.push_back({"a=" + std::to_string(a) + ", c=" + std::to_string(c),
                                        "G(a,c) == (a|c) G(1,c)", "exact mismatch"});
            }

            ++out.instances;
            if (ga.conjugate() * ga != c_exact) {
                out.failures.push_back({"a=" + std::to_string(a) + ", c=" + std::to_string(c),
                                        "conj(G(a,c)) G(a,c) == c", "exact mismatch"});
            }

            if (c <= transport_bound) {
                ++out.instances;
                if (transport_coefficient(az, c) != ga) {
                    out.failures.push_back({"a=" + std::to_string(a) + ", c=" + std::to_string(c),
                                            "transport coefficient == G(a,c)", "exact mismatch"});
                }
            }
        }
        return out;
    });
    return {"gauss-law", outcome.instances, std::move(outcome.failures), {}};
}

// --- crt: G(1,pq) == G(q,p) G(p,q) and the warm-up sign --------------------

VerificationReport law_crt(long max, int jobs) {
    const auto primes = odd_primes_up_to(max / 3);
    std::vector<std::pair<long, long>> pairs;
    for (const Integer& p : primes) {
        for (const Integer& q : primes) {
            if (p != q && p.get_si() * q.get_si() <= max) {
                pairs.emplace_back(p.get_si(), q.get_si());
            }
        }
    }
    auto outcome = indexed_sweep(static_cast<long>(pairs.size()), jobs, [&](long i) {
        const auto [p, q] = pairs[static_cast<std::size_t>(i)];
        TaskOutcome out;
        out.instances = 1;
        const CrtFactorizationReport rep = verify_crt_factorization(Integer(p), Integer(q));
        if (!rep.pass()) {
            out.failures.push_back(
                {"p=" + std::to_string(p) + ", q=" + std::to_string(q),
                 "CRT factorization and sign identity",
                 std::string("crt=") + (rep.crt_identity ? "ok" : "bad") + ", sign=" +
                     (rep.sign_identity ? "ok" : "bad") + ", (p|q)(q|p)=" +
                     sign_str(rep.legendre_product) + ", eps ratio=" + rep.epsilon_ratio.str()});
        }
        return out;
    });
    return {"crt", outcome.instances, std::move(outcome.failures), {}};
}

// --- cocycle: the Kashiwara suite -------------------------------------------

// tau(T): the signature of the (one-dimensional) Kashiwara form.
int triple_signature(const Slope& a, const Slope& b, const Slope& c) {
    return sign(kashiwara_form({a, b, c}));
}

VerificationReport law_cocycle(long max, int jobs) {
    auto outcome = indexed_sweep(3, jobs, [&](long part) {
        TaskOutcome out;
        if (part == 0) {
            // kappa == sign of the Kashiwara coefficient, finite triples.
            for (long a = -max; a <= max; ++a) {
                for (long b = -max; b <= max; ++b) {
                    for (long c = -max; c <= max; ++c) {
                        if (a == b || b == c || a == c) continue;
                        const LagrangianTriple T{Slope::finite(Rational(a)),
                                                 Slope::finite(Rational(b)),
                                                 Slope::finite(Rational(c))};
                        ++out.instances;
                        const int k = kappa(T);
                        const int s = sign(kashiwara_form(T));
                        if (k != s) {
                            out.failures.push_back({"T=(" + std::to_string(a) + "," +
                                                        std::to_string(b) + "," +
                                                        std::to_string(c) + ")",
                                                    sign_str(s), sign_str(k)});
                        }
                    }
                }
            }
        } else if (part == 1) {
            // Cyclic invariance and transposition antisymmetry, infinity
            // included in the slope grid.
            std::vector<Slope> slopes{Slope::infinity()};
            for (long t = -max; t <= max; ++t) slopes.push_back(Slope::finite(Rational(t)));
            const long n = static_cast<long>(slopes.size());
            for (long i = 0; i < n; ++i) {
                for (long j = 0; j < n; ++j) {
                    for (long k = 0; k < n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        const Slope& a = slopes[static_cast<std::size_t>(i)];
                        const Slope& b = slopes[static_cast<std::size_t>(j)];
                        const Slope& c = slopes[static_cast<std::size_t>(k)];
                        const Rational base = kashiwara_form({a, b, c});
                        const std::string label =
                            "T=(" + a.str() + "," + b.str() + "," + c.str() + ")";
                        ++out.instances;
                        if (kashiwara_form({b, c, a}) != base) {
                            out.failures.push_back({label + " cyclic (b,c,a)", base.get_str(),
                                                    kashiwara_form({b, c, a}).get_str()});
                        }
                        ++out.instances;
                        if (kashiwara_form({c, a, b}) != base) {
                            out.failures.push_back({label + " cyclic (c,a,b)", base.get_str(),
                                                    kashiwara_form({c, a, b}).get_str()});
                        }
                        const Rational negated = -base;
                        ++out.instances;
                        if (kashiwara_form({b, a, c}) != negated) {
                            out.failures.push_back({label + " swap (b,a,c)", negated.get_str(),
                                                    kashiwara_form({b, a, c}).get_str()});
                        }
                        ++out.instances;
                        if (kashiwara_form({a, c, b}) != negated) {
                            out.failures.push_back({label + " swap (a,c,b)", negated.get_str(),
                                                    kashiwara_form({a, c, b}).get_str()});
                        }
                        ++out.instances;
                        if (kashiwara_form({c, b, a}) != negated) {
                            out.failures.push_back({label + " swap (c,b,a)", negated.get_str(),
                                                    kashiwara_form({c, b, a}).get_str()});
                        }
                    }
                }
            }
        } else {
            // Signature cocycle on ordered 4-tuples from the fixed slope set.
            std::vector<Slope> slopes{Slope::infinity()};
            for (long t : {-2, -1, 0, 1, 2, 3}) slopes.push_back(Slope::finite(Rational(t)));
            const long n = static_cast<long>(slopes.size());
            for (long i = 0; i < n; ++i) {
                for (long j = 0; j < n; ++j) {
                    for (long k = 0; k < n; ++k) {
                        for (long l = 0; l < n; ++l) {
                            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                            const Slope& s1 = slopes[static_cast<std::size_t>(i)];
                            const Slope& s2 = slopes[static_cast<std::size_t>(j)];
                            const Slope& s3 = slopes[static_cast<std::size_t>(k)];
                            const Slope& s4 = slopes[static_cast<std::size_t>(l)];
                            ++out.instances;
                            const int alt = triple_signature(s2, s3, s4) -
                                            triple_signature(s1, s3, s4) +
                                            triple_signature(s1, s2, s4) -
                                            triple_signature(s1, s2, s3);
                            if (alt != 0) {
                                out.failures.push_back({"T=(" + s1.str() + "," + s2.str() + "," +
                                                            s3.str() + "," + s4.str() + ")",
                                                        "0", std::to_string(alt)});
                            }
                        }
                    }
                }
            }
        }
        return out;
    });
    return {"cocycle", outcome.instances, std::move(outcome.failures), {}};
}

// --- factor-two: <2a,2b> == <2,2ab><a,b> ------------------------------------

VerificationReport law_factor_two(long max, int jobs) {
    const auto places = place_grid(max);
    auto outcome = indexed_sweep(static_cast<long>(places.size()), jobs, [&](long idx) {
        const Place& v = places[static_cast<std::size_t>(idx)];
        const auto classes = all_square_classes(v);
        TaskOutcome out;
        const Rational two(2);
        for (const SquareClass& ca : classes) {
            for (const SquareClass& cb : classes) {
                const Rational a = ca.representative();
                const Rational b = cb.representative();
                ++out.instances;
                const int lhs = hilbert(two * a, two * b, v);
                const int rhs = hilbert(two, two * a * b, v) * hilbert(a, b, v);
                if (lhs != rhs) {
                    out.failures.push_back({"v=" + v.str() + ", a=" + a.get_str() +
                                                ", b=" + b.get_str(),
                                            sign_str(rhs), sign_str(lhs)});
                }
            }
        }
        return out;
    });
    return {"factor-two", outcome.instances, std::move(outcome.failures), {}};
}

// --- oracle-agreement: table vs oracle at consecutive levels ----------------

VerificationReport law_oracle_agreement(long max, int jobs) {
    const auto places = place_grid(max);
    auto outcome = indexed_sweep(static_cast<long>(places.size()), jobs, [&](long idx) {
        const Place& v = places[static_cast<std::size_t>(idx)];
        const WeilTable& table = WeilTable::for_place(v);
        TaskOutcome out;
        for (const auto& [cls, tabled] : table.entries()) {
            ++out.instances;
            const Rational rep = cls.representative();
            const int floor = weil_stabilization_floor(rep, v);
            const WeilOracleResult first = weil_oracle_detailed(rep, v, floor);
            const WeilOracleResult second = weil_oracle_detailed(rep, v, floor + 1);
            std::string problem;
            if (first.value != second.value) {
                problem = "levels disagree: " + first.value.str() + " vs " + second.value.str();
            } else if (first.snap_distance >= 1e-6 || second.snap_distance >= 1e-6) {
                problem = "snap distance above 1e-6";
            } else if (tabled != first.value) {
                problem = "table holds " + tabled.str() + ", oracle " + first.value.str();
            } else if (v.is_finite() && !v.is_two() && first.value.exponent() % 2 != 0) {
                problem = "odd-place value " + first.value.str() + " is not a 4th root";
            }
            if (!problem.empty()) {
                out.failures.push_back({"v=" + v.str() + ", class " + cls.str(),
                                        "stable 8th root matching the table", problem});
            }
        }
        return out;
    });
    return {"oracle-agreement", outcome.instances, std::move(outcome.failures), {}};
}

struct LawEntry {
    const char* name;
    long bound;
    VerificationReport (*run)(long, int);
};

constexpr LawEntry kLaws[] = {
    {"bridge", 50, law_bridge},
    {"defect-product", 50, law_defect_product},
    {"hilbert-reciprocity", 50, law_hilbert_reciprocity},
    {"qr", 200, law_qr},
    {"gauss-law", 99, law_gauss},
    {"crt", 200, law_crt},
    {"cocycle", 5, law_cocycle},
    {"factor-two", 50, law_factor_two},
    {"oracle-agreement", 50, law_oracle_agreement},
};

}  // namespace

VerificationReport run_suite(std::string_view law, const SuiteConfig& config) {
    const int jobs = config.jobs < 1 ? 1 : config.jobs;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    if (law == "all") {
        report.law = "all";
        for (const LawEntry& entry : kLaws) {
            const long bound = config.max > 0 ? config.max : entry.bound;
            VerificationReport one = entry.run(bound, jobs);
            report.instances += one.instances;
            for (auto& f : one.failures) {
                f.inputs = "[" + one.law + "] " + f.inputs;
                report.failures.push_back(std::move(f));
            }
        }
    } else {
        const LawEntry* found = nullptr;
        for (const LawEntry& entry : kLaws) {
            if (law == entry.name) {
                found = &entry;
                break;
            }
        }
        if (found == nullptr) throw UsageError("unknown law: " + std::string(law));
        const long bound = config.max > 0 ? config.max : found->bound;
        report = found->run(bound, jobs);
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

const std::vector<std::string>& known_laws() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const LawEntry& entry : kLaws) out.emplace_back(entry.name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

long default_bound(std::string_view law) {
    for (const LawEntry& entry : kLaws) {
        if (law == entry.name) return entry.bound;
    }
    if (law == "all") return 0;
    throw UsageError("unknown law: " + std::string(law));
}

std::vector<QrTableRow> qr_table(long max) {
    const auto primes = odd_primes_up_to(max - 1);
    std::vector<QrTableRow> rows;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const Integer& p = primes[i];
            const Integer& q = primes[j];
            QrTableRow row;
            row.p = p;
            row.q = q;
            row.legendre_pq = legendre(p, q);
            row.legendre_qp = legendre(q, p);
            const Integer exponent = ((p - 1) / 2) * ((q - 1) / 2);
            row.sign = mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
            row.at_two = hilbert(Rational(p), Rational(q), Place::finite(2));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace recip
