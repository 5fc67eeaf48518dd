// recip: evaluate local symbols and run the verification suites.
//
// Exit codes: 0 success (and zero failures for verify), 1 domain error with a
// diagnostic naming the violated precondition, 2 malformed usage.

#include <complex>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recip/arith.hpp"
#include "recip/engine.hpp"
#include "recip/errors.hpp"
#include "recip/finite_model.hpp"
#include "recip/hilbert.hpp"
#include "recip/maslov.hpp"
#include "recip/weil.hpp"

namespace {

using recip::Integer;
using recip::Rational;

recip::Place place_from_string(const std::string& s) {
    if (s == "inf") return recip::Place::real();
    return recip::Place::finite(recip::parse_integer(s));
}

recip::Slope slope_from_string(const std::string& s) {
    if (s == "inf") return recip::Slope::infinity();
    return recip::Slope::finite(recip::parse_rational(s));
}

long long_from_string(const std::string& s) {
    const Integer n = recip::parse_integer(s);
    if (!n.fits_slong_p()) throw recip::LimitError("value out of range: " + s);
    return n.get_si();
}

std::string sign_str(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

std::string approx_str(const std::complex<double>& z) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+")
        << std::fabs(z.imag()) << "i";
    return out.str();
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int default_jobs() {
    const char* env = std::getenv("RECIP_JOBS");
    if (env == nullptr) return 1;
    try {
        const int k = std::stoi(env);
        return k >= 1 ? k : 1;
    } catch (...) {
        return 1;
    }
}

void check_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "csv") {
        throw recip::UsageError("unknown format: " + format);
    }
}

void print_verification(const recip::VerificationReport& report, const std::string& format) {
    if (format == "text") {
        std::cout << "law: " << report.law << '\n';
        std::cout << "instances: " << report.instances << '\n';
        std::cout << "failures: " << report.failures.size() << '\n';
        for (const auto& f : report.failures) {
            std::cout << "failure: " << f.inputs << " | expected " << f.expected << " | got "
                      << f.got << '\n';
        }
        std::cout << "elapsed_ms: " << report.elapsed.count() << '\n';
        std::cout << "result: " << (report.pass() ? "pass" : "FAIL") << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["law"] = report.law;
        doc["instances"] = report.instances;
        doc["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : report.failures) {
            doc["failures"].push_back(
                {{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
        }
        doc["elapsed_ms"] = report.elapsed.count();
        doc["pass"] = report.pass();
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "type,law,instances,elapsed_ms,inputs,expected,got\n";
        std::cout << "summary," << report.law << ',' << report.instances << ','
                  << report.elapsed.count() << ",,,\n";
        for (const auto& f : report.failures) {
            std::cout << "failure," << report.law << ",,," << csv_quote(f.inputs) << ','
                      << csv_quote(f.expected) << ',' << csv_quote(f.got) << '\n';
        }
    }
}

void print_qr_table(const std::vector<recip::QrTableRow>& rows, long max,
                    const std::string& format) {
    if (format == "text") {
        std::cout << std::setw(5) << "p" << std::setw(5) << "q" << std::setw(7) << "(p|q)"
                  << std::setw(7) << "(q|p)" << std::setw(6) << "sign" << std::setw(9)
                  << "<p,q>_2" << '\n';
        for (const auto& row : rows) {
            std::cout << std::setw(5) << row.p.get_str() << std::setw(5) << row.q.get_str()
                      << std::setw(7) << sign_str(row.legendre_pq) << std::setw(7)
                      << sign_str(row.legendre_qp) << std::setw(6) << sign_str(row.sign)
                      << std::setw(9) << sign_str(row.at_two) << '\n';
        }
    } else if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["report"] = "qr-table";
        doc["max"] = max;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            doc["rows"].push_back({{"p", row.p.get_si()},
                                   {"q", row.q.get_si()},
                                   {"legendre_pq", row.legendre_pq},
                                   {"legendre_qp", row.legendre_qp},
                                   {"sign", row.sign},
                                   {"at_two", row.at_two}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "p,q,legendre_pq,legendre_qp,sign,at_two\n";
        for (const auto& row : rows) {
            std::cout << row.p.get_str() << ',' << row.q.get_str() << ',' << row.legendre_pq
                      << ',' << row.legendre_qp << ',' << row.sign << ',' << row.at_two << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local symbols, Weil indices, Gauss sums, and reciprocity sweeps"};
    app.require_subcommand(1);

    std::string arg_a, arg_b, arg_p, arg_c, arg_place;
    std::string slope1, slope2, slope3;
    bool all_places = false;
    bool approx = false;

    auto* legendre_cmd = app.add_subcommand("legendre", "Legendre symbol (a|p), p an odd prime");
    legendre_cmd->add_option("a", arg_a)->required();
    legendre_cmd->add_option("p", arg_p)->required();

    auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi symbol (a|c), c odd and positive");
    jacobi_cmd->add_option("a", arg_a)->required();
    jacobi_cmd->add_option("c", arg_c)->required();

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol <a,b>_v");
    hilbert_cmd->add_option("a", arg_a)->required();
    hilbert_cmd->add_option("b", arg_b)->required();
    auto* hilbert_place = hilbert_cmd->add_option("--place", arg_place, "inf, 2, or an odd prime");
    hilbert_cmd->add_flag("--all-places", all_places, "every place in the joint support");

    auto* weil_cmd = app.add_subcommand("weil", "Weil index gamma_v(a), an 8th root of unity");
    weil_cmd->add_option("a", arg_a)->required();
    weil_cmd->add_option("--place", arg_place, "inf, 2, or an odd prime")->required();
    weil_cmd->add_flag("--approx", approx, "also print a numeric approximation");

    auto* kashiwara_cmd =
        app.add_subcommand("kashiwara", "Kashiwara form coefficient of a slope triple");
    kashiwara_cmd->add_option("t1", slope1)->required();
    kashiwara_cmd->add_option("t2", slope2)->required();
    kashiwara_cmd->add_option("t3", slope3)->required();
    auto* kashiwara_place = kashiwara_cmd->add_option(
        "--place", arg_place, "print the triple phase gamma_v(form) instead");

    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum G(a,c) in Q(zeta_c), c odd");
    gauss_cmd->add_option("a", arg_a)->required();
    gauss_cmd->add_option("c", arg_c)->required();
    gauss_cmd->add_flag("--approx", approx, "also print a numeric approximation");

    auto* defect_cmd = app.add_subcommand("defect", "normalization defect mu_v(a,b) in mu_8");
    defect_cmd->add_option("a", arg_a)->required();
    defect_cmd->add_option("b", arg_b)->required();
    auto* defect_place = defect_cmd->add_option("--place", arg_place, "inf, 2, or an odd prime");
    defect_cmd->add_flag("--all-places", all_places, "every place in the joint support");

    std::string law;
    long max_bound = 0;
    std::string format = "text";
    int jobs = default_jobs();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("law", law, "bridge, defect-product, hilbert-reciprocity, qr, "
                                       "gauss-law, crt, cocycle, factor-two, oracle-agreement, "
                                       "or all")
        ->required();
    verify_cmd->add_option("--max", max_bound, "sweep bound (default: the law's own bound)");
    verify_cmd->add_option("--format", format, "text, json, or csv");
    verify_cmd->add_option("--jobs", jobs, "worker threads (default: RECIP_JOBS or 1)");

    long table_max = 0;
    auto* report_cmd = app.add_subcommand("report", "emit a derived table");
    report_cmd->require_subcommand(1);
    auto* qr_table_cmd = report_cmd->add_subcommand("qr-table",
                                                    "reciprocity table over odd primes < max");
    qr_table_cmd->add_option("--max", table_max, "upper bound for the primes, at least 5")
        ->required();
    qr_table_cmd->add_option("--format", format, "text, json, or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (legendre_cmd->parsed()) {
            std::cout << sign_str(recip::legendre(recip::parse_integer(arg_a),
                                                  recip::parse_integer(arg_p)))
                      << '\n';
        } else if (jacobi_cmd->parsed()) {
            std::cout << sign_str(recip::jacobi(recip::parse_integer(arg_a),
                                                recip::parse_integer(arg_c)))
                      << '\n';
        } else if (hilbert_cmd->parsed()) {
            const Rational a = recip::parse_rational(arg_a);
            const Rational b = recip::parse_rational(arg_b);
            if (all_places == hilbert_place->count()) {
                throw recip::UsageError("hilbert: give exactly one of --place or --all-places");
            }
            if (all_places) {
                int product = 1;
                for (const recip::Place& v : recip::support(a, b)) {
                    const int h = recip::hilbert(a, b, v);
                    product *= h;
                    std::cout << v.str() << ": " << sign_str(h) << '\n';
                }
                std::cout << "product: " << sign_str(product) << '\n';
            } else {
                std::cout << sign_str(recip::hilbert(a, b, place_from_string(arg_place))) << '\n';
            }
        } else if (weil_cmd->parsed()) {
            const recip::Mu8 g = recip::weil_index(recip::parse_rational(arg_a),
                                                   place_from_string(arg_place));
            std::cout << g.str() << '\n';
            if (approx) {
                std::cout << "approx: " << approx_str(g.to_cyclotomic().approx()) << '\n';
            }
        } else if (kashiwara_cmd->parsed()) {
            const recip::LagrangianTriple T{slope_from_string(slope1), slope_from_string(slope2),
                                            slope_from_string(slope3)};
            if (kashiwara_place->count() > 0) {
                std::cout << recip::triple_phase(T, place_from_string(arg_place)).str() << '\n';
            } else {
                std::cout << recip::kashiwara_form(T).get_str() << '\n';
            }
        } else if (gauss_cmd->parsed()) {
            const recip::Cyclotomic g =
                recip::gauss_sum(recip::parse_integer(arg_a), long_from_string(arg_c));
            std::cout << g.str() << '\n';
            if (approx) {
                std::cout << "approx: " << approx_str(g.approx()) << '\n';
            }
        } else if (defect_cmd->parsed()) {
            const Rational a = recip::parse_rational(arg_a);
            const Rational b = recip::parse_rational(arg_b);
            if (all_places == defect_place->count()) {
                throw recip::UsageError("defect: give exactly one of --place or --all-places");
            }
            if (all_places) {
                recip::Mu8 product(0);
                for (const recip::Place& v : recip::support(a, b)) {
                    const recip::Mu8 d = recip::defect(a, b, v);
                    product = product * d;
                    std::cout << v.str() << ": " << d.str() << '\n';
                }
                std::cout << "product: " << product.str() << '\n';
            } else {
                std::cout << recip::defect(a, b, place_from_string(arg_place)).str() << '\n';
            }
        } else if (verify_cmd->parsed()) {
            check_format(format);
            recip::SuiteConfig config;
            config.max = max_bound;
            config.jobs = jobs;
            const recip::VerificationReport report = recip::run_suite(law, config);
            print_verification(report, format);
            return report.pass() ? 0 : 1;
        } else if (qr_table_cmd->parsed()) {
            check_format(format);
            if (table_max < 5) throw recip::UsageError("report qr-table: --max must be at least 5");
            print_qr_table(recip::qr_table(table_max), table_max, format);
        }
    } catch (const recip::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const recip::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
