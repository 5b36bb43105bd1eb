#include "amicus/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include "amicus/chain.hpp"
#include "amicus/forms.hpp"
#include "amicus/json_io.hpp"
#include "amicus/oracle.hpp"
#include "amicus/tables.hpp"

namespace amicus {
namespace {

void print_outcomes(const std::vector<SearchOutcome>& outcomes, bool json, bool trace,
                    std::ostream& out) {
    if (json) {
        // one outcome per line so long traces stream
        for (const auto& o : outcomes) {
            if (!trace && !o.success()) continue;
            out << to_json(o).dump() << "\n";
        }
        return;
    }
    std::size_t found = 0;
    for (const auto& o : outcomes) {
        if (o.success()) {
            ++found;
            out << "amicable: " << o.pair->m.to_string() << " = " << to_string(o.pair->m.value())
                << "  /  " << o.pair->n.to_string() << " = " << to_string(o.pair->n.value())
                << "  (sigma " << to_string(o.pair->sigma) << ")\n";
        } else if (trace) {
            out << "rejected";
            for (const auto& [k, v] : o.candidate) out << " " << k << "=" << to_string(v);
            out << ": " << o.rejection << "\n";
        }
    }
    out << found << " pair(s) found among " << outcomes.size() << " candidate(s)\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"amicus: amicable-number search and verification toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output");

    std::string arg_n, arg_m;
    auto* sigma_cmd = app.add_subcommand("sigma", "divisor sum, factored divisor sum, aliquot sum");
    sigma_cmd->add_option("n", arg_n, "number (decimal or factored, e.g. 2^3*3^2*5)")->required();
    auto* factor_cmd = app.add_subcommand("factor", "canonical prime factorization");
    factor_cmd->add_option("n", arg_n)->required();
    auto* verify_cmd = app.add_subcommand("verify", "check a pair for amicability");
    verify_cmd->add_option("m", arg_m)->required();
    verify_cmd->add_option("n", arg_n)->required();
    auto* certify_cmd = app.add_subcommand("certify", "2a^2+b^2 primality certificate");
    certify_cmd->add_option("n", arg_n)->required();

    auto* search_cmd = app.add_subcommand("search", "run one of the five search methods");
    search_cmd->set_help_flag("--help", "print help");  // frees --h for the cofactor
    std::string method, s_a, s_b = "1", s_f, s_g, s_h;
    u64 alpha = 1, beta = 3, k = 0, km = 3, kn = 1;
    unsigned m_lo = 1, m_hi = 8, k_lo = 1, k_hi = 1;
    std::string x_max = "1000", prime_limit;
    bool trace = false, euler_tables = false;
    unsigned threads = 0;
    search_cmd->add_option("--method", method, "problem1|thabit|problem2|problem3|problem4|problem5")
        ->required();
    search_cmd->add_option("--a", s_a, "common factor a (cofactor a for problem5)");
    search_cmd->add_option("--b", s_b, "cofactor b (problem5)");
    search_cmd->add_option("--f", s_f, "cofactor f (problem3)");
    search_cmd->add_option("--g", s_g, "cofactor g (problem4)");
    search_cmd->add_option("--h", s_h, "cofactor h (problem4)");
    search_cmd->add_option("--alpha", alpha, "split ratio numerator (problem2)");
    search_cmd->add_option("--beta", beta, "split ratio denominator (problem2)");
    search_cmd->add_option("--k", k, "k for the g=km-1, h=kn-1 form (problem4)");
    search_cmd->add_option("--km", km, "m of the k-form ratio (problem4)");
    search_cmd->add_option("--kn", kn, "n of the k-form ratio (problem4)");
    search_cmd->add_option("--x-max", x_max, "sweep bound on x (problem5)");
    search_cmd->add_option("--m-min", m_lo, "thabit exponent range");
    search_cmd->add_option("--m-max", m_hi, "thabit exponent range");
    search_cmd->add_option("--k-min", k_lo, "thabit k range");
    search_cmd->add_option("--k-max", k_hi, "thabit k range");
    search_cmd->add_option("--prime-limit", prime_limit, "reject candidates above this value");
    search_cmd->add_flag("--euler-tables", euler_tables,
                         "restore the classical 100000 prime-table limit");
    search_cmd->add_flag("--trace", trace, "emit rejected candidates too");
    search_cmd->add_option("--threads", threads, "worker count (default AMICUS_THREADS)");

    auto* bound_cmd = app.add_subcommand("bound", "largest worthwhile prime cofactor for problem3");
    std::string b_a;
    bound_cmd->add_option("--a", b_a, "common factor a")->required();

    auto* catalogue_cmd = app.add_subcommand("catalogue", "the embedded 61-pair catalogue");
    auto* catalogue_verify = catalogue_cmd->add_subcommand("verify", "recompute every entry");
    catalogue_cmd->require_subcommand(1);

    auto* oracle_cmd = app.add_subcommand("oracle", "sieve-based exhaustive enumeration");
    u64 limit = 10000;
    oracle_cmd->add_option("--limit", limit, "enumerate pairs up to this bound")->required();

    auto* tables_cmd = app.add_subcommand("tables", "regenerate the factored divisor-sum tables");
    u64 bound = 1000;
    std::string format = "csv", diff_path;
    tables_cmd->add_option("--bound", bound, "largest prime");
    tables_cmd->add_option("--format", format, "csv|json|text");
    tables_cmd->add_option("--diff", diff_path, "compare against a transcription file");

    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector as a stack
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*sigma_cmd) {
            FactoredInteger n = parse_factored(arg_n);
            u128 s = sigma(n);
            FactoredInteger sf = sigma_factored(n);
            if (json) {
                out << nlohmann::json{{"n", json_u128(n.value())},
                                      {"sigma", json_u128(s)},
                                      {"sigma_factored", to_json(sf)},
                                      {"aliquot_sum", json_u128(s - n.value())}}
                           .dump(2)
                    << "\n";
            } else {
                out << "sigma(" << to_string(n.value()) << ") = " << to_string(s) << " = "
                    << sf.to_string() << "\n";
                out << "aliquot sum = " << to_string(s - n.value()) << "\n";
            }
        } else if (*factor_cmd) {
            FactoredInteger n = parse_factored(arg_n);
            if (json)
                out << to_json(n).dump(2) << "\n";
            else
                out << to_string(n.value()) << " = " << n.to_string() << "\n";
        } else if (*verify_cmd) {
            FactoredInteger m = parse_factored(arg_m), n = parse_factored(arg_n);
            u128 sm = sigma(m), sn = sigma(n);
            u128 total = checked_add(m.value(), n.value());
            bool ok = is_amicable(m.value(), n.value());
            if (json) {
                out << nlohmann::json{{"m", to_json(m)},          {"n", to_json(n)},
                                      {"sigma_m", json_u128(sm)}, {"sigma_n", json_u128(sn)},
                                      {"sum", json_u128(total)},  {"amicable", ok}}
                           .dump(2)
                    << "\n";
            } else {
                out << "sigma(m) = " << to_string(sm) << ", sigma(n) = " << to_string(sn)
                    << ", m+n = " << to_string(total) << "\n";
                out << (ok ? "amicable\n" : "not amicable\n");
                if (m.value() == n.value() && is_perfect(m.value()))
                    out << "(a perfect number repeated, not an amicable pair)\n";
            }
        } else if (*certify_cmd) {
            Certificate cert = certify_prime(static_cast<u64>(parse_factored(arg_n).value()));
            if (json) {
                out << to_json(cert).dump(2) << "\n";
            } else {
                out << "target " << cert.target << " mod 8 = " << cert.residue_class << "\n";
                for (const auto& rep : cert.representations)
                    out << "  = 2*" << rep.a << "^2 + " << rep.b << "^2\n";
                out << "verdict: " << to_string(cert.verdict) << "\n";
            }
        } else if (*search_cmd) {
            SearchOptions opts;
            opts.emit_trace = true;  // the candidate tally covers rejections too
            opts.threads = threads;
            if (euler_tables) opts.prime_limit = SearchOptions::euler_table_limit();
            if (!prime_limit.empty()) opts.prime_limit = parse_factored(prime_limit).value();
            std::vector<SearchOutcome> outcomes;
            if (method == "problem1") {
                outcomes = search_problem1(parse_factored(s_a), opts);
            } else if (method == "thabit") {
                outcomes = search_thabit_rule(m_lo, m_hi, k_lo, k_hi, opts);
            } else if (method == "problem2") {
                outcomes = search_problem2(parse_factored(s_a), alpha, beta, opts);
            } else if (method == "problem3") {
                outcomes = search_problem3(parse_factored(s_a), parse_factored(s_f), opts);
            } else if (method == "problem4") {
                if (k != 0)
                    outcomes = search_problem4_k(parse_factored(s_a), k, km, kn, opts);
                else
                    outcomes = search_problem4(parse_factored(s_a), parse_factored(s_g),
                                               parse_factored(s_h), opts);
            } else if (method == "problem5") {
                outcomes = search_problem5(parse_factored(s_a), parse_factored(s_b),
                                           parse_factored(x_max).value(), opts);
            } else {
                err << "unknown search method '" << method << "'\n";
                return 1;
            }
            print_outcomes(outcomes, json, trace, out);
        } else if (*bound_cmd) {
            u128 f = problem3_f_bound(parse_factored(b_a));
            if (json)
                out << nlohmann::json{{"bound", json_u128(f)}}.dump() << "\n";
            else
                out << to_string(f) << "\n";
        } else if (*catalogue_verify) {
            VerificationReport report = verify_catalogue();
            if (json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                for (const auto& r : report.entries)
                    out << r.label << ": " << (r.pass ? "valid" : "INVALID (" + r.failure + ")")
                        << "\n";
                for (const auto& r : report.errata)
                    out << "erratum " << r.label << ": "
                        << (r.pass ? "valid" : "invalid (" + r.failure + ")") << "\n";
                out << report.valid_count << " valid, " << report.invalid_count
                    << " invalid among the main entries\n";
                out << "historical tallies: 59 new pairs per the 1915 edition; 62 known in total "
                       "after publication\n";
                out << (report.as_expected ? "catalogue verified\n" : "UNEXPECTED RESULTS\n");
            }
            if (!report.as_expected) return 2;
        } else if (*oracle_cmd) {
            auto pairs = enumerate_amicable(limit);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : pairs) arr.push_back({{"m", p.m}, {"n", p.n}, {"sigma", p.sigma}});
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& p : pairs) out << p.m << " " << p.n << " (sigma " << p.sigma << ")\n";
                out << pairs.size() << " pair(s) below " << limit << "\n";
            }
        } else if (*tables_cmd) {
            auto rows = generate_table(bound, ExponentSchedule::classical());
            if (!diff_path.empty()) {
                auto diffs = diff_table(rows, diff_path);
                for (const auto& d : diffs) out << d << "\n";
                out << diffs.size() << " difference(s)\n";
                return diffs.empty() ? 0 : 1;
            }
            TableFormat f = format == "json"   ? TableFormat::Json
                            : format == "text" ? TableFormat::Text
                            : format == "csv"  ? TableFormat::Csv
                                               : throw std::invalid_argument(
                                                     "amicus: unknown table format '" + format + "'");
            out << render_table(rows, f);
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace amicus
