#include "srg/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "srg/oracle/jordan_oracle.hpp"
#include "srg/report.hpp"

namespace srg::cli {

std::vector<SrgParams> scan_tuples(const ScanRange& range, bool counting_identity) {
    std::vector<SrgParams> out;
    for (std::int64_t n = 5; n <= range.n_max; ++n) {
        for (std::int64_t p = 2; p < n - 1; ++p) {
            if (range.p && *range.p != p) continue;
            for (std::int64_t a = 0; a < p; ++a) {
                if (range.a && *range.a != a) continue;
                for (std::int64_t c = 1; c < p; ++c) {
                    if (range.c && *range.c != c) continue;
                    if (counting_identity && range.only_counting_valid && p * (p - a - 1) != (n - p - 1) * c) continue;
                    out.push_back({n, p, a, c});
                }
            }
        }
    }
    return out;
}

std::vector<FeasibilityVerdict> run_scan(const ScanRange& range, const Limits& limits, unsigned jobs) {
    const std::vector<SrgParams> tuples = scan_tuples(range, limits.counting_identity);
    std::vector<FeasibilityVerdict> results(tuples.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            const SrgParams& t = tuples[i];
            results[i] = verdict(t.n, t.p, t.a, t.c, limits);
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tuples.size()))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return results;
}

namespace {

struct LimitFlags {
    unsigned k_max = 9;
    unsigned kl_max = 9;
    bool skip_classical = false;
    bool q23 = false;
    bool no_counting = false;

    void attach(CLI::App* sub) {
        sub->add_option("--k-max", k_max, "largest odd k for single-index families (>= 3)")->capture_default_str();
        sub->add_option("--kl-max", kl_max, "largest k+l for double-index families (>= 3)")->capture_default_str();
        sub->add_flag("--skip-classical", skip_classical, "omit multiplicity and classical Krein checks");
        sub->add_flag("--include-q23-conditions", q23, "also require q2, q3 >= 0 for the theorem families");
        sub->add_flag("--no-counting-identity", no_counting, "do not enforce p(p-a-1) = (n-p-1)c");
    }

    Limits limits() const {
        if (k_max < 3 || kl_max < 3) throw CLI::ValidationError("--k-max and --kl-max must be >= 3");
        Limits l;
        l.k_max = k_max;
        l.kl_max = kl_max;
        l.classical = !skip_classical;
        l.q23_conditions = q23;
        l.counting_identity = !no_counting;
        return l;
    }
};

struct Tuple {
    std::int64_t n = 0, p = 0, a = 0, c = 0;

    void attach(CLI::App* sub) {
        sub->add_option("n", n, "order")->required();
        sub->add_option("p", p, "degree")->required();
        sub->add_option("a", a, "common neighbours of adjacent vertices")->required();
        sub->add_option("c", c, "common neighbours of non-adjacent vertices")->required();
    }
};

int exit_code(const FeasibilityVerdict& v) {
    if (!v.valid) return 2;
    return v.feasible ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra, generalized Krein parameters and feasibility checks for strongly regular "
                 "graph parameter sets (n,p;a,c)",
                 "srg-krein"};
    app.require_subcommand(1);

    // check
    CLI::App* check = app.add_subcommand("check", "evaluate every necessary condition for one tuple");
    Tuple check_tuple;
    LimitFlags check_limits;
    bool check_json = false;
    check_tuple.attach(check);
    check_limits.attach(check);
    check->add_flag("--json", check_json, "machine-readable report");

    // scan
    CLI::App* scan = app.add_subcommand("scan", "check every tuple up to an order");
    ScanRange range;
    LimitFlags scan_limits;
    bool scan_json = false;
    bool scan_csv = false;
    bool include_invalid = false;
    unsigned jobs = 1;
    std::int64_t fixed_p = -1, fixed_a = -1, fixed_c = -1;
    scan->add_option("--n-max", range.n_max, "largest order")->required();
    scan->add_option("--p", fixed_p, "only this degree");
    scan->add_option("--a", fixed_a, "only this a");
    scan->add_option("--c", fixed_c, "only this c");
    scan->add_flag("--include-counting-invalid", include_invalid, "also report tuples failing the counting identity");
    scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    scan_limits.attach(scan);
    auto* json_flag = scan->add_flag("--json", scan_json, "JSON array output");
    scan->add_flag("--csv", scan_csv, "CSV output (default)")->excludes(json_flag);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "dense-matrix verification of a catalog graph");
    std::string graph_name;
    std::string adjacency_file;
    oracle::SuiteOptions suite;
    bool verify_json = false;
    verify->add_option("graph", graph_name, "c5, petersen, lattice-3, triangular-5, paley-q");
    verify->add_option("--adjacency", adjacency_file, "read a 0/1 adjacency matrix instead (first token n)");
    verify->add_option("--degree-cap", suite.degree_cap, "largest total exponent compared")->capture_default_str();
    verify->add_option("--kronecker-k", suite.kronecker_k, "largest Kronecker power (default 3 for n <= 5, else 2)");
    verify->add_option("--tol", suite.tol, "residual tolerance")->capture_default_str();
    verify->add_flag("--json", verify_json, "machine-readable report");

    // krein
    CLI::App* krein = app.add_subcommand("krein", "exact generalized Krein parameters of one product");
    Tuple krein_tuple;
    std::vector<unsigned> jj, uv, plus, jplus;
    bool krein_json = false;
    bool krein_no_counting = false;
    krein_tuple.attach(krein);
    krein->add_option("--jj", jj, "j k: E_j^{ok}")->expected(2);
    krein->add_option("--uv", uv, "u v k l: E_u^{ok} o E_v^{ol}")->expected(4);
    krein->add_option("--plus", plus, "u v k: (E_u+E_v)^{ok}")->expected(3);
    krein->add_option("--jplus", jplus, "j u v k l: E_j^{ok} o (E_u+E_v)^{ol}")->expected(5);
    krein->add_flag("--json", krein_json, "machine-readable report");
    krein->add_flag("--no-counting-identity", krein_no_counting, "do not enforce p(p-a-1) = (n-p-1)c");

    // abs-power
    CLI::App* abs_power = app.add_subcommand("abs-power", "coordinates of |A|^x in the basis {I, A, E1}");
    Tuple abs_tuple;
    double abs_x = 0.0;
    bool abs_json = false;
    bool abs_no_counting = false;
    abs_tuple.attach(abs_power);
    abs_power->add_option("x", abs_x, "real exponent")->required();
    abs_power->add_flag("--json", abs_json, "machine-readable report");
    abs_power->add_flag("--no-counting-identity", abs_no_counting, "do not enforce p(p-a-1) = (n-p-1)c");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            const FeasibilityVerdict v =
                verdict(check_tuple.n, check_tuple.p, check_tuple.a, check_tuple.c, check_limits.limits());
            if (check_json) {
                out << report::verdict_json(v).dump(2) << '\n';
            } else {
                out << report::verdict_table(v);
            }
            if (!v.valid) {
                try {
                    validate_params(check_tuple.n, check_tuple.p, check_tuple.a, check_tuple.c,
                                    {.require_counting_identity = !check_limits.no_counting});
                } catch (const ParamError& e) {
                    err << "error: " << e.what() << '\n';
                }
            }
            return exit_code(v);
        }

        if (*scan) {
            const Limits limits = scan_limits.limits();
            if (fixed_p >= 0) range.p = fixed_p;
            if (fixed_a >= 0) range.a = fixed_a;
            if (fixed_c >= 0) range.c = fixed_c;
            range.only_counting_valid = !include_invalid;
            if (range.n_max < 5) return 0;
            const auto results = run_scan(range, limits, jobs);
            if (scan_json) {
                report::Json rows = report::Json::array();
                for (const auto& v : results) rows.push_back(report::scan_row_json(v));
                out << rows.dump(2) << '\n';
            } else {
                out << report::csv_header() << '\n';
                for (const auto& v : results) out << report::csv_row(v) << '\n';
            }
            return 0;
        }

        if (*verify) {
            oracle::GraphCatalogEntry entry;
            if (!adjacency_file.empty()) {
                std::ifstream in(adjacency_file);
                if (!in) {
                    err << "error: cannot open " << adjacency_file << '\n';
                    return 2;
                }
                entry.adjacency = oracle::read_adjacency(in);
                entry.params = oracle::infer_params(entry.adjacency);
                entry.name = adjacency_file;
            } else if (!graph_name.empty()) {
                entry = oracle::build_graph(graph_name);
            } else {
                err << "error: verify needs a graph name or --adjacency\n";
                return 2;
            }
            const oracle::SuiteReport rep = oracle::run_oracle_suite(entry, suite);
            if (verify_json) {
                out << report::suite_json(rep).dump(2) << '\n';
            } else {
                out << report::suite_text(rep);
            }
            return rep.pass() ? 0 : 1;
        }

        if (*krein) {
            const int chosen = !jj.empty() + !uv.empty() + !plus.empty() + !jplus.empty();
            if (chosen != 1) {
                err << "error: give exactly one of --jj, --uv, --plus, --jplus\n";
                return 2;
            }
            const SrgParams params = validate_params(krein_tuple.n, krein_tuple.p, krein_tuple.a, krein_tuple.c,
                                                     {.require_counting_identity = !krein_no_counting});
            const auto idx = [](unsigned v) { return static_cast<int>(v); };
            ProductSpec spec;
            if (!jj.empty()) spec = spec::JJ{idx(jj[0]), jj[1]};
            if (!uv.empty()) spec = spec::UV{idx(uv[0]), idx(uv[1]), uv[2], uv[3]};
            if (!plus.empty()) spec = spec::PlusUV{idx(plus[0]), idx(plus[1]), plus[2]};
            if (!jplus.empty()) spec = spec::JPlusUV{idx(jplus[0]), idx(jplus[1]), idx(jplus[2]), jplus[3], jplus[4]};
            const KreinTriple q = generalized_krein(params, spec);
            if (krein_json) {
                out << report::krein_json(params, spec, q).dump(2) << '\n';
            } else {
                out << report::krein_text(params, spec, q);
            }
            return 0;
        }

        if (*abs_power) {
            const SrgParams params = validate_params(abs_tuple.n, abs_tuple.p, abs_tuple.a, abs_tuple.c,
                                                     {.require_counting_identity = !abs_no_counting});
            const AbsPowerCoords coords = abs_power_coords(params, abs_x);
            if (abs_json) {
                out << report::abs_power_json(params, coords).dump(2) << '\n';
            } else {
                out << "|A|^" << report::format_double(abs_x) << " = " << report::format_double(coords.alpha)
                    << " I + " << report::format_double(coords.beta) << " A + " << report::format_double(coords.gamma)
                    << " E1\n";
            }
            return 0;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {  // ParamError, UnknownGraph, BadPaleyModulus, index errors
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {  // SizeCapExceeded
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace srg::cli
