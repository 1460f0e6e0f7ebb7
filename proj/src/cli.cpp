#include "drh/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "drh/canon.hpp"
#include "drh/decider.hpp"
#include "drh/drhgraph.hpp"
#include "drh/hsolver.hpp"
#include "drh/kterm.hpp"
#include "drh/oracle.hpp"
#include "drh/pword.hpp"
#include "drh/randterm.hpp"

namespace drh {

namespace {

struct BenchRow {
    int m;
    uint64_t seed;
    double millis;
    bool equal;
};

// Least-squares slope of log(millis) against log(m) over the equal-verdict
// rows; no value with fewer than two usable points.
std::optional<double> fit_slope(const std::vector<BenchRow>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.equal) pts.emplace_back(std::log(static_cast<double>(r.m)),
                                      std::log(std::max(r.millis, 1e-3)));
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(pts.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equality, canonical forms and finite-semigroup checks for kappa-terms over DRH"};
    app.require_subcommand(1);

    std::string variety_str = "g";
    bool kbar = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--variety", variety_str, "group pseudovariety: triv, ab or g")
            ->check(CLI::IsMember({"triv", "ab", "g"}));
        cmd->add_flag("--kbar", kbar, "admit arbitrary (w+q) exponents in input terms");
    };

    // eq
    std::string term1, term2;
    bool want_witness = false;
    CLI::App* eq = app.add_subcommand("eq", "decide equality of two terms over DRH");
    add_common(eq);
    eq->add_flag("--witness", want_witness, "print the mismatch witness when unequal");
    eq->add_option("term1", term1)->required();
    eq->add_option("term2", term2)->required();

    // canon
    std::string canon_term;
    bool strict = false;
    CLI::App* canon_cmd = app.add_subcommand("canon", "print the canonical form of a term");
    add_common(canon_cmd);
    canon_cmd->add_flag("--strict-kappa", strict, "rewrite x^w into x^(w-1) x in the output");
    canon_cmd->add_option("term", canon_term)->required();

    // graph
    std::string graph_term;
    bool want_dot = false;
    bool want_trace = false;
    CLI::App* graph_cmd = app.add_subcommand("graph", "emit the graph of a term as DOT");
    add_common(graph_cmd);
    graph_cmd->add_flag("--dot", want_dot, "write Graphviz DOT (default)");
    graph_cmd->add_flag("--trace", want_trace, "dump the (i,a) -> factor table");
    graph_cmd->add_option("term", graph_term)->required();

    // factor
    int factor_i = 0;
    std::string factor_a, factor_term;
    CLI::App* factor_cmd = app.add_subcommand("factor", "print the factor of the overline word");
    add_common(factor_cmd);
    factor_cmd->add_option("i", factor_i, "tail position")->required();
    factor_cmd->add_option("a", factor_a, "prefix letter (a-z or #)")->required();
    factor_cmd->add_option("term", factor_term)->required();

    // oracle
    std::string oracle_file, oracle_t1, oracle_t2;
    long budget = 100000;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "search a finite semigroup for a counterexample");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--semigroup", oracle_file, "Cayley table file")->required();
    oracle_cmd->add_option("--budget", budget, "assignment budget");
    oracle_cmd->add_option("term1", oracle_t1)->required();
    oracle_cmd->add_option("term2", oracle_t2)->required();

    // bench
    std::vector<int> sizes;
    uint64_t seed = 0;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time decisions on random terms");
    bench_cmd->add_option("--variety", variety_str, "group pseudovariety: triv, ab or g")
        ->check(CLI::IsMember({"triv", "ab", "g"}));
    bench_cmd->add_option("--sizes", sizes, "term lengths")->delimiter(',');
    bench_cmd->add_option("--seed", seed, "generator seed")->required();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        HSolver solver(parse_variety(variety_str));

        if (*eq) {
            Verdict v = equal_drh(parse_kterm(term1, kbar), parse_kterm(term2, kbar), solver);
            out << (v.equal ? "equal" : "unequal") << "\n";
            if (!v.equal && want_witness) out << "witness: " << *v.witness << "\n";
            return v.equal ? 0 : 1;
        }
        if (*canon_cmd) {
            KTermPtr cf = canonical_form(parse_kterm(canon_term, kbar), solver);
            if (strict) cf = strict_kappa(cf);
            out << print_kterm(cf) << "\n";
            return 0;
        }
        if (*graph_cmd) {
            BuildTrace trace;
            DrhAutomaton a = build_graph(parse_kterm(graph_term, kbar), solver,
                                         want_trace ? &trace : nullptr);
            out << to_dot(a);
            if (want_trace)
                for (auto& [key, word] : trace.factors)
                    out << "# (" << key.first << "," << key.second << ") -> " << word << "\n";
            return 0;
        }
        if (*factor_cmd) {
            if (factor_a.size() != 1) throw std::invalid_argument("factor letter must be a single character");
            PWord wbar = build_overline(parse_kterm(factor_term, kbar));
            out << to_debug_string(factor(wbar, factor_i, factor_a[0])) << "\n";
            return 0;
        }
        if (*oracle_cmd) {
            std::ifstream in(oracle_file);
            if (!in) throw std::invalid_argument("cannot open " + oracle_file);
            FiniteSemigroup s = load_semigroup(in);
            auto cex = find_counterexample(s, parse_kterm(oracle_t1, kbar),
                                           parse_kterm(oracle_t2, kbar), solver.variety(), budget);
            if (cex) {
                out << "counterexample:";
                for (auto& [c, e] : *cex) out << " " << c << "=" << s.name(e);
                out << "\n";
            } else {
                out << "no counterexample within budget\n";
            }
            return 0;
        }
        if (*bench_cmd) {
            std::vector<BenchRow> rows;
            out << "m,seed,millis,verdict\n";
            for (size_t idx = 0; idx < sizes.size(); ++idx) {
                int m = sizes[idx];
                for (int variant = 0; variant < 2; ++variant) {
                    uint64_t row_seed = seed + idx * 2 + static_cast<uint64_t>(variant);
                    std::mt19937_64 rng(row_seed);
                    TermGenOptions opt;
                    opt.target_nodes = m;
                    opt.alphabet = 3;
                    opt.max_power_nodes = 8;
                    KTermPtr u = random_kterm(rng, opt);
                    KTermPtr v = variant == 0 ? random_equal_variant(rng, u)
                                              : random_kterm(rng, opt);
                    auto t0 = std::chrono::steady_clock::now();
                    Verdict verdict = equal_drh(u, v, solver);
                    auto t1 = std::chrono::steady_clock::now();
                    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                    rows.push_back({m, row_seed, ms, verdict.equal});
                    out << m << "," << row_seed << "," << std::fixed << std::setprecision(3)
                        << ms << "," << (verdict.equal ? "equal" : "unequal") << "\n";
                }
            }
            auto slope = fit_slope(rows);
            if (slope)
                out << "slope: " << std::fixed << std::setprecision(2) << *slope << "\n";
            else
                out << "slope: n/a\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace drh
