// Command-line front end: solve single instances, run the benchmark matrix,
// verify against the recorded expectations, and expose the analysis probes.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsteff/bench.hpp"

namespace {

using namespace gsteff;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_solve(const std::string& problem_id, const std::string& method,
              const std::string& g_id, std::optional<double> x0,
              std::optional<double> tol, std::optional<int> max_iter, bool show_trace) {
    const Problem* p = find_problem(problem_id);
    if (!p) {
        std::cerr << "unknown problem: " << problem_id << "\n";
        return 2;
    }
    MethodSpec spec = MethodSpec::newton();
    if (method == "newton") {
        spec = MethodSpec::newton();
    } else if (method == "steffensen") {
        spec = MethodSpec::steffensen();
    } else if (method == "gsteffensen") {
        const GFunction* g = find_g(g_id.empty() ? "identity" : g_id);
        if (!g) {
            std::cerr << "unknown g: " << g_id << "\n";
            return 2;
        }
        spec = MethodSpec::g_steffensen(*g);
    } else {
        std::cerr << "unknown method: " << method << "\n";
        return 2;
    }

    SolverConfig cfg;
    if (tol) cfg.tol_residual = *tol;
    if (max_iter) cfg.max_iter = *max_iter;
    double start = x0 ? *x0 : p->x0;

    IterationTrace tr = iterate(spec, p->id, p->f, p->df, start, cfg);
    OutcomeClass oc = classify_outcome(tr, p->a, p->b);

    if (show_trace) {
        std::cout << "| n | x_n | |f(x_n)| |\n|---|---|---|\n";
        for (const auto& it : tr.iterates)
            std::cout << "| " << it.n << " | " << format_double(it.x) << " | "
                      << format_double(std::abs(it.fx)) << " |\n";
    }
    std::cout << "problem: " << p->id << "  f(x) = " << p->display << "\n"
              << "method: " << tr.method_id
              << (tr.g_id.empty() ? "" : " (g = " + tr.g_id + ")") << "\n"
              << "n: " << tr.steps() << "\n"
              << "x_n: " << format_double(tr.final_x) << "\n"
              << "|f(x_n)|: " << format_double(std::abs(tr.final_residual())) << "\n"
              << "evals: " << tr.evals << "\n"
              << "termination: " << to_string(tr.termination) << "\n"
              << "outcome: " << to_string(oc) << "\n";
    return 0;
}

int cmd_bench(const std::string& problems, const std::string& gs,
              const std::string& methods, const std::string& format,
              const std::string& out_path) {
    auto pids = problems == "all" ? all_problem_ids() : split_csv(problems);
    auto gids = gs == "all" ? all_g_ids() : split_csv(gs);
    auto mids = split_csv(methods);
    BenchReport rep = run_matrix(pids, gids, mids);
    std::string text = render(rep, format);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_verify(bool as_json) {
    BenchReport rep = run_matrix(all_problem_ids(), all_g_ids(),
                                 {"newton", "steffensen", "gsteffensen"});
    VerifySummary sum = verify(rep);
    if (as_json) {
        std::cout << verify_json(sum).dump(2) << "\n";
    } else {
        std::cout << "matches: " << sum.matches << "\n";
        for (const auto& m : sum.mismatches)
            std::cout << "MISMATCH " << m.problem_id << " " << m.label << ": "
                      << m.reason << " [" << m.citation << "]\n";
        std::cout << (sum.mismatches.empty() ? "verification passed"
                                             : "verification failed")
                  << "\n";
    }
    return sum.exit_code();
}

int cmd_probe(const std::string& kind, const std::string& problem_id,
              const std::string& g_id, double h) {
    const Problem* p = find_problem(problem_id);
    if (!p) {
        std::cerr << "unknown problem: " << problem_id << "\n";
        return 2;
    }
    const GFunction* g = find_g(g_id);
    if (!g) {
        std::cerr << "unknown g: " << g_id << "\n";
        return 2;
    }
    auto root = nearest_root(*p, p->x0);
    if (!root) {
        std::cerr << "no reference root available for " << p->id << "\n";
        return 2;
    }

    if (kind == "rho") {
        auto devs = rho_limit_probe(p->f, p->df, *root, *g, {1e-2, 1e-3, 1e-4});
        std::cout << "rho(p+h) vs f'(p) at p = " << format_double(*root) << "\n";
        for (const auto& d : devs)
            std::cout << "h = " << format_double(d.h) << "  deviation = "
                      << (d.deviation ? format_double(*d.deviation) : "degenerate")
                      << "\n";
        return 0;
    }
    if (kind == "phi") {
        auto v = phi_derivative_probe(p->f, *root, *g, h);
        std::cout << "phi'(p) central difference at h = " << format_double(h) << ": "
                  << (v ? format_double(*v) : "degenerate") << "\n";
        return 0;
    }
    if (kind == "order") {
        IterationTrace tr = iterate(MethodSpec::g_steffensen(*g), p->id, p->f, p->df,
                                    p->x0, {});
        // use the root the run actually approached
        auto near = nearest_root(*p, tr.final_x);
        OrderEstimate est = empirical_order(tr, near ? *near : *root);
        std::cout << "usable triples: " << est.usable_count << "\n";
        for (const auto& [n, r] : est.per_triple)
            std::cout << "n = " << n << "  rho_n = " << format_double(r) << "\n";
        std::cout << "pooled order: "
                  << (est.pooled ? format_double(*est.pooled) : "undefined") << "\n";
        return 0;
    }
    std::cerr << "unknown probe kind: " << kind << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g-Steffensen derivative-free root-finding benchmark"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run one method on one problem");
    std::string s_problem, s_method, s_g;
    std::optional<double> s_x0, s_tol;
    std::optional<int> s_maxit;
    bool s_trace = false;
    solve->add_option("--problem", s_problem)->required();
    solve->add_option("--method", s_method)->required();
    solve->add_option("--g", s_g);
    solve->add_option("--x0", s_x0);
    solve->add_option("--tol", s_tol);
    solve->add_option("--max-iter", s_maxit);
    solve->add_flag("--trace", s_trace);

    // bench
    auto* bench = app.add_subcommand("bench", "run the benchmark matrix");
    std::string b_problems = "all", b_gs = "all";
    std::string b_methods = "newton,steffensen,gsteffensen";
    std::string b_format = "markdown", b_out;
    bench->add_option("--problems", b_problems);
    bench->add_option("--gs", b_gs);
    bench->add_option("--methods", b_methods);
    bench->add_option("--format", b_format)
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    bench->add_option("--out", b_out);

    // verify
    auto* ver = app.add_subcommand("verify", "check the full matrix against expectations");
    std::string v_format;
    ver->add_option("--format", v_format)->check(CLI::IsMember({"json"}));

    // probe
    auto* probe = app.add_subcommand("probe", "analysis probes (rho, phi, order)");
    probe->set_help_flag("--help", "print help");  // free the -h short name for --h
    std::string pr_kind, pr_problem, pr_g = "identity";
    double pr_h = 1e-5;
    probe->add_option("--kind", pr_kind)->required()
        ->check(CLI::IsMember({"rho", "phi", "order"}));
    probe->add_option("--problem", pr_problem)->required();
    probe->add_option("--g", pr_g);
    probe->add_option("--h", pr_h);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(s_problem, s_method, s_g, s_x0, s_tol, s_maxit, s_trace);
        if (bench->parsed()) return cmd_bench(b_problems, b_gs, b_methods, b_format, b_out);
        if (ver->parsed()) return cmd_verify(v_format == "json");
        if (probe->parsed()) return cmd_probe(pr_kind, pr_problem, pr_g, pr_h);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
