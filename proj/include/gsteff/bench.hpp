#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsteff/problems.hpp"
#include "gsteff/solver.hpp"

namespace gsteff {

/// Shortest decimal representation that round-trips the double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

struct BenchCell {
    std::string problem_id;
    std::string method_id;  // newton | steffensen | gsteffensen
    std::string g_id;       // empty for baselines
    int n = 0;
    double final_x = 0.0;
    double residual = 0.0;
    Termination termination = Termination::MaxIterReached;
    OutcomeClass outcome = OutcomeClass::Diverged;
    long evals = 0;
    IterationTrace trace;
};

struct BenchReport {
    SolverConfig config;
    std::vector<BenchCell> cells;  // problem-major, then catalog g order
};

inline BenchCell run_cell(const Problem& p, const MethodSpec& m, const SolverConfig& cfg) {
    BenchCell cell;
    cell.trace = iterate(m, p.id, p.f, p.df, p.x0, cfg);
    cell.problem_id = p.id;
    cell.method_id = cell.trace.method_id;
    cell.g_id = m.kind == MethodSpec::Kind::GSteffensen ? m.g->id : "";
    cell.n = cell.trace.steps();
    cell.final_x = cell.trace.final_x;
    cell.residual = std::abs(cell.trace.final_residual());
    cell.termination = cell.trace.termination;
    cell.outcome = classify_outcome(cell.trace, p.a, p.b);
    cell.evals = cell.trace.evals;
    return cell;
}

/// One cell per (problem, method[, g]) combination, ordered problem-major,
/// baselines (newton, steffensen) before the g-Steffensen columns.
inline BenchReport run_matrix(const std::vector<std::string>& problem_ids,
                              const std::vector<std::string>& g_ids,
                              const std::vector<std::string>& methods,
                              const SolverConfig& cfg = {}) {
    // validate everything up front so a typo fails before any computation
    std::vector<const Problem*> probs;
    for (const auto& pid : problem_ids) {
        const Problem* p = find_problem(pid);
        if (!p) throw std::invalid_argument("unknown problem id: " + pid);
        probs.push_back(p);
    }
    std::vector<const GFunction*> gs;
    for (const auto& gid : g_ids) {
        const GFunction* g = find_g(gid);
        if (!g) throw std::invalid_argument("unknown g id: " + gid);
        gs.push_back(g);
    }
    bool want_newton = false, want_steff = false, want_gsteff = false;
    for (const auto& m : methods) {
        if (m == "newton") want_newton = true;
        else if (m == "steffensen") want_steff = true;
        else if (m == "gsteffensen") want_gsteff = true;
        else throw std::invalid_argument("unknown method: " + m);
    }

    BenchReport rep;
    rep.config = cfg;
    for (const Problem* p : probs) {
        if (want_newton) rep.cells.push_back(run_cell(*p, MethodSpec::newton(), cfg));
        if (want_steff) rep.cells.push_back(run_cell(*p, MethodSpec::steffensen(), cfg));
        if (want_gsteff)
            for (const GFunction* g : gs)
                rep.cells.push_back(run_cell(*p, MethodSpec::g_steffensen(*g), cfg));
    }
    return rep;
}

inline std::string cell_label(const BenchCell& c) {
    return c.method_id == "gsteffensen" ? c.g_id : c.method_id;
}

inline std::string render_csv(const BenchReport& rep) {
    std::ostringstream os;
    os << "problem,method,g,n,x_n,abs_f,termination,outcome,evals\n";
    for (const auto& c : rep.cells) {
        os << c.problem_id << ',' << c.method_id << ',' << c.g_id << ',' << c.n << ','
           << format_double(c.final_x) << ',' << format_double(c.residual) << ','
           << to_string(c.termination) << ',' << to_string(c.outcome) << ',' << c.evals
           << '\n';
    }
    return os.str();
}

inline std::string render_markdown(const BenchReport& rep) {
    std::ostringstream os;
    std::string current;
    for (const auto& c : rep.cells) {
        if (c.problem_id != current) {
            current = c.problem_id;
            const Problem* p = find_problem(current);
            if (!current.empty() && &c != &rep.cells.front()) os << '\n';
            os << "### " << current << ": f(x) = " << (p ? p->display : "?") << "\n\n";
            os << "| method | n | x_n | \\|f(x_n)\\| | termination | outcome |\n";
            os << "|---|---|---|---|---|---|\n";
        }
        os << "| " << cell_label(c) << " | " << c.n << " | " << format_double(c.final_x)
           << " | " << format_double(c.residual) << " | " << to_string(c.termination)
           << " | " << to_string(c.outcome) << " |\n";
    }
    return os.str();
}

inline nlohmann::ordered_json report_json(const BenchReport& rep) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"tol_residual", rep.config.tol_residual},
        {"tol_step", rep.config.tol_step},
        {"max_iter", rep.config.max_iter},
        {"divergence_bound", rep.config.divergence_bound},
    };
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.cells) {
        j["cells"].push_back({
            {"problem", c.problem_id},
            {"method", c.method_id},
            {"g", c.g_id},
            {"n", c.n},
            {"x_n", c.final_x},
            {"abs_f", c.residual},
            {"termination", to_string(c.termination)},
            {"outcome", to_string(c.outcome)},
            {"evals", c.evals},
        });
    }
    return j;
}

inline std::string render(const BenchReport& rep, const std::string& format) {
    if (format == "csv") return render_csv(rep);
    if (format == "markdown") return render_markdown(rep);
    if (format == "json") return report_json(rep).dump(2) + "\n";
    throw std::invalid_argument("unknown format: " + format);
}

struct Mismatch {
    std::string problem_id;
    std::string label;  // method or g id
    std::string reason;
    std::string citation;
};

struct VerifySummary {
    int matches = 0;
    std::vector<Mismatch> mismatches;
    int exit_code() const { return mismatches.empty() ? 0 : 1; }
};

inline bool outcome_matches(ExpectedOutcome exp, OutcomeClass got) {
    switch (exp) {
        case ExpectedOutcome::ConvergedInInterval:
            return got == OutcomeClass::ConvergedInInterval;
        case ExpectedOutcome::ConvergedOutsideInterval:
            return got == OutcomeClass::ConvergedOutsideInterval;
        case ExpectedOutcome::NotConvergent:
            return got == OutcomeClass::Diverged || got == OutcomeClass::Stalled;
        case ExpectedOutcome::NotConvergentInInterval:
            return got != OutcomeClass::ConvergedInInterval;
    }
    return false;
}

/// Checks every cell of a finished report against the recorded expectations.
/// Pure in the report: no solver is re-run. Iteration counts are never gated
/// (the source's stopping rule is unstated); tabulated roots gate at 1e-8 and
/// residuals at max(10x tabulated, 1e-8).
inline VerifySummary verify(const BenchReport& rep) {
    VerifySummary sum;
    for (const auto& c : rep.cells) {
        const Problem* p = find_problem(c.problem_id);
        if (!p) continue;
        std::string key = cell_label(c);
        auto it = p->expected.find(key);
        if (it == p->expected.end()) continue;  // cell the source is silent on
        const Expectation& exp = it->second;

        std::string reason;
        if (!outcome_matches(exp.outcome, c.outcome)) {
            reason = "outcome " + std::string(to_string(c.outcome)) + ", expected " +
                     to_string(exp.outcome);
        } else if (exp.table_x && std::abs(c.final_x - *exp.table_x) > 1e-8) {
            reason = "final_x " + format_double(c.final_x) + " vs tabulated " +
                     format_double(*exp.table_x);
        } else if (exp.table_absf &&
                   c.residual > std::max(10.0 * *exp.table_absf, 1e-8)) {
            reason = "residual " + format_double(c.residual) + " vs tabulated " +
                     format_double(*exp.table_absf);
        }

        if (reason.empty())
            ++sum.matches;
        else
            sum.mismatches.push_back({c.problem_id, key, reason, exp.citation});
    }
    return sum;
}

inline nlohmann::ordered_json verify_json(const VerifySummary& s) {
    nlohmann::ordered_json j;
    j["matches"] = s.matches;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& m : s.mismatches)
        j["mismatches"].push_back({{"problem", m.problem_id},
                                   {"cell", m.label},
                                   {"reason", m.reason},
                                   {"citation", m.citation}});
    j["exit_code"] = s.exit_code();
    return j;
}

inline std::vector<std::string> all_problem_ids() {
    std::vector<std::string> ids;
    for (const auto& p : paper_catalog()) ids.push_back(p.id);
    return ids;
}

inline std::vector<std::string> all_g_ids() {
    std::vector<std::string> ids;
    for (const auto& g : g_catalog()) ids.push_back(g.id);
    return ids;
}

}  // namespace gsteff
