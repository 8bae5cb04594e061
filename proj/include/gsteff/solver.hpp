#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "gsteff/gfunctions.hpp"
#include "gsteff/types.hpp"

namespace gsteff {

namespace detail {

// Core of the g-Steffensen update with f(x) supplied by the caller, so the
// iteration driver can reuse the residual evaluation. `extra_evals` reports
// how many further f evaluations this call performed.
inline StepResult g_steffensen_step_fx(double x, double fx, const ScalarFn& f,
                                       const GFunction& g, double tol_residual,
                                       int* extra_evals = nullptr) {
    if (extra_evals) *extra_evals = 0;
    if (!std::isfinite(x) || !std::isfinite(fx)) return StepResult::non_finite();
    if (std::abs(fx) <= tol_residual) return StepResult::at_root(x);

    double s = g.eval(fx);
    if (!std::isfinite(s)) return StepResult::non_finite();
    if (s == 0.0) return StepResult::degenerate();

    double f2 = f(x + s);
    if (extra_evals) *extra_evals = 1;
    if (!std::isfinite(f2)) return StepResult::non_finite();

    // Compared to exact zero on purpose: a tiny nonzero d still yields a
    // productive step; only exact cancellation is unrecoverable.
    double d = f2 - fx;
    if (d == 0.0) return StepResult::degenerate();

    double next = x - s * fx / d;
    if (!std::isfinite(next)) return StepResult::non_finite();
    return StepResult::next(next);
}

}  // namespace detail

/// One Newton step x - f(x)/f'(x).
inline StepResult newton_step(double x, const ScalarFn& f, const ScalarFn& df,
                              double tol_residual = SolverConfig{}.tol_residual) {
    double fx = f(x);
    if (!std::isfinite(x) || !std::isfinite(fx)) return StepResult::non_finite();
    if (std::abs(fx) <= tol_residual) return StepResult::at_root(x);
    double dfx = df(x);
    if (!std::isfinite(dfx)) return StepResult::non_finite();
    if (dfx == 0.0) return StepResult::derivative_vanished();
    double next = x - fx / dfx;
    if (!std::isfinite(next)) return StepResult::non_finite();
    return StepResult::next(next);
}

/// One g-Steffensen step x - g(f(x))*f(x) / (f(x + g(f(x))) - f(x)).
/// The residual is checked before forming g(f(x)): at an exact root the
/// update is 0/0 and must report AtRoot, not DegenerateDenominator.
inline StepResult g_steffensen_step(double x, const ScalarFn& f, const GFunction& g,
                                    double tol_residual = SolverConfig{}.tol_residual) {
    return detail::g_steffensen_step_fx(x, f(x), f, g, tol_residual);
}

/// Classical Steffensen step: the identity-g special case, bit for bit.
inline StepResult steffensen_step(double x, const ScalarFn& f,
                                  double tol_residual = SolverConfig{}.tol_residual) {
    return g_steffensen_step(x, f, g_catalog()[0], tol_residual);
}

/// The iteration map phi(x) = x - f(x)/rho(x) from the local-convergence
/// analysis; algebraically identical to the g-Steffensen update where both
/// are defined, and exactly x at a root. nullopt on a degenerate rho.
inline std::optional<double> iteration_map_phi(double x, const ScalarFn& f,
                                               const GFunction& g) {
    double fx = f(x);
    if (fx == 0.0) return x;
    double s = g.eval(fx);
    if (!std::isfinite(s) || s == 0.0) return std::nullopt;
    double r = (f(x + s) - fx) / s;
    if (!std::isfinite(r) || r == 0.0) return std::nullopt;
    return x - fx / r;
}

struct MethodSpec {
    enum class Kind { Newton, Steffensen, GSteffensen };
    Kind kind;
    const GFunction* g = nullptr;  // GSteffensen only

    static MethodSpec newton() { return {Kind::Newton, nullptr}; }
    static MethodSpec steffensen() { return {Kind::Steffensen, nullptr}; }
    static MethodSpec g_steffensen(const GFunction& g) {
        return {Kind::GSteffensen, &g};
    }

    std::string id() const {
        switch (kind) {
            case Kind::Newton: return "newton";
            case Kind::Steffensen: return "steffensen";
            case Kind::GSteffensen: return "gsteffensen";
        }
        return "?";
    }
};

/// Drives a step formula from x0 and records the full history.
///
/// Check order per iterate: residual, finiteness, divergence bound, step
/// size, iteration cap; then one step. Residual before step size, so a run
/// that lands on the root reports ResidualMet even if the last step was tiny.
inline IterationTrace iterate(const MethodSpec& method, const std::string& problem_id,
                              const ScalarFn& f, const ScalarFn& df, double x0,
                              const SolverConfig& cfg = {}) {
    IterationTrace tr;
    tr.method_id = method.id();
    tr.problem_id = problem_id;
    if (method.kind == MethodSpec::Kind::GSteffensen) tr.g_id = method.g->id;
    if (method.kind == MethodSpec::Kind::Steffensen) tr.g_id = "identity";

    const GFunction* g =
        method.kind == MethodSpec::Kind::GSteffensen ? method.g : &g_catalog()[0];

    double x = x0;
    double fx = f(x0);
    tr.evals = 1;
    tr.iterates.push_back({0, x, fx});
    bool have_prev = false;
    double xprev = 0.0;
    int n = 0;

    for (;;) {
        if (!std::isfinite(x) || !std::isfinite(fx)) {
            tr.termination = Termination::NonFinite;
            break;
        }
        if (std::abs(fx) <= cfg.tol_residual) {
            tr.termination = Termination::ResidualMet;
            break;
        }
        if (std::abs(x) > cfg.divergence_bound) {
            tr.termination = Termination::Diverged;
            break;
        }
        if (have_prev && std::abs(x - xprev) <= cfg.tol_step * std::max(1.0, std::abs(xprev))) {
            tr.termination = Termination::StepMet;
            break;
        }
        if (n == cfg.max_iter) {
            tr.termination = Termination::MaxIterReached;
            break;
        }

        StepResult st;
        if (method.kind == MethodSpec::Kind::Newton) {
            double dfx = df(x);
            if (!std::isfinite(dfx)) {
                st = StepResult::non_finite();
            } else if (dfx == 0.0) {
                st = StepResult::derivative_vanished();
            } else {
                double next = x - fx / dfx;
                st = std::isfinite(next) ? StepResult::next(next)
                                         : StepResult::non_finite();
            }
        } else {
            int extra = 0;
            st = detail::g_steffensen_step_fx(x, fx, f, *g, cfg.tol_residual, &extra);
            tr.evals += extra;
        }

        if (st.kind == StepResult::Kind::NonFinite) {
            tr.termination = Termination::NonFinite;
            break;
        }
        if (st.kind == StepResult::Kind::DegenerateDenominator ||
            st.kind == StepResult::Kind::DerivativeVanished) {
            tr.termination = Termination::DegenerateDenominator;
            break;
        }

        xprev = x;
        have_prev = true;
        x = st.x;
        fx = f(x);
        ++tr.evals;
        ++n;
        tr.iterates.push_back({n, x, fx});
    }

    tr.final_x = x;
    return tr;
}

/// Maps a finished trace to the basin taxonomy. A run counts as converged
/// when the residual criterion fired, or when a step/denominator plateau (or
/// the iteration cap) was reached with the residual already at acceptance
/// level; the interval decides in- vs out-of-interval.
inline OutcomeClass classify_outcome(const IterationTrace& tr, double a, double b) {
    double res = std::abs(tr.final_residual());
    bool converged = false;
    switch (tr.termination) {
        case Termination::ResidualMet:
            converged = true;
            break;
        case Termination::StepMet:
        case Termination::DegenerateDenominator:
        case Termination::MaxIterReached:
            converged = std::isfinite(res) && res <= kAcceptResidual;
            break;
        case Termination::Diverged:
        case Termination::NonFinite:
            converged = false;
            break;
    }
    if (converged) {
        return (a <= tr.final_x && tr.final_x <= b) ? OutcomeClass::ConvergedInInterval
                                                    : OutcomeClass::ConvergedOutsideInterval;
    }
    if (tr.termination == Termination::DegenerateDenominator ||
        tr.termination == Termination::StepMet)
        return OutcomeClass::Stalled;
    return OutcomeClass::Diverged;
}

}  // namespace gsteff
