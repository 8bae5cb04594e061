#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gsteff {

using ScalarFn = std::function<double(double)>;

struct SolverConfig {
    double tol_residual = 1e-15;   // stop when |f(x_n)| <= tol_residual
    double tol_step = 1e-15;       // relative to max(1, |x_n|)
    int max_iter = 100;
    double divergence_bound = 1e8;
};

/// Outcome of applying one step formula at a point.
struct StepResult {
    enum class Kind {
        Next,                   // a finite next iterate was produced
        AtRoot,                 // |f(x)| <= tol_residual already held at the input
        DegenerateDenominator,  // g(f(x)) = 0 or f(x+s) - f(x) = 0 away from a root
        DerivativeVanished,     // Newton only: f'(x) = 0 away from a root
        NonFinite,              // some evaluation overflowed or produced NaN
    };
    Kind kind;
    double x = 0.0;  // valid for Next and AtRoot

    static StepResult next(double x) { return {Kind::Next, x}; }
    static StepResult at_root(double x) { return {Kind::AtRoot, x}; }
    static StepResult degenerate() { return {Kind::DegenerateDenominator, 0.0}; }
    static StepResult derivative_vanished() { return {Kind::DerivativeVanished, 0.0}; }
    static StepResult non_finite() { return {Kind::NonFinite, 0.0}; }
};

enum class Termination {
    ResidualMet,
    StepMet,
    MaxIterReached,
    Diverged,
    DegenerateDenominator,
    NonFinite,
};

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::ResidualMet: return "ResidualMet";
        case Termination::StepMet: return "StepMet";
        case Termination::MaxIterReached: return "MaxIterReached";
        case Termination::Diverged: return "Diverged";
        case Termination::DegenerateDenominator: return "DegenerateDenominator";
        case Termination::NonFinite: return "NonFinite";
    }
    return "?";
}

struct IterateRecord {
    int n;
    double x;
    double fx;
};

/// Full history of one solver run.
struct IterationTrace {
    std::string method_id;
    std::string problem_id;
    std::string g_id;  // empty for Newton
    std::vector<IterateRecord> iterates;
    long evals = 0;    // f evaluations actually performed
    Termination termination = Termination::MaxIterReached;
    double final_x = 0.0;

    int steps() const { return static_cast<int>(iterates.size()) - 1; }
    double final_residual() const { return iterates.back().fx; }
};

enum class OutcomeClass {
    ConvergedInInterval,
    ConvergedOutsideInterval,
    Diverged,
    Stalled,
};

inline const char* to_string(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::ConvergedInInterval: return "ConvergedInInterval";
        case OutcomeClass::ConvergedOutsideInterval: return "ConvergedOutsideInterval";
        case OutcomeClass::Diverged: return "Diverged";
        case OutcomeClass::Stalled: return "Stalled";
    }
    return "?";
}

// Residual level below which a stalled/plateaued run still counts as converged
// (the tables' 1e-9..1e-10 rows end this way).
inline constexpr double kAcceptResidual = 1e-8;

}  // namespace gsteff
