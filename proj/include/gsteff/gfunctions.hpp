#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gsteff/types.hpp"

namespace gsteff {

/// A reparametrization function g for the g-Steffensen step. Each catalog
/// member vanishes at the origin and declares its derivative there.
struct GFunction {
    std::string id;
    ScalarFn eval;
    double gprime0;
    std::string display_name;
};

inline const std::vector<GFunction>& g_catalog() {
    static const std::vector<GFunction> cat = {
        {"identity", [](double x) { return x; }, 1.0, "x"},
        {"g1", [](double x) { return std::sin(x); }, 1.0, "sin(x)"},
        {"g2", [](double x) { return std::exp(x) - 1.0; }, 1.0, "e^x - 1"},
        {"g3", [](double x) { return x * x; }, 0.0, "x^2"},
        {"g4", [](double x) { return std::cos(x) - 1.0; }, 0.0, "cos(x) - 1"},
        {"g5", [](double x) { return std::tan(x); }, 1.0, "tan(x)"},
        {"g6", [](double x) { return std::exp(-x) - 1.0; }, -1.0, "e^-x - 1"},
    };
    return cat;
}

inline const GFunction* find_g(const std::string& id) {
    for (const auto& g : g_catalog())
        if (g.id == id) return &g;
    return nullptr;
}

struct GValidation {
    bool zero_at_origin = false;
    bool isolated_zero = false;
    double fd_gprime0 = 0.0;
    bool matches_declared = false;

    bool all_pass() const { return zero_at_origin && isolated_zero && matches_declared; }
};

/// Checks the hypotheses the catalog relies on: g(0) = 0, no other zero on a
/// log-spaced probe grid in [-0.5, 0.5] (a probe, not a proof), and the
/// declared g'(0) against a central difference.
inline GValidation validate_g(const GFunction& g) {
    GValidation v;
    v.zero_at_origin = std::abs(g.eval(0.0)) == 0.0;

    v.isolated_zero = true;
    const int points = 64;
    for (int i = 0; i < points; ++i) {
        // log-spaced from 0.5 down to 1e-6; below ~1e-8 the quadratic-order
        // members (g3, g4) underflow to an exact 0 in double
        double t = 0.5 * std::pow(1e-6 / 0.5, static_cast<double>(i) / (points - 1));
        for (double x : {t, -t}) {
            double y = g.eval(x);
            if (!std::isfinite(y) || y == 0.0) v.isolated_zero = false;
        }
    }

    const double h = 1e-6;
    v.fd_gprime0 = (g.eval(h) - g.eval(-h)) / (2.0 * h);
    v.matches_declared = std::isfinite(v.fd_gprime0) &&
                         std::abs(v.fd_gprime0 - g.gprime0) <= 1e-6;
    return v;
}

}  // namespace gsteff
