#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsteff/solver.hpp"

namespace gsteff {

/// Divided difference rho(x) = (f(x + g(f(x))) - f(x)) / g(f(x)), the
/// derivative surrogate of the g-Steffensen update; rho(x) -> f'(p) as
/// x -> p. nullopt when g(f(x)) = 0.
inline std::optional<double> rho(double x, const ScalarFn& f, const GFunction& g) {
    double fx = f(x);
    double s = g.eval(fx);
    if (!std::isfinite(s) || s == 0.0) return std::nullopt;
    return (f(x + s) - fx) / s;
}

struct RhoDeviation {
    double h;
    std::optional<double> deviation;  // |rho(p+h) - f'(p)|, nullopt if degenerate
};

/// Exhibits rho(x) -> f'(p): deviation of rho at p+h from the analytic f'(p),
/// for each offset in h_list.
inline std::vector<RhoDeviation> rho_limit_probe(const ScalarFn& f, const ScalarFn& df,
                                                 double root, const GFunction& g,
                                                 const std::vector<double>& h_list) {
    std::vector<RhoDeviation> out;
    double fp = df(root);
    for (double h : h_list) {
        auto r = rho(root + h, f, g);
        if (r && std::isfinite(*r))
            out.push_back({h, std::abs(*r - fp)});
        else
            out.push_back({h, std::nullopt});
    }
    return out;
}

/// Central difference of the iteration map phi at the root; Theorem-level
/// behavior is phi'(p) = 0. nullopt if either phi evaluation is degenerate.
inline std::optional<double> phi_derivative_probe(const ScalarFn& f, double root,
                                                  const GFunction& g, double h) {
    if (h <= 0.0) throw std::invalid_argument("phi_derivative_probe: h must be > 0");
    auto hi = iteration_map_phi(root + h, f, g);
    auto lo = iteration_map_phi(root - h, f, g);
    if (!hi || !lo) return std::nullopt;
    return (*hi - *lo) / (2.0 * h);
}

struct OrderEstimate {
    std::vector<std::pair<int, double>> per_triple;  // (n, rho_n)
    std::optional<double> pooled;                    // median of per_triple
    int usable_count = 0;
};

/// Empirical order of convergence from consecutive error triples,
/// rho_n = ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}|. Triples with any error at
/// machine noise (<= 1e-12) or pre-asymptotic (>= 1e-1) are dropped.
inline OrderEstimate empirical_order(const IterationTrace& tr, double root) {
    OrderEstimate est;
    std::vector<double> e;
    e.reserve(tr.iterates.size());
    for (const auto& it : tr.iterates) e.push_back(std::abs(it.x - root));

    auto usable = [](double v) { return v > 1e-12 && v < 1e-1; };
    for (std::size_t n = 1; n + 1 < e.size(); ++n) {
        if (!usable(e[n - 1]) || !usable(e[n]) || !usable(e[n + 1])) continue;
        double denom = std::log(e[n] / e[n - 1]);
        if (denom == 0.0) continue;
        double r = std::log(e[n + 1] / e[n]) / denom;
        if (!std::isfinite(r)) continue;
        est.per_triple.emplace_back(static_cast<int>(n), r);
    }
    est.usable_count = static_cast<int>(est.per_triple.size());
    if (est.usable_count > 0) {
        std::vector<double> vals;
        for (auto& [n, r] : est.per_triple) vals.push_back(r);
        std::sort(vals.begin(), vals.end());
        std::size_t k = vals.size();
        est.pooled = (k % 2 == 1) ? vals[k / 2] : 0.5 * (vals[k / 2 - 1] + vals[k / 2]);
    }
    return est;
}

/// Closed-form asymptotic error constant of the quadratic rate:
/// C = f''(p)/(2 f'(p)) * (1 + g'(0) f'(p)).
inline double asymptotic_constant(double fp, double fpp, double gprime0) {
    if (fp == 0.0)
        throw std::invalid_argument("asymptotic_constant: simple root requires f'(p) != 0");
    return fpp / (2.0 * fp) * (1.0 + gprime0 * fp);
}

/// e_{n+1}/e_n^2 at the last index where e_n sits in the asymptotic window
/// (1e-10, 1e-2) and e_{n+1} is still above machine noise. Sign preserved.
inline std::optional<double> empirical_constant(const IterationTrace& tr, double root) {
    std::optional<double> last;
    for (std::size_t n = 0; n + 1 < tr.iterates.size(); ++n) {
        double en = tr.iterates[n].x - root;
        double enext = tr.iterates[n + 1].x - root;
        if (std::abs(en) > 1e-10 && std::abs(en) < 1e-2 && std::abs(enext) > 1e-12)
            last = enext / (en * en);
    }
    return last;
}

/// Reference-root oracle: plain bisection, bracket invariant maintained,
/// final bracket width <= 2*tol. Throws when [a,b] does not bracket.
inline double bisection_oracle(const ScalarFn& f, double a, double b, double tol = 1e-14) {
    if (tol <= 0.0) throw std::invalid_argument("bisection_oracle: tol must be > 0");
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("bisection_oracle: no sign change on [a,b]");
    // bracket width underflows long before 200 halvings; the cap is a bound
    for (int i = 0; i < 200 && (b - a) > 2.0 * tol; ++i) {
        double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        double fm = f(m);
        if (fm == 0.0) return m;
        if (std::signbit(fa) != std::signbit(fm)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace gsteff
