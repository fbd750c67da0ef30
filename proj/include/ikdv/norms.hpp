#pragma once

#include <cmath>

#include "ikdv/field.hpp"
#include "ikdv/spacetime.hpp"

namespace ikdv {

// ---------------------------------------------------------------------------
// Spatial norms
// ---------------------------------------------------------------------------

/// H^s norm: (sum_k <xi_k>^{2s} |uhat_k|^2 dxi)^{1/2}. Coincides with the L^2
/// norm of the samples at s = 0 (Parseval is exact in this convention).
inline double sobolev_norm(const Field& f, double s) {
    const Grid1D& g = f.grid();
    double acc = 0.0;
    for (int j = 0; j < g.n; ++j) {
        double w = std::pow(bracket(g.freq(j)), 2.0 * s);
        acc += w * std::norm(f.coeffs()[j]);
    }
    return std::sqrt(acc * g.dxi());
}

inline double lebesgue_norm(const Field& f, double p) { return f.lp_norm(p); }

// ---------------------------------------------------------------------------
// Space-time norms
// ---------------------------------------------------------------------------

/// L^p_x(L^q_t): the L^q norm in time first, at each collocation point, then
/// the L^p norm in x. p or q may be infinity (lattice max).
inline double mixed_norm(const SpaceTimeField& f, double p, double q) {
    if (p < 1.0 || q < 1.0) throw ConfigError("mixed_norm: exponents must be >= 1");
    const int n = f.grid().n;
    const int nt = f.n_t();
    const double dt = f.dt();
    const double dx = f.grid().dx();
    const bool pinf = std::isinf(p), qinf = std::isinf(q);
    double outer = 0.0;
    for (int j = 0; j < n; ++j) {
        double inner = 0.0;
        if (qinf) {
            for (int l = 0; l < nt; ++l) inner = std::max(inner, std::abs(f.value(l, j)));
        } else {
            for (int l = 0; l < nt; ++l) inner += std::pow(std::abs(f.value(l, j)), q);
            inner = std::pow(inner * dt, 1.0 / q);
        }
        if (pinf)
            outer = std::max(outer, inner);
        else
            outer += std::pow(inner, p);
    }
    return pinf ? outer : std::pow(outer * dx, 1.0 / p);
}

/// X_{s,b} norm: weighted l^2 of the joint spectrum with weight
/// <tau - xi^3>^{2b} <xi>^{2s} and lattice measure dxi dtau.
inline double xsb_norm(const SpaceTimeField& f, double s, double b) {
    const Grid1D& g = f.grid();
    const auto& c = f.spectrum();
    double acc = 0.0;
    for (int m = 0; m < f.n_t(); ++m) {
        double tau = f.tau(m);
        for (int j = 0; j < g.n; ++j) {
            double xi = g.freq(j);
            double w = std::pow(bracket(tau - xi * xi * xi), 2.0 * b) *
                       std::pow(bracket(xi), 2.0 * s);
            acc += w * std::norm(c[SpaceTimeField::idx(g.n, m, j)]);
        }
    }
    return std::sqrt(acc * g.dxi() * f.dtau());
}

// ---------------------------------------------------------------------------
// Restriction-norm surrogate
// ---------------------------------------------------------------------------

enum class WindowProfile { quintic, box };

/// Temporal cutoff for the restriction surrogate: identically 1 on [0, delta],
/// quintic-smoothstep ramps on [-delta/2, 0] and [delta, 3 delta/2], zero
/// outside. The box profile is the sharp indicator of [0, delta].
inline double restriction_window(double t, double delta, WindowProfile profile) {
    if (profile == WindowProfile::box) return (t >= 0.0 && t <= delta) ? 1.0 : 0.0;
    if (t < -0.5 * delta || t > 1.5 * delta) return 0.0;
    if (t < 0.0) return smoothstep5(1.0 + 2.0 * t / delta);
    if (t <= delta) return 1.0;
    return smoothstep5(1.0 - 2.0 * (t - delta) / delta);
}

/// Upper surrogate for the restriction norm ||.||_{X_{s,b}(delta)}: the true
/// infimum over extensions is replaced by one canonical extension, the input
/// trajectory multiplied by a smooth temporal cutoff equal to 1 on [0, delta].
/// Monotone nondecreasing in delta by construction.
inline double xsb_restriction_norm(const SpaceTimeField& f, double s, double b, double delta,
                                   WindowProfile profile = WindowProfile::quintic) {
    if (!(delta > 0.0)) throw ConfigError("restriction norm: delta must be positive");
    if (f.t0() > 0.0 || f.t_end() < delta)
        throw ConfigError("restriction norm: trajectory window [" + fmt_g(f.t0()) + ", " +
                          fmt_g(f.t_end()) + "] does not cover [0, " + fmt_g(delta) + "]");
    std::vector<cdouble> v(f.values());
    const int n = f.grid().n;
    for (int l = 0; l < f.n_t(); ++l) {
        double w = restriction_window(f.time(l), delta, profile);
        for (int j = 0; j < n; ++j) v[SpaceTimeField::idx(n, l, j)] *= w;
    }
    auto windowed = SpaceTimeField::from_values(f.grid(), f.t0(), f.t_win(), f.n_t(), std::move(v));
    return xsb_norm(windowed, s, b);
}

// ---------------------------------------------------------------------------
// Tagged norm selector
// ---------------------------------------------------------------------------

struct NormSpec {
    enum class Kind { sobolev, lebesgue, mixed, xsb, xsb_restricted } kind;
    double s = 0.0, b = 0.0, p = 2.0, q = 2.0, delta = 1.0;
    WindowProfile profile = WindowProfile::quintic;

    static NormSpec sobolev(double s) { return {Kind::sobolev, s}; }
    static NormSpec lebesgue(double p) {
        NormSpec n{Kind::lebesgue};
        n.p = p;
        return n;
    }
    static NormSpec mixed(double p, double q) {
        NormSpec n{Kind::mixed};
        n.p = p;
        n.q = q;
        return n;
    }
    static NormSpec xsb(double s, double b) {
        NormSpec n{Kind::xsb};
        n.s = s;
        n.b = b;
        return n;
    }
    static NormSpec xsb_restricted(double s, double b, double delta,
                                   WindowProfile profile = WindowProfile::quintic) {
        NormSpec n{Kind::xsb_restricted};
        n.s = s;
        n.b = b;
        n.delta = delta;
        n.profile = profile;
        return n;
    }
};

inline double norm_of(const Field& f, const NormSpec& spec) {
    switch (spec.kind) {
        case NormSpec::Kind::sobolev: return sobolev_norm(f, spec.s);
        case NormSpec::Kind::lebesgue: return lebesgue_norm(f, spec.p);
        default: throw ConfigError("norm kind needs a space-time field");
    }
}

inline double norm_of(const SpaceTimeField& f, const NormSpec& spec) {
    switch (spec.kind) {
        case NormSpec::Kind::mixed: return mixed_norm(f, spec.p, spec.q);
        case NormSpec::Kind::xsb: return xsb_norm(f, spec.s, spec.b);
        case NormSpec::Kind::xsb_restricted:
            return xsb_restriction_norm(f, spec.s, spec.b, spec.delta, spec.profile);
        default: throw ConfigError("norm kind needs a spatial field");
    }
}

}  // namespace ikdv
