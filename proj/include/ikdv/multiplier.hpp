#pragma once

#include <cmath>

#include "ikdv/util.hpp"

namespace ikdv {

/// The smoothing multiplier m(x): 1 for x <= 1, x^s for x >= 2, blended in
/// between by a quintic smoothstep in log2(x). For s <= 0 this is monotone
/// nonincreasing with 0 < m <= 1 and C^2 across the transition.
struct MultiplierSpec {
    double s = 0.0;   // regularity exponent, s <= 0
    double N = 1.0;   // cutoff frequency, N >= 1

    MultiplierSpec(double s_, double N_) : s(s_), N(N_) {
        if (s > 0.0) throw ConfigError("multiplier: s must be <= 0, got " + fmt_g(s));
        if (!(N >= 1.0)) throw ConfigError("multiplier: N must be >= 1, got " + fmt_g(N));
        if (!std::isfinite(s) || !std::isfinite(N)) throw ConfigError("multiplier: non-finite parameter");
    }
};

/// m(x) itself, independent of N (the operator applies it at x = |xi|/N).
inline double m_eval(double x, double s) {
    if (x < 0.0) throw ConfigError("m_eval: negative argument");
    if (x <= 1.0) return 1.0;
    if (x >= 2.0) return std::pow(x, s);
    double y = std::log2(x);  // in (0, 1)
    return std::pow(x, s * smoothstep5(y));
}

inline double m_eval(double x, const MultiplierSpec& spec) { return m_eval(x, spec.s); }

/// Weight applied to the coefficient at frequency xi by I_N.
inline double i_weight(double xi, const MultiplierSpec& spec) {
    return m_eval(std::abs(xi) / spec.N, spec.s);
}

}  // namespace ikdv
