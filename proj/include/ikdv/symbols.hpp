#pragma once

#include <functional>
#include <string>

#include "ikdv/field.hpp"
#include "ikdv/multiplier.hpp"

namespace ikdv {

/// Fourier multiplier on the spatial frequency variable.
///   bessel(s):    <xi>^s
///   riesz(s):     |xi|^s, with the xi = 0 weight set to 0 for s < 0
///                 (the mean is projected out instead of dividing by zero)
///   derivative(): i xi
///   smoothing(s, N): m(|xi|/N), the I_N operator
///   custom(fn):   any pointwise function of xi
class Symbol {
  public:
    static Symbol bessel(double s) {
        return Symbol("bessel(" + fmt_g(s) + ")",
                      [s](double xi) { return cdouble(std::pow(bracket(xi), s), 0.0); });
    }

    static Symbol riesz(double s) {
        return Symbol("riesz(" + fmt_g(s) + ")", [s](double xi) {
            if (xi == 0.0) return cdouble(s > 0.0 ? 0.0 : (s == 0.0 ? 1.0 : 0.0), 0.0);
            return cdouble(std::pow(std::abs(xi), s), 0.0);
        });
    }

    static Symbol derivative() {
        return Symbol("derivative", [](double xi) { return cdouble(0.0, xi); });
    }

    static Symbol smoothing(const MultiplierSpec& spec) {
        return Symbol("I_N(s=" + fmt_g(spec.s) + ",N=" + fmt_g(spec.N) + ")",
                      [spec](double xi) { return cdouble(i_weight(xi, spec), 0.0); });
    }

    static Symbol custom(std::string name, std::function<cdouble(double)> fn) {
        return Symbol(std::move(name), std::move(fn));
    }

    cdouble operator()(double xi) const { return fn_(xi); }
    const std::string& name() const { return name_; }

  private:
    Symbol(std::string name, std::function<cdouble(double)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    std::function<cdouble(double)> fn_;
};

/// Applies a Fourier multiplier. The Nyquist mode is zeroed afterwards so
/// Hermitian symmetry survives exactly.
inline Field apply_multiplier(const Field& f, const Symbol& sym) {
    const Grid1D& g = f.grid();
    std::vector<cdouble> c(f.coeffs());
    for (int j = 0; j < g.n; ++j) {
        cdouble w = sym(g.freq(j));
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw SingularSymbolError(sym.name() + " at xi = " + fmt_g(g.freq(j)));
        c[j] *= w;
    }
    c[g.nyquist_index()] = cdouble(0.0, 0.0);
    return Field::from_coefficients(g, std::move(c));
}

inline Field i_operator(const Field& f, const MultiplierSpec& spec) {
    return apply_multiplier(f, Symbol::smoothing(spec));
}

}  // namespace ikdv
