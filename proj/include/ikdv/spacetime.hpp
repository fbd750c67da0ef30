#pragma once

#include <functional>
#include <vector>

#include "ikdv/field.hpp"
#include "ikdv/symbols.hpp"

namespace ikdv {

// Space-time convention, symmetric in both variables:
//   F u(xi_k, tau_m) = (dx dt / (2 pi)) sum_{j,l} u(x_j, t_l) exp(-i(xi_k x_j + tau_m t_l))
// with tau_m = 2 pi m / T_win for m in {-n_t/2, ..., n_t/2 - 1} and time
// samples t_l = t0 + l T_win / n_t (endpoint excluded). Parseval:
//   sum |u|^2 dx dt = sum |F u|^2 dxi dtau.

/// A trajectory sampled on an (x, t) lattice. Values are complex so that
/// plane-wave probes are representable; real trajectories keep the imaginary
/// part at zero and have Hermitian joint spectra.
class SpaceTimeField {
  public:
    SpaceTimeField() = default;

    static SpaceTimeField from_values(const Grid1D& g, double t0, double t_win, int n_t,
                                      std::vector<cdouble> values) {
        check_shape(g, t_win, n_t, values.size());
        SpaceTimeField f;
        f.grid_ = g;
        f.t0_ = t0;
        f.t_win_ = t_win;
        f.n_t_ = n_t;
        f.values_ = std::move(values);
        return f;
    }

    static SpaceTimeField zero(const Grid1D& g, double t0, double t_win, int n_t) {
        return from_values(g, t0, t_win, n_t,
                           std::vector<cdouble>(static_cast<std::size_t>(g.n) * n_t));
    }

    static SpaceTimeField from_function(const Grid1D& g, double t0, double t_win, int n_t,
                                        const std::function<cdouble(double, double)>& fn) {
        std::vector<cdouble> v(static_cast<std::size_t>(g.n) * n_t);
        double dt = t_win / n_t;
        for (int l = 0; l < n_t; ++l)
            for (int j = 0; j < g.n; ++j) v[idx(g.n, l, j)] = fn(g.x(j), t0 + l * dt);
        return from_values(g, t0, t_win, n_t, std::move(v));
    }

    static SpaceTimeField from_slices(const Grid1D& g, double t0, double t_win,
                                      const std::vector<Field>& slices) {
        int n_t = static_cast<int>(slices.size());
        std::vector<cdouble> v(static_cast<std::size_t>(g.n) * n_t);
        for (int l = 0; l < n_t; ++l) {
            if (slices[l].grid() != g) throw GridMismatchError("from_slices: slice grid differs");
            for (int j = 0; j < g.n; ++j) v[idx(g.n, l, j)] = slices[l].samples()[j];
        }
        return from_values(g, t0, t_win, n_t, std::move(v));
    }

    const Grid1D& grid() const { return grid_; }
    int n_t() const { return n_t_; }
    double t0() const { return t0_; }
    double t_win() const { return t_win_; }
    double t_end() const { return t0_ + t_win_; }
    double dt() const { return t_win_ / n_t_; }
    double dtau() const { return two_pi / t_win_; }
    double time(int l) const { return t0_ + l * dt(); }
    double tau(int m) const { return dtau() * (m < n_t_ / 2 ? m : m - n_t_); }
    double max_tau() const { return dtau() * (n_t_ / 2); }

    const std::vector<cdouble>& values() const { return values_; }
    cdouble value(int l, int j) const { return values_[idx(grid_.n, l, j)]; }

    /// Joint spectrum, computed on first use and cached. Not synchronized:
    /// share across threads only after calling this once.
    const std::vector<cdouble>& spectrum() const {
        if (!spectrum_valid_) {
            spectrum_ = transform(values_);
            spectrum_valid_ = true;
        }
        return spectrum_;
    }
    cdouble spectrum_at(int m, int j) const { return spectrum()[idx(grid_.n, m, j)]; }

    Field slice(int l) const {
        std::vector<double> s(grid_.n);
        for (int j = 0; j < grid_.n; ++j) s[j] = value(l, j).real();
        return Field::from_samples(grid_, std::move(s));
    }

    double abs_max() const {
        double m = 0.0;
        for (const auto& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    double max_imag() const {
        double m = 0.0;
        for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
        return m;
    }

    /// Worst relative Hermitian asymmetry of the joint spectrum.
    double hermitian_defect() const {
        const auto& c = spectrum();
        const int n = grid_.n;
        double scale = 0.0, worst = 0.0;
        for (const auto& v : c) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) return 0.0;
        for (int m = 0; m < n_t_; ++m) {
            int mm = (n_t_ - m) % n_t_;
            if (m == n_t_ / 2 || mm == n_t_ / 2) continue;
            for (int j = 1; j < n / 2; ++j) {
                cdouble d = c[idx(n, m, j)] - std::conj(c[idx(n, mm, n - j)]);
                worst = std::max(worst, std::abs(d));
            }
        }
        return worst / scale;
    }

    friend SpaceTimeField operator*(double a, SpaceTimeField f) {
        for (auto& v : f.values_) v *= a;
        f.spectrum_valid_ = false;
        return f;
    }

    static std::size_t idx(int n, int l, int j) {
        return static_cast<std::size_t>(l) * n + j;
    }

  private:
    static void check_shape(const Grid1D& g, double t_win, int n_t, std::size_t sz) {
        if (!(t_win > 0.0)) throw ConfigError("spacetime: window length must be positive");
        if (n_t < 2 || !detail::is_pow2(static_cast<std::size_t>(n_t)))
            throw ConfigError("spacetime: n_t must be a power of two >= 2, got " +
                              std::to_string(n_t));
        if (sz != static_cast<std::size_t>(g.n) * n_t)
            throw GridMismatchError("spacetime: value array shape mismatch");
    }

    std::vector<cdouble> transform(const std::vector<cdouble>& vals) const {
        const int n = grid_.n;
        std::vector<cdouble> c(vals);
        // rows: x -> xi
        std::vector<cdouble> buf(n);
        for (int l = 0; l < n_t_; ++l) {
            std::copy(c.begin() + idx(n, l, 0), c.begin() + idx(n, l + 1, 0), buf.begin());
            fft(buf);
            std::copy(buf.begin(), buf.end(), c.begin() + idx(n, l, 0));
        }
        // columns: t -> tau
        std::vector<cdouble> col(n_t_);
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n_t_; ++l) col[l] = c[idx(n, l, j)];
            fft(col);
            for (int m = 0; m < n_t_; ++m) c[idx(n, m, j)] = col[m];
        }
        // physical scaling and lattice-origin phases
        const double scale = grid_.dx() * dt() / two_pi;
        for (int m = 0; m < n_t_; ++m) {
            cdouble tphase = std::polar(1.0, -tau(m) * t0_);
            for (int j = 0; j < n; ++j) {
                double sgn = (j & 1) ? -1.0 : 1.0;  // exp(-i xi_k x_0), x_0 = -L/2
                c[idx(n, m, j)] *= scale * sgn * tphase;
            }
        }
        return c;
    }

    Grid1D grid_;
    double t0_ = 0.0;
    double t_win_ = 0.0;
    int n_t_ = 0;
    std::vector<cdouble> values_;
    mutable std::vector<cdouble> spectrum_;
    mutable bool spectrum_valid_ = false;
};

/// Builds the field back from a joint spectrum (inverse of spectrum()).
inline SpaceTimeField spacetime_from_spectrum(const Grid1D& g, double t0, double t_win, int n_t,
                                              std::vector<cdouble> spec) {
    const int n = g.n;
    if (spec.size() != static_cast<std::size_t>(n) * n_t)
        throw GridMismatchError("from_spectrum: shape mismatch");
    const double dxi = two_pi / g.length;
    const double dtau = two_pi / t_win;
    // undo scaling/phases, then inverse DFT along both axes
    const double scale = dxi * dtau / two_pi;
    for (int m = 0; m < n_t; ++m) {
        double tau = dtau * (m < n_t / 2 ? m : m - n_t);
        cdouble tphase = std::polar(1.0, tau * t0);
        for (int j = 0; j < n; ++j) {
            double sgn = (j & 1) ? -1.0 : 1.0;
            spec[SpaceTimeField::idx(n, m, j)] *= scale * sgn * tphase;
        }
    }
    std::vector<cdouble> col(n_t);
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n_t; ++m) col[m] = spec[SpaceTimeField::idx(n, m, j)];
        ifft(col);
        for (int l = 0; l < n_t; ++l) spec[SpaceTimeField::idx(n, l, j)] = col[l] * double(n_t);
    }
    std::vector<cdouble> row(n);
    for (int l = 0; l < n_t; ++l) {
        std::copy(spec.begin() + SpaceTimeField::idx(n, l, 0),
                  spec.begin() + SpaceTimeField::idx(n, l + 1, 0), row.begin());
        ifft(row);
        for (int j = 0; j < n; ++j)
            spec[SpaceTimeField::idx(n, l, j)] = row[j] * double(n);
    }
    return SpaceTimeField::from_values(g, t0, t_win, n_t, std::move(spec));
}

/// Pointwise multiplier in the joint Fourier variables (xi, tau).
inline SpaceTimeField apply_st_multiplier(const SpaceTimeField& f,
                                          const std::function<cdouble(double, double)>& sym) {
    const Grid1D& g = f.grid();
    std::vector<cdouble> spec(f.spectrum());
    for (int m = 0; m < f.n_t(); ++m) {
        double tau = f.tau(m);
        for (int j = 0; j < g.n; ++j) {
            cdouble w = sym(g.freq(j), tau);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                throw SingularSymbolError("space-time symbol at (xi, tau) = (" +
                                          fmt_g(g.freq(j)) + ", " + fmt_g(tau) + ")");
            spec[SpaceTimeField::idx(g.n, m, j)] *= w;
        }
    }
    return spacetime_from_spectrum(g, f.t0(), f.t_win(), f.n_t(), std::move(spec));
}

/// The weight <tau - xi^3>^b as a space-time symbol.
inline std::function<cdouble(double, double)> lambda_weight(double b) {
    return [b](double xi, double tau) {
        return cdouble(std::pow(bracket(tau - xi * xi * xi), b), 0.0);
    };
}

/// Slice-wise spatial multiplier (acts in xi only, pointwise in t).
inline SpaceTimeField apply_x_multiplier(const SpaceTimeField& f, const Symbol& sym) {
    const Grid1D& g = f.grid();
    const int n = g.n;
    std::vector<cdouble> vals(f.values());
    std::vector<cdouble> weights(n);
    for (int j = 0; j < n; ++j) {
        weights[j] = sym(g.freq(j));
        if (!std::isfinite(weights[j].real()) || !std::isfinite(weights[j].imag()))
            throw SingularSymbolError(sym.name() + " at xi = " + fmt_g(g.freq(j)));
    }
    std::vector<cdouble> row(n);
    for (int l = 0; l < f.n_t(); ++l) {
        std::copy(vals.begin() + SpaceTimeField::idx(n, l, 0),
                  vals.begin() + SpaceTimeField::idx(n, l + 1, 0), row.begin());
        fft(row);
        for (int j = 0; j < n; ++j) row[j] *= weights[j];
        row[g.nyquist_index()] = cdouble(0.0, 0.0);
        ifft(row);
        std::copy(row.begin(), row.end(), vals.begin() + SpaceTimeField::idx(n, l, 0));
    }
    return SpaceTimeField::from_values(g, f.t0(), f.t_win(), f.n_t(), std::move(vals));
}

/// Truncates the spatial spectrum of every slice to |k| <= fraction * n/2.
inline SpaceTimeField x_truncate(const SpaceTimeField& f, double fraction) {
    const Grid1D& g = f.grid();
    int kc = static_cast<int>(fraction * (g.n / 2));
    return apply_x_multiplier(f, Symbol::custom("truncate", [&g, kc](double xi) {
        double kd = xi / g.dxi();
        int k = static_cast<int>(std::lround(kd));
        return cdouble(std::abs(k) <= kc ? 1.0 : 0.0, 0.0);
    }));
}

/// Pointwise product of values.
inline SpaceTimeField st_product(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid() != b.grid() || a.n_t() != b.n_t() || a.t0() != b.t0() || a.t_win() != b.t_win())
        throw GridMismatchError("st_product: incompatible space-time lattices");
    std::vector<cdouble> v(a.values());
    const auto& bv = b.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= bv[i];
    return SpaceTimeField::from_values(a.grid(), a.t0(), a.t_win(), a.n_t(), std::move(v));
}

}  // namespace ikdv
