#pragma once

#include <algorithm>
#include <vector>

#include "ikdv/fft.hpp"
#include "ikdv/grid.hpp"
#include "ikdv/util.hpp"

namespace ikdv {

// Transform convention (symmetric 2-pi split, so that discrete norms
// approximate the continuum integrals with measure factors dx and
// dxi = 2 pi / L directly):
//   uhat(xi_k) = (dx / sqrt(2 pi)) sum_j u(x_j) exp(-i xi_k x_j)
//   u(x_j)     = (dxi / sqrt(2 pi)) sum_k uhat(xi_k) exp(+i xi_k x_j)
// Parseval: sum_j |u_j|^2 dx = sum_k |uhat_k|^2 dxi.
// Because x_0 = -L/2, the lattice phase exp(-i xi_k x_0) = (-1)^k (n even),
// which turns the plain DFT into this convention via an alternating sign.

namespace detail {

inline std::vector<cdouble> forward_coeffs(const Grid1D& g, const std::vector<cdouble>& samples) {
    std::vector<cdouble> c(samples);
    fft(c);
    const double scale = g.dx() / sqrt_two_pi;
    for (int j = 0; j < g.n; ++j) c[j] *= (j & 1) ? -scale : scale;
    return c;
}

inline std::vector<cdouble> inverse_samples(const Grid1D& g, const std::vector<cdouble>& coeffs) {
    std::vector<cdouble> s(coeffs);
    for (int j = 0; j < g.n; ++j)
        if (j & 1) s[j] = -s[j];
    ifft(s);
    const double scale = sqrt_two_pi * g.n / g.length;
    for (auto& v : s) v *= scale;
    return s;
}

}  // namespace detail

/// One real-valued spatial function, stored as collocation samples together
/// with its (Hermitian-symmetric) spectral coefficients.
class Field {
  public:
    Field() = default;

    static Field zero(const Grid1D& g) {
        Field f;
        f.grid_ = g;
        f.samples_.assign(g.n, 0.0);
        f.coeffs_.assign(g.n, cdouble(0.0, 0.0));
        return f;
    }

    static Field from_samples(const Grid1D& g, std::vector<double> samples) {
        if (static_cast<int>(samples.size()) != g.n)
            throw GridMismatchError("from_samples: size " + std::to_string(samples.size()) +
                                    " vs grid n " + std::to_string(g.n));
        Field f;
        f.grid_ = g;
        f.samples_ = std::move(samples);
        std::vector<cdouble> buf(f.samples_.begin(), f.samples_.end());
        f.coeffs_ = detail::forward_coeffs(g, buf);
        return f;
    }

    /// Builds from spectral data, projecting onto the Hermitian part so the
    /// samples come out real. The Nyquist mode keeps its real part only.
    static Field from_coefficients(const Grid1D& g, std::vector<cdouble> coeffs) {
        if (static_cast<int>(coeffs.size()) != g.n)
            throw GridMismatchError("from_coefficients: size mismatch");
        hermitianize(g, coeffs);
        Field f;
        f.grid_ = g;
        f.coeffs_ = std::move(coeffs);
        auto buf = detail::inverse_samples(g, f.coeffs_);
        f.samples_.resize(g.n);
        for (int j = 0; j < g.n; ++j) f.samples_[j] = buf[j].real();
        return f;
    }

    static Field sample(const Grid1D& g, const std::function<double(double)>& fn) {
        std::vector<double> s(g.n);
        for (int j = 0; j < g.n; ++j) s[j] = fn(g.x(j));
        return from_samples(g, std::move(s));
    }

    const Grid1D& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<cdouble>& coeffs() const { return coeffs_; }

    double l2_norm() const {
        double acc = 0.0;
        for (double v : samples_) acc += v * v;
        return std::sqrt(acc * grid_.dx());
    }

    double lp_norm(double p) const {
        if (p < 1.0) throw ConfigError("lp_norm: p must be >= 1");
        if (std::isinf(p)) return linf_norm();
        double acc = 0.0;
        for (double v : samples_) acc += std::pow(std::abs(v), p);
        return std::pow(acc * grid_.dx(), 1.0 / p);
    }

    double linf_norm() const {
        double m = 0.0;
        for (double v : samples_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest |coeff| relative Hermitian-asymmetry; 0 for exactly real data.
    double hermitian_defect() const {
        double worst = 0.0, scale = 0.0;
        for (int j = 0; j < grid_.n; ++j) scale = std::max(scale, std::abs(coeffs_[j]));
        if (scale == 0.0) return 0.0;
        for (int j = 1; j < grid_.n / 2; ++j) {
            cdouble d = coeffs_[j] - std::conj(coeffs_[grid_.n - j]);
            worst = std::max(worst, std::abs(d));
        }
        worst = std::max(worst, std::abs(coeffs_[0].imag()));
        return worst / scale;
    }

    Field& operator+=(const Field& o) {
        require_same_grid(o);
        for (int j = 0; j < grid_.n; ++j) {
            samples_[j] += o.samples_[j];
            coeffs_[j] += o.coeffs_[j];
        }
        return *this;
    }
    Field& operator-=(const Field& o) {
        require_same_grid(o);
        for (int j = 0; j < grid_.n; ++j) {
            samples_[j] -= o.samples_[j];
            coeffs_[j] -= o.coeffs_[j];
        }
        return *this;
    }
    Field& operator*=(double a) {
        for (int j = 0; j < grid_.n; ++j) {
            samples_[j] *= a;
            coeffs_[j] *= a;
        }
        return *this;
    }

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double a, Field f) { return f *= a; }

    void require_same_grid(const Field& o) const {
        if (grid_ != o.grid_) throw GridMismatchError("fields on different grids");
    }

    static void hermitianize(const Grid1D& g, std::vector<cdouble>& c) {
        c[0] = cdouble(c[0].real(), 0.0);
        c[g.nyquist_index()] = cdouble(c[g.nyquist_index()].real(), 0.0);
        for (int j = 1; j < g.n / 2; ++j) {
            cdouble avg = 0.5 * (c[j] + std::conj(c[g.n - j]));
            c[j] = avg;
            c[g.n - j] = std::conj(avg);
        }
    }

  private:
    Grid1D grid_;
    std::vector<double> samples_;
    std::vector<cdouble> coeffs_;
};

/// Pointwise product of the collocation samples (no dealiasing).
inline Field pointwise_product(const Field& a, const Field& b) {
    a.require_same_grid(b);
    std::vector<double> s(a.grid().n);
    for (int j = 0; j < a.grid().n; ++j) s[j] = a.samples()[j] * b.samples()[j];
    return Field::from_samples(a.grid(), std::move(s));
}

}  // namespace ikdv
