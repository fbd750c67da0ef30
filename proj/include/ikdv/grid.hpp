#pragma once

#include <vector>

#include "ikdv/util.hpp"

namespace ikdv {

/// Uniform periodic grid on [-L/2, L/2) with n collocation points and the
/// frequency lattice xi_k = 2 pi k / L, k in {-n/2, ..., n/2 - 1}.
/// Coefficient storage uses DFT order: index j holds k = j for j < n/2 and
/// k = j - n otherwise; index n/2 is the unpaired Nyquist mode.
struct Grid1D {
    int n = 0;
    double length = 0.0;

    double dx() const { return length / n; }
    double dxi() const { return two_pi / length; }
    double x(int j) const { return -0.5 * length + j * dx(); }

    int k_of_index(int j) const { return j < n / 2 ? j : j - n; }
    int index_of_k(int k) const { return k >= 0 ? k : k + n; }
    int nyquist_index() const { return n / 2; }

    double freq(int j) const { return dxi() * k_of_index(j); }
    double max_freq() const { return dxi() * (n / 2); }

    std::vector<double> frequencies() const {
        std::vector<double> out(n);
        for (int j = 0; j < n; ++j) out[j] = freq(j);
        return out;
    }

    bool operator==(const Grid1D& other) const {
        return n == other.n && length == other.length;
    }
    bool operator!=(const Grid1D& other) const { return !(*this == other); }
};

inline Grid1D make_grid(int n, double length) {
    if (n < 8) throw ConfigError("grid: n must be at least 8, got " + std::to_string(n));
    if (n % 2 != 0) throw ConfigError("grid: n must be even, got " + std::to_string(n));
    if (!(length > 0.0)) throw ConfigError("grid: box length must be positive");
    return Grid1D{n, length};
}

}  // namespace ikdv
