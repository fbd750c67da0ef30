#pragma once

#include "ikdv/field.hpp"
#include "ikdv/symbols.hpp"

namespace ikdv {
namespace detail {

/// Core of the weighted convolution, on raw coefficient arrays in DFT order.
inline void bilinear_minus_coeffs(const Grid1D& grid, const std::vector<cdouble>& fc,
                                  const std::vector<cdouble>& gc, double s,
                                  std::vector<cdouble>& out) {
    const int n = grid.n;
    const int half = n / 2;
    const double dxi = grid.dxi();
    out.assign(n, cdouble(0.0, 0.0));
    for (int k1 = -half; k1 < half; ++k1) {
        cdouble fv = fc[grid.index_of_k(k1)];
        if (fv == cdouble(0.0, 0.0)) continue;
        for (int k2 = -half; k2 < half; ++k2) {
            int k = k1 + k2;
            if (k < -half || k >= half) continue;
            cdouble gv = gc[grid.index_of_k(k2)];
            if (gv == cdouble(0.0, 0.0)) continue;
            double w = (k1 == k2) ? (s == 0.0 ? 1.0 : 0.0)
                                  : std::pow(dxi * std::abs(k1 - k2), s);
            out[grid.index_of_k(k)] += w * fv * gv;
        }
    }
    for (auto& v : out) v *= dxi;
}

}  // namespace detail

/// The symmetric bilinear symbol operator
///   (I_-^s(f, g))^(xi) = sum_{xi1 + xi2 = xi} |xi1 - xi2|^s fhat(xi1) ghat(xi2) dxi,
/// a weighted convolution over the frequency lattice. Pairs are taken in the
/// non-periodized sense (both xi1 and xi2 on the lattice, no wrap-around), so
/// the result matches the continuum convolution of band-limited data exactly;
/// output frequencies beyond the lattice are dropped. Direct O(n^2) sum.
inline Field bilinear_minus(const Field& f, const Field& g, double s) {
    f.require_same_grid(g);
    if (s < 0.0) throw SingularSymbolError("bilinear_minus: |xi1 - xi2|^s diverges on the diagonal for s < 0");
    std::vector<cdouble> out;
    detail::bilinear_minus_coeffs(f.grid(), f.coeffs(), g.coeffs(), s, out);
    return Field::from_coefficients(f.grid(), std::move(out));
}

}  // namespace ikdv
