#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ikdv/util.hpp"

namespace ikdv {
namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Twiddle factors and bit-reversal permutation for one power-of-two size.
struct FftTables {
    std::size_t n = 0;
    std::vector<std::size_t> rev;
    std::vector<cdouble> w;  // forward twiddles, w[j] = exp(-2*pi*i*j/n), j < n/2

    explicit FftTables(std::size_t size) : n(size), rev(size), w(size / 2) {
        std::size_t logn = 0;
        while ((std::size_t(1) << logn) < n) ++logn;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < logn; ++b)
                if (i & (std::size_t(1) << b)) r |= std::size_t(1) << (logn - 1 - b);
            rev[i] = r;
        }
        for (std::size_t j = 0; j < n / 2; ++j) {
            double ang = -two_pi * static_cast<double>(j) / static_cast<double>(n);
            w[j] = cdouble(std::cos(ang), std::sin(ang));
        }
    }
};

inline std::shared_ptr<const FftTables> fft_tables(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const FftTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const FftTables>(n);
    cache.emplace(n, t);
    return t;
}

/// In-place radix-2 DIT transform. inverse=false: X_k = sum_j x_j e^{-2pi i jk/n}
/// (no scaling); inverse=true conjugates twiddles, still unscaled.
inline void fft_pow2(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    auto tables = fft_tables(n);
    const auto& rev = tables->rev;
    const auto& w = tables->w;
    for (std::size_t i = 0; i < n; ++i)
        if (i < rev[i]) std::swap(a[i], a[rev[i]]);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cdouble tw = w[j * stride];
                if (inverse) tw = std::conj(tw);
                cdouble u = a[start + j];
                cdouble v = a[start + j + len / 2] * tw;
                a[start + j] = u + v;
                a[start + j + len / 2] = u - v;
            }
        }
    }
}

/// Chirp arrays for Bluestein's algorithm at one (non power-of-two) size.
struct BluesteinTables {
    std::size_t n = 0;
    std::size_t m = 0;                  // padded power-of-two size
    std::vector<cdouble> chirp;         // exp(-i*pi*j^2/n)
    std::vector<cdouble> kernel_fft;    // FFT of the padded conjugate chirp

    explicit BluesteinTables(std::size_t size) : n(size), m(next_pow2(2 * size - 1)) {
        chirp.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            // j^2 mod 2n keeps the phase argument small for large sizes
            std::size_t q = (j * j) % (2 * n);
            double ang = -pi * static_cast<double>(q) / static_cast<double>(n);
            chirp[j] = cdouble(std::cos(ang), std::sin(ang));
        }
        std::vector<cdouble> k(m, cdouble(0.0, 0.0));
        k[0] = std::conj(chirp[0]);
        for (std::size_t j = 1; j < n; ++j) {
            k[j] = std::conj(chirp[j]);
            k[m - j] = std::conj(chirp[j]);
        }
        fft_pow2(k, false);
        kernel_fft = std::move(k);
    }
};

inline std::shared_ptr<const BluesteinTables> bluestein_tables(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const BluesteinTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const BluesteinTables>(n);
    cache.emplace(n, t);
    return t;
}

inline void fft_bluestein(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    auto tables = bluestein_tables(n);
    const std::size_t m = tables->m;
    std::vector<cdouble> b(m, cdouble(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        cdouble c = tables->chirp[j];
        if (inverse) c = std::conj(c);
        b[j] = a[j] * c;
    }
    fft_pow2(b, false);
    if (!inverse) {
        for (std::size_t j = 0; j < m; ++j) b[j] *= tables->kernel_fft[j];
    } else {
        for (std::size_t j = 0; j < m; ++j) b[j] *= std::conj(tables->kernel_fft[j]);
    }
    fft_pow2(b, true);
    double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) {
        cdouble c = tables->chirp[j];
        if (inverse) c = std::conj(c);
        a[j] = b[j] * c * scale;
    }
}

}  // namespace detail

/// Unscaled forward DFT: X_k = sum_j x_j exp(-2 pi i jk / n).
inline void fft(std::vector<cdouble>& a) {
    if (detail::is_pow2(a.size()))
        detail::fft_pow2(a, false);
    else
        detail::fft_bluestein(a, false);
}

/// True inverse of fft(): includes the 1/n factor.
inline void ifft(std::vector<cdouble>& a) {
    if (detail::is_pow2(a.size()))
        detail::fft_pow2(a, true);
    else
        detail::fft_bluestein(a, true);
    double scale = 1.0 / static_cast<double>(a.size());
    for (auto& v : a) v *= scale;
}

}  // namespace ikdv
