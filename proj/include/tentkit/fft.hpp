#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tentkit/grid.hpp"

namespace tentkit {

using cd = std::complex<double>;

namespace detail {

// Iterative radix-2 Cooley-Tukey; n must be a power of two (guaranteed by
// GridSpec). Forward uses e^{-i...}; inverse divides by n.
inline void fft_pow2(cd* a, std::size_t n, bool inverse) {
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * std::numbers::pi / double(len) * (inverse ? 1.0 : -1.0);
        cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        for (std::size_t i = 0; i < n; ++i) a[i] /= double(n);
    }
}

} // namespace detail

/// In-place n-dimensional FFT over the grid's spatial lattice.
inline void fft_nd(const GridSpec& g, cd* a, bool inverse) {
    const std::size_t N = std::size_t(g.N);
    if (g.n == 1) {
        detail::fft_pow2(a, N, inverse);
        return;
    }
    // rows (contiguous), then columns
    for (std::size_t r = 0; r < N; ++r) detail::fft_pow2(a + r * N, N, inverse);
    std::vector<cd> col(N);
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t r = 0; r < N; ++r) col[r] = a[r * N + c];
        detail::fft_pow2(col.data(), N, inverse);
        for (std::size_t r = 0; r < N; ++r) a[r * N + c] = col[r];
    }
}

/// Forward transform of one real component of a spatial field.
inline std::vector<cd> fft_forward(const GridSpec& g, std::span<const double> vals, int d = 1, int c = 0) {
    const std::size_t P = g.points();
    std::vector<cd> out(P);
    for (std::size_t x = 0; x < P; ++x) out[x] = cd(vals[x * d + c], 0.0);
    fft_nd(g, out.data(), false);
    return out;
}

/// Inverse transform; writes the real part into one component of `vals`.
inline void fft_inverse_real(const GridSpec& g, std::vector<cd> spec, std::span<double> vals,
                             int d = 1, int c = 0) {
    fft_nd(g, spec.data(), true);
    const std::size_t P = g.points();
    for (std::size_t x = 0; x < P; ++x) vals[x * d + c] = spec[x].real();
}

/// Signed frequency index: k -> k for k < N/2, else k - N.
inline int signed_freq(int k, int N) { return k < N / 2 ? k : k - N; }

/// Tables shared by every spectral operation on a grid: |2 pi k'/L|^2 per
/// flattened frequency, and the gradient symbols i*omega_j with the Nyquist
/// component zeroed (an odd symbol has no real representative there).
struct FreqTable {
    GridSpec grid;
    std::vector<double> lam2;                  // |omega|^2
    std::array<std::vector<double>, 2> omega;  // omega_j (Nyquist zeroed)

    explicit FreqTable(const GridSpec& g) : grid(g) {
        g.validate();
        const std::size_t P = g.points();
        lam2.assign(P, 0.0);
        for (int j = 0; j < g.n; ++j) omega[j].assign(P, 0.0);
        const double base = 2.0 * std::numbers::pi / g.L;
        for (std::size_t f = 0; f < P; ++f) {
            auto kf = g.unflatten(f);
            double s = 0.0;
            for (int j = 0; j < g.n; ++j) {
                int k = signed_freq(kf[j], g.N);
                double w = base * k;
                s += w * w;
                omega[j][f] = (kf[j] == g.N / 2) ? 0.0 : w;
            }
            lam2[f] = s;
        }
    }
};

} // namespace tentkit
