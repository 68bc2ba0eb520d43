#pragma once

// Power-of-two FFT plus a Bluestein chirp transform for arbitrary lengths.
// Phases are reduced in exact integer arithmetic (n^2 mod 2N) before any
// trigonometry, so grid transforms stay accurate at large indices.

#include <complex>
#include <numbers>

#include "hua/arith.hpp"

namespace hua {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

// e(num/den) = exp(2 pi i num/den) with exact reduction of num mod den.
inline cplx unit_phase(i64 num, i64 den) {
    i64 m = mod_norm(num, den);
    double ang = two_pi * static_cast<double>(m) / static_cast<double>(den);
    return {std::cos(ang), std::sin(ang)};
}

inline cplx unit_phase128(i128 num, i64 den) {
    i64 m = mod_norm128(num, den);
    double ang = two_pi * static_cast<double>(m) / static_cast<double>(den);
    return {std::cos(ang), std::sin(ang)};
}

inline size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 FFT; sign=+1 gives sum x_n e(+nk/N).
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: length must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * two_pi / static_cast<double>(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// X_k = sum_{n<N} x_n e(sign * nk / N) for arbitrary N (Bluestein).
inline std::vector<cplx> dft_any(const std::vector<cplx>& x, int sign) {
    const size_t n = x.size();
    if (n == 0) return {};
    if ((n & (n - 1)) == 0) {
        auto a = x;
        fft_pow2(a, sign);
        return a;
    }
    const i64 N = static_cast<i64>(n);
    const size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0, 0)), b(m, cplx(0, 0));
    // chirp c_k = e(sign * k^2 / (2N)); nk = (n^2 + k^2 - (k-n)^2)/2
    auto chirp = [&](i64 k) { return unit_phase128(static_cast<i128>(sign) * k % (2 * N) * k, 2 * N); };
    for (i64 k = 0; k < N; ++k) a[static_cast<size_t>(k)] = x[static_cast<size_t>(k)] * chirp(k);
    for (i64 k = 0; k < N; ++k) {
        cplx c = std::conj(chirp(k));
        b[static_cast<size_t>(k)] = c;
        if (k > 0) b[m - static_cast<size_t>(k)] = c;
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    std::vector<cplx> out(n);
    for (i64 k = 0; k < N; ++k)
        out[static_cast<size_t>(k)] = a[static_cast<size_t>(k)] * chirp(k) / static_cast<double>(m);
    return out;
}

// Linear convolution of real arrays, zero-padded past a.size()+b.size()-1
// so no wraparound can alias counts.
inline std::vector<double> convolve_real(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const size_t out_n = a.size() + b.size() - 1;
    if (static_cast<double>(a.size()) * static_cast<double>(b.size()) < 65536.0) {
        std::vector<double> out(out_n, 0.0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    }
    const size_t m = next_pow2(out_n);
    std::vector<cplx> fa(m, cplx(0, 0)), fb(m, cplx(0, 0));
    for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft_pow2(fa, -1);
    fft_pow2(fb, -1);
    for (size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_pow2(fa, +1);
    std::vector<double> out(out_n);
    for (size_t i = 0; i < out_n; ++i) out[i] = fa[i].real() / static_cast<double>(m);
    return out;
}

}  // namespace hua
