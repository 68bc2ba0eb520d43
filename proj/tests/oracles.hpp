#pragma once

// Test-only oracles, kept independent of the library paths they check:
// Euler-criterion Jacobi symbols, CRT root counting, quadratic O(N^2)
// transforms, and brute-force solution counts.

#include <random>

#include "hua/hua.hpp"

namespace oracle {

using hua::cplx;
using hua::i128;
using hua::i64;

// Jacobi symbol through factorization and Euler's criterion (the library
// uses binary reciprocity instead).
inline int jacobi_by_factorization(i64 a, i64 n) {
    int out = 1;
    for (auto [p, e] : hua::factorize(n).factors) {
        i64 ls = hua::pow_mod(hua::mod_norm(a, p), (p - 1) / 2, p);
        int s = ls == 0 ? 0 : (ls == 1 ? 1 : -1);
        for (int i = 0; i < e; ++i) {
            if (s == 0) return 0;
            out *= s;
        }
    }
    return out;
}

// sigma(b) by CRT: product of root counts modulo each prime power of W.
inline i64 root_count_crt(i64 b, i64 W) {
    i64 out = 1;
    for (auto [p, e] : hua::factorize(W).factors) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        i64 cnt = 0;
        for (i64 x = 1; x <= pe; ++x)
            if (hua::mod_norm(x * x - b, pe) == 0) ++cnt;
        out *= cnt;
    }
    return out;
}

inline std::vector<cplx> dft_direct(const std::vector<double>& f) {
    const i64 n = static_cast<i64>(f.size());
    std::vector<cplx> out(static_cast<size_t>(n));
    for (i64 r = 0; r < n; ++r) {
        cplx s(0, 0);
        for (i64 k = 0; k < n; ++k)
            s += f[static_cast<size_t>(k)] * hua::unit_phase128(static_cast<i128>(k) * r, n);
        out[static_cast<size_t>(r)] = s;
    }
    return out;
}

// Quadruple count sum_{n1+n2=n3+n4} f(n1)f(n2)f(n3)f(n4) by three loops.
inline double fourth_moment_brute(const hua::WeightedSequence& f) {
    double s = 0;
    for (i64 n1 = 1; n1 <= f.N; ++n1)
        for (i64 n2 = 1; n2 <= f.N; ++n2)
            for (i64 n3 = 1; n3 <= f.N; ++n3) {
                i64 n4 = n1 + n2 - n3;
                if (n4 < 1 || n4 > f.N) continue;
                s += f.at(n1) * f.at(n2) * f.at(n3) * f.at(n4);
            }
    return s;
}

// Quintuple count by four nested loops over the genuine supports.
inline double quintuple_count_brute(const std::array<hua::WeightedSequence, 5>& f, i64 target) {
    double s = 0;
    for (i64 n1 = f[0].support_lo(); n1 <= f[0].support_hi(); ++n1) {
        double f1 = f[0].at(n1);
        if (f1 == 0) continue;
        for (i64 n2 = f[1].support_lo(); n2 <= f[1].support_hi(); ++n2) {
            double f2 = f[1].at(n2);
            if (f2 == 0) continue;
            for (i64 n3 = f[2].support_lo(); n3 <= f[2].support_hi(); ++n3) {
                double f3 = f[2].at(n3);
                if (f3 == 0) continue;
                for (i64 n4 = f[3].support_lo(); n4 <= f[3].support_hi(); ++n4) {
                    double f4 = f[3].at(n4);
                    if (f4 == 0) continue;
                    s += f1 * f2 * f3 * f4 * f[4].at(target - n1 - n2 - n3 - n4);
                }
            }
        }
    }
    return s;
}

// Regularity endpoint sum with an explicit prime list filter.
inline double regularity_brute(const hua::WeightedSequence& f, double beta) {
    const i64 N = f.N;
    const i64 y = static_cast<i64>(std::floor(1.0 / beta));
    auto ps = hua::primes_upto(y);
    double s = 0;
    for (i64 u = 1; u <= static_cast<i64>(std::floor(beta * N)); ++u)
        for (i64 v = static_cast<i64>(std::ceil((1.0 - beta) * N)); v <= N; ++v) {
            bool cop = v != u;
            for (i64 p : ps)
                if ((v - u) % p == 0) { cop = false; break; }
            if (cop) s += f.at(u) * f.at(v);
        }
    return s;
}

inline hua::WeightedSequence random01(i64 N, std::mt19937_64& rng, double density = 0.5) {
    hua::WeightedSequence f = hua::WeightedSequence::zeros(N);
    std::bernoulli_distribution coin(density);
    for (auto& v : f.values) v = coin(rng) ? 1.0 : 0.0;
    return f;
}

inline hua::WeightedSequence random_uniform(i64 N, std::mt19937_64& rng) {
    hua::WeightedSequence f = hua::WeightedSequence::zeros(N);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : f.values) v = u(rng);
    return f;
}

}  // namespace oracle
