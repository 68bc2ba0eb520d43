#pragma once

// Large spectrum, Bohr sets, the smooth/uniform decomposition
// a = a' + a'', and the quintuple weighted solution count.

#include "hua/spectral.hpp"

namespace hua {

struct BohrData {
    double epsilon = 0;
    std::vector<i64> t_eps;  // grid frequencies r with |ahat(r/N)| >= eps N
    std::vector<i64> b;      // 1 <= b <= eps N with ||b r / N|| < eps for all r in t_eps
};

struct DegenerateBohrError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ||x|| for x = (b r mod N)/N, exactly in integers.
inline double torus_distance(i64 b, i64 r, i64 N) {
    i64 m = mod_norm128(static_cast<i128>(b) * r, N);
    return static_cast<double>(std::min(m, N - m)) / static_cast<double>(N);
}

inline BohrData bohr_spectrum(const WeightedSequence& a, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("bohr_spectrum: epsilon in (0,1) required");
    BohrData out;
    out.epsilon = epsilon;
    const i64 N = a.N;
    SpectrumGrid g = dft_grid(a);
    for (i64 r = 0; r < N; ++r)
        if (std::abs(g.values[static_cast<size_t>(r)]) >= epsilon * static_cast<double>(N))
            out.t_eps.push_back(r);
    const i64 bmax = static_cast<i64>(std::floor(epsilon * static_cast<double>(N)));
    for (i64 b = 1; b <= bmax; ++b) {
        bool ok = true;
        for (i64 r : out.t_eps)
            if (torus_distance(b, r, N) >= epsilon) { ok = false; break; }
        if (ok) out.b.push_back(b);
    }
    if (out.b.empty())
        throw DegenerateBohrError("bohr_spectrum: empty Bohr set, raise epsilon");
    return out;
}

struct DecompositionSummary {
    double epsilon = 0;
    size_t bohr_size = 0;
    double mean_a = 0, mean_smooth = 0;       // means over [1, N]
    double sup_uniform = 0;                   // max_r |ahat''(r/N)| / N
    double boundary_depletion = 0;            // |mean a' - mean a|
    std::array<double, 3> norm_q{2.0, 4.0, 4.5};
    std::array<double, 3> lq_a{}, lq_smooth{}, lq_uniform{};  // grid L^q norms of transforms
};

struct Decomposition {
    WeightedSequence smooth;   // a'(n) = E_{b1,b2 in B} a(n + b1 - b2), true support kept
    WeightedSequence uniform;  // a'' = a - a'
    DecompositionSummary summary;
};

// Grid L^q norm of the transform: ((1/N) sum_r |fhat(r/N)|^q)^{1/q}.
inline double grid_lq_norm(const SpectrumGrid& g, double q) {
    double s = 0;
    for (const cplx& v : g.values) s += std::pow(std::abs(v), q);
    return std::pow(s / static_cast<double>(g.N), 1.0 / q);
}

// The averaging kernel is kept on the full shifted support [1-s, N+s], so
// ahat' = ahat |muhat_B|^2 holds exactly at every grid point; out-of-range
// reads of a are zero.
inline Decomposition smooth_decompose(const WeightedSequence& a, const BohrData& bohr) {
    if (bohr.b.empty()) throw DegenerateBohrError("smooth_decompose: empty Bohr set");
    const i64 N = a.N;
    const i64 bmin = bohr.b.front(), bmax = bohr.b.back();
    const i64 span = bmax - bmin;

    // difference-count kernel c(m) = #{(b1,b2): b1 - b2 = m}, m in [-span, span]
    std::vector<double> ind(static_cast<size_t>(bmax - bmin + 1), 0.0);
    for (i64 b : bohr.b) ind[static_cast<size_t>(b - bmin)] = 1.0;
    std::vector<double> rev(ind.rbegin(), ind.rend());
    std::vector<double> kernel = convolve_real(ind, rev);  // index i <-> m = i - span

    Decomposition out;
    out.smooth.N = N;
    out.smooth.offset = 1 - span;
    out.smooth.role = SequenceRole::a_smooth;
    out.smooth.ctx = a.ctx;
    // a'(n) = (1/|B|^2) sum_m c(m) a(n + m): correlate a with the kernel
    std::vector<double> av(a.values.begin(), a.values.end());
    std::vector<double> conv = convolve_real(kernel, av);
    // conv index j <-> value sum_m c(m) a(n+m) at n = a.offset - span + j
    const double inv_b2 = 1.0 / (static_cast<double>(bohr.b.size()) * static_cast<double>(bohr.b.size()));
    i64 lo = 1 - span, hi = N + span;
    out.smooth.values.assign(static_cast<size_t>(hi - lo + 1), 0.0);
    for (i64 n = lo; n <= hi; ++n) {
        i64 j = n - (a.offset - span);
        if (j >= 0 && j < static_cast<i64>(conv.size()))
            out.smooth.values[static_cast<size_t>(n - lo)] = conv[static_cast<size_t>(j)] * inv_b2;
    }

    out.uniform = out.smooth;
    out.uniform.role = SequenceRole::a_uniform;
    for (i64 n = lo; n <= hi; ++n)
        out.uniform.values[static_cast<size_t>(n - lo)] = a.at(n) - out.smooth.at(n);

    DecompositionSummary& s = out.summary;
    s.epsilon = bohr.epsilon;
    s.bohr_size = bohr.b.size();
    s.mean_a = a.mean();
    s.mean_smooth = out.smooth.mean();
    s.boundary_depletion = std::abs(s.mean_smooth - s.mean_a);
    SpectrumGrid ga = dft_grid(a, N), gs = dft_grid(out.smooth, N), gu = dft_grid(out.uniform, N);
    for (const cplx& v : gu.values) s.sup_uniform = std::max(s.sup_uniform, std::abs(v) / static_cast<double>(N));
    for (size_t i = 0; i < s.norm_q.size(); ++i) {
        s.lq_a[i] = grid_lq_norm(ga, s.norm_q[i]);
        s.lq_smooth[i] = grid_lq_norm(gs, s.norm_q[i]);
        s.lq_uniform[i] = grid_lq_norm(gu, s.norm_q[i]);
    }
    return out;
}

// Weighted count of n_1 + .. + n_5 = target via iterated convolution.
inline double count_weighted_solutions(const std::array<WeightedSequence, 5>& f, i64 target) {
    std::vector<double> acc = f[0].values;
    i64 offset = f[0].offset;
    for (int i = 1; i < 5; ++i) {
        if (f[static_cast<size_t>(i)].values.empty() || acc.empty()) return 0.0;
        acc = convolve_real(acc, f[static_cast<size_t>(i)].values);
        offset += f[static_cast<size_t>(i)].offset;
    }
    i64 j = target - offset;
    if (j < 0 || j >= static_cast<i64>(acc.size())) return 0.0;
    return acc[static_cast<size_t>(j)];
}

// Quadrature route for the same count: int_0^1 prod fhat_i(theta) e(-target theta).
// Exact (up to rounding) once the grid exceeds the total support span.
inline double count_by_quadrature(const std::array<WeightedSequence, 5>& f, i64 target) {
    i64 span = 1;
    for (const auto& s : f) span += s.support_hi();
    const i64 M = static_cast<i64>(next_pow2(static_cast<size_t>(span + 8)));
    std::vector<SpectrumGrid> g;
    g.reserve(5);
    for (const auto& s : f) g.push_back(dft_grid(s, M));
    cplx total(0, 0);
    for (i64 j = 0; j < M; ++j) {
        cplx prod(1, 0);
        for (const auto& gi : g) prod *= gi.values[static_cast<size_t>(j)];
        total += prod * unit_phase128(-static_cast<i128>(target) * j, M);
    }
    return total.real() / static_cast<double>(M);
}

}  // namespace hua
