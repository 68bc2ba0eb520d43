#pragma once

// Fourier-analytic engine: grid transforms f^(r/N), circle-method arc
// classification, the twisted progression sums f_{d1,d2}, Weyl sums over
// progressions and L^q norms of transforms.

#include "hua/fft.hpp"
#include "hua/sequence.hpp"

namespace hua {

struct SpectrumGrid {
    i64 N = 0;                  // grid size: values[r] = fhat(r/N)
    std::vector<cplx> values;
};

// fhat(r/N) = sum_n f(n) e(nr/N); arbitrary support is folded mod N first,
// which leaves the grid values exact.
inline SpectrumGrid dft_grid(const WeightedSequence& f, i64 grid = 0) {
    const i64 N = grid > 0 ? grid : f.N;
    if (N <= 0) throw std::invalid_argument("dft_grid: empty grid");
    std::vector<cplx> folded(static_cast<size_t>(N), cplx(0, 0));
    for (i64 n = f.support_lo(); n <= f.support_hi(); ++n) {
        double v = f.at(n);
        if (v != 0.0) folded[static_cast<size_t>(mod_norm(n, N))] += v;
    }
    SpectrumGrid g;
    g.N = N;
    g.values = dft_any(folded, +1);
    return g;
}

inline double parseval_lhs(const SpectrumGrid& g) {  // (1/N) sum_r |fhat|^2
    double s = 0;
    for (const cplx& v : g.values) s += std::norm(v);
    return s / static_cast<double>(g.N);
}

// ---------------------------------------------------------------------------
// circle-method arcs
// ---------------------------------------------------------------------------

struct ArcPartition {
    i64 N = 0;
    double delta = 0.001;
    i64 Q = 1;   // major-arc denominator bound, floor(N^{2 delta/5})
    i64 R = 1;   // spacing bound, floor(N^{1 - delta/2})
    double U = 1;  // second-level bound, N^{1/2 - delta/100}
};

inline ArcPartition make_arc_partition(i64 N, double delta) {
    ArcPartition p;
    p.N = N;
    p.delta = delta;
    p.Q = std::max<i64>(1, static_cast<i64>(std::floor(std::pow(static_cast<double>(N), 2.0 * delta / 5.0))));
    p.R = std::max<i64>(1, static_cast<i64>(std::floor(std::pow(static_cast<double>(N), 1.0 - delta / 2.0))));
    p.U = std::pow(static_cast<double>(N), 0.5 - delta / 100.0);
    if (!(static_cast<double>(p.Q) < p.U && p.U < static_cast<double>(p.R) && p.R < N))
        throw std::domain_error("make_arc_partition: Q < U < R < N violated at this scale");
    return p;
}

struct ArcClass {
    bool major = false;
    i64 a = 0;  // reduced fraction a/q when major
    i64 q = 1;
};

// Major iff some reduced a/q with q <= Q lies within 1/(qR) of theta.  The
// window 1/(qR) is shorter than the gap 1/(2q), so round(theta q) is the
// only candidate numerator for each q; the scan is total and deterministic.
inline ArcClass classify_arc(double theta, const ArcPartition& p) {
    for (i64 q = 1; q <= p.Q; ++q) {
        i64 a = static_cast<i64>(std::llround(theta * static_cast<double>(q)));
        if (std::gcd(std::abs(a), q) != 1) continue;
        double dist = std::abs(theta - static_cast<double>(a) / static_cast<double>(q));
        if (dist <= 1.0 / (static_cast<double>(q) * static_cast<double>(p.R)))
            return {true, a, q};
    }
    return {false, 0, 1};
}

// ---------------------------------------------------------------------------
// twisted sums over prime-square progressions
// ---------------------------------------------------------------------------

// f_{d1,d2}(Y, alpha) = sum over n <= Y with Wn+b = x^2, [d1,d2] | x of
// (2x / sigma(b)) e(alpha n).
inline cplx f_twisted(i64 Y, double alpha, i64 d1, i64 d2, const WContext& ctx) {
    const i64 L = lcm64(d1, d2);
    const i64 W = ctx.W;
    cplx s(0, 0);
    const i64 xmax = isqrt64(W * Y + ctx.b);
    for (i64 x = L; x <= xmax; x += L) {
        i64 t = x * x - ctx.b;
        if (t % W) continue;
        i64 n = t / W;
        if (n < 1 || n > Y) continue;
        long double ph = std::fmod(static_cast<long double>(alpha) * static_cast<long double>(n), 1.0L);
        s += cplx(std::cos(static_cast<double>(two_pi * ph)), std::sin(static_cast<double>(two_pi * ph))) *
             (2.0 * static_cast<double>(x) / static_cast<double>(ctx.sigma_b));
    }
    return s;
}

// Same sum at alpha = a/q with the phase reduced exactly mod q.
inline cplx f_twisted_rational(i64 Y, i64 a, i64 q, i64 d1, i64 d2, const WContext& ctx) {
    const i64 L = lcm64(d1, d2);
    const i64 W = ctx.W;
    cplx s(0, 0);
    const i64 xmax = isqrt64(W * Y + ctx.b);
    for (i64 x = L; x <= xmax; x += L) {
        i64 t = x * x - ctx.b;
        if (t % W) continue;
        i64 n = t / W;
        if (n < 1 || n > Y) continue;
        s += unit_phase128(static_cast<i128>(a) * n, q) * (2.0 * static_cast<double>(x) / static_cast<double>(ctx.sigma_b));
    }
    return s;
}

// epsilon_q for q | [d1,d2]^2: (1/sigma(b)) sum over z in [W] with
// (zL)^2 = b (mod W) of e(a ((zL)^2 - b) / (Wq)).
inline cplx epsilon_q(i64 a, i64 q, i64 d1, i64 d2, const WContext& ctx) {
    const i64 L = lcm64(d1, d2);
    const i64 W = ctx.W;
    if (static_cast<i128>(L) * L % q != 0)
        throw std::invalid_argument("epsilon_q: q | [d1,d2]^2 required");
    if (std::gcd(q, W) > 1) return {0, 0};
    cplx s(0, 0);
    for (i64 z = 1; z <= W; ++z) {
        i128 t = static_cast<i128>(z) * L % W * (static_cast<i128>(z) * L % W) - ctx.b;
        if (mod_norm128(t, W) != 0) continue;
        // a ((zL)^2 - b) / (Wq): numerator divisible by W
        i128 zz = static_cast<i128>(z) * L;
        i128 num = (zz * zz - ctx.b) / W;
        s += unit_phase128(static_cast<i128>(a) * mod_norm128(num, q), q);
    }
    return s / static_cast<double>(ctx.sigma_b);
}

// Residual of f_{d1,d2}(Y, a/q) against the main term eps_q Y / [d1,d2],
// with the error window Y^{1/2} W^{1/2} it is expected to sit inside.
struct TwistReport {
    cplx value;
    cplx main;
    double residual = 0;
    double window = 0;
};

inline TwistReport f_twisted_report(i64 Y, i64 a, i64 q, i64 d1, i64 d2, const WContext& ctx) {
    TwistReport r;
    r.value = f_twisted_rational(Y, a, q, d1, d2, ctx);
    r.main = epsilon_q(a, q, d1, d2, ctx) * (static_cast<double>(Y) / static_cast<double>(lcm64(d1, d2)));
    r.residual = std::abs(r.value - r.main);
    r.window = std::sqrt(static_cast<double>(Y)) * std::sqrt(static_cast<double>(ctx.W));
    return r;
}

// ---------------------------------------------------------------------------
// Weyl sums over progressions
// ---------------------------------------------------------------------------

struct WeylReport {
    cplx value;
    i64 terms = 0;
    i64 q = 1;         // denominator of the rational approximation to the
    double alpha = 0;  // quadratic phase coefficient theta m^2
    double bound = 0;  // C K^{1+eps} (1/q + 1/K + q/K^2)^{1/2}
    double ratio = 0;  // |value| / bound
    bool within_bound = false;
};

// U(K, theta) = sum_{x <= K, x = g (mod m)} e(theta x^2), direct summation.
inline cplx weyl_progression_sum(i64 K, double theta, i64 g, i64 m) {
    if (m < 1 || K < 1) throw std::invalid_argument("weyl_progression_sum: m >= 1, K >= 1 required");
    cplx s(0, 0);
    i64 x0 = mod_norm(g, m);
    if (x0 == 0) x0 = m;
    for (i64 x = x0; x <= K; x += m) {
        long double ph = std::fmod(static_cast<long double>(theta) * x * x, 1.0L);
        s += cplx(std::cos(static_cast<double>(two_pi * ph)), std::sin(static_cast<double>(two_pi * ph)));
    }
    return s;
}

inline WeylReport weyl_sum_with_bound(i64 K, double theta, i64 g, i64 m, double safety = 8.0,
                                      double eps = 0.05) {
    WeylReport r;
    r.value = weyl_progression_sum(K, theta, g, m);
    i64 x0 = mod_norm(g, m);
    if (x0 == 0) x0 = m;
    r.terms = x0 <= K ? (K - x0) / m + 1 : 0;
    // quadratic coefficient of the progression parametrization x = g + m s
    double alpha = theta * static_cast<double>(m) * static_cast<double>(m);
    alpha -= std::floor(alpha);
    r.alpha = alpha;
    i64 kk = std::max<i64>(1, r.terms);
    auto approx = rational_approx(alpha, kk);
    r.q = approx.q;
    double k = static_cast<double>(kk);
    r.bound = safety * std::pow(k, 1.0 + eps) *
              std::sqrt(1.0 / static_cast<double>(r.q) + 1.0 / k + static_cast<double>(r.q) / (k * k));
    r.ratio = r.bound > 0 ? std::abs(r.value) / r.bound : 0.0;
    r.within_bound = std::abs(r.value) <= r.bound;
    return r;
}

// ---------------------------------------------------------------------------
// L^q moments of the transform
// ---------------------------------------------------------------------------

struct LqMoment {
    double value = 0;      // estimate of int_0^1 |fhat|^q
    double previous = 0;   // estimate at half the final grid (quadrature path)
    double rel_delta = 0;  // |value - previous| / value
    int refine = 1;
    bool exact = false;
};

// Even integer q: the moment counts solutions of n_1+..+n_m = n'_1+..+n'_m
// weighted by f, computed exactly through the m-fold self-convolution.
inline double lq_moment_even_exact(const WeightedSequence& f, int m) {
    std::vector<double> c(f.values.begin(), f.values.end());
    for (int i = 1; i < m; ++i) c = convolve_real(c, f.values);
    double s = 0;
    for (double x : c) s += x * x;
    return s;
}

inline double lq_moment_quadrature(const WeightedSequence& f, double q, i64 grid) {
    SpectrumGrid g = dft_grid(f, grid);
    double s = 0;
    for (const cplx& v : g.values) s += std::pow(std::abs(v), q);
    return s / static_cast<double>(grid);
}

inline LqMoment lq_moment(const WeightedSequence& f, double q, int refine = 1) {
    if (q <= 1.0) throw std::invalid_argument("lq_moment: exponent must exceed 1");
    LqMoment out;
    out.refine = refine;
    double qi = std::round(q);
    if (std::abs(q - qi) < 1e-12 && static_cast<i64>(qi) % 2 == 0) {
        out.value = out.previous = lq_moment_even_exact(f, static_cast<int>(qi) / 2);
        out.exact = true;
        return out;
    }
    if (refine < 1) throw std::invalid_argument("lq_moment: refine >= 1 required");
    out.previous = lq_moment_quadrature(f, q, f.N * refine);
    out.value = lq_moment_quadrature(f, q, f.N * 2 * refine);
    out.rel_delta = out.value != 0 ? std::abs(out.value - out.previous) / std::abs(out.value) : 0.0;
    return out;
}

// Dyadic refinement until successive estimates agree to 1e-4; refine is
// capped at 64 and the fine grid at 2^22 points.
inline LqMoment lq_moment_auto(const WeightedSequence& f, double q) {
    LqMoment out = lq_moment(f, q, 1);
    if (out.exact) return out;
    int refine = 1;
    while (out.rel_delta >= 1e-4 && refine < 64 && f.N * 4 * refine <= (i64(1) << 22)) {
        refine *= 2;
        out = lq_moment(f, q, refine);
    }
    return out;
}

inline double lq_norm(const WeightedSequence& f, double q, int refine = 1) {
    return std::pow(lq_moment(f, q, refine).value, 1.0 / q);
}

// Exact fourth moment: sum over s of (f*f)(s)^2.
inline double fourth_moment_exact(const WeightedSequence& f) {
    return lq_moment_even_exact(f, 2);
}

inline void write_spectrum_csv(const SpectrumGrid& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_spectrum_csv: cannot open " + path);
    f << "r,re,im,abs\n";
    for (i64 r = 0; r < g.N; ++r) {
        const cplx& v = g.values[static_cast<size_t>(r)];
        f << r << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << '\n';
    }
}

}  // namespace hua
