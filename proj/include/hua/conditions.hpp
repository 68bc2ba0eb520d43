#pragma once

// Numerical verification of the transference hypotheses for a constructed
// sequence pair: mean, pseudorandomness of the majorant, restriction
// (moment) behaviour, and endpoint regularity.  Exactly checkable bounds
// get a pass/fail verdict; asymptotic claims are reported with trend data.

#include <map>
#include <optional>

#include "hua/spectral.hpp"

namespace hua {

enum class Condition { mean, pseudorandom, restriction, regularity };
enum class Verdict { pass, fail, report_only };

inline const char* condition_name(Condition c) {
    switch (c) {
        case Condition::mean: return "mean";
        case Condition::pseudorandom: return "pseudorandom";
        case Condition::restriction: return "restriction";
        default: return "regularity";
    }
}
inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "report-only";
    }
}

struct ConditionReport {
    Condition condition = Condition::mean;
    std::map<std::string, double> parameters;
    std::vector<double> observed;
    std::vector<double> reference;
    Verdict verdict = Verdict::report_only;
    std::string detail;
};

// alpha = mean of a over [1,N] against the target 1/2 - 5 delta.  With
// enforce=false (desk-scale surrogate) the verdict is report-only.
inline ConditionReport check_mean(const WeightedSequence& a, double delta, bool enforce = true) {
    ConditionReport r;
    r.condition = Condition::mean;
    double alpha = a.mean();
    double target = 0.5 - 5.0 * delta;
    r.parameters["delta"] = delta;
    r.parameters["N"] = static_cast<double>(a.N);
    r.observed = {alpha};
    r.reference = {target};
    r.verdict = enforce ? (alpha >= target ? Verdict::pass : Verdict::fail) : Verdict::report_only;
    return r;
}

// Composite mean condition over the five sequences:
// alpha_1,2 >= delta1, alpha_3,4,5 >= delta, and
// (min(1, alpha3+alpha4) + alpha4)/2 + alpha5 >= 1 + delta.
inline ConditionReport check_mean_composite(const std::array<double, 5>& alpha, double delta,
                                            double delta1, bool enforce = true) {
    ConditionReport r;
    r.condition = Condition::mean;
    double lhs = 0.5 * (std::min(1.0, alpha[2] + alpha[3]) + alpha[3]) + alpha[4];
    r.parameters["delta"] = delta;
    r.parameters["delta1"] = delta1;
    r.observed.assign(alpha.begin(), alpha.end());
    r.observed.push_back(lhs);
    r.reference = {delta1, delta1, delta, delta, delta, 1.0 + delta};
    bool ok = alpha[0] >= delta1 && alpha[1] >= delta1 && alpha[2] >= delta && alpha[3] >= delta &&
              alpha[4] >= delta && lhs >= 1.0 + delta;
    r.verdict = enforce ? (ok ? Verdict::pass : Verdict::fail) : Verdict::report_only;
    r.detail = "observed = alpha_1..alpha_5, composite; reference = thresholds";
    return r;
}

// D(v) = max_r |vhat(r/N) - delta_{r,0} N| / N over the full grid.  A given
// eta makes this a pass/fail check; otherwise report-only.
inline ConditionReport check_pseudorandom(const WeightedSequence& v,
                                          std::optional<double> eta = std::nullopt) {
    ConditionReport r;
    r.condition = Condition::pseudorandom;
    SpectrumGrid g = dft_grid(v);
    const double N = static_cast<double>(v.N);
    double dev0 = std::abs(g.values[0] - cplx(N, 0)) / N;
    double tail = 0;
    for (i64 k = 1; k < g.N; ++k) tail = std::max(tail, std::abs(g.values[static_cast<size_t>(k)]) / N);
    double d = std::max(dev0, tail);
    r.parameters["N"] = N;
    r.observed = {d, dev0, tail};
    r.detail = "observed = [D, |vhat(0)-N|/N, max_{r!=0}|vhat(r/N)|/N]";
    if (eta) {
        r.parameters["eta"] = *eta;
        r.reference = {*eta};
        r.verdict = d <= *eta ? Verdict::pass : Verdict::fail;
    } else {
        r.verdict = Verdict::report_only;
    }
    return r;
}

struct PseudorandomSweepPoint {
    i64 w = 3;
    i64 W = 24;
    double deviation = 0;  // max_{r != 0} |vhat(r/N)| / N
    double dev0 = 0;       // |vhat(0) - N| / N
};

struct PseudorandomSweep {
    std::vector<PseudorandomSweepPoint> points;
    double fitted_exponent = 0;  // slope of log D against log w
    bool non_increasing = true;
};

inline PseudorandomSweep pseudorandom_sweep(i64 N, const std::vector<i64>& ws, i64 z_override,
                                            i64 b = 1, double delta = 0.001) {
    PseudorandomSweep out;
    for (i64 w : ws) {
        WContext ctx = build_w_context(w, b, N, delta, z_override);
        SieveSystem sieve = selberg_weights(ctx.z, ctx);
        SequencePair seq = build_sequences(ctx, sieve);
        SpectrumGrid g = dft_grid(seq.v);
        PseudorandomSweepPoint pt;
        pt.w = w;
        pt.W = ctx.W;
        pt.dev0 = std::abs(g.values[0] - cplx(static_cast<double>(N), 0)) / static_cast<double>(N);
        for (i64 k = 1; k < g.N; ++k)
            pt.deviation = std::max(pt.deviation, std::abs(g.values[static_cast<size_t>(k)]) / static_cast<double>(N));
        out.points.push_back(pt);
    }
    for (size_t i = 1; i < out.points.size(); ++i)
        if (out.points[i].deviation > out.points[i - 1].deviation) out.non_increasing = false;
    if (out.points.size() >= 2) {  // least-squares slope in log-log coordinates
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& p : out.points) {
            double x = std::log(static_cast<double>(p.w)), y = std::log(std::max(p.deviation, 1e-300));
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        double n = static_cast<double>(out.points.size());
        out.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return out;
}

// Moment ratio ||ahat||_q^q / N^{q-1} for 4 < q < 5, the exact fourth
// moment, and the measure of the level sets {|ahat| > delta1 N}.
inline ConditionReport check_restriction(const WeightedSequence& a, double q_exponent) {
    if (!(q_exponent > 4.0 && q_exponent < 5.0))
        throw std::invalid_argument("check_restriction: exponent must lie in (4,5)");
    ConditionReport r;
    r.condition = Condition::restriction;
    const double N = static_cast<double>(a.N);
    LqMoment m = lq_moment_auto(a, q_exponent);
    double ratio = m.value / std::pow(N, q_exponent - 1.0);
    double fourth = fourth_moment_exact(a);
    r.parameters["q"] = q_exponent;
    r.parameters["N"] = N;
    r.observed = {ratio, fourth, fourth / (N * N * N)};
    r.detail = "observed = [moment_q/N^{q-1}, fourth moment, fourth/N^3]; then per delta1: delta1^4 * meas * N";
    SpectrumGrid g = dft_grid(a);
    for (double d1 : {0.1, 0.2, 0.5}) {
        i64 count = 0;
        for (const cplx& v : g.values)
            if (std::abs(v) > d1 * N) ++count;
        double meas = static_cast<double>(count) / N;
        r.parameters["meas_" + std::to_string(d1).substr(0, 3)] = meas;
        r.observed.push_back(d1 * d1 * d1 * d1 * meas * N);
    }
    r.verdict = Verdict::report_only;
    return r;
}

// Regularity sum S = sum_{u <= beta N, v >= (1-beta) N, (v-u, P(1/beta)) = 1}
// f(u) f(v); pass iff S >= kappa N^2.
inline ConditionReport check_regularity(const WeightedSequence& f, double beta, double kappa,
                                        bool enforce = true) {
    if (!(beta > 0.0 && beta < 0.5))
        throw std::invalid_argument("check_regularity: beta in (0, 1/2) required");
    ConditionReport r;
    r.condition = Condition::regularity;
    const i64 N = f.N;
    const i64 ulim = static_cast<i64>(std::floor(beta * static_cast<double>(N)));
    const i64 vlim = static_cast<i64>(std::ceil((1.0 - beta) * static_cast<double>(N)));
    const i64 y = static_cast<i64>(std::floor(1.0 / beta));
    double s = 0;
    for (i64 u = 1; u <= ulim; ++u) {
        double fu = f.at(u);
        if (fu == 0.0) continue;
        for (i64 v = vlim; v <= N; ++v) {
            double fv = f.at(v);
            if (fv == 0.0) continue;
            if (coprime_to_primes_upto(v - u, y)) s += fu * fv;
        }
    }
    double nn = static_cast<double>(N) * static_cast<double>(N);
    r.parameters["beta"] = beta;
    r.parameters["kappa"] = kappa;
    r.parameters["N"] = static_cast<double>(N);
    r.observed = {s, s / nn};
    r.reference = {kappa * nn, kappa};
    r.verdict = enforce ? (s >= kappa * nn ? Verdict::pass : Verdict::fail) : Verdict::report_only;
    return r;
}

// Root parity existence: each root h with even c = (h^2 - b)/W must yield
// an odd c' under h -> h + W/2.
struct ParityCheck {
    bool all_pass = true;
    std::vector<std::array<i64, 4>> rows;  // (h, c, h + W/2, c')
};

inline ParityCheck regularity_parity_check(const WContext& ctx) {
    ParityCheck out;
    for (i64 h : ctx.roots) {
        i64 c = (h * h - ctx.b) / ctx.W;
        if (c % 2 != 0) continue;
        i64 h1 = h + ctx.W / 2;
        i64 c1 = (h1 * h1 - ctx.b) / ctx.W;
        out.rows.push_back({h, c, h1, c1});
        if (c1 % 2 == 0) out.all_pass = false;
    }
    return out;
}

}  // namespace hua
