#pragma once

// End-to-end verification for one target M: decompose M into five
// quadratic-residue shifts, build the five sequence pairs, run the
// condition suite, count weighted solutions, and cross-check against the
// exact prime-square representation count.

#include <chrono>

#include <nlohmann/json.hpp>

#include "hua/conditions.hpp"
#include "hua/represent.hpp"
#include "hua/transference.hpp"

namespace hua {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hua-report/1";

struct StageTimes {
    double decompose = 0, sequences = 0, conditions = 0, convolution = 0, brute = 0;
};

struct HuaReport {
    i64 M = 0;
    i64 w = 3;
    double delta = 0.001;
    std::optional<i64> z_override;
    i64 W = 24;
    std::array<i64, 5> b_shifts{};
    i64 N = 0;                       // (M - sum b_i) / W
    std::array<i64, 5> N_i{};        // floor(N/6), floor(N/6), floor(N/2), floor(N/2), N
    std::array<double, 5> alpha{};   // means of the five a_i
    std::vector<ConditionReport> condition_reports;
    double weighted_count = 0;
    i64 brute_count = 0;             // ordered r5(M)
    std::optional<std::array<i64, 5>> witness;
    bool witness_matches_shifts = false;
    bool invariants_ok = true;
    std::string invariant_failure;
    StageTimes seconds;
};

inline json to_json(const WContext& ctx) {
    return json{{"w", ctx.w},         {"W", ctx.W},       {"b", ctx.b},
                {"sigma_b", ctx.sigma_b}, {"roots", ctx.roots}, {"delta", ctx.delta},
                {"z", ctx.z},         {"N", ctx.N},       {"P_primes", ctx.P_primes}};
}

inline json to_json(const DecompositionSummary& s) {
    return json{{"epsilon", s.epsilon},
                {"bohr_size", s.bohr_size},
                {"mean_a", s.mean_a},
                {"mean_smooth", s.mean_smooth},
                {"sup_uniform_over_N", s.sup_uniform},
                {"boundary_depletion", s.boundary_depletion},
                {"norm_q", s.norm_q},
                {"lq_a", s.lq_a},
                {"lq_smooth", s.lq_smooth},
                {"lq_uniform", s.lq_uniform}};
}

inline json to_json(const ConditionReport& r) {
    return json{{"condition", condition_name(r.condition)},
                {"parameters", r.parameters},
                {"observed", r.observed},
                {"reference", r.reference},
                {"verdict", verdict_name(r.verdict)},
                {"detail", r.detail}};
}

inline json to_json(const HuaReport& r) {
    json j{{"schema", kReportSchema},
           {"M", r.M},
           {"w", r.w},
           {"delta", r.delta},
           {"W", r.W},
           {"b_shifts", r.b_shifts},
           {"N", r.N},
           {"N_i", r.N_i},
           {"alpha", r.alpha},
           {"weighted_count", r.weighted_count},
           {"brute_count", r.brute_count},
           {"witness_matches_shifts", r.witness_matches_shifts},
           {"invariants_ok", r.invariants_ok},
           {"seconds",
            {{"decompose", r.seconds.decompose},
             {"sequences", r.seconds.sequences},
             {"conditions", r.seconds.conditions},
             {"convolution", r.seconds.convolution},
             {"brute", r.seconds.brute}}}};
    j["z_override"] = r.z_override ? json(*r.z_override) : json(nullptr);
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    if (!r.invariant_failure.empty()) j["invariant_failure"] = r.invariant_failure;
    json cr = json::array();
    for (const auto& c : r.condition_reports) cr.push_back(to_json(c));
    j["condition_reports"] = cr;
    return j;
}

inline HuaReport verify_hua(i64 M, i64 w, double delta, std::optional<i64> z_override = std::nullopt) {
    using clock = std::chrono::steady_clock;
    auto tick = [](clock::time_point& t) {
        auto now = clock::now();
        double s = std::chrono::duration<double>(now - t).count();
        t = now;
        return s;
    };

    HuaReport rep;
    rep.M = M;
    rep.w = w;
    rep.delta = delta;
    rep.z_override = z_override;
    rep.W = w_trick_modulus(w);
    if (mod_norm(M, 24) != 5)
        throw std::invalid_argument("verify_hua: target must be congruent to 5 mod 24");
    if (M <= rep.W * 10)
        throw std::domain_error("verify_hua: target too small for this W");

    auto t = clock::now();
    WContext boot = build_w_context(w, 1, std::max<i64>(M / rep.W, 1), delta, z_override);
    rep.b_shifts = decompose_target(M, boot);
    i64 bsum = 0;
    for (i64 b : rep.b_shifts) bsum += b;
    rep.N = (M - bsum) / rep.W;
    if (rep.N <= 0) throw std::domain_error("verify_hua: target too small");
    rep.N_i = {rep.N / 6, rep.N / 6, rep.N / 2, rep.N / 2, rep.N};
    rep.seconds.decompose = tick(t);

    std::array<WeightedSequence, 5> a, v;
    for (int i = 0; i < 5; ++i) {
        WContext ctx = build_w_context(w, rep.b_shifts[static_cast<size_t>(i)],
                                       rep.N_i[static_cast<size_t>(i)], delta, z_override);
        SieveSystem sieve = selberg_weights(ctx.z, ctx);
        SequencePair pair = build_sequences(ctx, sieve);
        a[static_cast<size_t>(i)] = std::move(pair.a);
        v[static_cast<size_t>(i)] = std::move(pair.v);
        rep.alpha[static_cast<size_t>(i)] = a[static_cast<size_t>(i)].mean();
    }
    rep.seconds.sequences = tick(t);

    for (int i = 0; i < 5; ++i)
        rep.condition_reports.push_back(check_mean(a[static_cast<size_t>(i)], delta, false));
    rep.condition_reports.push_back(check_mean_composite(rep.alpha, delta, 0.11, false));
    for (int i = 0; i < 5; ++i)
        rep.condition_reports.push_back(check_pseudorandom(v[static_cast<size_t>(i)]));
    rep.condition_reports.push_back(check_restriction(a[4], 4.5));
    double beta = delta / 50.0;
    if (beta * static_cast<double>(a[3].N) >= 1.0)
        rep.condition_reports.push_back(check_regularity(a[3], beta, 1e-12, false));
    else {
        ConditionReport degenerate;
        degenerate.condition = Condition::regularity;
        degenerate.parameters["beta"] = beta;
        degenerate.parameters["N"] = static_cast<double>(a[3].N);
        degenerate.verdict = Verdict::report_only;
        degenerate.detail = "beta*N < 1: endpoint set empty at this scale, S = 0";
        rep.condition_reports.push_back(degenerate);
    }
    rep.seconds.conditions = tick(t);

    rep.weighted_count = count_weighted_solutions(a, rep.N);
    rep.seconds.convolution = tick(t);

    rep.brute_count = r5_ordered_count(M);
    if (rep.brute_count > 0) {
        rep.witness = find_witness(M, std::make_pair(rep.b_shifts, rep.W));
        rep.witness_matches_shifts = rep.witness.has_value();
        if (!rep.witness) rep.witness = find_witness(M);
    }
    rep.seconds.brute = tick(t);

    if (rep.W * rep.N + bsum != M) {
        rep.invariants_ok = false;
        rep.invariant_failure = "W*N + sum(b_i) != M";
    }
    if (rep.weighted_count > 1e-6 && rep.brute_count == 0) {
        rep.invariants_ok = false;
        rep.invariant_failure = "weighted count positive but no prime-square representation";
    }
    if (rep.witness) {
        i64 s = 0;
        for (i64 p : *rep.witness) {
            if (!is_prime(p)) { rep.invariants_ok = false; rep.invariant_failure = "witness entry not prime"; }
            s += p * p;
        }
        if (s != M) {
            rep.invariants_ok = false;
            rep.invariant_failure = "witness squares do not sum to target";
        }
    }
    return rep;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output path: " + path);
    f << text;
}

// Flat CSV: one row per condition report plus a header block of scalars.
inline std::string report_csv(const HuaReport& r) {
    std::string out = "key,value\n";
    out += "schema," + std::string(kReportSchema) + "\n";
    out += "M," + std::to_string(r.M) + "\n";
    out += "w," + std::to_string(r.w) + "\n";
    out += "W," + std::to_string(r.W) + "\n";
    out += "N," + std::to_string(r.N) + "\n";
    for (int i = 0; i < 5; ++i)
        out += "b" + std::to_string(i + 1) + "," + std::to_string(r.b_shifts[static_cast<size_t>(i)]) + "\n";
    out += "weighted_count," + std::to_string(r.weighted_count) + "\n";
    out += "brute_count," + std::to_string(r.brute_count) + "\n";
    out += "condition,verdict,observed0,reference0\n";
    for (const auto& c : r.condition_reports) {
        out += std::string(condition_name(c.condition)) + "," + verdict_name(c.verdict) + ",";
        out += (c.observed.empty() ? "" : std::to_string(c.observed[0])) + ",";
        out += (c.reference.empty() ? "" : std::to_string(c.reference[0]));
        out += "\n";
    }
    return out;
}

}  // namespace hua
