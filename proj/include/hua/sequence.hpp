#pragma once

// Finitely supported real sequences on an integer window: the W-tricked
// prime-square sequence a(n), its Selberg majorant v(n), and the smooth /
// uniform parts produced by the Bohr decomposition.

#include <fstream>
#include <memory>

#include "hua/sieve.hpp"

namespace hua {

enum class SequenceRole { a_raw, v_majorant, a_smooth, a_uniform, synthetic };

inline const char* role_name(SequenceRole r) {
    switch (r) {
        case SequenceRole::a_raw: return "a_raw";
        case SequenceRole::v_majorant: return "v_majorant";
        case SequenceRole::a_smooth: return "a_smooth";
        case SequenceRole::a_uniform: return "a_uniform";
        default: return "synthetic";
    }
}

struct WeightedSequence {
    i64 N = 0;                    // nominal window is [1, N]
    i64 offset = 1;               // index of values[0]; support may extend past [1,N]
    std::vector<double> values;
    SequenceRole role = SequenceRole::synthetic;
    std::shared_ptr<const WContext> ctx;  // null for synthetic sequences

    static WeightedSequence zeros(i64 N, SequenceRole role = SequenceRole::synthetic) {
        WeightedSequence s;
        s.N = N;
        s.values.assign(static_cast<size_t>(N), 0.0);
        s.role = role;
        return s;
    }

    double at(i64 n) const {
        i64 i = n - offset;
        if (i < 0 || i >= static_cast<i64>(values.size())) return 0.0;
        return values[static_cast<size_t>(i)];
    }
    double& ref(i64 n) { return values[static_cast<size_t>(n - offset)]; }

    i64 support_lo() const { return offset; }
    i64 support_hi() const { return offset + static_cast<i64>(values.size()) - 1; }

    double sum() const {
        double s = 0;
        for (double v : values) s += v;
        return s;
    }
    double mean() const {  // average over the nominal window [1, N]
        double s = 0;
        for (i64 n = 1; n <= N; ++n) s += at(n);
        return N > 0 ? s / static_cast<double>(N) : 0.0;
    }
};

struct SequencePair {
    WeightedSequence a;  // prime squares, weight 2 phi(W) sqrt(Wn+b) log z / (W sigma(b))
    WeightedSequence v;  // Selberg majorant, same prefactor times (sum rho_d)^2
};

// a(n) nonzero iff Wn+b = x^2 with x prime, z <= x;  v(n) nonzero iff Wn+b
// is any perfect square.  Pointwise v >= a, with equality wherever a > 0.
inline SequencePair build_sequences(const WContext& ctx, const SieveSystem& sieve) {
    auto shared = std::make_shared<const WContext>(ctx);
    SequencePair out;
    out.a = WeightedSequence::zeros(ctx.N, SequenceRole::a_raw);
    out.v = WeightedSequence::zeros(ctx.N, SequenceRole::v_majorant);
    out.a.ctx = out.v.ctx = shared;

    const double pref = 2.0 * static_cast<double>(euler_phi(ctx.W)) * std::log(static_cast<double>(ctx.z)) /
                        (static_cast<double>(ctx.W) * static_cast<double>(ctx.sigma_b));
    const i64 xmax = isqrt64(ctx.W * ctx.N + ctx.b);

    for (i64 h : ctx.roots) {
        for (i64 x = h; x <= xmax; x += ctx.W) {
            i64 s = x * x - ctx.b;
            i64 n = s / ctx.W;
            if (n < 1 || n > ctx.N) continue;
            // weight sum over admissible divisors of x
            std::vector<i64> px;
            for (i64 p : ctx.P_primes)
                if (x % p == 0) px.push_back(p);
            double wsum = 0;
            size_t subsets = size_t(1) << px.size();
            for (size_t mask = 0; mask < subsets; ++mask) {
                i64 d = 1;
                for (size_t i = 0; i < px.size(); ++i)
                    if (mask & (size_t(1) << i)) d *= px[i];
                if (d < sieve.z) {
                    i64 idx = sieve.index_of(d);
                    if (idx >= 0) wsum += sieve.weights_d[static_cast<size_t>(idx)];
                }
            }
            out.v.ref(n) = pref * static_cast<double>(x) * wsum * wsum;
            if (x >= ctx.z && is_prime(x)) out.a.ref(n) = pref * static_cast<double>(x);
        }
    }
    return out;
}

inline void write_csv(const WeightedSequence& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path);
    f << "n,value\n";
    for (i64 n = s.support_lo(); n <= s.support_hi(); ++n) f << n << ',' << s.at(n) << '\n';
}

}  // namespace hua
