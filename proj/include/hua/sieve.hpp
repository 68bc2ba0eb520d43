#pragma once

// Selberg upper-bound sieve for the progression x = h_j (mod W): the
// classical Lambda^2 weights for sifting density 1/phi, the normalization
// J = sum 1/phi(d), and the divisor sums T(q) they generate.  Weights and
// sums are exact rationals; doubles only appear in the mirrors used by the
// sequence builder.

#include <map>

#include "hua/arith.hpp"
#include "hua/rational.hpp"
#include "hua/residue.hpp"

namespace hua {

struct SieveSystem {
    i64 z = 2;
    i64 W = 24;
    std::vector<i64> divisors;      // squarefree d < z, d | P, ascending, divisors[0] = 1
    std::vector<Rational> weights;  // rho_d, aligned with divisors
    std::vector<double> weights_d;  // double mirror
    Rational J = 1;

    i64 index_of(i64 d) const {
        auto it = std::lower_bound(divisors.begin(), divisors.end(), d);
        if (it == divisors.end() || *it != d) return -1;
        return it - divisors.begin();
    }
    Rational weight(i64 d) const {
        i64 i = index_of(d);
        return i < 0 ? Rational(0) : weights[static_cast<size_t>(i)];
    }
};

// Squarefree products of primes p < z, p coprime to W, below z, ascending.
inline std::vector<i64> admissible_divisors(i64 z, i64 W) {
    std::vector<i64> out{1};
    for (i64 p : primes_upto(z - 1)) {
        if (W % p == 0) continue;
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i)
            if (out[i] <= (z - 1) / p) out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// rho_d = mu(d) (d/phi(d)) J_d(z/d) / J  with  J_d(x) = sum_{m<x, m|P, (m,d)=1} 1/phi(m).
// This is the minimizer of sum rho_{d1} rho_{d2} / [d1,d2] under rho_1 = 1,
// so T(1) = 1/J holds as an identity.
inline SieveSystem selberg_weights(i64 z, const WContext& ctx) {
    if (z < 2) throw std::invalid_argument("selberg_weights: z >= 2 required");
    SieveSystem s;
    s.z = z;
    s.W = ctx.W;
    s.divisors = admissible_divisors(z, ctx.W);
    std::vector<i64> phis(s.divisors.size());
    for (size_t i = 0; i < s.divisors.size(); ++i) phis[i] = euler_phi(s.divisors[i]);

    s.J = 0;
    for (size_t i = 0; i < s.divisors.size(); ++i) s.J += Rational(1, phis[i]);

    s.weights.resize(s.divisors.size());
    for (size_t i = 0; i < s.divisors.size(); ++i) {
        i64 d = s.divisors[i];
        Rational jd = 0;
        for (size_t m = 0; m < s.divisors.size(); ++m) {
            if (s.divisors[m] > (z - 1) / d) break;  // requires m*d < z
            if (std::gcd(s.divisors[m], d) == 1) jd += Rational(1, phis[m]);
        }
        Rational w = Rational(mobius(d)) * Rational(d, phis[i]) * jd / s.J;
        if (rational_abs(w) > 1)
            throw std::runtime_error("selberg_weights: |rho_d| > 1, weight construction failed");
        s.weights[i] = w;
    }
    if (s.weights.empty() || s.weights[0] != 1)
        throw std::runtime_error("selberg_weights: rho_1 != 1, weight construction failed");
    s.weights_d.resize(s.weights.size());
    for (size_t i = 0; i < s.weights.size(); ++i) s.weights_d[i] = to_double(s.weights[i]);
    return s;
}

// T(q) = sum_{d1,d2 | P, q | [d1,d2]} rho_{d1} rho_{d2} / [d1,d2].
// With restrict_k set, sums instead over pairs with (q, [d1,d2]^2) = k.
inline Rational t_sum(i64 q, const SieveSystem& s, std::optional<i64> restrict_k = std::nullopt) {
    if (q < 1) throw std::invalid_argument("t_sum: q >= 1 required");
    if (!restrict_k) {
        for (auto [p, e] : factorize(q).factors)
            if (e > 1 || s.W % p == 0 || p >= s.z)
                throw std::invalid_argument("t_sum: q does not divide P");
    } else {
        if (*restrict_k >= q || q % *restrict_k != 0)
            throw std::invalid_argument("t_sum: restricted variant needs k | q, k < q");
    }
    Rational out = 0;
    for (size_t i = 0; i < s.divisors.size(); ++i) {
        for (size_t j = 0; j < s.divisors.size(); ++j) {
            i64 l = lcm64(s.divisors[i], s.divisors[j]);
            if (restrict_k) {
                if (std::gcd(q, l * l) != *restrict_k) continue;
            } else if (l % q != 0) {
                continue;
            }
            out += s.weights[i] * s.weights[j] / l;
        }
    }
    return out;
}

// J as a double for large z (trend reporting): sum over squarefree d < z
// coprime to W of 1/phi(d), via a divisor-free sieve pass.
inline double j_value_direct(i64 z, i64 W) {
    std::vector<i64> phi(static_cast<size_t>(z), 0);
    std::vector<char> sqfree(static_cast<size_t>(z), 1);
    for (i64 i = 1; i < z; ++i) phi[static_cast<size_t>(i)] = i;
    for (i64 p = 2; p < z; ++p) {
        if (phi[static_cast<size_t>(p)] != p) continue;  // p composite
        for (i64 m = p; m < z; m += p) phi[static_cast<size_t>(m)] -= phi[static_cast<size_t>(m)] / p;
        for (i64 m = p * p; m < z; m += p * p) sqfree[static_cast<size_t>(m)] = 0;
    }
    double out = 0;
    for (i64 d = 1; d < z; ++d)
        if (sqfree[static_cast<size_t>(d)] && std::gcd(d, W) == 1)
            out += 1.0 / static_cast<double>(phi[static_cast<size_t>(d)]);
    return out;
}

}  // namespace hua
