#pragma once

// The W-trick world: W = 8 * prod of odd primes <= w, square roots of a
// reduced residue b mod W, and the quadratic-residue sumset machinery that
// selects the five shifts b_1..b_5.

#include <array>
#include <optional>
#include <set>

#include "hua/arith.hpp"

namespace hua {

struct WContext {
    i64 w = 3;             // smoothness threshold
    i64 W = 24;            // 8 * prod of odd primes <= w
    i64 b = 1;             // reduced residue mod W, quadratic residue
    i64 sigma_b = 0;       // number of square roots of b mod W
    std::vector<i64> roots;  // sorted h in [1,W] with h^2 = b (mod W)
    double delta = 0.001;
    i64 z = 2;             // sieve level
    i64 N = 1;             // sequence length
    std::vector<i64> P_primes;  // primes p < z with p coprime to W
};

inline i64 w_trick_modulus(i64 w) {
    if (w < 3) throw std::invalid_argument("w_trick_modulus: w >= 3 required");
    i64 W = 8;
    for (i64 p : primes_upto(w))
        if (p > 2) W *= p;
    return W;
}

inline i64 sieve_level_from(i64 N, double delta) {
    long double e = 0.25L - 2.0L * static_cast<long double>(delta);
    i64 z = static_cast<i64>(std::floor(std::pow(static_cast<long double>(N), e)));
    return std::max<i64>(z, 2);
}

inline WContext build_w_context(i64 w, i64 b, i64 N, double delta,
                                std::optional<i64> z_override = std::nullopt) {
    WContext ctx;
    ctx.w = w;
    ctx.W = w_trick_modulus(w);
    ctx.N = N;
    ctx.delta = delta;
    b = mod_norm(b, ctx.W);
    if (b == 0) b = ctx.W;
    if (std::gcd(b, ctx.W) != 1)
        throw std::invalid_argument("build_w_context: shift not coprime to W");
    ctx.b = b;
    for (i64 h = 1; h <= ctx.W; ++h)
        if ((h * h - b) % ctx.W == 0) ctx.roots.push_back(h);
    ctx.sigma_b = static_cast<i64>(ctx.roots.size());
    if (ctx.sigma_b == 0)
        throw std::domain_error("build_w_context: shift is not a quadratic residue mod W");
    ctx.z = z_override ? std::max<i64>(*z_override, 2) : sieve_level_from(N, delta);
    for (i64 p : primes_upto(ctx.z - 1))
        if (ctx.W % p != 0) ctx.P_primes.push_back(p);
    return ctx;
}

inline std::vector<i64> quadratic_residues(i64 p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("quadratic_residues: odd prime required");
    std::set<i64> qr;
    for (i64 x = 1; x < p; ++x) qr.insert(mul_mod(x, x, p));
    return {qr.begin(), qr.end()};
}

// k-fold sumset A + ... + A inside Z/p.
inline std::vector<char> fold_sumset(const std::vector<char>& a, const std::vector<char>& s, i64 p) {
    std::vector<char> out(static_cast<size_t>(p), 0);
    for (i64 x = 0; x < p; ++x) {
        if (!s[static_cast<size_t>(x)]) continue;
        for (i64 y = 0; y < p; ++y)
            if (a[static_cast<size_t>(y)]) out[static_cast<size_t>((x + y) % p)] = 1;
    }
    return out;
}

inline std::vector<char> indicator(const std::vector<i64>& xs, i64 p) {
    std::vector<char> v(static_cast<size_t>(p), 0);
    for (i64 x : xs) v[static_cast<size_t>(mod_norm(x, p))] = 1;
    return v;
}

// Five-fold sumset of the quadratic residues covers Z/p (brute force).
inline bool sumset_cover_check(i64 p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("sumset_cover_check: prime >= 5 required");
    auto a = indicator(quadratic_residues(p), p);
    auto s = a;
    for (int i = 1; i < 5; ++i) s = fold_sumset(a, s, p);
    for (char c : s)
        if (!c) return false;
    return true;
}

// Generic three-set check: |A|+|B|+|C| >= p+2  implies  A+B+C = Z/p.
struct CauchyDavenportResult {
    bool hypothesis_met = false;
    bool covers = false;
};

inline CauchyDavenportResult cauchy_davenport_cover(const std::vector<i64>& A,
                                                    const std::vector<i64>& B,
                                                    const std::vector<i64>& C, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("cauchy_davenport_cover: prime modulus required");
    CauchyDavenportResult r;
    auto ia = indicator(A, p), ib = indicator(B, p), ic = indicator(C, p);
    auto count = [](const std::vector<char>& v) {
        return std::count(v.begin(), v.end(), char(1));
    };
    r.hypothesis_met = count(ia) + count(ib) + count(ic) >= p + 2;
    auto s = fold_sumset(ib, ia, p);
    s = fold_sumset(ic, s, p);
    r.covers = std::all_of(s.begin(), s.end(), [](char c) { return c != 0; });
    return r;
}

// Units of Z/W that are squares of units, sorted.
inline std::vector<i64> quadratic_residue_units(i64 W) {
    std::set<i64> qr;
    for (i64 x = 1; x <= W; ++x)
        if (std::gcd(x, W) == 1) qr.insert(mul_mod(x, x, W));
    return {qr.begin(), qr.end()};
}

// Five quadratic-residue shifts b_1..b_5 mod W with sum = M (mod W),
// lexicographically smallest.  Feasibility per odd prime p | W, p >= 5 via
// k-fold sumsets of the residue set; mod 24 every unit square is 1, so
// M = 5 (mod 24) handles that factor.
inline std::array<i64, 5> decompose_target(i64 M, const WContext& ctx) {
    const i64 W = ctx.W;
    if (W % 24 != 0) throw std::invalid_argument("decompose_target: 24 | W required");
    if (mod_norm(M, 24) != 5)
        throw std::invalid_argument("decompose_target: target must be 5 mod 24");

    auto qrs = quadratic_residue_units(W);
    std::vector<i64> ps;
    for (auto [p, e] : factorize(W).factors)
        if (p >= 5) ps.push_back(p);

    // fold[p][k] = indicator of the k-fold sumset of residues of qrs mod p
    std::vector<std::vector<std::vector<char>>> fold(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
        i64 p = ps[i];
        std::set<i64> rs;
        for (i64 b : qrs) rs.insert(mod_norm(b, p));
        auto base = indicator({rs.begin(), rs.end()}, p);
        fold[i].push_back(base);
        for (int k = 1; k < 5; ++k) fold[i].push_back(fold_sumset(base, fold[i].back(), p));
    }
    auto feasible = [&](i64 target, int k) {  // k shifts still to choose
        for (size_t i = 0; i < ps.size(); ++i)
            if (!fold[i][static_cast<size_t>(k - 1)][static_cast<size_t>(mod_norm(target, ps[i]))])
                return false;
        return true;
    };

    std::array<i64, 5> out{};
    i64 rem = mod_norm(M, W);
    for (int slot = 0; slot < 5; ++slot) {
        int left = 5 - slot;
        bool placed = false;
        for (i64 b : qrs) {
            i64 nrem = mod_norm(rem - b, W);
            if (left == 1) {
                if (nrem == 0) { out[static_cast<size_t>(slot)] = b; placed = true; break; }
            } else if (feasible(nrem, left - 1)) {
                out[static_cast<size_t>(slot)] = b;
                rem = nrem;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::domain_error("decompose_target: no decomposition (hypotheses violated)");
    }
    return out;
}

}  // namespace hua
