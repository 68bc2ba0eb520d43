#pragma once

// Exact integer arithmetic shared by every module: primes, multiplicative
// functions, Jacobi symbols, square-free structure, smoothness classes and
// continued-fraction rational approximation.  Everything here is a pure
// function of its arguments; modular work is done in 128-bit intermediates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hua {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i64 mod_norm(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mod_norm128(i128 a, i64 m) {
    i128 r = a % m;
    return static_cast<i64>(r < 0 ? r + m : r);
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<i128>(a) * b % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    base = mod_norm(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Modular inverse in [0, m); throws if gcd(a, m) != 1.
inline i64 inv_mod(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
    if (m == 1) return 0;
    i64 r0 = m, r1 = mod_norm(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return mod_norm(s0, m);
}

inline i64 isqrt64(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(i64 n, i64* root = nullptr) {
    if (n < 0) return false;
    i64 r = isqrt64(n);
    if (root) *root = r;
    return r * r == n;
}

inline i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

// Deterministic Miller-Rabin, valid for all n < 3.3e24 with this base set
// (far beyond the 64-bit range used here).
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::vector<i64> primes_upto(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<char> sieve(static_cast<size_t>(n) + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (i64 i = 2; i * i <= n; ++i)
        if (sieve[static_cast<size_t>(i)])
            for (i64 j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = 0;
    for (i64 i = 2; i <= n; ++i)
        if (sieve[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

// Ordered prime decomposition: value = prod p^e, primes strictly increasing.
struct Factorization {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;
};

inline Factorization factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    f.value = n;
    i64 m = n;
    for (i64 d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) { m /= d; ++e; }
            f.factors.emplace_back(d, e);
        }
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

inline i64 euler_phi(i64 n) {
    i64 out = 1;
    for (auto [p, e] : factorize(n).factors) {
        out *= p - 1;
        for (int i = 1; i < e; ++i) out *= p;
    }
    return out;
}

inline int mobius(i64 n) {
    auto f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

inline i64 divisor_count(i64 n) {
    i64 out = 1;
    for (auto [p, e] : factorize(n).factors) out *= e + 1;
    return out;
}

// Jacobi symbol (a/n) for odd positive n, by binary reciprocity.
inline int jacobi_symbol(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive");
    a = mod_norm(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// q = q1 * q2^2 with q1 squarefree and (q1, q2) = 1; requires q cube-free.
inline std::pair<i64, i64> squarefree_split(i64 q) {
    if (q <= 0) throw std::invalid_argument("squarefree_split: argument must be positive");
    i64 q1 = 1, q2 = 1;
    for (auto [p, e] : factorize(q).factors) {
        if (e == 1) q1 *= p;
        else if (e == 2) q2 *= p;
        else throw std::domain_error("squarefree_split: argument divisible by a cube");
    }
    return {q1, q2};
}

enum class Smoothness { smooth, rough };

inline Smoothness smoothness_classify(i64 q, i64 w) {
    if (q < 1 || w < 2) throw std::invalid_argument("smoothness_classify: q >= 1, w >= 2 required");
    for (auto [p, e] : factorize(q).factors)
        if (p > w) return Smoothness::rough;
    return Smoothness::smooth;
}

// True iff no prime factor of m is <= y (m = 0 counts as divisible).
inline bool coprime_to_primes_upto(i64 m, i64 y) {
    m = std::abs(m);
    if (m == 0) return false;
    for (i64 p = 2; p <= y && p <= m; p += (p == 2 ? 1 : 2))
        if (m % p == 0) return false;
    return true;
}

// theta ~ a/q with q <= bound, gcd(a,q)=1 and |beta| <= 1/(q*bound),
// by the continued-fraction expansion of theta.
struct RationalApproximation {
    double theta = 0;
    i64 a = 0;
    i64 q = 1;
    double beta = 0;
};

inline RationalApproximation rational_approx(double theta, i64 bound) {
    if (bound < 1) throw std::invalid_argument("rational_approx: bound must be >= 1");
    long double x = theta;
    i64 p0 = 1, q0 = 0;   // previous convergent
    i64 p1 = static_cast<i64>(std::floor(x)), q1 = 1;
    long double frac = x - std::floor(x);
    for (int it = 0; it < 64 && frac > 1e-15L; ++it) {
        long double inv = 1.0L / frac;
        i64 term = static_cast<i64>(std::floor(inv));
        frac = inv - std::floor(inv);
        i64 p2 = term * p1 + p0, q2 = term * q1 + q0;
        // stopping at the last convergent with q <= bound keeps the
        // Dirichlet bound |theta - a/q| <= 1/(q (bound+1))
        if (q2 > bound || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    i64 g = std::gcd(std::abs(p1), q1);
    if (g > 1) { p1 /= g; q1 /= g; }
    RationalApproximation r;
    r.theta = theta;
    r.a = p1;
    r.q = q1;
    r.beta = theta - static_cast<double>(p1) / static_cast<double>(q1);
    return r;
}

}  // namespace hua
