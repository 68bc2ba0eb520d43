#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace hua;

namespace {
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("direct Gauss sums, pinned values") {
    CHECK(std::abs(gauss_sum_direct(0, 0, 4) - cplx(4, 0)) < 1e-12);
    CHECK(std::abs(gauss_sum_direct(1, 0, 5) - cplx(kSqrt5, 0)) < 1e-9);
    CHECK(std::abs(gauss_sum_direct(2, 0, 3) - cplx(0, -kSqrt3)) < 1e-9);
}

TEST_CASE("closed form, pinned values") {
    CHECK(std::abs(gauss_sum_closed(1, 0, 5) - cplx(kSqrt5, 0)) < 1e-12);
    CHECK(std::abs(gauss_sum_closed(1, 0, 3) - cplx(0, kSqrt3)) < 1e-12);
    // G(1,2,5) = sqrt(5) e(-1/5)
    cplx expect = kSqrt5 * unit_phase(-1, 5);
    CHECK(std::abs(gauss_sum_closed(1, 2, 5) - expect) < 1e-12);
    CHECK_THROWS_AS(gauss_sum_closed(1, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_closed(5, 1, 15), std::invalid_argument);
}

TEST_CASE("closed form matches direct summation, c <= 99 exhaustive") {
    for (i64 c = 1; c <= 99; c += 2) {
        for (i64 a = -c; a <= c; ++a) {
            if (a == 0 || std::gcd(c, mod_norm(2 * a, c)) != 1) continue;
            for (i64 b = -c; b <= c; ++b) {
                cplx d = gauss_sum_direct(a, b, c);
                cplx f = gauss_sum_closed(a, b, c);
                REQUIRE(std::abs(d - f) <= 1e-9 * static_cast<double>(c));
            }
        }
    }
}

TEST_CASE("|G(a,0,c)| = sqrt(c) for gcd(a,c)=1, odd c <= 99") {
    for (i64 c = 1; c <= 99; c += 2)
        for (i64 a = 1; a <= c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            REQUIRE(std::abs(std::abs(gauss_sum_direct(a, 0, c)) - std::sqrt(static_cast<double>(c))) <
                    1e-8);
        }
}

TEST_CASE("S_q pinned values") {
    WContext ctx = build_w_context(3, 1, 1000, 0.001, 10);
    CHECK(std::abs(s_q_sum(1, 1, 1, ctx) - cplx(1, 0)) < 1e-12);
    // (q, W) = 3 does not divide 2: the sum vanishes termwise
    CHECK(std::abs(s_q_sum(1, 1, 3, ctx)) < 1e-12);
    CHECK_THROWS_AS(s_q_sum(1, 2, 5, ctx), std::invalid_argument);
}

TEST_CASE("S_q root sum vanishes for smooth q and not otherwise") {
    WContext c120 = build_w_context(5, 1, 1000, 0.001, 10);
    CHECK(std::abs(s_q_root_sum(1, 5, c120)) < 1e-10);  // 5 is 5-smooth
    WContext c24 = build_w_context(3, 1, 1000, 0.001, 10);
    CHECK(std::abs(s_q_root_sum(1, 5, c24)) > 1.0);  // 5 is 3-rough: no vanishing claim
}

TEST_CASE("S_q bounds and zeroes, W in {24,120}, q <= 60") {
    for (i64 w : {3, 5}) {
        i64 W = w_trick_modulus(w);
        for (i64 b : quadratic_residue_units(W)) {
            WContext ctx = build_w_context(w, b, 1000, 0.001, 10);
            for (i64 q = 1; q <= 60; ++q) {
                cplx root_total(0, 0);
                for (i64 a = 1; a <= q; ++a) {
                    if (std::gcd(a, q) != 1) continue;
                    cplx zsum(0, 0);
                    for (i64 z : ctx.roots) {
                        cplx s = s_q_sum(a, z, q, ctx);
                        REQUIRE(std::abs(s) <= 2.0 * std::sqrt(static_cast<double>(q)) + 1e-8);
                        i64 g = std::gcd(q, W);
                        if (g != 1 && g != 2) REQUIRE(std::abs(s) < 1e-8);
                        zsum += s;
                    }
                    if (q > 1 && smoothness_classify(q, w) == Smoothness::smooth)
                        REQUIRE(std::abs(zsum) <= 1e-8 * static_cast<double>(q) * static_cast<double>(W));
                    root_total += zsum;
                }
                (void)root_total;
            }
        }
    }
}

TEST_CASE("jacobi invariance of the symbol across admissible c") {
    CHECK(jacobi_invariance_check(1, 9, 9, {3, 6, 12}));
    CHECK(jacobi_invariance_check(2, 45, 9, {3, 21}));
    CHECK(jacobi_invariance_check(1, 1, 1, {1, 2, 3}));
    CHECK_THROWS_AS(jacobi_invariance_check(2, 45, 9, {5}), std::invalid_argument);
    // random admissible triples: symbol must be constant in c
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        i64 v0 = 1 + static_cast<i64>(rng() % 6);
        i64 v = v0 * v0;  // v square so that (c^2,b)=v is achievable with c = v0 m
        i64 rest = 1 + 2 * static_cast<i64>(rng() % 20);
        while (std::gcd(rest, v) > 1) rest += 2;
        i64 b = v * rest;
        i64 a = 1 + static_cast<i64>(rng() % 50);
        while (std::gcd(a, b) > 1) ++a;
        std::vector<i64> cs;
        for (i64 m = 1; m <= 40 && cs.size() < 4; ++m) {
            i64 c = v0 * m;
            if (std::gcd(c * c, b) == v) cs.push_back(c);
        }
        if (cs.size() >= 2) REQUIRE(jacobi_invariance_check(a, b, v, cs));
    }
}

TEST_CASE("decomposition fields for q=35, d=(7,1), W=24") {
    WContext ctx = build_w_context(3, 1, 1000, 0.001, 10);
    GaussDecomposition d = build_gauss_decomposition(1, 35, 7, 1, ctx);
    CHECK(d.branch == GaussBranch::full);
    CHECK(d.k == 7);
    CHECK(d.q_dd == 5);
    CHECK(d.h == 1);
    CHECK(d.W1 == 24);
    CHECK(d.q_W == 5);
    CHECK(d.V == cplx(1, 0));
    CHECK(d.phase_constant);
    CHECK(std::abs(std::abs(d.t_k) - 1.0) < 1e-12);
}

TEST_CASE("branch exclusions") {
    WContext ctx = build_w_context(3, 1, 1000, 0.001, 10);
    CHECK(build_gauss_decomposition(1, 5, 5, 5, ctx).branch == GaussBranch::excluded);
    CHECK(build_gauss_decomposition(1, 25, 5, 5, ctx).branch == GaussBranch::excluded);
    CHECK(build_gauss_decomposition(1, 12, 1, 1, ctx).branch == GaussBranch::h_not_dividing_2);
    CHECK(build_gauss_decomposition(2, 9, 1, 1, ctx).branch == GaussBranch::h_not_dividing_2);
    CHECK(build_gauss_decomposition(1, 6, 1, 1, ctx).branch == GaussBranch::h_not_dividing_2);
    // q_dd = 2: h = 2, q_W = 1, smooth branch
    CHECK(build_gauss_decomposition(1, 14, 7, 1, ctx).branch == GaussBranch::smooth);
}

TEST_CASE("g_k and t_k depend only on k = (q, [d1,d2]^2)") {
    WContext ctx = build_w_context(3, 1, 1000, 0.001, 36);
    // pairs (d1,d2) with the same lcm-square gcd against q
    struct Probe { i64 q, d1, d2; };
    std::vector<std::vector<Probe>> groups = {
        {{35, 7, 1}, {35, 7, 7}},
        {{65, 13, 1}, {65, 13, 13}},
        {{77, 11, 1}, {77, 11, 11}},
        {{455, 35, 1}, {455, 5, 7}, {455, 385, 7}, {455, 385, 35}},  // same k at L = 35 and L = 385
    };
    for (const auto& group : groups) {
        std::optional<GaussDecomposition> first;
        for (const Probe& p : group) {
            GaussDecomposition d = build_gauss_decomposition(3, p.q, p.d1, p.d2, ctx);
            REQUIRE(d.branch == GaussBranch::full);
            REQUIRE(d.phase_constant);
            if (!first) {
                first = d;
            } else {
                REQUIRE(d.k == first->k);
                REQUIRE(d.g_k == first->g_k);
                REQUIRE(d.s_k == first->s_k);
                REQUIRE(d.u_k == first->u_k);
                REQUIRE(d.sign == first->sign);
                REQUIRE(d.t_k == first->t_k);  // identical integer path, bit-equal
            }
        }
    }
}

TEST_CASE("full-branch main term matches the twisted sum for h = 1") {
    WContext ctx = build_w_context(3, 1, 4000000, 0.001, 10);
    for (auto [q, d1, d2] : {std::array<i64, 3>{5, 1, 1}, {35, 7, 1}, {13, 1, 1}, {65, 13, 1}}) {
        GaussDecomposition d = build_gauss_decomposition(1, q, d1, d2, ctx);
        REQUIRE(d.branch == GaussBranch::full);
        REQUIRE(d.h == 1);
        REQUIRE(d.phase_constant);
        i64 Y = 2000000;
        cplx direct = f_twisted_rational(Y, 1, q, d1, d2, ctx);
        cplx main = gauss_main_term(d, Y);
        REQUIRE(std::abs(direct - main) < 40.0 * std::sqrt(static_cast<double>(Y)));
        REQUIRE(std::abs(direct / main - cplx(1, 0)) < 0.02);
    }
}

TEST_CASE("h = 2 root phases are not constant and the twisted sum collapses") {
    WContext ctx = build_w_context(3, 1, 4000000, 0.001, 10);
    GaussDecomposition d = build_gauss_decomposition(1, 10, 1, 1, ctx);
    REQUIRE(d.h == 2);
    REQUIRE(d.branch == GaussBranch::full);
    CHECK_FALSE(d.phase_constant);  // the constant-factor mismatch the reports flag
    i64 Y = 2000000;
    cplx direct = f_twisted_rational(Y, 1, 10, 1, 1, ctx);
    cplx main = gauss_main_term(d, Y);
    CHECK(std::abs(direct) < 0.05 * std::abs(main));
}
