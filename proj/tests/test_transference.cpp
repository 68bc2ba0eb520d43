#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace hua;

TEST_CASE("Bohr data for the constant sequence") {
    WeightedSequence one = WeightedSequence::zeros(200);
    for (auto& v : one.values) v = 1.0;
    BohrData bd = bohr_spectrum(one, 0.2);
    CHECK(bd.t_eps == std::vector<i64>{0});
    CHECK(static_cast<i64>(bd.b.size()) == 40);  // all of 1..floor(eps N)
    CHECK(bd.b.front() == 1);
}

TEST_CASE("Bohr data with a planted low frequency") {
    const i64 N = 240;
    WeightedSequence f = WeightedSequence::zeros(N);
    for (i64 n = 1; n <= N; ++n)
        f.ref(n) = 1.0 + std::cos(two_pi * static_cast<double>(n) / static_cast<double>(N));
    BohrData bd = bohr_spectrum(f, 0.2);
    REQUIRE(std::find(bd.t_eps.begin(), bd.t_eps.end(), 0) != bd.t_eps.end());
    REQUIRE(std::find(bd.t_eps.begin(), bd.t_eps.end(), 1) != bd.t_eps.end());
    REQUIRE(std::find(bd.t_eps.begin(), bd.t_eps.end(), N - 1) != bd.t_eps.end());
    for (i64 b : bd.b)
        for (i64 r : bd.t_eps) REQUIRE(torus_distance(b, r, N) < 0.2);
}

TEST_CASE("zero sequence has empty spectrum and a full Bohr set") {
    WeightedSequence z = WeightedSequence::zeros(100);
    BohrData bd = bohr_spectrum(z, 0.5);
    CHECK(bd.t_eps.empty());
    CHECK(static_cast<i64>(bd.b.size()) == 50);
    CHECK_THROWS_AS(bohr_spectrum(z, 1.5), std::invalid_argument);
}

TEST_CASE("degenerate Bohr set raises") {
    // single spike: |fhat| = 1 everywhere, so a tiny eps puts every r in the
    // spectrum while leaving no b below eps N
    WeightedSequence f = WeightedSequence::zeros(50);
    f.ref(1) = 60.0;
    CHECK_THROWS_AS(bohr_spectrum(f, 0.02), DegenerateBohrError);
}

TEST_CASE("decomposition of a constant is constant away from the boundary") {
    WeightedSequence f = WeightedSequence::zeros(300);
    for (auto& v : f.values) v = 0.7;
    BohrData bd = bohr_spectrum(f, 0.1);
    Decomposition d = smooth_decompose(f, bd);
    i64 span = bd.b.back() - bd.b.front();
    for (i64 n = 1 + span; n <= f.N - span; ++n) {
        REQUIRE(d.smooth.at(n) == Catch::Approx(0.7).epsilon(1e-9));
        REQUIRE(std::abs(d.uniform.at(n)) < 1e-9);
    }
    CHECK(d.summary.boundary_depletion < 0.1);
}

TEST_CASE("parity-preserving shifts reproduce an even indicator inside") {
    const i64 N = 200;
    WeightedSequence f = WeightedSequence::zeros(N);
    for (i64 n = 2; n <= N; n += 2) f.ref(n) = 1.0;
    BohrData bd;
    bd.epsilon = 0.05;
    bd.b = {2, 4};
    Decomposition d = smooth_decompose(f, bd);
    for (i64 n = 5; n <= N - 5; ++n) REQUIRE(d.smooth.at(n) == Catch::Approx(f.at(n)).margin(1e-12));
}

TEST_CASE("grid norm inequalities for the decomposition, random instances") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 20; ++it) {
        i64 N = 100 + static_cast<i64>(rng() % 150);
        WeightedSequence f = oracle::random_uniform(N, rng);
        BohrData bd = bohr_spectrum(f, 0.25);
        Decomposition d = smooth_decompose(f, bd);
        for (size_t i = 0; i < d.summary.norm_q.size(); ++i) {
            REQUIRE(d.summary.lq_smooth[i] <= d.summary.lq_a[i] * (1 + 1e-9) + 1e-9);
            REQUIRE(d.summary.lq_uniform[i] <= d.summary.lq_a[i] * (1 + 1e-9) + 1e-9);
        }
        // mean of a' within eps + boundary share of the mean of a
        double slack = bd.epsilon + static_cast<double>(2 * bd.b.back()) / static_cast<double>(N);
        REQUIRE(std::abs(d.summary.mean_smooth - d.summary.mean_a) <=
                slack * std::max(1.0, d.summary.mean_a) + 1e-9);
    }
}

TEST_CASE("grid transform identity ahat' = ahat |muhat|^2") {
    std::mt19937_64 rng(19);
    WeightedSequence f = oracle::random_uniform(128, rng);
    BohrData bd = bohr_spectrum(f, 0.3);
    Decomposition d = smooth_decompose(f, bd);
    SpectrumGrid ga = dft_grid(f), gs = dft_grid(d.smooth, f.N);
    for (i64 r = 0; r < f.N; ++r) {
        cplx mu(0, 0);
        for (i64 b : bd.b) mu += unit_phase128(static_cast<i128>(b) * r, f.N);
        mu /= static_cast<double>(bd.b.size());
        cplx expect = ga.values[static_cast<size_t>(r)] * std::norm(mu);
        REQUIRE(std::abs(gs.values[static_cast<size_t>(r)] - expect) < 1e-7);
    }
}

TEST_CASE("quintuple convolution count, pinned cases") {
    std::array<WeightedSequence, 5> f;
    for (auto& s : f) {
        s = WeightedSequence::zeros(30);
        for (auto& v : s.values) v = 1.0;
    }
    // all-ones on [1,30]^5: compositions of N into 5 positive parts
    auto choose4 = [](i64 n) {
        return static_cast<double>((n - 1) * (n - 2) * (n - 3) * (n - 4)) / 24.0;
    };
    CHECK(count_weighted_solutions(f, 20) == Catch::Approx(choose4(20)).epsilon(1e-12));
    CHECK(count_weighted_solutions(f, 5) == Catch::Approx(1.0).epsilon(1e-12));
    f[2] = WeightedSequence::zeros(30);
    CHECK(count_weighted_solutions(f, 20) == 0.0);
}

TEST_CASE("quintuple convolution equals brute force with truncated supports") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 50; ++it) {
        i64 N = 40 + static_cast<i64>(rng() % 81);
        std::array<i64, 5> Ni{N / 6, N / 6, N / 2, N / 2, N};
        std::array<WeightedSequence, 5> f;
        for (int i = 0; i < 5; ++i)
            f[static_cast<size_t>(i)] = oracle::random01(std::max<i64>(Ni[static_cast<size_t>(i)], 1), rng);
        double conv = count_weighted_solutions(f, N);
        double brute = oracle::quintuple_count_brute(f, N);
        REQUIRE(conv == Catch::Approx(brute).margin(1e-6));
        REQUIRE(std::llround(conv) == std::llround(brute));
    }
}

TEST_CASE("dense bounded triples have many weighted solutions") {
    // spot check of the imported three-variable counting statement on
    // dense synthetic instances: means >= 0.4 force >= c N^2 solutions
    std::mt19937_64 rng(47);
    for (i64 N : {120, 300, 500}) {
        std::array<i64, 3> Ni{N / 2, N / 2, N};
        std::vector<std::vector<double>> f(3);
        for (int i = 0; i < 3; ++i) {
            f[static_cast<size_t>(i)].assign(static_cast<size_t>(Ni[static_cast<size_t>(i)]), 0.0);
            for (auto& v : f[static_cast<size_t>(i)]) v = (rng() % 10 < 6) ? 1.0 : 0.0;
        }
        auto conv = convolve_real(f[0], convolve_real(f[1], f[2]));
        // index j corresponds to n1+n2+n3 = j+3 (each sequence starts at 1)
        i64 j = N - 3;
        REQUIRE(j >= 0);
        REQUIRE(j < static_cast<i64>(conv.size()));
        double count = conv[static_cast<size_t>(j)];
        REQUIRE(count >= 0.01 * static_cast<double>(N) * static_cast<double>(N));
    }
}

TEST_CASE("decomposition summary serializes") {
    std::mt19937_64 rng(53);
    WeightedSequence f = oracle::random_uniform(120, rng);
    BohrData bd = bohr_spectrum(f, 0.3);
    Decomposition d = smooth_decompose(f, bd);
    json j = to_json(d.summary);
    CHECK(j["bohr_size"].get<size_t>() == bd.b.size());
    CHECK(j["lq_a"].size() == 3);
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("convolution count equals the grid quadrature of the transform product") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 10; ++it) {
        i64 N = 30 + static_cast<i64>(rng() % 60);
        std::array<WeightedSequence, 5> f;
        for (auto& s : f) s = oracle::random_uniform(N, rng);
        double conv = count_weighted_solutions(f, N);
        double quad = count_by_quadrature(f, N);
        REQUIRE(conv == Catch::Approx(quad).margin(1e-6 * std::max(1.0, std::abs(conv))));
    }
}
