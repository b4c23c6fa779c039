#include <doctest.h>

#include <cmath>

#include "spectra/montecarlo.hpp"

using namespace spectra;

TEST_CASE("spectrum estimates track exact expectations") {
    SUBCASE("random linear codes, q=2 n=m=2") {
        EnsembleSpec spec{RlcParams{2, 2, 2}, 2024};
        auto est = estimate_expected_spectrum(spec, 4000);
        JointSpectrum exact = exact_rlc_expected_joint(2, 2, 2);
        CHECK(est.size() == exact.entries.size());
        for (const auto& [key, e] : est) {
            double target = rat_to_double(exact.entries.at(key));
            if (e.std_err == 0.0)
                CHECK(e.mean == doctest::Approx(target).epsilon(1e-9));
            else
                CHECK(std::abs(e.mean - target) <= 4 * e.std_err);
        }
    }
    SUBCASE("parallel checks, q=3 d=2 m=2") {
        EnsembleSpec spec{ChkParallelParams{3, 2, 2}, 31337};
        auto est = estimate_expected_spectrum(spec, 3000);
        JointSpectrum exact = exact_chk_parallel_expected_joint(3, 2, 2);
        for (const auto& [key, e] : est) {
            double target = rat_to_double(exact.entries.at(key));
            if (e.std_err == 0.0)
                CHECK(e.mean == doctest::Approx(target).epsilon(1e-9));
            else
                CHECK(std::abs(e.mean - target) <= 4 * e.std_err);
        }
    }
    SUBCASE("sparse generator ensemble, q=3 n=2 c=2 d=2") {
        EnsembleSpec spec{LdgmParams{3, 2, 2, 2}, 7};
        auto est = estimate_expected_spectrum(spec, 3000);
        JointSpectrum exact = exact_ldgm_expected_joint(3, 2, 2, 2);
        for (const auto& [key, e] : est) {
            double target = rat_to_double(exact.entries.at(key));
            if (e.std_err == 0.0)
                CHECK(e.mean == doctest::Approx(target).epsilon(1e-9));
            else
                CHECK(std::abs(e.mean - target) <= 4 * e.std_err);
        }
    }
    SUBCASE("binary parallel checks are deterministic, so variance vanishes") {
        EnsembleSpec spec{ChkParallelParams{2, 2, 1}, 1};
        auto est = estimate_expected_spectrum(spec, 100);
        JointSpectrum exact = exact_chk_parallel_expected_joint(2, 2, 1);
        for (const auto& [key, e] : est) {
            CHECK(e.std_err == 0.0);
            CHECK(e.mean == doctest::Approx(rat_to_double(exact.entries.at(key))).epsilon(1e-9));
        }
    }
}

TEST_CASE("estimates are reproducible from the seed") {
    EnsembleSpec spec{RlcParams{3, 2, 2}, 555};
    auto a = estimate_expected_spectrum(spec, 500);
    auto b = estimate_expected_spectrum(spec, 500);
    REQUIRE(a.size() == b.size());
    for (const auto& [key, e] : a) {
        CHECK(e.mean == b.at(key).mean);
        CHECK(e.std_err == b.at(key).std_err);
        CHECK(e.seed == 555);
        CHECK(e.trials == 500);
    }
    auto c = estimate_expected_spectrum(EnsembleSpec{RlcParams{3, 2, 2}, 556}, 500);
    bool any_diff = false;
    for (const auto& [key, e] : a) any_diff = any_diff || e.mean != c.at(key).mean;
    CHECK(any_diff);
}

TEST_CASE("at least two trials are required") {
    EnsembleSpec spec{RlcParams{2, 1, 1}, 0};
    CHECK_THROWS_AS(estimate_expected_spectrum(spec, 1), ConstraintError);
}

TEST_CASE("randomized map output uniformity") {
    SUBCASE("chi-square is sane at a nonzero input") {
        auto est = estimate_uniformity(2, 3, 2, {1, 0, 0}, 40000, 99);
        CHECK(est.trials == 40000);
        CHECK(est.dof == 3);
        long total = 0;
        for (const auto& [y, c] : est.histogram) total += c;
        CHECK(total == 40000);
        // dof=3 chi-square exceeds 16.27 with probability 1e-3
        CHECK(est.chi_square < 16.27);
    }
    SUBCASE("the zero input is rejected") {
        CHECK_THROWS_AS(estimate_uniformity(2, 3, 2, {0, 0, 0}, 100, 1), ConstraintError);
    }
}

TEST_CASE("full-rank rate estimation") {
    SUBCASE("tracks the exact product") {
        auto est = estimate_rank_rate(2, 4, 4, 20000, 12);
        double p = rat_to_double(rank_full_probability(2, 4, 4));
        CHECK(std::abs(est.mean - p) <= 4 * est.std_err);
        CHECK(est.std_err > 0.0);
    }
    SUBCASE("wide matrices at q=2 n=m=8 stay above the universal floor") {
        auto est = estimate_rank_rate(2, 8, 8, 20000, 5);
        CHECK(est.mean > 0.25 - 3 * est.std_err);
    }
    SUBCASE("m=0 convention") {
        CHECK(estimate_rank_rate(2, 3, 0, 10, 1).mean == 1.0);
    }
}
