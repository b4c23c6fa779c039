#include <doctest.h>

#include <cmath>

#include "spectra/bounds.hpp"
#include "spectra/rng.hpp"

using namespace spectra;

TEST_CASE("binary divergence") {
    CHECK(binary_divergence(0.0, 0.5) == doctest::Approx(std::log(2.0)));
    CHECK(binary_divergence(1.0, 0.5) == doctest::Approx(std::log(2.0)));
    CHECK(binary_divergence(0.3, 0.3) == doctest::Approx(0.0));
    CHECK(binary_divergence(0.2, 0.7) > 0.0);
}

TEST_CASE("exponent minimization matches a dense-grid oracle") {
    const int q = 3;
    for (long d : {2L, 4L, 8L}) {
        for (int xi = 1; xi <= 5; ++xi)
            for (int yi = 0; yi <= 4; ++yi) {
                double x = xi / 6.0, y = yi / 4.0;
                DeltaDParams res = delta_d(q, d, x, y);
                double grid_best = std::numeric_limits<double>::infinity();
                const long grid = 1000000;
                for (long i = 1; i < grid; ++i) {
                    double v = delta_d_objective(q, d, x, y, static_cast<double>(i) / grid);
                    grid_best = std::min(grid_best, v);
                }
                CHECK(res.value <= grid_best + 1e-9);
                CHECK(std::abs(res.value - grid_best) <= 1e-6);
                CHECK(res.minimizer > 0.0);
                CHECK(res.minimizer < 1.0);
            }
    }
}

TEST_CASE("returned value certifies an upper bound at random probes") {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        int q = (trial % 2) ? 2 : 5;
        long d = 1 + static_cast<long>(rng.below(10));
        double x = static_cast<double>(rng.below(1000) + 1) / 1002.0;
        double y = static_cast<double>(rng.below(1001)) / 1000.0;
        DeltaDParams res = delta_d(q, d, x, y);
        double probe = static_cast<double>(rng.below(100000) + 1) / 100002.0;
        CHECK(res.value <= delta_d_objective(q, d, x, y, probe) + 1e-12);
    }
}

TEST_CASE("nonpositive at the uniform marginal") {
    // taking xhat = 1/q makes t = 0 and kills both log terms
    for (int q : {2, 3, 5})
        for (long d : {1L, 2L, 5L})
            for (int yi = 0; yi <= 10; ++yi)
                CHECK(delta_d(q, d, 1.0 / q, yi / 10.0).value <= 1e-12);
}

TEST_CASE("sup exponent decreases in the check degree") {
    double prev = std::numeric_limits<double>::infinity();
    for (long d : {2L, 4L, 8L, 16L}) {
        double cur = sup_delta_d(3, d, 0.5);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("degree search terminates") {
    std::optional<long> d0 = d0_search(3, 0.5, 0.1, 1.0, 64);
    REQUIRE(d0.has_value());
    CHECK(*d0 >= 1);
    CHECK(1.0 * sup_delta_d(3, *d0, 0.5) <= 0.1);
    // d0 is the least such degree at the fixed rate ratio
    if (*d0 > 1) CHECK(1.0 * sup_delta_d(3, *d0 - 1, 0.5) > 0.1);
}

TEST_CASE("sparse-code exponent bound dominates the exact value") {
    SUBCASE("q=3 n=2 c=2 d=2, all type pairs") {
        const int q = 3;
        const long n = 2, c = 2, d = 2, m = n * c / d;
        for (const TypeVector& p : enumerate_types(q, n)) {
            if (p.is_zero_type()) continue;
            for (const TypeVector& qq : enumerate_types(q, m)) {
                BoundReport rep = ldgm_alpha_bound(q, n, c, d, p, qq);
                CHECK(rep.satisfied);
                CHECK(rep.lhs <= rep.rhs + 1e-12);
            }
        }
    }
    SUBCASE("q=3 n=4 c=3 d=6") {
        const int q = 3;
        const long n = 4, c = 3, d = 6, m = n * c / d;
        for (const TypeVector& p : enumerate_types(q, n)) {
            if (p.is_zero_type()) continue;
            for (const TypeVector& qq : enumerate_types(q, m)) {
                BoundReport rep = ldgm_alpha_bound(q, n, c, d, p, qq);
                CHECK(rep.satisfied);
            }
        }
    }
    SUBCASE("zero input type is rejected") {
        CHECK_THROWS_AS(
            ldgm_alpha_bound(3, 2, 2, 2, TypeVector::zero_type(3, 2), TypeVector::zero_type(3, 2)),
            ConstraintError);
    }
}
