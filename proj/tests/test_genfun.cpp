#include <doctest.h>

#include "spectra/codes.hpp"
#include "spectra/genpoly.hpp"
#include "spectra/rng.hpp"

using namespace spectra;

TEST_CASE("genpoly from spectra") {
    SUBCASE("point mass on the zero type") {
        Spectrum s{2, 3, {{TypeVector::zero_type(2, 3), Rat(1)}}};
        GenPoly g = genpoly_from_spectrum(s);
        CHECK(g.terms().size() == 1);
        CHECK(g.coef({3, 0}) == 1);
    }
    SUBCASE("ambient spectrum is ((u)_plus / q)^n expanded") {
        for (int q : {2, 3})
            for (long n = 1; n <= 4; ++n) {
                GenPoly lhs = genpoly_from_spectrum(ambient_spectrum(n, q));
                GenPoly rhs = GenPoly::sum_of_block(q, 0, 0, q).scaled(make_rat(1, q)).pow(n);
                CHECK(lhs == rhs);
            }
    }
    SUBCASE("repetition code on one symbol") {
        for (int q : {2, 3})
            for (long c = 1; c <= 3; ++c) {
                GenPoly lhs = genpoly_from_spectrum(joint_spectrum_of_map(rep_parallel(q, c, 1).generator()));
                GenPoly rhs(q, q);
                for (int a = 0; a < q; ++a) {
                    std::vector<int> e(static_cast<std::size_t>(2 * q), 0);
                    e[static_cast<std::size_t>(a)] = 1;
                    e[static_cast<std::size_t>(q + a)] = static_cast<int>(c);
                    rhs.add_term(e, make_rat(1, q));
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("genpoly multiplication") {
    GenPoly half_sum = GenPoly::sum_of_block(2, 0, 0, 2).scaled(make_rat(1, 2));
    SUBCASE("multiplicative identity") {
        GenPoly one = GenPoly::constant(2, 0, Rat(1));
        CHECK(half_sum * one == half_sum);
    }
    SUBCASE("binomial square") {
        GenPoly sq = half_sum * half_sum;
        CHECK(sq.coef({2, 0}) == make_rat(1, 4));
        CHECK(sq.coef({1, 1}) == make_rat(1, 2));
        CHECK(sq.coef({0, 2}) == make_rat(1, 4));
    }
    SUBCASE("parallel concatenation multiplies generating functions") {
        FieldMatrix f1(FieldSpec(2), 1, 1, {1});
        FieldMatrix f2(FieldSpec(2), 2, 1, {1, 1});
        GenPoly g1 = genpoly_from_spectrum(joint_spectrum_of_map(f1));
        GenPoly g2 = genpoly_from_spectrum(joint_spectrum_of_map(f2));
        // block-diagonal concatenation f1 (.) f2
        FieldMatrix cat(FieldSpec(2), 3, 2, {1, 0, 0, 1, 0, 1});
        GenPoly gcat = genpoly_from_spectrum(joint_spectrum_of_map(cat));
        CHECK(gcat == g1 * g2);
    }
}

TEST_CASE("coefficient extraction") {
    GenPoly sum = GenPoly::sum_of_block(2, 0, 0, 2);
    CHECK((sum * sum).coef({1, 1}) == 2);
    CHECK((sum * sum).coef({3, 0}) == 0);
    CHECK(sum.scaled(make_rat(1, 2)).pow(4).coef({2, 2}) == make_rat(6, 16));
    CHECK_THROWS_AS(sum.coef({1, 1, 1}), ConstraintError);
}

TEST_CASE("round trip spectrum <-> genpoly") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int q = (trial % 2) ? 2 : 3;
        long n = 1 + static_cast<long>(rng.below(3));
        std::vector<std::vector<int>> set;
        long size = 1 + static_cast<long>(rng.below(6));
        for (long i = 0; i < size; ++i) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (auto& s : w) s = rng.field_element(q);
            set.push_back(w);
        }
        Spectrum s = spectrum_of_set(set, q);
        CHECK(spectrum_from_genpoly(genpoly_from_spectrum(s), n).entries == s.entries);
    }
    JointSpectrum joint = joint_spectrum_of_map(rep_parallel(3, 2, 2).generator());
    CHECK(joint_spectrum_from_genpoly(genpoly_from_spectrum(joint), 2, 4).entries == joint.entries);
}

TEST_CASE("evaluation at all-ones is 1 for spectrum genpolys") {
    CHECK(genpoly_from_spectrum(ambient_spectrum(4, 3)).eval_at_ones() == 1);
    CHECK(genpoly_from_spectrum(joint_spectrum_of_map(rep_parallel(2, 3, 2).generator())).eval_at_ones() == 1);
}

TEST_CASE("product law against brute-force set products") {
    Rng rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        int q = (trial % 2) ? 2 : 3;
        auto random_set = [&](long n) {
            std::vector<std::vector<int>> set;
            long size = 1 + static_cast<long>(rng.below(8));
            for (long i = 0; i < size; ++i) {
                std::vector<int> w(static_cast<std::size_t>(n));
                for (auto& s : w) s = rng.field_element(q);
                set.push_back(w);
            }
            return set;
        };
        long n1 = 1 + static_cast<long>(rng.below(3)), n2 = 1 + static_cast<long>(rng.below(3));
        auto a1 = random_set(n1), a2 = random_set(n2);
        std::vector<std::vector<int>> prod;
        for (const auto& x : a1)
            for (const auto& y : a2) {
                std::vector<int> w = x;
                w.insert(w.end(), y.begin(), y.end());
                prod.push_back(w);
            }
        GenPoly lhs = genpoly_from_spectrum(spectrum_of_set(prod, q));
        GenPoly rhs =
            genpoly_from_spectrum(spectrum_of_set(a1, q)) * genpoly_from_spectrum(spectrum_of_set(a2, q));
        CHECK(lhs == rhs);
    }
}
