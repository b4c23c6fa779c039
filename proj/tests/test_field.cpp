#include <doctest.h>

#include <set>
#include <sstream>

#include "spectra/field.hpp"
#include "spectra/rng.hpp"

using namespace spectra;

TEST_CASE("field spec rejects non-prime moduli") {
    CHECK_THROWS_AS(FieldSpec(1), ConstraintError);
    CHECK_THROWS_AS(FieldSpec(4), ConstraintError);
    CHECK_THROWS_AS(FieldSpec(9), ConstraintError);  // GF(3^2) is not supported
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(13));
}

TEST_CASE("field element operations") {
    CHECK(FieldSpec(3).mul(2, 2) == 1);
    CHECK(FieldSpec(2).add(1, 1) == 0);
    SUBCASE("inv(3) over F_5 matches exhaustive search") {
        FieldSpec f5(5);
        int expected = -1;
        for (int b = 1; b < 5; ++b)
            if (f5.mul(3, b) == 1) expected = b;
        CHECK(expected == 2);
        CHECK(f5.inv(3) == expected);
    }
    CHECK_THROWS_AS(FieldSpec(7).inv(0), ConstraintError);
}

TEST_CASE("mul(a, inv(a)) = 1 exhaustively for small fields") {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        FieldSpec f(q);
        for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("mat_vec") {
    FieldMatrix id = FieldMatrix::identity(FieldSpec(2), 2);
    CHECK(id.mat_vec({1, 0}) == std::vector<int>{1, 0});

    FieldMatrix row(FieldSpec(2), 1, 2, {1, 1});
    CHECK(row.mat_vec({1, 1}) == std::vector<int>{0});

    FieldMatrix a3(FieldSpec(3), 2, 2, {1, 2, 2, 1});
    CHECK(a3.mat_vec({1, 1}) == std::vector<int>{0, 0});

    CHECK_THROWS_AS(row.mat_vec({1}), ConstraintError);
    CHECK(a3.mat_vec({0, 0}) == std::vector<int>{0, 0});
}

TEST_CASE("mat_vec additivity on random matrices") {
    Rng rng(42);
    for (int q : {2, 3, 5}) {
        FieldSpec spec(q);
        for (int trial = 0; trial < 50; ++trial) {
            FieldMatrix a(spec, 3, 4);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) a.set(i, j, rng.field_element(q));
            std::vector<int> x(4), y(4), sum(4);
            for (int j = 0; j < 4; ++j) {
                x[j] = rng.field_element(q);
                y[j] = rng.field_element(q);
                sum[j] = spec.add(x[j], y[j]);
            }
            std::vector<int> lhs = a.mat_vec(sum);
            std::vector<int> fx = a.mat_vec(x), fy = a.mat_vec(y);
            for (int i = 0; i < 3; ++i) CHECK(lhs[i] == spec.add(fx[i], fy[i]));
        }
    }
}

namespace {

// Brute-force dimension of the row space: enumerate all q^m row combinations.
std::size_t row_space_dim(const FieldMatrix& a) {
    FieldSpec spec = a.spec();
    const int q = spec.q();
    std::set<std::vector<int>> span;
    std::vector<int> coeffs(a.rows(), 0);
    while (true) {
        std::vector<int> v(a.cols(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                v[j] = spec.add(v[j], spec.mul(coeffs[i], a.at(i, j)));
        span.insert(v);
        std::size_t k = coeffs.size();
        while (k > 0 && coeffs[k - 1] == q - 1) coeffs[--k] = 0;
        if (k == 0) break;
        ++coeffs[k - 1];
    }
    std::size_t dim = 0, size = 1;
    while (size < span.size()) {
        size *= static_cast<std::size_t>(q);
        ++dim;
    }
    REQUIRE(size == span.size());
    return dim;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(FieldMatrix::identity(FieldSpec(2), 3).rank() == 3);
    CHECK(FieldMatrix(FieldSpec(2), 2, 2, {1, 1, 1, 1}).rank() == 1);
    CHECK(FieldMatrix(FieldSpec(5), 2, 2, {1, 2, 2, 4}).rank() == 1);
    CHECK(FieldMatrix(FieldSpec(2), 2, 3).rank() == 0);
}

TEST_CASE("rank agrees with brute-force row-space dimension") {
    for (int q : {2, 3}) {
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t n = 1; n <= 3; ++n) {
                std::vector<int> entries(m * n, 0);
                // exhaust all matrices
                while (true) {
                    FieldMatrix a(FieldSpec(q), m, n, entries);
                    CHECK(a.rank() == row_space_dim(a));
                    std::size_t k = entries.size();
                    while (k > 0 && entries[k - 1] == q - 1) entries[--k] = 0;
                    if (k == 0) break;
                    ++entries[k - 1];
                }
            }
    }
}

TEST_CASE("matrix text format round trip") {
    FieldMatrix a(FieldSpec(3), 2, 3, {0, 1, 2, 2, 1, 0});
    std::string text = matrix_to_string(a);
    CHECK(text == "3 2 3\n0 1 2\n2 1 0\n");
    std::istringstream in(text);
    CHECK(parse_matrix(in) == a);
}

TEST_CASE("matrix parser rejects bad input") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return parse_matrix(in);
    };
    CHECK_THROWS_AS(parse("2 1 2\n1 2\n"), ConstraintError);   // entry out of range
    CHECK_THROWS_AS(parse("2 2 2\n1 0\n"), ConstraintError);   // missing row
    CHECK_THROWS_AS(parse("2 1 2\n1\n"), ConstraintError);     // short row
    CHECK_THROWS_AS(parse("2 1 2\n1 0 1\n"), ConstraintError); // long row
    CHECK_THROWS_AS(parse("4 1 1\n1\n"), ConstraintError);     // composite modulus
    CHECK_THROWS_AS(parse("garbage\n"), ConstraintError);
}
