#pragma once

#include <compare>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Empirical distribution of a length-n sequence over {0,...,q-1}, stored as counts.
struct TypeVector {
    int q = 0;
    long n = 0;
    std::vector<long> counts;  // size q, sums to n

    TypeVector() = default;
    TypeVector(int q_, std::vector<long> counts_);

    /// P(a) = counts[a]/n.
    Rat prob(int a) const { return make_rat(counts.at(static_cast<std::size_t>(a)), n); }

    /// The all-zero-sequence type P_{0^n}.
    static TypeVector zero_type(int q, long n);

    bool is_zero_type() const { return counts[0] == n; }

    /// Same distribution, counts scaled by an integer factor (length n*k).
    TypeVector scaled(long k) const;

    auto operator<=>(const TypeVector&) const = default;
};

/// Type of a nonempty sequence.
TypeVector type_of(const std::vector<int>& x, int q);

/// n! / prod_a counts[a]!  — the number of sequences of this type.
Int multinomial(const TypeVector& p);

/// All types of length-n sequences over an alphabet of size q, in lexicographic count order.
std::vector<TypeVector> enumerate_types(int q, long n);

}  // namespace spectra
