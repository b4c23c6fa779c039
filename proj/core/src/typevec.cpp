#include "spectra/typevec.hpp"

#include <numeric>

namespace spectra {

TypeVector::TypeVector(int q_, std::vector<long> counts_) : q(q_), counts(std::move(counts_)) {
    if (q < 1 || counts.size() != static_cast<std::size_t>(q))
        throw ConstraintError("type vector must have exactly q counts");
    n = 0;
    for (long c : counts) {
        if (c < 0) throw ConstraintError("type vector counts must be non-negative");
        n += c;
    }
    if (n == 0) throw ConstraintError("type vector of an empty sequence");
}

TypeVector TypeVector::zero_type(int q, long n) {
    std::vector<long> c(static_cast<std::size_t>(q), 0);
    c[0] = n;
    return TypeVector(q, std::move(c));
}

TypeVector TypeVector::scaled(long k) const {
    std::vector<long> c = counts;
    for (long& v : c) v *= k;
    return TypeVector(q, std::move(c));
}

TypeVector type_of(const std::vector<int>& x, int q) {
    if (x.empty()) throw ConstraintError("type of an empty sequence");
    std::vector<long> counts(static_cast<std::size_t>(q), 0);
    for (int s : x) {
        if (s < 0 || s >= q) throw ConstraintError("sequence symbol out of alphabet range");
        ++counts[static_cast<std::size_t>(s)];
    }
    return TypeVector(q, std::move(counts));
}

Int multinomial(const TypeVector& p) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(p.n));
    for (long c : p.counts) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
        r /= f;
    }
    return r;
}

namespace {

void enumerate_rec(int q, long remaining, std::vector<long>& cur, std::vector<TypeVector>& out) {
    if (cur.size() + 1 == static_cast<std::size_t>(q)) {
        cur.push_back(remaining);
        out.emplace_back(q, cur);
        cur.pop_back();
        return;
    }
    for (long c = 0; c <= remaining; ++c) {
        cur.push_back(c);
        enumerate_rec(q, remaining - c, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<TypeVector> enumerate_types(int q, long n) {
    std::vector<TypeVector> out;
    std::vector<long> cur;
    enumerate_rec(q, n, cur, out);
    return out;
}

}  // namespace spectra
