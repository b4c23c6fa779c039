#pragma once

#include <map>
#include <vector>

#include "spectra/spectrum.hpp"

namespace spectra {

/// Sparse multivariate polynomial with exact rational coefficients over the
/// variables {u_a : a in F_q} and optionally {v_a}. Exponent keys are dense
/// vectors of length nu + nv; zero-coefficient monomials are never stored.
class GenPoly {
  public:
    GenPoly(int nu, int nv) : nu_(nu), nv_(nv) {}

    static GenPoly constant(int nu, int nv, const Rat& c);
    /// Single variable u_a (idx < nu) or v_a (idx - nu < nv).
    static GenPoly variable(int nu, int nv, int idx);
    /// (u)_plus = sum_a u_a; offset 0 selects the u block, nu the v block.
    static GenPoly sum_of_block(int nu, int nv, int offset, int count);

    int nu() const { return nu_; }
    int nv() const { return nv_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rat& coeff);

    GenPoly operator+(const GenPoly& rhs) const;
    GenPoly operator-(const GenPoly& rhs) const;
    GenPoly operator*(const GenPoly& rhs) const;
    GenPoly scaled(const Rat& c) const;
    GenPoly pow(long e) const;  // repeated squaring

    /// Exact coefficient of the given exponent vector (0 if absent).
    Rat coef(const std::vector<int>& exps) const;

    /// Value at u_a = v_a = 1 for all a, i.e. the sum of all coefficients.
    Rat eval_at_ones() const;

    bool operator==(const GenPoly&) const = default;

  private:
    int nu_, nv_;
    std::map<std::vector<int>, Rat> terms_;
};

GenPoly genpoly_from_spectrum(const Spectrum& s);
GenPoly genpoly_from_spectrum(const JointSpectrum& s);

/// Inverse of genpoly_from_spectrum; requires homogeneity of degree n (and m).
Spectrum spectrum_from_genpoly(const GenPoly& g, long n);
JointSpectrum joint_spectrum_from_genpoly(const GenPoly& g, long n, long m);

}  // namespace spectra
