#pragma once

#include <optional>
#include <string>

#include "spectra/codes.hpp"
#include "spectra/genpoly.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// Distribution of a sum of d i.i.d. uniform nonzero field elements,
/// indexed by field element.
std::vector<Rat> checksum_distribution(int q, long d);

/// Expected generating function of one random check code F_q^d -> F_q,
/// in variables u_0..u_{q-1}, v_0..v_{q-1}.
GenPoly expected_chk_genfun(int q, long d);

/// Generating polynomial in u whose coefficients are the expected joint spectrum
/// of m parallel check codes at output type Q.
GenPoly chk_type_genfun(int q, long d, long m, const TypeVector& output_type);

/// E[S(parallel check)(P, Q)] by coefficient extraction from chk_type_genfun.
Rat expected_chk_parallel_spectrum(int q, long d, long m, const TypeVector& input_type,
                                   const TypeVector& output_type);

/// Full expected joint spectrum of m parallel check codes (input length m*d).
JointSpectrum expected_chk_parallel_joint(int q, long d, long m);

/// Upper bound on the expected parallel-check spectrum, tilted through a
/// reference type O; requires O(a) > 0 wherever P(a) > 0.
Rat reference_type_bound(int q, long d, long m, const TypeVector& reference_type, const TypeVector& input_type,
             const TypeVector& output_type);

/// Pr{rank of a uniform m x n matrix over F_q = m}, exact.
Rat rank_full_probability(int q, long n, long m);

/// Strict lower bound on the full-rank probability, parameterized by 1 <= k <= m.
Rat rank_lower_bound(int q, long n, long m, long k);

// --- exhaustive ensemble expectations (oracles and exact small-size paths) ---

JointSpectrum exact_rlc_expected_joint(int q, long n, long m, long limit = kDefaultDomainLimit);
JointSpectrum exact_chk_parallel_expected_joint(int q, long d, long m, long limit = kDefaultDomainLimit);
JointSpectrum exact_ldgm_expected_joint(int q, long n, long c, long d, long limit = kDefaultDomainLimit);

/// Expected conditional spectrum of inner ∘ sigma ∘ outer averaged exactly over
/// all interleavers sigma on the intermediate length.
CondSpectrum exact_interleaved_compose_cond(const LinearCodeMatrix& outer, const LinearCodeMatrix& inner,
                                            long limit = kDefaultDomainLimit);

/// Natural log of a positive rational.
double rat_log(const Rat& r);

/// max over P != P_0 (support of E_S) of (1/n) ln alpha(P, Q).
double jscc_goodness(const JointSpectrum& e_s);

/// max over Q != P_0 (support) of (1/m) ln [E_img(Q) / ambient_m(Q)].
double image_goodness(const Spectrum& e_image);

struct BoundReport {
    std::string context;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double slack = 0.0;  // rhs - lhs
};

struct ComposeBoundReport {
    bool predicate_ok = false;
    std::optional<std::vector<int>> witness;
    double composite_exponent = 0.0;  // max over O != 0, Q of (1/n) ln ratio
    double inner_exponent = 0.0;      // max over P in A(gamma), Q of (1/n) ln ratio
    bool satisfied = false;
};

/// Serial-concatenation bound: the composite conditional-spectrum exponent is
/// dominated by the worst inner exponent over the admissible type class.
ComposeBoundReport compose_exponent_bound(const LinearCodeMatrix& outer, const Rat& gamma,
                                      const CondSpectrum& inner_expected_cond,
                                      long limit = kDefaultDomainLimit);

}  // namespace spectra
