#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spectra/field.hpp"
#include "spectra/typevec.hpp"

namespace spectra {

inline constexpr long kDefaultDomainLimit = 1L << 20;
inline constexpr long kDefaultPermLimit = 8;

/// Distribution over types of length-n sequences; entries are exact rationals summing to 1.
struct Spectrum {
    int q = 0;
    long n = 0;
    std::map<TypeVector, Rat> entries;

    Rat at(const TypeVector& p) const {
        auto it = entries.find(p);
        return it == entries.end() ? Rat(0) : it->second;
    }
    Rat total() const;
    void normalize_check() const;  // throws unless total() == 1
};

/// Distribution over pairs of input/output types.
struct JointSpectrum {
    int qx = 0;
    long n = 0;
    int qy = 0;
    long m = 0;
    std::map<std::pair<TypeVector, TypeVector>, Rat> entries;

    Rat at(const TypeVector& p, const TypeVector& q_) const {
        auto it = entries.find({p, q_});
        return it == entries.end() ? Rat(0) : it->second;
    }
    Rat total() const;
    void add(const TypeVector& p, const TypeVector& q_, const Rat& v);
};

/// Family of conditional distributions: conditioning type -> spectrum of the other coordinate.
struct CondSpectrum {
    int q_in = 0;
    long n_in = 0;
    int q_out = 0;
    long n_out = 0;
    std::map<TypeVector, Spectrum> slices;

    const Spectrum& slice(const TypeVector& p) const;
};

struct SpectrumDecomposition {
    Spectrum marginal_x;
    Spectrum marginal_y;
    CondSpectrum y_given_x;
    CondSpectrum x_given_y;
};

/// A total map F_q^n (or a plain alphabet power) -> alphabet^m given by a callable.
struct MapSpec {
    int qx;
    long n;
    int qy;
    long m;
    std::function<std::vector<int>(const std::vector<int>&)> apply;

    static MapSpec from_matrix(const FieldMatrix& a);
};

/// Spectrum of the full space X^n: S(P) = multinomial(P)/q^n.
Spectrum ambient_spectrum(long n, int q);

/// Spectrum of an explicit nonempty set of equal-length sequences.
Spectrum spectrum_of_set(const std::vector<std::vector<int>>& set, int q);

/// Joint spectrum of rl(f) = {(x, f(x))}, by exhaustive enumeration of the domain.
JointSpectrum joint_spectrum_of_map(const MapSpec& f, long domain_limit = kDefaultDomainLimit);
JointSpectrum joint_spectrum_of_map(const FieldMatrix& a, long domain_limit = kDefaultDomainLimit);

SpectrumDecomposition marginals_and_conditionals(const JointSpectrum& s);

/// Spectrum of {x : f(x) = 0}.
Spectrum kernel_spectrum(const FieldMatrix& a, long domain_limit = kDefaultDomainLimit);

/// alpha(P,Q) = E_S(P,Q) / (ambient_n(P) * ambient_m(Q)) over the support of E_S.
std::map<std::pair<TypeVector, TypeVector>, Rat> alpha_of_expected_spectrum(const JointSpectrum& e_s);

/// Pr{ type(f(sigma(x))) = Q } averaged exactly over all permutations sigma.
Rat permuted_output_type_prob(const MapSpec& f, const std::vector<int>& x, const TypeVector& target,
                              long perm_limit = kDefaultPermLimit);

/// Composition rule for expected conditional spectra across an interleaver:
/// result(Q|O) = sum_P E_F(P|O) * E_G(Q|P).
CondSpectrum chain_rule_compose(const CondSpectrum& e_f, const CondSpectrum& e_g);

/// Forward conditional spectrum of a total map: slices for every input type,
/// S(Q|P) = S_joint(P,Q) / ambient(P).
CondSpectrum forward_conditional(const JointSpectrum& joint);

/// Iterate all of {0..q-1}^n in lexicographic order. Returns false when exhausted.
bool next_word(std::vector<int>& w, int q);

/// Enumerate the full domain {0..q-1}^n, guarding against blowup.
std::vector<std::vector<int>> enumerate_words(int q, long n, long domain_limit = kDefaultDomainLimit);

}  // namespace spectra
