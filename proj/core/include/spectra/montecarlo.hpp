#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spectra/codes.hpp"
#include "spectra/ensemble.hpp"

namespace spectra {

struct McEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
    std::string target;
};

/// Per-(P,Q) sample mean of the joint spectrum over i.i.d. realizations of the
/// ensemble. Each realization's spectrum is computed exactly by enumeration.
std::map<std::pair<TypeVector, TypeVector>, McEstimate> estimate_expected_spectrum(
    const EnsembleSpec& spec, long trials, long domain_limit = kDefaultDomainLimit);

struct UniformityEstimate {
    std::map<std::vector<int>, long> histogram;
    long trials = 0;
    double chi_square = 0.0;  // against the uniform q^-m law
    long dof = 0;
};

/// Empirical output distribution of a randomized RLC at a fixed nonzero input.
UniformityEstimate estimate_uniformity(int q, long n, long m, const std::vector<int>& x, long trials,
                                       std::uint64_t seed);

/// Fraction of sampled RLC matrices with full row rank.
McEstimate estimate_rank_rate(int q, long n, long m, long trials, std::uint64_t seed);

}  // namespace spectra
