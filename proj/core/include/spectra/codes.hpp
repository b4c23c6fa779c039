#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectra/field.hpp"
#include "spectra/rng.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// Linear code x -> A*x given by its generator matrix A (m x n over F_q).
class LinearCodeMatrix {
  public:
    explicit LinearCodeMatrix(FieldMatrix generator);

    const FieldMatrix& generator() const { return gen_; }
    const FieldSpec& spec() const { return gen_.spec(); }
    long input_len() const { return static_cast<long>(gen_.cols()); }
    long output_len() const { return static_cast<long>(gen_.rows()); }
    Rat rate() const { return make_rat(input_len(), output_len()); }

    std::vector<int> encode(const std::vector<int>& x) const { return gen_.mat_vec(x); }

    /// Image f(F_q^n) enumerated as a sorted set of codewords.
    std::vector<std::vector<int>> image(long domain_limit = kDefaultDomainLimit) const;

  private:
    FieldMatrix gen_;
};

/// Permutation of [0, n): apply(x)_i = x[perm[i]].
class Interleaver {
  public:
    explicit Interleaver(std::vector<std::size_t> perm);

    static Interleaver identity(std::size_t n);
    /// Fisher-Yates shuffle driven by the given stream.
    static Interleaver sample(std::size_t n, Rng& rng);

    std::size_t size() const { return perm_.size(); }
    const std::vector<std::size_t>& perm() const { return perm_; }

    std::vector<int> apply(const std::vector<int>& x) const;
    FieldMatrix as_matrix(FieldSpec spec) const;

  private:
    std::vector<std::size_t> perm_;
};

struct RlcParams {
    int q;
    long n, m;
};
struct ChkParallelParams {
    int q;
    long d, m;
};
struct RepParallelParams {
    int q;
    long c, n;
};
struct LdgmParams {
    int q;
    long n, c, d;

    long output_len() const;  // m = n*c/d, validated
};

/// Description of a random code family plus the master seed; drives both the
/// exact-expectation and Monte Carlo paths.
struct EnsembleSpec {
    std::variant<RlcParams, ChkParallelParams, LdgmParams> kind;
    std::uint64_t seed = 0;

    std::string kind_name() const;
};

/// Block-diagonal generator of n parallel copies of the c-fold repetition code.
LinearCodeMatrix rep_parallel(int q, long c, long n);

/// One check row: d i.i.d. uniform coefficients from F_q \ {0}.
std::vector<int> sample_chk(int q, long d, Rng& rng);

LinearCodeMatrix sample_rlc(int q, long n, long m, Rng& rng);

struct LdgmSample {
    LinearCodeMatrix code;
    Interleaver sigma;
    std::vector<std::vector<int>> check_coeffs;  // m rows of d coefficients
};

/// check layer after a uniform interleaver after the repetition layer.
LdgmSample sample_ldgm(int q, long n, long c, long d, Rng& rng);

/// Generator of inner ∘ sigma ∘ outer.
LinearCodeMatrix serial_concat(const LinearCodeMatrix& outer, const Interleaver& sigma,
                               const LinearCodeMatrix& inner);

/// Fresh uniform input and output interleavers around f.
LinearCodeMatrix randomize_code(const LinearCodeMatrix& f, Rng& rng);

struct OuterConditionResult {
    bool ok;
    std::optional<std::vector<int>> witness;  // violating nonzero input when !ok
};

/// True iff every nonzero codeword has relative Hamming weight strictly above gamma.
OuterConditionResult outer_condition_check(const LinearCodeMatrix& f, const Rat& gamma,
                                           long domain_limit = kDefaultDomainLimit);

struct GoodGeneratorResult {
    LinearCodeMatrix code;
    long tries;
};

/// Resamples a square RLC matrix T until rank(T) = n and returns f ∘ T, which
/// has the same image as f. Throws if max_tries is exhausted.
GoodGeneratorResult good_generator_search(const LinearCodeMatrix& f, Rng& rng, long max_tries = 64);

/// Generator of the parallel concatenation of m check rows over F_q^d each.
LinearCodeMatrix chk_parallel_matrix(int q, const std::vector<std::vector<int>>& rows);

}  // namespace spectra
