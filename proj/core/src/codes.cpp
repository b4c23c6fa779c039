#include "spectra/codes.hpp"

#include <algorithm>
#include <set>

namespace spectra {

LinearCodeMatrix::LinearCodeMatrix(FieldMatrix generator) : gen_(std::move(generator)) {
    if (gen_.rows() == 0 || gen_.cols() == 0) throw ConstraintError("linear code with empty generator");
}

std::vector<std::vector<int>> LinearCodeMatrix::image(long domain_limit) const {
    std::set<std::vector<int>> img;
    for (const auto& x : enumerate_words(spec().q(), input_len(), domain_limit)) img.insert(encode(x));
    return {img.begin(), img.end()};
}

Interleaver::Interleaver(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t p : perm_) {
        if (p >= perm_.size() || seen[p]) throw ConstraintError("interleaver is not a permutation");
        seen[p] = true;
    }
}

Interleaver Interleaver::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return Interleaver(std::move(p));
}

Interleaver Interleaver::sample(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(p[i - 1], p[j]);
    }
    return Interleaver(std::move(p));
}

std::vector<int> Interleaver::apply(const std::vector<int>& x) const {
    if (x.size() != perm_.size()) throw ConstraintError("interleaver length mismatch");
    std::vector<int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[perm_[i]];
    return y;
}

FieldMatrix Interleaver::as_matrix(FieldSpec spec) const {
    FieldMatrix p(spec, perm_.size(), perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p.set(i, perm_[i], 1);
    return p;
}

long LdgmParams::output_len() const {
    if (n < 1 || c < 1 || d < 1) throw ConstraintError("LDGM parameters must be positive");
    if ((n * c) % d != 0)
        throw ConstraintError("LDGM requires n*c divisible by d: n*c = " + std::to_string(n * c) +
                              ", d = " + std::to_string(d));
    return n * c / d;
}

std::string EnsembleSpec::kind_name() const {
    if (std::holds_alternative<RlcParams>(kind)) return "rlc";
    if (std::holds_alternative<ChkParallelParams>(kind)) return "chk";
    return "ldgm";
}

LinearCodeMatrix rep_parallel(int q, long c, long n) {
    if (c < 1 || n < 1) throw ConstraintError("rep_parallel requires c >= 1, n >= 1");
    FieldMatrix gen(FieldSpec(q), static_cast<std::size_t>(n * c), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < c; ++j)
            gen.set(static_cast<std::size_t>(i * c + j), static_cast<std::size_t>(i), 1);
    return LinearCodeMatrix(std::move(gen));
}

std::vector<int> sample_chk(int q, long d, Rng& rng) {
    FieldSpec spec(q);  // validates primality
    if (d < 1) throw ConstraintError("check degree must be >= 1");
    std::vector<int> c(static_cast<std::size_t>(d));
    for (auto& v : c) v = rng.nonzero_field_element(spec.q());
    return c;
}

LinearCodeMatrix sample_rlc(int q, long n, long m, Rng& rng) {
    FieldSpec spec(q);
    FieldMatrix gen(spec, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (std::size_t j = 0; j < gen.cols(); ++j) gen.set(i, j, rng.field_element(q));
    return LinearCodeMatrix(std::move(gen));
}

LinearCodeMatrix chk_parallel_matrix(int q, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw ConstraintError("check-parallel code needs at least one row");
    const std::size_t d = rows.front().size();
    FieldMatrix gen(FieldSpec(q), rows.size(), rows.size() * d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) throw ConstraintError("check rows must share one degree");
        for (std::size_t j = 0; j < d; ++j) gen.set(i, i * d + j, rows[i][j]);
    }
    return LinearCodeMatrix(std::move(gen));
}

LdgmSample sample_ldgm(int q, long n, long c, long d, Rng& rng) {
    LdgmParams params{q, n, c, d};
    const long m = params.output_len();
    LinearCodeMatrix rep = rep_parallel(q, c, n);
    Interleaver sigma = Interleaver::sample(static_cast<std::size_t>(n * c), rng);
    std::vector<std::vector<int>> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) coeffs.push_back(sample_chk(q, d, rng));
    LinearCodeMatrix chk = chk_parallel_matrix(q, coeffs);
    return LdgmSample{serial_concat(rep, sigma, chk), std::move(sigma), std::move(coeffs)};
}

LinearCodeMatrix serial_concat(const LinearCodeMatrix& outer, const Interleaver& sigma,
                               const LinearCodeMatrix& inner) {
    if (outer.output_len() != static_cast<long>(sigma.size()) || inner.input_len() != static_cast<long>(sigma.size()))
        throw ConstraintError("serial_concat dimension chain mismatch");
    if (outer.spec().q() != inner.spec().q()) throw ConstraintError("serial_concat field mismatch");
    FieldMatrix composite =
        inner.generator().mat_mul(sigma.as_matrix(outer.spec())).mat_mul(outer.generator());
    return LinearCodeMatrix(std::move(composite));
}

LinearCodeMatrix randomize_code(const LinearCodeMatrix& f, Rng& rng) {
    Interleaver in = Interleaver::sample(static_cast<std::size_t>(f.input_len()), rng);
    Interleaver out = Interleaver::sample(static_cast<std::size_t>(f.output_len()), rng);
    FieldMatrix g = out.as_matrix(f.spec()).mat_mul(f.generator()).mat_mul(in.as_matrix(f.spec()));
    return LinearCodeMatrix(std::move(g));
}

OuterConditionResult outer_condition_check(const LinearCodeMatrix& f, const Rat& gamma, long domain_limit) {
    const long m = f.output_len();
    for (const auto& x : enumerate_words(f.spec().q(), f.input_len(), domain_limit)) {
        if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) continue;
        std::vector<int> y = f.encode(x);
        long weight = static_cast<long>(std::count_if(y.begin(), y.end(), [](int v) { return v != 0; }));
        if (!(make_rat(weight, m) > gamma)) return {false, x};
    }
    return {true, std::nullopt};
}

GoodGeneratorResult good_generator_search(const LinearCodeMatrix& f, Rng& rng, long max_tries) {
    const int q = f.spec().q();
    const long n = f.input_len();
    for (long t = 1; t <= max_tries; ++t) {
        LinearCodeMatrix trial = sample_rlc(q, n, n, rng);
        if (trial.generator().rank() == static_cast<std::size_t>(n))
            return {LinearCodeMatrix(f.generator().mat_mul(trial.generator())), t};
    }
    Rat bound = Rat(1) - make_rat(1, q) - make_rat(1, static_cast<long>(q) * q);
    throw ConstraintError("good_generator_search: no full-rank matrix in " + std::to_string(max_tries) +
                          " tries (per-try success probability exceeds " + rat_to_string(bound) + ")");
}

}  // namespace spectra
