#include "spectra/montecarlo.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {

namespace {

JointSpectrum sample_realization_joint(const EnsembleSpec& spec, Rng& rng, long domain_limit) {
    if (const auto* rlc = std::get_if<RlcParams>(&spec.kind)) {
        return joint_spectrum_of_map(sample_rlc(rlc->q, rlc->n, rlc->m, rng).generator(), domain_limit);
    }
    if (const auto* chk = std::get_if<ChkParallelParams>(&spec.kind)) {
        std::vector<std::vector<int>> rows;
        for (long i = 0; i < chk->m; ++i) rows.push_back(sample_chk(chk->q, chk->d, rng));
        return joint_spectrum_of_map(chk_parallel_matrix(chk->q, rows).generator(), domain_limit);
    }
    const auto& ld = std::get<LdgmParams>(spec.kind);
    return joint_spectrum_of_map(sample_ldgm(ld.q, ld.n, ld.c, ld.d, rng).code.generator(), domain_limit);
}

}  // namespace

std::map<std::pair<TypeVector, TypeVector>, McEstimate> estimate_expected_spectrum(
    const EnsembleSpec& spec, long trials, long domain_limit) {
    if (trials < 2) throw ConstraintError("Monte Carlo estimation needs at least 2 trials");
    struct Acc {
        double sum = 0.0, sumsq = 0.0;
    };
    std::map<std::pair<TypeVector, TypeVector>, Acc> acc;
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(i));
        JointSpectrum joint = sample_realization_joint(spec, rng, domain_limit);
        for (const auto& [key, v] : joint.entries) {
            double x = rat_to_double(v);
            Acc& a = acc[key];
            a.sum += x;
            a.sumsq += x * x;
        }
    }
    std::map<std::pair<TypeVector, TypeVector>, McEstimate> out;
    const double t = static_cast<double>(trials);
    for (const auto& [key, a] : acc) {
        McEstimate e;
        e.trials = trials;
        e.seed = spec.seed;
        e.target = "E[S(" + spec.kind_name() + ")(P,Q)]";
        e.mean = a.sum / t;
        double var = std::max(0.0, (a.sumsq - t * e.mean * e.mean) / (t - 1.0));
        e.std_err = std::sqrt(var / t);
        out.emplace(key, e);
    }
    return out;
}

UniformityEstimate estimate_uniformity(int q, long n, long m, const std::vector<int>& x, long trials,
                                       std::uint64_t seed) {
    if (static_cast<long>(x.size()) != n) throw ConstraintError("input length mismatch");
    if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; }))
        throw ConstraintError(
            "uniformity at x = 0 is not an estimand: every linear code maps 0 to 0 deterministically");
    if (trials < 1) throw ConstraintError("uniformity estimation needs at least 1 trial");
    UniformityEstimate est;
    est.trials = trials;
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        LinearCodeMatrix code = sample_rlc(q, n, m, rng);
        ++est.histogram[code.encode(x)];
    }
    double bins = std::pow(static_cast<double>(q), static_cast<double>(m));
    double expected = static_cast<double>(trials) / bins;
    double chi = 0.0;
    long seen = 0;
    for (const auto& [y, count] : est.histogram) {
        double dev = static_cast<double>(count) - expected;
        chi += dev * dev / expected;
        ++seen;
    }
    chi += (bins - static_cast<double>(seen)) * expected;  // empty bins
    est.chi_square = chi;
    est.dof = static_cast<long>(bins) - 1;
    return est;
}

McEstimate estimate_rank_rate(int q, long n, long m, long trials, std::uint64_t seed) {
    if (m > n) throw ConstraintError("rank rate requires m <= n");
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.target = "Pr{rank = m} for RLC(q=" + std::to_string(q) + ",n=" + std::to_string(n) +
               ",m=" + std::to_string(m) + ")";
    if (m == 0) {  // empty matrix has rank 0 = m
        e.mean = 1.0;
        e.std_err = 0.0;
        return e;
    }
    if (trials < 2) throw ConstraintError("rank rate estimation needs at least 2 trials");
    long hits = 0;
    for (long i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        if (sample_rlc(q, n, m, rng).generator().rank() == static_cast<std::size_t>(m)) ++hits;
    }
    const double t = static_cast<double>(trials);
    e.mean = static_cast<double>(hits) / t;
    e.std_err = std::sqrt(std::max(0.0, e.mean * (1.0 - e.mean)) / t);
    return e;
}

}  // namespace spectra
