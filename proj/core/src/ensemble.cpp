#include "spectra/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectra {

std::vector<Rat> checksum_distribution(int q, long d) {
    FieldSpec spec(q);
    if (d < 1) throw ConstraintError("check degree must be >= 1");
    Rat s = make_rat(-1, q - 1);
    Rat p_zero = (Rat(1) - rat_pow(s, d - 1)) / q;
    Rat p_nonzero = (Rat(1) - rat_pow(s, d)) / q;
    p_zero.canonicalize();
    p_nonzero.canonicalize();
    std::vector<Rat> out(static_cast<std::size_t>(q), p_nonzero);
    out[0] = p_zero;
    return out;
}

namespace {

// (q*u_0 - (u)_plus) / (q-1) over the u block.
GenPoly tilted_sum_u(int q, int nv) {
    GenPoly su = GenPoly::sum_of_block(q, nv, 0, q);
    GenPoly u0 = GenPoly::variable(q, nv, 0).scaled(Rat(q));
    return (u0 - su).scaled(make_rat(1, q - 1));
}

}  // namespace

GenPoly expected_chk_genfun(int q, long d) {
    FieldSpec spec(q);
    if (d < 1) throw ConstraintError("check degree must be >= 1");
    GenPoly su = GenPoly::sum_of_block(q, q, 0, q);
    GenPoly sv = GenPoly::sum_of_block(q, q, q, q);
    GenPoly tu = tilted_sum_u(q, q);
    GenPoly tv = GenPoly::variable(q, q, q).scaled(Rat(q)) - sv;
    GenPoly g = su.pow(d) * sv + tu.pow(d) * tv;
    return g.scaled(rat_pow(make_rat(1, q), d + 1));
}

GenPoly chk_type_genfun(int q, long d, long m, const TypeVector& output_type) {
    FieldSpec spec(q);
    if (output_type.q != q || output_type.n != m)
        throw ConstraintError("output type must have length m over F_q");
    const long k = output_type.counts[0];  // m*Q(0)
    GenPoly su_d = GenPoly::sum_of_block(q, 0, 0, q).pow(d);
    GenPoly tu_d = tilted_sum_u(q, 0).pow(d);
    GenPoly head = (su_d + tu_d.scaled(Rat(q - 1))).pow(k);
    GenPoly tail = (su_d - tu_d).pow(m - k);
    Rat scale = Rat(multinomial(output_type)) * rat_pow(make_rat(1, q), m * (d + 1));
    return (head * tail).scaled(scale);
}

Rat expected_chk_parallel_spectrum(int q, long d, long m, const TypeVector& input_type,
                                   const TypeVector& output_type) {
    if (input_type.q != q || input_type.n != m * d)
        throw ConstraintError("parallel-check input type must have length m*d over F_q");
    GenPoly gp = chk_type_genfun(q, d, m, output_type);
    std::vector<int> exps(input_type.counts.begin(), input_type.counts.end());
    return gp.coef(exps);
}

JointSpectrum expected_chk_parallel_joint(int q, long d, long m) {
    JointSpectrum out{q, m * d, q, m, {}};
    for (const TypeVector& tq : enumerate_types(q, m)) {
        GenPoly gp = chk_type_genfun(q, d, m, tq);
        for (const auto& [exps, coeff] : gp.terms()) {
            TypeVector p(q, std::vector<long>(exps.begin(), exps.end()));
            out.add(p, tq, coeff);
        }
    }
    return out;
}

Rat reference_type_bound(int q, long d, long m, const TypeVector& reference_type, const TypeVector& input_type,
             const TypeVector& output_type) {
    if (reference_type.q != q || reference_type.n != m * d)
        throw ConstraintError("reference type must have length m*d over F_q");
    if (input_type.q != q || input_type.n != m * d || output_type.q != q || output_type.n != m)
        throw ConstraintError("reference-type bound: type shapes mismatch");
    for (int a = 0; a < q; ++a)
        if (input_type.counts[a] > 0 && reference_type.counts[a] == 0)
            throw ConstraintError("reference type must be positive on the support of P; zero at a = " +
                                  std::to_string(a));
    Rat t = (Rat(q) * reference_type.prob(0) - 1) / (q - 1);
    t.canonicalize();
    Rat td = rat_pow(t, d);
    const long k = output_type.counts[0];
    // (O^{mdP})_otimes with the 0^0 = 1 convention.
    Rat o_pow(1);
    for (int a = 0; a < q; ++a)
        if (input_type.counts[a] > 0) o_pow *= rat_pow(reference_type.prob(a), input_type.counts[a]);
    Rat val = Rat(multinomial(output_type)) * rat_pow(make_rat(1, q), m * (d + 1)) / o_pow;
    val *= rat_pow(Rat(1) + Rat(q - 1) * td, k);
    val *= rat_pow(Rat(1) - td, m - k);
    val.canonicalize();
    return val;
}

Rat rank_full_probability(int q, long n, long m) {
    FieldSpec spec(q);
    if (m > n) throw ConstraintError("rank_full_probability requires m <= n");
    Rat prod(1);
    Rat qn = rat_pow(Rat(q), n);
    for (long i = 1; i <= m; ++i) prod *= Rat(1) - rat_pow(Rat(q), i - 1) / qn;
    prod.canonicalize();
    return prod;
}

Rat rank_lower_bound(int q, long n, long m, long k) {
    if (k < 1 || k > m) throw ConstraintError("rank_lower_bound requires 1 <= k <= m");
    Rat head = Rat(1) - rat_pow(Rat(q), m - n - k) / (q - 1);
    Rat prod(1);
    for (long i = 1; i <= k; ++i) prod *= Rat(1) - rat_pow(Rat(q), m - n - i);
    Rat out = head * prod;
    out.canonicalize();
    return out;
}

namespace {

JointSpectrum average_joints(std::vector<JointSpectrum>&& joints) {
    JointSpectrum acc = std::move(joints.front());
    for (std::size_t i = 1; i < joints.size(); ++i)
        for (const auto& [key, v] : joints[i].entries) acc.add(key.first, key.second, v);
    Rat count(static_cast<long>(joints.size()));
    for (auto& [key, v] : acc.entries) {
        v /= count;
        v.canonicalize();
    }
    return acc;
}

/// Odometer over m*d coefficient slots, each in {1,...,q-1}.
bool next_coeffs(std::vector<int>& c, int q) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (++c[i] < q) return true;
        c[i] = 1;
    }
    return false;
}

std::vector<std::vector<int>> split_rows(const std::vector<int>& flat, long m, long d) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i)
        rows.emplace_back(flat.begin() + i * d, flat.begin() + (i + 1) * d);
    return rows;
}

}  // namespace

JointSpectrum exact_rlc_expected_joint(int q, long n, long m, long limit) {
    double count = std::pow(static_cast<double>(q), static_cast<double>(n * m));
    if (count > static_cast<double>(limit))
        throw EnumerationLimitError("RLC ensemble enumeration exceeds limit");
    std::vector<JointSpectrum> joints;
    std::vector<int> flat(static_cast<std::size_t>(n * m), 0);
    do {
        FieldMatrix gen(FieldSpec(q), static_cast<std::size_t>(m), static_cast<std::size_t>(n), flat);
        joints.push_back(joint_spectrum_of_map(gen, limit));
    } while (next_word(flat, q));
    return average_joints(std::move(joints));
}

JointSpectrum exact_chk_parallel_expected_joint(int q, long d, long m, long limit) {
    double count = std::pow(static_cast<double>(q - 1), static_cast<double>(d * m));
    if (count > static_cast<double>(limit))
        throw EnumerationLimitError("check ensemble enumeration exceeds limit");
    std::vector<JointSpectrum> joints;
    std::vector<int> flat(static_cast<std::size_t>(d * m), 1);
    do {
        LinearCodeMatrix code = chk_parallel_matrix(q, split_rows(flat, m, d));
        joints.push_back(joint_spectrum_of_map(code.generator(), limit));
    } while (next_coeffs(flat, q));
    return average_joints(std::move(joints));
}

JointSpectrum exact_ldgm_expected_joint(int q, long n, long c, long d, long limit) {
    const long m = LdgmParams{q, n, c, d}.output_len();
    LinearCodeMatrix rep = rep_parallel(q, c, n);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n * c));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    double fact = 1;
    for (std::size_t i = 2; i <= perm.size(); ++i) fact *= static_cast<double>(i);
    double coeff_count = std::pow(static_cast<double>(q - 1), static_cast<double>(d * m));
    if (fact * coeff_count > static_cast<double>(limit))
        throw EnumerationLimitError("LDGM ensemble enumeration exceeds limit");

    std::vector<JointSpectrum> joints;
    do {
        Interleaver sigma{std::vector<std::size_t>(perm)};
        std::vector<int> flat(static_cast<std::size_t>(d * m), 1);
        do {
            LinearCodeMatrix chk = chk_parallel_matrix(q, split_rows(flat, m, d));
            LinearCodeMatrix code = serial_concat(rep, sigma, chk);
            joints.push_back(joint_spectrum_of_map(code.generator(), limit));
        } while (next_coeffs(flat, q));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return average_joints(std::move(joints));
}

CondSpectrum exact_interleaved_compose_cond(const LinearCodeMatrix& outer, const LinearCodeMatrix& inner,
                                            long limit) {
    if (outer.output_len() != inner.input_len())
        throw ConstraintError("composition chain mismatch");
    std::vector<std::size_t> perm(static_cast<std::size_t>(outer.output_len()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<JointSpectrum> joints;
    do {
        Interleaver sigma{std::vector<std::size_t>(perm)};
        LinearCodeMatrix comp = serial_concat(outer, sigma, inner);
        joints.push_back(joint_spectrum_of_map(comp.generator(), limit));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return forward_conditional(average_joints(std::move(joints)));
}

double rat_log(const Rat& r) {
    if (r <= 0) throw ConstraintError("log of a non-positive rational");
    signed long exp_num, exp_den;
    double num = mpz_get_d_2exp(&exp_num, r.get_num().get_mpz_t());
    double den = mpz_get_d_2exp(&exp_den, r.get_den().get_mpz_t());
    return std::log(num) - std::log(den) + M_LN2 * static_cast<double>(exp_num - exp_den);
}

double jscc_goodness(const JointSpectrum& e_s) {
    auto alpha = alpha_of_expected_spectrum(e_s);
    bool any = false;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [key, a] : alpha) {
        if (key.first.is_zero_type()) continue;
        any = true;
        double v = (a == 1) ? 0.0 : rat_log(a) / static_cast<double>(e_s.n);
        best = std::max(best, v);
    }
    if (!any) throw ConstraintError("jscc_goodness: no admissible (P, Q) support");
    return best;
}

double image_goodness(const Spectrum& e_image) {
    Rat qm = rat_pow(Rat(e_image.q), e_image.n);
    bool any = false;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [tq, v] : e_image.entries) {
        if (tq.is_zero_type()) continue;
        any = true;
        Rat ambient = Rat(multinomial(tq)) / qm;
        Rat ratio = v / ambient;
        ratio.canonicalize();
        double x = (ratio == 1) ? 0.0 : rat_log(ratio) / static_cast<double>(e_image.n);
        best = std::max(best, x);
    }
    if (!any) throw ConstraintError("image_goodness: no admissible Q support");
    return best;
}

ComposeBoundReport compose_exponent_bound(const LinearCodeMatrix& outer, const Rat& gamma,
                                      const CondSpectrum& inner_expected_cond, long limit) {
    ComposeBoundReport rep;
    OuterConditionResult check = outer_condition_check(outer, gamma, limit);
    rep.predicate_ok = check.ok;
    if (!check.ok) {
        rep.witness = check.witness;
        return rep;
    }
    const double n = static_cast<double>(outer.input_len());
    const int q_out = inner_expected_cond.q_out;
    const long l = inner_expected_cond.n_out;
    Rat ql = rat_pow(Rat(q_out), l);
    auto slice_exponent = [&](const Spectrum& sl) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [tq, v] : sl.entries) {
            Rat ambient = Rat(multinomial(tq)) / ql;
            Rat ratio = v / ambient;
            ratio.canonicalize();
            best = std::max(best, (ratio == 1) ? 0.0 : rat_log(ratio) / n);
        }
        return best;
    };

    // Inner exponent restricted to A(gamma) = {P : 1 - P(0) > gamma}.
    rep.inner_exponent = -std::numeric_limits<double>::infinity();
    for (const auto& [p, sl] : inner_expected_cond.slices) {
        if (!(Rat(1) - p.prob(0) > gamma)) continue;
        rep.inner_exponent = std::max(rep.inner_exponent, slice_exponent(sl));
    }

    CondSpectrum outer_cond = forward_conditional(joint_spectrum_of_map(outer.generator(), limit));
    CondSpectrum composite = chain_rule_compose(outer_cond, inner_expected_cond);
    rep.composite_exponent = -std::numeric_limits<double>::infinity();
    for (const auto& [o, sl] : composite.slices) {
        if (o.is_zero_type()) continue;
        rep.composite_exponent = std::max(rep.composite_exponent, slice_exponent(sl));
    }
    rep.satisfied = rep.composite_exponent <= rep.inner_exponent + 1e-12;
    return rep;
}

}  // namespace spectra
