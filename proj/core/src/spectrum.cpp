#include "spectra/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace spectra {

Rat Spectrum::total() const {
    Rat t(0);
    for (const auto& [p, v] : entries) t += v;
    return t;
}

void Spectrum::normalize_check() const {
    if (total() != 1) throw ConstraintError("spectrum does not sum to 1");
}

Rat JointSpectrum::total() const {
    Rat t(0);
    for (const auto& [k, v] : entries) t += v;
    return t;
}

void JointSpectrum::add(const TypeVector& p, const TypeVector& q_, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = entries.try_emplace({p, q_}, v);
    if (!inserted) it->second += v;
}

const Spectrum& CondSpectrum::slice(const TypeVector& p) const {
    auto it = slices.find(p);
    if (it == slices.end())
        throw ConstraintError("conditioning on a type with zero marginal probability");
    return it->second;
}

MapSpec MapSpec::from_matrix(const FieldMatrix& a) {
    return MapSpec{a.spec().q(), static_cast<long>(a.cols()), a.spec().q(), static_cast<long>(a.rows()),
                   [a](const std::vector<int>& x) { return a.mat_vec(x); }};
}

bool next_word(std::vector<int>& w, int q) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < q) return true;
        w[i] = 0;
    }
    return false;
}

static void check_domain(int q, long n, long domain_limit) {
    double size = std::pow(static_cast<double>(q), static_cast<double>(n));
    if (size > static_cast<double>(domain_limit))
        throw EnumerationLimitError("domain size q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                                    " exceeds enumeration limit " + std::to_string(domain_limit));
}

std::vector<std::vector<int>> enumerate_words(int q, long n, long domain_limit) {
    check_domain(q, n, domain_limit);
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    do {
        out.push_back(w);
    } while (next_word(w, q));
    return out;
}

Spectrum ambient_spectrum(long n, int q) {
    if (n < 1) throw ConstraintError("ambient spectrum requires n >= 1");
    Spectrum s{q, n, {}};
    Rat qn = rat_pow(Rat(q), n);
    for (const TypeVector& p : enumerate_types(q, n)) {
        Rat v(multinomial(p));
        v /= qn;
        v.canonicalize();
        s.entries.emplace(p, v);
    }
    return s;
}

Spectrum spectrum_of_set(const std::vector<std::vector<int>>& set, int q) {
    if (set.empty()) throw ConstraintError("spectrum of an empty set");
    const std::size_t n = set.front().size();
    Spectrum s{q, static_cast<long>(n), {}};
    for (const auto& x : set) {
        if (x.size() != n) throw ConstraintError("spectrum of a set with mixed lengths");
        TypeVector p = type_of(x, q);
        auto [it, inserted] = s.entries.try_emplace(p, Rat(1));
        if (!inserted) it->second += 1;
    }
    Rat size(static_cast<long>(set.size()));
    for (auto& [p, v] : s.entries) {
        v /= size;
        v.canonicalize();
    }
    return s;
}

JointSpectrum joint_spectrum_of_map(const MapSpec& f, long domain_limit) {
    check_domain(f.qx, f.n, domain_limit);
    JointSpectrum s{f.qx, f.n, f.qy, f.m, {}};
    std::vector<int> x(static_cast<std::size_t>(f.n), 0);
    long count = 0;
    do {
        std::vector<int> y = f.apply(x);
        if (y.size() != static_cast<std::size_t>(f.m)) throw ConstraintError("map output length mismatch");
        s.add(type_of(x, f.qx), type_of(y, f.qy), Rat(1));
        ++count;
    } while (next_word(x, f.qx));
    Rat size(count);
    for (auto& [k, v] : s.entries) {
        v /= size;
        v.canonicalize();
    }
    return s;
}

JointSpectrum joint_spectrum_of_map(const FieldMatrix& a, long domain_limit) {
    return joint_spectrum_of_map(MapSpec::from_matrix(a), domain_limit);
}

SpectrumDecomposition marginals_and_conditionals(const JointSpectrum& s) {
    SpectrumDecomposition d;
    d.marginal_x = Spectrum{s.qx, s.n, {}};
    d.marginal_y = Spectrum{s.qy, s.m, {}};
    for (const auto& [key, v] : s.entries) {
        auto [ix, insx] = d.marginal_x.entries.try_emplace(key.first, v);
        if (!insx) ix->second += v;
        auto [iy, insy] = d.marginal_y.entries.try_emplace(key.second, v);
        if (!insy) iy->second += v;
    }
    d.y_given_x = CondSpectrum{s.qx, s.n, s.qy, s.m, {}};
    d.x_given_y = CondSpectrum{s.qy, s.m, s.qx, s.n, {}};
    for (const auto& [key, v] : s.entries) {
        const auto& [p, q_] = key;
        {
            Spectrum& sl = d.y_given_x.slices.try_emplace(p, Spectrum{s.qy, s.m, {}}).first->second;
            Rat c = v / d.marginal_x.entries.at(p);
            c.canonicalize();
            sl.entries.emplace(q_, c);
        }
        {
            Spectrum& sl = d.x_given_y.slices.try_emplace(q_, Spectrum{s.qx, s.n, {}}).first->second;
            Rat c = v / d.marginal_y.entries.at(q_);
            c.canonicalize();
            sl.entries.emplace(p, c);
        }
    }
    return d;
}

Spectrum kernel_spectrum(const FieldMatrix& a, long domain_limit) {
    check_domain(a.spec().q(), static_cast<long>(a.cols()), domain_limit);
    std::vector<std::vector<int>> kernel;
    std::vector<int> x(a.cols(), 0);
    do {
        std::vector<int> y = a.mat_vec(x);
        if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; })) kernel.push_back(x);
    } while (next_word(x, a.spec().q()));
    return spectrum_of_set(kernel, a.spec().q());
}

std::map<std::pair<TypeVector, TypeVector>, Rat> alpha_of_expected_spectrum(const JointSpectrum& e_s) {
    Rat qxn = rat_pow(Rat(e_s.qx), e_s.n);
    Rat qym = rat_pow(Rat(e_s.qy), e_s.m);
    std::map<std::pair<TypeVector, TypeVector>, Rat> alpha;
    for (const auto& [key, v] : e_s.entries) {
        Rat ambient = Rat(multinomial(key.first)) / qxn * Rat(multinomial(key.second)) / qym;
        Rat a = v / ambient;
        a.canonicalize();
        alpha.emplace(key, a);
    }
    return alpha;
}

Rat permuted_output_type_prob(const MapSpec& f, const std::vector<int>& x, const TypeVector& target,
                              long perm_limit) {
    if (static_cast<long>(x.size()) > perm_limit)
        throw EnumerationLimitError("permutation enumeration limit exceeded: n = " +
                                    std::to_string(x.size()));
    // Every distinct arrangement of the multiset occurs equally often among all n!
    // permutations, so the exact average reduces to a count over arrangements.
    std::vector<int> arr = x;
    std::sort(arr.begin(), arr.end());
    long total = 0, hits = 0;
    do {
        ++total;
        if (type_of(f.apply(arr), f.qy) == target) ++hits;
    } while (std::next_permutation(arr.begin(), arr.end()));
    return make_rat(hits, total);
}

CondSpectrum chain_rule_compose(const CondSpectrum& e_f, const CondSpectrum& e_g) {
    if (e_f.q_out != e_g.q_in || e_f.n_out != e_g.n_in)
        throw ConstraintError("chain rule: intermediate shapes do not match");
    CondSpectrum out{e_f.q_in, e_f.n_in, e_g.q_out, e_g.n_out, {}};
    for (const auto& [o, f_slice] : e_f.slices) {
        Spectrum acc{e_g.q_out, e_g.n_out, {}};
        for (const auto& [p, w] : f_slice.entries) {
            const Spectrum& g_slice = e_g.slice(p);
            for (const auto& [q_, v] : g_slice.entries) {
                Rat term = w * v;
                auto [it, inserted] = acc.entries.try_emplace(q_, term);
                if (!inserted) it->second += term;
            }
        }
        for (auto& [q_, v] : acc.entries) v.canonicalize();
        out.slices.emplace(o, std::move(acc));
    }
    return out;
}

CondSpectrum forward_conditional(const JointSpectrum& joint) {
    return marginals_and_conditionals(joint).y_given_x;
}

}  // namespace spectra
