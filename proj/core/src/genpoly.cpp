#include "spectra/genpoly.hpp"

#include <numeric>

namespace spectra {

GenPoly GenPoly::constant(int nu, int nv, const Rat& c) {
    GenPoly g(nu, nv);
    g.add_term(std::vector<int>(static_cast<std::size_t>(nu + nv), 0), c);
    return g;
}

GenPoly GenPoly::variable(int nu, int nv, int idx) {
    if (idx < 0 || idx >= nu + nv) throw ConstraintError("genpoly variable index out of range");
    GenPoly g(nu, nv);
    std::vector<int> e(static_cast<std::size_t>(nu + nv), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    g.add_term(e, Rat(1));
    return g;
}

GenPoly GenPoly::sum_of_block(int nu, int nv, int offset, int count) {
    GenPoly g(nu, nv);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<std::size_t>(nu + nv), 0);
        e[static_cast<std::size_t>(offset + i)] = 1;
        g.add_term(e, Rat(1));
    }
    return g;
}

void GenPoly::add_term(const std::vector<int>& exps, const Rat& coeff) {
    if (exps.size() != static_cast<std::size_t>(nu_ + nv_))
        throw ConstraintError("genpoly exponent vector has wrong length");
    for (int e : exps)
        if (e < 0) throw ConstraintError("genpoly exponents must be non-negative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        it->second.canonicalize();
        if (it->second == 0) terms_.erase(it);
    }
}

GenPoly GenPoly::operator+(const GenPoly& rhs) const {
    if (nu_ != rhs.nu_ || nv_ != rhs.nv_) throw ConstraintError("genpoly variable sets differ");
    GenPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

GenPoly GenPoly::operator-(const GenPoly& rhs) const {
    if (nu_ != rhs.nu_ || nv_ != rhs.nv_) throw ConstraintError("genpoly variable sets differ");
    GenPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

GenPoly GenPoly::operator*(const GenPoly& rhs) const {
    if (nu_ != rhs.nu_ || nv_ != rhs.nv_) throw ConstraintError("genpoly variable sets differ");
    GenPoly out(nu_, nv_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            std::vector<int> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

GenPoly GenPoly::scaled(const Rat& c) const {
    GenPoly out(nu_, nv_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) {
        Rat w = v * c;
        w.canonicalize();
        out.terms_.emplace(e, w);
    }
    return out;
}

GenPoly GenPoly::pow(long e) const {
    if (e < 0) throw ConstraintError("genpoly negative power");
    GenPoly result = constant(nu_, nv_, Rat(1));
    GenPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Rat GenPoly::coef(const std::vector<int>& exps) const {
    if (exps.size() != static_cast<std::size_t>(nu_ + nv_))
        throw ConstraintError("coef: exponent vector has wrong length");
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat GenPoly::eval_at_ones() const {
    Rat t(0);
    for (const auto& [e, c] : terms_) t += c;
    t.canonicalize();
    return t;
}

GenPoly genpoly_from_spectrum(const Spectrum& s) {
    GenPoly g(s.q, 0);
    for (const auto& [p, v] : s.entries) {
        std::vector<int> e(p.counts.begin(), p.counts.end());
        g.add_term(e, v);
    }
    return g;
}

GenPoly genpoly_from_spectrum(const JointSpectrum& s) {
    GenPoly g(s.qx, s.qy);
    for (const auto& [key, v] : s.entries) {
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(s.qx + s.qy));
        for (long c : key.first.counts) e.push_back(static_cast<int>(c));
        for (long c : key.second.counts) e.push_back(static_cast<int>(c));
        g.add_term(e, v);
    }
    return g;
}

Spectrum spectrum_from_genpoly(const GenPoly& g, long n) {
    if (g.nv() != 0) throw ConstraintError("joint genpoly cannot convert to a univariate-block spectrum");
    Spectrum s{g.nu(), n, {}};
    for (const auto& [e, c] : g.terms()) {
        long deg = std::accumulate(e.begin(), e.end(), 0L);
        if (deg != n) throw ConstraintError("genpoly is not homogeneous of the expected degree");
        s.entries.emplace(TypeVector(g.nu(), std::vector<long>(e.begin(), e.end())), c);
    }
    return s;
}

JointSpectrum joint_spectrum_from_genpoly(const GenPoly& g, long n, long m) {
    JointSpectrum s{g.nu(), n, g.nv(), m, {}};
    for (const auto& [e, c] : g.terms()) {
        std::vector<long> pu(e.begin(), e.begin() + g.nu());
        std::vector<long> pv(e.begin() + g.nu(), e.end());
        long du = std::accumulate(pu.begin(), pu.end(), 0L);
        long dv = std::accumulate(pv.begin(), pv.end(), 0L);
        if (du != n || dv != m) throw ConstraintError("genpoly is not bi-homogeneous of the expected degrees");
        s.entries.emplace(std::make_pair(TypeVector(g.nu(), std::move(pu)), TypeVector(g.nv(), std::move(pv))), c);
    }
    return s;
}

}  // namespace spectra
