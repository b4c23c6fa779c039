#include "spectra/bounds.hpp"

#include <cmath>
#include <limits>

namespace spectra {

double binary_divergence(double x, double xhat) {
    double acc = 0.0;
    if (x > 0.0) acc += x * std::log(x / xhat);
    if (x < 1.0) acc += (1.0 - x) * std::log((1.0 - x) / (1.0 - xhat));
    return acc;
}

double delta_d_objective(int q, long d, double x, double y, double xhat) {
    double t = (q * xhat - 1.0) / (q - 1.0);
    double td = std::pow(t, static_cast<double>(d));
    // 1 - t^d and 1 + (q-1)t^d are strictly positive on xhat in (0, 1).
    return d * binary_divergence(x, xhat) + y * std::log1p((q - 1.0) * td) +
           (1.0 - y) * std::log1p(-td);
}

DeltaDParams delta_d(int q, long d, double x, double y, double tol) {
    FieldSpec spec(q);
    if (d < 1) throw ConstraintError("delta_d requires d >= 1");
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
        throw ConstraintError("delta_d requires x, y in [0, 1]");

    auto f = [&](double xh) { return delta_d_objective(q, d, x, y, xh); };

    // The objective can diverge to -inf as xhat -> 1 (when d(1-x) < 1-y), so
    // the numerical search fixes the closed interval [kEdge, 1-kEdge]. The
    // value at any interior point upper-bounds the true infimum, so every
    // inequality built on top of this stays valid.
    constexpr double kEdge = 1e-6;
    constexpr int kGrid = 1024;
    const double span = 1.0 - 2.0 * kEdge;
    double best_x = 0.5, best_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
        double xh = kEdge + span * static_cast<double>(i) / kGrid;
        double v = f(xh);
        if (v < best_v) {
            best_v = v;
            best_x = xh;
        }
    }
    // x itself is the divergence minimizer; always probe it when interior.
    if (x > kEdge && x < 1.0 - kEdge && f(x) < best_v) {
        best_v = f(x);
        best_x = x;
    }

    double lo = std::max(best_x - span / kGrid, kEdge);
    double hi = std::min(best_x + span / kGrid, 1.0 - kEdge);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
    double f1 = f(c1), f2 = f(c2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - phi * (b - a);
            f1 = f(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + phi * (b - a);
            f2 = f(c2);
        }
    }
    double xm = (a + b) / 2;
    double vm = f(xm);
    if (best_v < vm) {
        vm = best_v;
        xm = best_x;
    }
    return DeltaDParams{q, d, x, y, xm, vm};
}

double sup_delta_d(int q, long d, double gamma, double x_step, double y_step) {
    double best = -std::numeric_limits<double>::infinity();
    for (double x = 0.0; x < 1.0 - gamma; x += x_step)
        for (double y = 0.0; y <= 1.0 + 1e-12; y += y_step)
            best = std::max(best, delta_d(q, d, x, std::min(y, 1.0)).value);
    return best;
}

std::optional<long> d0_search(int q, double gamma, double delta, double c_over_d, long d_max,
                              double x_step, double y_step) {
    for (long d = 1; d <= d_max; ++d) {
        if (c_over_d * sup_delta_d(q, d, gamma, x_step, y_step) <= delta) return d;
    }
    return std::nullopt;
}

BoundReport ldgm_alpha_bound(int q, long n, long c, long d, const TypeVector& input_type,
                             const TypeVector& output_type) {
    const long m = LdgmParams{q, n, c, d}.output_len();
    if (input_type.q != q || input_type.n != n) throw ConstraintError("input type must have length n");
    if (output_type.q != q || output_type.n != m) throw ConstraintError("output type must have length m");
    if (input_type.is_zero_type())
        throw ConstraintError("the bound excludes P = P_0 (the deterministic-code special case applies there)");

    // The repetition layer is spectrum-diagonal, so the exact expected LDGM
    // conditional equals the parallel-check conditional at O = P scaled to
    // length n*c = m*d.
    TypeVector scaled = input_type.scaled(c);
    Rat e_joint = expected_chk_parallel_spectrum(q, d, m, scaled, output_type);
    Rat ambient_o = Rat(multinomial(scaled)) / rat_pow(Rat(q), m * d);
    Rat ambient_q = Rat(multinomial(output_type)) / rat_pow(Rat(q), m);
    Rat alpha = e_joint / ambient_o / ambient_q;
    alpha.canonicalize();

    BoundReport rep;
    rep.context = "ldgm alpha bound q=" + std::to_string(q) + " n=" + std::to_string(n) +
                  " c=" + std::to_string(c) + " d=" + std::to_string(d);
    rep.lhs = (alpha == 0) ? -std::numeric_limits<double>::infinity()
                           : rat_log(alpha) / static_cast<double>(n);
    double x = rat_to_double(input_type.prob(0));
    double y = rat_to_double(output_type.prob(0));
    double stirling = static_cast<double>(q) * std::log(static_cast<double>(m * d + 1)) /
                      static_cast<double>(n);
    rep.rhs = (static_cast<double>(c) / static_cast<double>(d)) * delta_d(q, d, x, y).value + stirling;
    rep.satisfied = rep.lhs <= rep.rhs + 1e-12;
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

}  // namespace spectra
