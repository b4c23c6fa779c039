#pragma once

#include <optional>

#include "spectra/ensemble.hpp"

namespace spectra {

/// Binary Kullback-Leibler divergence with the 0 ln 0 = 0 convention.
double binary_divergence(double x, double xhat);

struct DeltaDParams {
    int q = 0;
    long d = 0;
    double x = 0.0, y = 0.0;
    double minimizer = 0.0;  // xhat in (0, 1)
    double value = 0.0;
};

/// Objective d*D(x||xhat) + y*ln[1+(q-1)t^d] + (1-y)*ln[1-t^d], t = (q*xhat-1)/(q-1).
double delta_d_objective(int q, long d, double x, double y, double xhat);

/// Minimize the objective over xhat in [1e-6, 1-1e-6] (coarse grid, then
/// golden-section). The interval is clamped because the objective can diverge
/// to -inf at the right edge; the returned value is the objective at the found
/// minimizer, so it is always a valid upper bound for the infimum-based
/// exponent.
DeltaDParams delta_d(int q, long d, double x, double y, double tol = 1e-10);

/// sup of delta_d over the grid x in [0, 1-gamma), y in [0, 1].
double sup_delta_d(int q, long d, double gamma, double x_step = 0.01, double y_step = 0.05);

/// Least d <= d_max with (c/d)*sup_{x<1-gamma, y} delta_d(x, y) <= delta, where
/// the rate ratio c/d is held fixed.
std::optional<long> d0_search(int q, double gamma, double delta, double c_over_d, long d_max,
                              double x_step = 0.01, double y_step = 0.05);

/// Compares the exact (1/n) ln alpha(F_LD)(P, Q) against the delta_d bound plus
/// an explicit finite-size term q*ln(m*d+1)/n from the type-counting bound
/// (n+1)^{-q} e^{nH(P)} <= multinomial(P).
BoundReport ldgm_alpha_bound(int q, long n, long c, long d, const TypeVector& input_type,
                             const TypeVector& output_type);

}  // namespace spectra
