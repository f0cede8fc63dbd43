#pragma once

namespace randfa {

/// The constant alpha_k: unique positive root of x = 1 - e^(-kx).
struct AlphaResult {
    int k;
    double alpha;     ///< in (0, 1)
    double residual;  ///< |alpha - (1 - e^(-k*alpha))|
};

/// Safeguarded Newton on f(x) = x - 1 + e^(-kx), bracketed in [1/2, 1],
/// cross-checked internally against fixed-point iteration from x0 = 1.
/// Throws no_positive_root for k == 1, invalid_parameter for k <= 0.
AlphaResult solve_alpha(int k);

/// Independent route: alpha_k = 1 + W(-k e^(-k))/k with W evaluated by
/// Halley iteration. The nontrivial root has W-argument w = -k(1 - alpha_k)
/// in (-1, 0), i.e. it lies on the principal branch W0; the branch W-1
/// yields w = -k exactly, which is the trivial root 0.
double lambert_w_check(int k);

}  // namespace randfa
