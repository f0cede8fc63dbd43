#include "randfa/alpha.hpp"

#include <cmath>
#include <cstdlib>

#include "randfa/errors.hpp"

namespace randfa {

namespace {

void check_k(int k) {
    if (k <= 0)
        throw invalid_parameter("alpha_k requires k >= 2");
    if (k == 1)
        throw no_positive_root("x = 1 - e^(-x) has no positive root");
}

}  // namespace

AlphaResult solve_alpha(int k) {
    check_k(k);

    // Newton on f(x) = x - 1 + e^(-kx), safeguarded by the bracket [1/2, 1].
    // f(1/2) = e^(-k/2) - 1/2 < 0 for k >= 2 and f(1) = e^(-k) > 0, so the
    // nontrivial root is inside; the trivial root 0 is excluded.
    double lo = 0.5, hi = 1.0;
    double x = 0.75;
    for (int iter = 0; iter < 200; ++iter) {
        double ekx = std::exp(-double(k) * x);
        double f = x - 1.0 + ekx;
        double fp = 1.0 - double(k) * ekx;
        if (f > 0.0) hi = x; else lo = x;
        double step = f / fp;
        double next = x - step;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);  // bisection fallback
        if (std::abs(next - x) < 1e-16) { x = next; break; }
        x = next;
    }

    // cross-check: fixed-point iteration x <- 1 - e^(-kx) from x0 = 1
    // (contraction: |d/dx| = k(1 - alpha_k) < 1 for k >= 2)
    double y = 1.0;
    for (int iter = 0; iter < 10000; ++iter) {
        double next = 1.0 - std::exp(-double(k) * y);
        if (std::abs(next - y) < 1e-15) { y = next; break; }
        y = next;
    }
    if (std::abs(x - y) > 1e-9)
        throw contract_violation("solve_alpha: Newton and fixed-point routes disagree");

    double residual = std::abs(x - (1.0 - std::exp(-double(k) * x)));
    return AlphaResult{k, x, residual};
}

double lambert_w_check(int k) {
    check_k(k);

    // Solve w e^w = a with a = -k e^(-k) in (-1/e, 0). The two real
    // solutions are w = -k (branch W-1, giving the trivial root 0) and the
    // principal-branch value w = -k(1 - alpha_k) in (-1, 0); Halley seeded
    // at a stays on the principal branch.
    const double a = -double(k) * std::exp(-double(k));
    double w = a;
    for (int iter = 0; iter < 100; ++iter) {
        double ew = std::exp(w);
        double f = w * ew - a;
        double wp1 = w + 1.0;
        double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        double next = w - f / denom;
        if (std::abs(next - w) < 1e-16) { w = next; break; }
        w = next;
    }
    return 1.0 + w / double(k);
}

}  // namespace randfa
