#include "glint/rng.hpp"

#include <cmath>

namespace glint {

namespace {
double log_factorial(long k) {
    static const double table[] = {0.0, 0.0, 0.693147180559945, 1.791759469228055,
                                   3.178053830347946, 4.787491742782046, 6.579251212010101,
                                   8.525161361065415, 10.604602902745251, 12.801827480081469};
    if (k < 10) return table[k];
    // Stirling with correction terms
    const double x = k + 1.0;
    return (x - 0.5) * std::log(x) - x + 0.9189385332046727 + 1.0 / (12.0 * x) - 1.0 / (360.0 * x * x * x);
}
} // namespace

long Rng::poisson(double mu) {
    if (mu <= 0.0) return 0;
    if (mu < 30.0) {
        // inversion by sequential search
        const double l = std::exp(-mu);
        double p = 1.0;
        long k = 0;
        do {
            ++k;
            p *= uniform();
        } while (p > l);
        return k - 1;
    }
    // PTRS (Hormann): transformed rejection with squeeze
    const double b = 0.931 + 2.53 * std::sqrt(mu);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        double u = uniform() - 0.5;
        double v = uniform();
        const double us = 0.5 - std::abs(u);
        const long k = static_cast<long>(std::floor((2.0 * a / us + b) * u + mu + 0.43));
        if (us >= 0.07 && v <= v_r) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <= k * std::log(mu) - mu - log_factorial(k))
            return k;
    }
}

} // namespace glint
