#pragma once

#include <algorithm>
#include <cmath>

#include "core.hpp"

// Closed-form competitive-ratio curves for two-valued instances with heavy
// weight alpha. All public entry points require alpha > 1; the detail
// formulas stay finite down to alpha = 1 for curve sweeps.

namespace bdsched {

namespace detail {

inline double barely_random_ratio_formula(double a) {
    return (a * a + 2.0 * a - 1.0) / (a * a + a);
}

inline double mix_probability_formula(double a) {
    return (a * a - 1.0) / (a * a + 2.0 * a - 1.0);
}

// Worst case of Greedy: lose the light urgent job of the lower-bound pair.
inline double greedy_curve_formula(double a) { return (1.0 + a) / a; }

// Worst case of PEDF: trade a heavy job for the light urgent one.
inline double pedf_curve_formula(double a) { return 2.0 * a / (1.0 + a); }

inline void require_alpha(double a) {
    if (!(a > 1.0))
        throw std::domain_error("alpha " + format_double(a) + " must exceed 1");
}

}  // namespace detail

// Competitive ratio of the optimal Greedy/PEDF mixture:
// R(alpha) = (alpha^2 + 2 alpha - 1) / (alpha^2 + alpha) = 1 + (alpha-1)/(alpha^2+alpha).
// Peaks at alpha = 1 + sqrt(2) with value 4 - 2 sqrt(2).
inline double barely_random_ratio(double alpha) {
    detail::require_alpha(alpha);
    return detail::barely_random_ratio_formula(alpha);
}

// Probability of running Greedy in the optimal two-point mixture:
// p(alpha) = (alpha^2 - 1) / (alpha^2 + 2 alpha - 1).
inline double mix_probability(double alpha) {
    detail::require_alpha(alpha);
    return detail::mix_probability_formula(alpha);
}

// Best deterministic ratio: min{(1+alpha)/alpha, 2 alpha/(1+alpha)}. The two
// branches cross at alpha = 1 + sqrt(2) where both equal sqrt(2).
inline double deterministic_ratio(double alpha) {
    detail::require_alpha(alpha);
    return std::min(detail::greedy_curve_formula(alpha), detail::pedf_curve_formula(alpha));
}

}  // namespace bdsched
