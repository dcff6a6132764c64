#ifndef MOSD_NUMERIC_HPP
#define MOSD_NUMERIC_HPP

#include <cmath>

#include "mosd/types.hpp"

namespace mosd {

/// Dense matrix exponential by scaling and squaring with diagonal Pade
/// approximants, order and scaling chosen by 1-norm thresholds.
/// Relative accuracy around 1e-13 for ||A||_1 <= 10. Throws
/// overflow_error when the result leaves the double range.
Matrix expm(const Matrix& A);

/// log(e^s + c) for c > 0, stable across the whole double range of s.
inline double log_exp_plus(double s, double c) {
  const double lc = std::log(c);
  const double hi = std::max(s, lc);
  return hi + std::log1p(std::exp(-std::abs(s - lc)));
}

/// e^s / (e^s + c) for c > 0 without overflow; a shifted logistic.
inline double exp_fraction(double s, double c) {
  const double w = std::log(c) - s;
  if (w >= 0.0) {
    const double e = std::exp(-w);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(w));
}

}  // namespace mosd

#endif  // MOSD_NUMERIC_HPP
