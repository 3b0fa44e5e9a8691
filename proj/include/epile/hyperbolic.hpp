#pragma once

#include <cmath>

// Ratios of hyperbolic functions that appear throughout the closed-form
// pile response. Written as ratios so cosh/sinh of a large argument never
// materialises: for c beyond kNaiveLimit everything is rescaled by e^-c,
// after which the largest intermediate is e^(|a|-c) <= 1 for |a| <= c.
//
// Templated on the scalar so the kernels can be instantiated with float /
// long double in tests; the rest of the library uses double.

namespace epile::hyperbolic {

inline constexpr double kNaiveLimit = 30.0;

// sinh(a) / (w1*cosh(c) + w2*sinh(c)), with c > 0, w1 + w2 > 0, w1,w2 >= 0.
template <typename Scalar>
Scalar sinh_ratio(Scalar a, Scalar c, Scalar w1, Scalar w2) {
  using std::abs, std::cosh, std::exp, std::sinh;
  if (c <= Scalar(kNaiveLimit)) {
    return sinh(a) / (w1 * cosh(c) + w2 * sinh(c));
  }
  const Scalar m = abs(a);
  const Scalar sign = a < Scalar(0) ? Scalar(-1) : Scalar(1);
  // Numerator and denominator both scaled by 2*e^-c.
  const Scalar num = sign * exp(m - c) * (Scalar(1) - exp(Scalar(-2) * m));
  const Scalar den = w1 * (Scalar(1) + exp(Scalar(-2) * c)) +
                     w2 * (Scalar(1) - exp(Scalar(-2) * c));
  return num / den;
}

// cosh(a) / (w1*cosh(c) + w2*sinh(c)), same domain as sinh_ratio.
template <typename Scalar>
Scalar cosh_ratio(Scalar a, Scalar c, Scalar w1, Scalar w2) {
  using std::abs, std::cosh, std::exp, std::sinh;
  if (c <= Scalar(kNaiveLimit)) {
    return cosh(a) / (w1 * cosh(c) + w2 * sinh(c));
  }
  const Scalar m = abs(a);
  const Scalar num = exp(m - c) * (Scalar(1) + exp(Scalar(-2) * m));
  const Scalar den = w1 * (Scalar(1) + exp(Scalar(-2) * c)) +
                     w2 * (Scalar(1) - exp(Scalar(-2) * c));
  return num / den;
}

// Solves cosh(t) = cosh(c - t) + r*sinh(c - t) for t in [c/2, c), r >= 0.
// This is atanh((cosh c - 1 + r*sinh c) / (sinh c + r*cosh c)) rearranged so
// nothing overflows and r = 0 yields exactly c/2:
//
//   t = (c + log(1 + r - e^-c) - log1p(-(1 - r)*e^-c)) / 2
//
// For r -> infinity t -> c.
template <typename Scalar>
Scalar restrained_crossing(Scalar c, Scalar r) {
  using std::exp, std::log, std::log1p;
  if (r == Scalar(0)) return c / Scalar(2);  // the two logs cancel exactly
  const Scalar e = exp(-c);
  return (c + log(Scalar(1) + r - e) - log1p(-(Scalar(1) - r) * e)) /
         Scalar(2);
}

}  // namespace epile::hyperbolic
