#pragma once

// Scalar Hamacher and probabilistic kernels on [0,1], written once for any
// floating type. `double` serves the public API; the oracle instantiates the
// same formulas in a wider type.

#include <algorithm>
#include <cmath>

#if defined(IVQROF_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace ivqrof::kernel {

#if defined(IVQROF_HAVE_QUADMATH)
__extension__ typedef __float128 wide_t;
#else
using wide_t = long double;
#endif

inline double pow_(double a, double b) { return std::pow(a, b); }
inline double log_(double a) { return std::log(a); }
inline double log1p_(double a) { return std::log1p(a); }
inline double expm1_(double a) { return std::expm1(a); }
inline bool finite_(double a) { return std::isfinite(a); }

#if defined(IVQROF_HAVE_QUADMATH)
inline wide_t pow_(wide_t a, wide_t b) { return powq(a, b); }
inline wide_t log_(wide_t a) { return logq(a); }
inline wide_t log1p_(wide_t a) { return log1pq(a); }
inline wide_t expm1_(wide_t a) { return expm1q(a); }
inline bool finite_(wide_t a) { return finiteq(a) != 0; }
#else
inline wide_t pow_(wide_t a, wide_t b) { return std::pow(a, b); }
inline wide_t log_(wide_t a) { return std::log(a); }
inline wide_t log1p_(wide_t a) { return std::log1p(a); }
inline wide_t expm1_(wide_t a) { return std::expm1(a); }
inline bool finite_(wide_t a) { return std::isfinite(a); }
#endif

template <class T>
T clamp_unit(T v) {
  return std::clamp(v, T(0), T(1));
}

/// big^theta - small^theta for big >= small >= 0, with gap = big - small
/// supplied exactly so nearby arguments do not cancel.
template <class T>
T power_gap(T big, T small, T gap, T theta) {
  const T ratio = std::min(gap / big, T(1));
  const T log_rel = ratio <= T(0.5) ? log1p_(-ratio) : log_(small / big);
  return pow_(big, theta) * -expm1_(theta * log_rel);
}

/// Returns false when a denominator is unusable; `out` is then untouched.
template <class T>
bool quotient(T num, T den, T& out) {
  if (!(den > T(0)) || !finite_(den) || !finite_(num)) return false;
  out = clamp_unit(num / den);
  return true;
}

template <class T>
bool hamacher_sum(T a, T b, T phi, T& out) {
  const T num = a * (T(1) - b) + b * (T(1) - a) + phi * a * b;
  const T den = T(1) + (phi - T(1)) * a * b;
  if (!quotient(num, den, out)) return false;
  if (out > T(0.5)) out = T(1) - (T(1) - a) * (T(1) - b) / den;
  return true;
}

template <class T>
bool hamacher_prod(T a, T b, T phi, T& out) {
  const T den = phi * (T(1) - a) * (T(1) - b) + (a + b * (T(1) - a));
  return quotient(a * b, den, out);
}

template <class T>
bool hamacher_multiple(T s, T theta, T phi, T& out) {
  const T big = T(1) + (phi - T(1)) * s;
  const T small = T(1) - s;
  const T num = power_gap(big, small, phi * s, theta);
  const T den = num + phi * pow_(small, theta);
  return quotient(num, den, out);
}

template <class T>
bool hamacher_power(T t, T theta, T phi, T& out) {
  const T big = T(1) + (phi - T(1)) * (T(1) - t);
  const T t_theta = pow_(t, theta);
  const T den = power_gap(big, t, phi * (T(1) - t), theta) + phi * t_theta;
  return quotient(phi * t_theta, den, out);
}

/// s1 + s2 - s1 s2
template <class T>
T prob_sum(T s1, T s2) {
  return s1 + s2 * (T(1) - s1);
}

/// 1 - (1 - s)^lambda
template <class T>
T prob_multiple(T s, T lambda) {
  return -expm1_(lambda * log1p_(-s));
}

}  // namespace ivqrof::kernel
