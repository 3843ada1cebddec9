#pragma once

#include <algorithm>
#include <cmath>

namespace ivqrof::detail {

// Generator-pair representation of the Hamacher family.
//
// A value s in [0,1] under the t-conorm is the ratio pair (P, Q) =
// (1 + (phi-1) s, 1 - s), up to a common positive factor; under the t-norm it
// is (1 + (phi-1)(1 - t), t). In this form the t-conorm (or t-norm) of two
// values is the componentwise product of their pairs, the theta-fold operation
// is the componentwise theta-th power, and switching between the two algebras
// is (P, Q) -> (P + (phi^2 - 1) Q, P - Q).
//
// Pairs are stored as (low = Q, gap = P - Q >= 0) so none of these steps
// subtract nearly equal quantities.

enum class Algebra { Conorm, Norm };

constexpr Algebra other(Algebra a) {
  return a == Algebra::Conorm ? Algebra::Norm : Algebra::Conorm;
}

struct GenPair {
  double low = 1.0;
  double gap = 0.0;

  double high() const { return low + gap; }
};

inline GenPair encode(double s, Algebra alg, double phi) {
  if (alg == Algebra::Conorm) return {1.0 - s, phi * s};
  return {s, phi * (1.0 - s)};
}

inline double decode(const GenPair& p, Algebra alg, double phi) {
  const double den = p.gap + phi * p.low;
  const double num = alg == Algebra::Conorm ? p.gap : phi * p.low;
  return std::clamp(num / den, 0.0, 1.0);
}

/// Re-expresses a value held in one algebra's pair form in the other's.
inline GenPair switch_algebra(const GenPair& p, double phi) {
  return {p.gap, phi * phi * p.low};
}

inline GenPair combine(const GenPair& a, const GenPair& b) {
  return {a.low * b.low, a.low * b.gap + a.gap * (b.low + b.gap)};
}

inline GenPair raise(const GenPair& a, double e) {
  if (e == 0.0) return {};
  const double high = a.high();
  const double ratio = std::min(a.gap / high, 1.0);
  const double log_rel = ratio <= 0.5 ? std::log1p(-ratio) : std::log(a.low / high);
  return {std::pow(a.low, e), std::pow(high, e) * -std::expm1(e * log_rel)};
}

}  // namespace ivqrof::detail
