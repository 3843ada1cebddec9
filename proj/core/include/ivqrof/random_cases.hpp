#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ivqrof/fuzzy.hpp"

namespace ivqrof {

/// Seeded generator of random operator inputs. The same seed gives the same
/// sequence of cases within one build.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  template <class T>
  const T& pick(const std::vector<T>& options) {
    return options[index(options.size())];
  }

  /// Valid at rung q: the membership interval is drawn first, then the
  /// non-membership interval inside what the rung leaves over.
  IVqROFN number(double q) {
    const double a = uniform();
    const double b = uniform();
    const double mu_hi = std::max(a, b);
    const double mu_lo = std::min(a, b);
    const double cap = std::pow(1.0 - std::pow(mu_hi, q), 1.0 / q);
    const double c = uniform() * cap;
    const double d = uniform() * cap;
    return {mu_lo, mu_hi, std::min(c, d), std::max(c, d)};
  }

  std::vector<IVqROFN> numbers(std::size_t n, double q) {
    std::vector<IVqROFN> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(number(q));
    return out;
  }

  /// Positive weights normalised to sum to one.
  WeightVector weights(std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
      x = uniform(0.01, 1.0);
      sum += x;
    }
    for (auto& x : w) x /= sum;
    return WeightVector(std::move(w));
  }

  /// A number that dominates `a` (memberships no lower, non-memberships no
  /// higher) and stays valid at rung q.
  IVqROFN dominating(const IVqROFN& a, double q) {
    const double t = uniform();
    const double s = uniform();
    IVqROFN b;
    b.mu_hi = a.mu_hi + (1.0 - a.mu_hi) * t * 0.5;
    b.mu_lo = std::min(b.mu_hi, a.mu_lo + (1.0 - a.mu_lo) * s * 0.5);
    const double cap = std::pow(1.0 - std::pow(b.mu_hi, q), 1.0 / q);
    b.nu_hi = std::min(a.nu_hi * (1.0 - t), cap);
    b.nu_lo = std::min(b.nu_hi, a.nu_lo * (1.0 - s));
    return b;
  }

  /// Uniformly random permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The parameter grid used by the fuzzing suites.
struct FuzzDomain {
  std::vector<double> q{1.0, 2.0, 3.0};
  std::vector<double> phi{0.5, 1.0, 2.0, 3.0};
  std::vector<std::pair<double, double>> xy{{1, 0}, {0, 1}, {1, 1}, {2, 3}, {3, 3}};
  std::size_t max_n = 5;
};

struct FuzzCase {
  std::vector<IVqROFN> values;
  WeightVector weights = WeightVector::uniform(1);
  AggParams params;
};

inline FuzzCase draw_case(CaseGenerator& gen, const FuzzDomain& dom = {}) {
  FuzzCase c;
  const std::size_t n = 1 + gen.index(dom.max_n);
  c.params.q = gen.pick(dom.q);
  c.params.phi = gen.pick(dom.phi);
  const auto& xy = gen.pick(dom.xy);
  c.params.x = xy.first;
  c.params.y = xy.second;
  c.values = gen.numbers(n, c.params.q);
  c.weights = gen.weights(n);
  return c;
}

}  // namespace ivqrof
