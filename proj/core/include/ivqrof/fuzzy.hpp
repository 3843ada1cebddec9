#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <vector>

namespace ivqrof {

/// Slack allowed on the orthopair and interval-order checks so that values
/// produced by floating-point aggregation still validate at their rung.
inline constexpr double kValidityTolerance = 1e-12;
/// Absolute tolerance for score/accuracy equality in compare().
inline constexpr double kCompareTolerance = 1e-12;
/// Weight vectors must sum to one within this tolerance.
inline constexpr double kWeightSumTolerance = 1e-9;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Interval-valued q-rung orthopair fuzzy number.
 *
 * Membership [mu_lo, mu_hi] and non-membership [nu_lo, nu_hi] are subintervals
 * of [0,1]. The rung q is not stored here: one rung applies to a whole
 * decision problem, so it is passed to each operation instead.
 */
struct IVqROFN {
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  double nu_lo = 0.0;
  double nu_hi = 0.0;

  Interval membership() const { return {mu_lo, mu_hi}; }
  Interval non_membership() const { return {nu_lo, nu_hi}; }

  /// Exchanges the membership and non-membership intervals.
  IVqROFN swapped() const { return {nu_lo, nu_hi, mu_lo, mu_hi}; }

  /// Neutral element of both sums: ([0,0],[1,1]).
  static constexpr IVqROFN sum_identity() { return {0.0, 0.0, 1.0, 1.0}; }
  /// Neutral element of both products: ([1,1],[0,0]).
  static constexpr IVqROFN product_identity() { return {1.0, 1.0, 0.0, 0.0}; }

  friend bool operator==(const IVqROFN&, const IVqROFN&) = default;
};

std::ostream& operator<<(std::ostream& os, const IVqROFN& a);

/// Operator configuration: rung q >= 1, Hamacher phi > 0, Heronian exponents
/// x, y >= 0 with x + y > 0.
struct AggParams {
  double q = 3.0;
  double phi = 3.0;
  double x = 1.0;
  double y = 1.0;

  friend bool operator==(const AggParams&, const AggParams&) = default;
};

/// Throws InvalidParameter / NonPositivePhi / BothExponentsZero.
void check_params(const AggParams& p);
/// Throws InvalidParameter unless q is finite and q >= 1.
void check_rung(double q);

/// Nonnegative weights summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> entries);

  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> entries_;
};

// --- validity ---------------------------------------------------------------

/// Succeeds iff 0 <= lo <= hi <= 1 on both sides and mu_hi^q + nu_hi^q <= 1.
/// Throws DomainError, IntervalOrderViolation or RungConstraintViolation; the
/// last one reports the excess over 1.
void validate(const IVqROFN& a, double q);
/// Interval-order and [0,1] checks only (no rung involved).
void validate_order(const IVqROFN& a);
bool is_valid(const IVqROFN& a, double q) noexcept;

/// [ (1 - mu_hi^q - nu_hi^q)^(1/q), (1 - mu_lo^q - nu_lo^q)^(1/q) ]
Interval hesitancy(const IVqROFN& a, double q);

// --- algebraic (probabilistic) operations -------------------------------------

IVqROFN alg_sum(const IVqROFN& a, const IVqROFN& b, double q);
IVqROFN alg_prod(const IVqROFN& a, const IVqROFN& b, double q);
IVqROFN alg_scalar_mul(double lambda, const IVqROFN& a, double q);
IVqROFN alg_power(const IVqROFN& a, double lambda, double q);

// --- ranking functions ------------------------------------------------------

enum class ScoreKind {
  Eq6,   ///< 0.5 * (mu_lo - nu_hi(1 - mu_hi) + mu_hi - nu_lo(1 - mu_lo)), default
  QPow,  ///< 0.5 * (mu_lo^q + mu_hi^q - nu_lo^q - nu_hi^q)
};

double score(const IVqROFN& a);
double score_qpow(const IVqROFN& a, double q);
double score(const IVqROFN& a, double q, ScoreKind kind);

/// 0.5 * (mu_lo^q + mu_hi^q + nu_lo^q + nu_hi^q)
double accuracy(const IVqROFN& a, double q);

/// Orders by score, then accuracy; equal when both agree within
/// kCompareTolerance.
std::weak_ordering compare(const IVqROFN& a, const IVqROFN& b, double q,
                           ScoreKind kind = ScoreKind::Eq6);

/// Smallest integer q >= 1 with mu_hi^q + nu_hi^q <= 1 for every number.
/// Throws EmptyInput, or Infeasible when some number has an endpoint equal to
/// one alongside a positive opposite endpoint.
int infer_q(std::span<const IVqROFN> numbers);

}  // namespace ivqrof
