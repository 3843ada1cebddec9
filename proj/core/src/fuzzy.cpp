#include "ivqrof/fuzzy.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ivqrof/error.hpp"

namespace ivqrof {

namespace {

std::string describe(const IVqROFN& a) {
  std::ostringstream os;
  os.precision(10);
  os << a;
  return os.str();
}

// 1 - (1 - s)^lambda without cancellation for small s.
double complement_power(double s, double lambda) {
  return -std::expm1(lambda * std::log1p(-s));
}

void check_scalar(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream os;
    os << "scalar must be positive and finite, got " << lambda;
    throw Error(ErrorCode::NonPositiveScalar, os.str());
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const IVqROFN& a) {
  return os << "([" << a.mu_lo << ", " << a.mu_hi << "], [" << a.nu_lo << ", "
            << a.nu_hi << "])";
}

void check_rung(double q) {
  if (!std::isfinite(q) || q < 1.0) {
    std::ostringstream os;
    os << "rung q must satisfy q >= 1, got " << q;
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
}

void check_params(const AggParams& p) {
  check_rung(p.q);
  if (!(p.phi > 0.0) || !std::isfinite(p.phi)) {
    std::ostringstream os;
    os << "Hamacher parameter phi must be positive, got " << p.phi;
    throw Error(ErrorCode::NonPositivePhi, os.str());
  }
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.y < 0.0) {
    std::ostringstream os;
    os << "Heronian exponents must be nonnegative, got x=" << p.x << " y=" << p.y;
    throw Error(ErrorCode::InvalidParameter, os.str());
  }
  if (p.x + p.y <= 0.0) {
    throw Error(ErrorCode::BothExponentsZero,
                "Heronian exponents x and y must not both be zero");
  }
}

WeightVector::WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::EmptyInput, "weight vector is empty");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double w = entries_[i];
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      std::ostringstream os;
      os << "weight " << i << " = " << w << " is outside [0,1]";
      throw Error(ErrorCode::WeightSumViolation, os.str());
    }
  }
  const double sum = std::accumulate(entries_.begin(), entries_.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(12);
    os << "weights sum to " << sum << ", expected 1";
    throw Error(ErrorCode::WeightSumViolation, os.str());
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "weight vector is empty");
  }
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

void validate_order(const IVqROFN& a) {
  for (double v : {a.mu_lo, a.mu_hi, a.nu_lo, a.nu_hi}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::DomainError,
                  "endpoint outside [0,1] in " + describe(a));
    }
  }
  if (a.mu_lo > a.mu_hi + kValidityTolerance) {
    throw Error(ErrorCode::IntervalOrderViolation,
                "membership lower bound exceeds upper bound in " + describe(a));
  }
  if (a.nu_lo > a.nu_hi + kValidityTolerance) {
    throw Error(ErrorCode::IntervalOrderViolation,
                "non-membership lower bound exceeds upper bound in " + describe(a));
  }
}

void validate(const IVqROFN& a, double q) {
  check_rung(q);
  validate_order(a);
  const double total = std::pow(a.mu_hi, q) + std::pow(a.nu_hi, q);
  if (total > 1.0 + kValidityTolerance) {
    std::ostringstream os;
    os.precision(10);
    os << "mu_hi^q + nu_hi^q = " << total << " exceeds 1 by " << (total - 1.0)
       << " at q=" << q << " in " << describe(a);
    throw Error(ErrorCode::RungConstraintViolation, os.str());
  }
}

bool is_valid(const IVqROFN& a, double q) noexcept {
  try {
    validate(a, q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Interval hesitancy(const IVqROFN& a, double q) {
  validate(a, q);
  auto residual = [q](double u, double v) {
    const double r = 1.0 - std::pow(u, q) - std::pow(v, q);
    return std::pow(std::max(r, 0.0), 1.0 / q);
  };
  return {residual(a.mu_hi, a.nu_hi), residual(a.mu_lo, a.nu_lo)};
}

IVqROFN alg_sum(const IVqROFN& a, const IVqROFN& b, double q) {
  validate(a, q);
  validate(b, q);
  auto conorm = [q](double u1, double u2) {
    const double s1 = std::pow(u1, q);
    const double s2 = std::pow(u2, q);
    // s1 + s2 - s1 s2 written as a sum of nonnegative terms
    return std::pow(s1 + s2 * (1.0 - s1), 1.0 / q);
  };
  return {conorm(a.mu_lo, b.mu_lo), conorm(a.mu_hi, b.mu_hi), a.nu_lo * b.nu_lo,
          a.nu_hi * b.nu_hi};
}

IVqROFN alg_prod(const IVqROFN& a, const IVqROFN& b, double q) {
  validate(a, q);
  validate(b, q);
  auto conorm = [q](double v1, double v2) {
    const double s1 = std::pow(v1, q);
    const double s2 = std::pow(v2, q);
    return std::pow(s1 + s2 * (1.0 - s1), 1.0 / q);
  };
  return {a.mu_lo * b.mu_lo, a.mu_hi * b.mu_hi, conorm(a.nu_lo, b.nu_lo),
          conorm(a.nu_hi, b.nu_hi)};
}

IVqROFN alg_scalar_mul(double lambda, const IVqROFN& a, double q) {
  check_scalar(lambda);
  validate(a, q);
  auto grow = [q, lambda](double u) {
    return std::pow(complement_power(std::pow(u, q), lambda), 1.0 / q);
  };
  return {grow(a.mu_lo), grow(a.mu_hi), std::pow(a.nu_lo, lambda),
          std::pow(a.nu_hi, lambda)};
}

IVqROFN alg_power(const IVqROFN& a, double lambda, double q) {
  check_scalar(lambda);
  validate(a, q);
  auto grow = [q, lambda](double v) {
    return std::pow(complement_power(std::pow(v, q), lambda), 1.0 / q);
  };
  return {std::pow(a.mu_lo, lambda), std::pow(a.mu_hi, lambda), grow(a.nu_lo),
          grow(a.nu_hi)};
}

double score(const IVqROFN& a) {
  validate_order(a);
  return 0.5 * (a.mu_lo - a.nu_hi * (1.0 - a.mu_hi) + a.mu_hi -
                a.nu_lo * (1.0 - a.mu_lo));
}

double score_qpow(const IVqROFN& a, double q) {
  check_rung(q);
  validate_order(a);
  return 0.5 * (std::pow(a.mu_lo, q) + std::pow(a.mu_hi, q) - std::pow(a.nu_lo, q) -
                std::pow(a.nu_hi, q));
}

double score(const IVqROFN& a, double q, ScoreKind kind) {
  return kind == ScoreKind::Eq6 ? score(a) : score_qpow(a, q);
}

double accuracy(const IVqROFN& a, double q) {
  check_rung(q);
  validate_order(a);
  return 0.5 * (std::pow(a.mu_lo, q) + std::pow(a.mu_hi, q) + std::pow(a.nu_lo, q) +
                std::pow(a.nu_hi, q));
}

std::weak_ordering compare(const IVqROFN& a, const IVqROFN& b, double q,
                           ScoreKind kind) {
  const double sa = score(a, q, kind);
  const double sb = score(b, q, kind);
  if (std::abs(sa - sb) > kCompareTolerance) {
    return sa < sb ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  const double ha = accuracy(a, q);
  const double hb = accuracy(b, q);
  if (std::abs(ha - hb) > kCompareTolerance) {
    return ha < hb ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

int infer_q(std::span<const IVqROFN> numbers) {
  if (numbers.empty()) {
    throw Error(ErrorCode::EmptyInput, "cannot infer q from an empty collection");
  }
  for (const auto& a : numbers) {
    validate_order(a);
    if ((a.mu_hi >= 1.0 && a.nu_hi > 0.0) || (a.nu_hi >= 1.0 && a.mu_hi > 0.0)) {
      throw Error(ErrorCode::Infeasible,
                  "no finite rung admits " + describe(a));
    }
  }
  auto feasible = [numbers](int q) {
    for (const auto& a : numbers) {
      if (std::pow(a.mu_hi, q) + std::pow(a.nu_hi, q) > 1.0) return false;
    }
    return true;
  };
  if (feasible(1)) return 1;
  // u^q + v^q is nonincreasing in q, so bracket then bisect.
  int lo = 1;
  int hi = 2;
  while (!feasible(hi)) {
    if (hi > (1 << 29)) {
      throw Error(ErrorCode::Infeasible, "inferred rung exceeds 2^30");
    }
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace ivqrof
