#include "ivqrof/heronian.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "ivqrof/detail/pair_algebra.hpp"
#include "ivqrof/error.hpp"

namespace ivqrof {

namespace {

using detail::Algebra;
using detail::GenPair;

enum class Step { Sum, Prod, Scalar, Power };

// Which algebra a step uses on the membership side; the non-membership side
// always uses the other one.
Algebra membership_algebra(Step s) {
  return (s == Step::Sum || s == Step::Scalar) ? Algebra::Conorm : Algebra::Norm;
}

struct Plan {
  bool weighted;  // inputs first raised to their weights (a Power step)
  Step scale;     // applies x to a_i and y to a_j
  Step pair;      // joins the scaled i and j terms
  Step spread;    // applies 2/(n(n+1)) to each pair term
  Step outer;     // folds the pair terms together
  Step final;     // applies 1/(x+y)
};

Plan plan_for(Operator op) {
  switch (op) {
    case Operator::Hmm:
      return {false, Step::Scalar, Step::Sum, Step::Power, Step::Prod, Step::Scalar};
    case Operator::Hhmwa:
      return {true, Step::Scalar, Step::Sum, Step::Power, Step::Prod, Step::Scalar};
    case Operator::HhmgaDual:
      return {true, Step::Power, Step::Prod, Step::Scalar, Step::Sum, Step::Power};
    case Operator::HhmgaLiteral:
      return {true, Step::Scalar, Step::Prod, Step::Power, Step::Sum, Step::Scalar};
  }
  return {};
}

struct Rep {
  GenPair pair;
  Algebra alg;
};

Rep in_algebra(const Rep& r, Algebra target, double phi) {
  if (r.alg == target) return r;
  return {detail::switch_algebra(r.pair, phi), target};
}

void check_finite(const GenPair& g, const char* where) {
  if (!std::isfinite(g.low) || !std::isfinite(g.gap) || g.low < 0.0 || g.gap < 0.0) {
    std::ostringstream os;
    os << "closed form: non-finite or negative generator pair at " << where << " ("
       << g.low << ", " << g.gap << ")";
    throw Error(ErrorCode::NumericalDegeneracy, os.str());
  }
}

struct SideResult {
  std::vector<GenPair> helpers;
  GenPair acc;  // final pair before decoding
  double value = 0.0;
};

// Closed form for one endpoint of one side. `powers` holds the q-th powers of
// that endpoint across the inputs.
SideResult evaluate_side(const Plan& plan, bool membership, std::span<const double> powers,
                         std::span<const double> weights, const AggParams& p) {
  auto alg = [membership](Step s) {
    const Algebra m = membership_algebra(s);
    return membership ? m : detail::other(m);
  };
  const double phi = p.phi;
  const std::size_t n = powers.size();

  std::vector<Rep> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (plan.weighted) {
      const Algebra a = alg(Step::Power);
      elements.push_back({detail::raise(detail::encode(powers[i], a, phi), weights[i]), a});
    } else {
      const Algebra a = alg(plan.scale);
      elements.push_back({detail::encode(powers[i], a, phi), a});
    }
  }

  const double spread = 2.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
  SideResult out;
  out.helpers.reserve(n * (n + 1) / 2);
  Rep total{GenPair{}, alg(plan.outer)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rep lhs = in_algebra(elements[i], alg(plan.scale), phi);
    const GenPair scaled_i = detail::raise(lhs.pair, p.x);
    for (std::size_t j = i; j < n; ++j) {
      const Rep rhs = in_algebra(elements[j], alg(plan.scale), phi);
      const GenPair scaled_j = detail::raise(rhs.pair, p.y);
      const Rep left = in_algebra({scaled_i, lhs.alg}, alg(plan.pair), phi);
      const Rep right = in_algebra({scaled_j, rhs.alg}, alg(plan.pair), phi);
      const Rep term{detail::combine(left.pair, right.pair), alg(plan.pair)};
      check_finite(term.pair, "pair term");
      out.helpers.push_back(term.pair);

      Rep spread_term = in_algebra(term, alg(plan.spread), phi);
      spread_term.pair = detail::raise(spread_term.pair, spread);
      const Rep folded = in_algebra(spread_term, alg(plan.outer), phi);
      total.pair = detail::combine(total.pair, folded.pair);
    }
  }
  check_finite(total.pair, "outer accumulator");

  Rep last = in_algebra(total, alg(plan.final), phi);
  last.pair = detail::raise(last.pair, 1.0 / (p.x + p.y));
  check_finite(last.pair, "final accumulator");
  out.acc = last.pair;
  out.value = detail::decode(last.pair, last.alg, phi);
  return out;
}

void check_inputs(std::span<const IVqROFN> values, const AggParams& p) {
  check_params(p);
  if (values.empty()) {
    throw Error(ErrorCode::EmptyInput, "aggregation needs at least one value");
  }
  for (const auto& a : values) validate(a, p.q);
}

std::vector<double> endpoint_powers(std::span<const IVqROFN> values, double q,
                                    double IVqROFN::*field) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& a : values) out.push_back(std::pow(a.*field, q));
  return out;
}

double qroot(double s, double q) { return std::pow(std::clamp(s, 0.0, 1.0), 1.0 / q); }

}  // namespace

double hm_real(std::span<const double> values, double x, double y) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptyInput, "Heronian mean of an empty list");
  }
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0) {
    throw Error(ErrorCode::InvalidParameter, "Heronian exponents must be nonnegative");
  }
  if (x + y <= 0.0) {
    throw Error(ErrorCode::BothExponentsZero,
                "Heronian exponents x and y must not both be zero");
  }
  const std::size_t n = values.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw Error(ErrorCode::DomainError, "Heronian mean needs nonnegative values");
    }
    for (std::size_t j = i; j < n; ++j) {
      sum += std::pow(values[i], x) * std::pow(values[j], y);
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n + 1) / 2.0;
  return std::pow(sum / pairs, 1.0 / (x + y));
}

ClosedFormTrace trace_closed_form(Operator op, std::span<const IVqROFN> values,
                                  std::span<const double> weights, const AggParams& p) {
  check_inputs(values, p);
  const Plan plan = plan_for(op);
  if (plan.weighted) {
    if (weights.size() != values.size()) {
      std::ostringstream os;
      os << "got " << weights.size() << " weights for " << values.size() << " values";
      throw Error(ErrorCode::WeightDimensionMismatch, os.str());
    }
    WeightVector(std::vector<double>(weights.begin(), weights.end()));
  } else if (!weights.empty()) {
    throw Error(ErrorCode::WeightDimensionMismatch, "the unweighted operator takes no weights");
  }

  const double q = p.q;
  const auto mu_lo = evaluate_side(plan, true, endpoint_powers(values, q, &IVqROFN::mu_lo), weights, p);
  const auto mu_hi = evaluate_side(plan, true, endpoint_powers(values, q, &IVqROFN::mu_hi), weights, p);
  const auto nu_lo = evaluate_side(plan, false, endpoint_powers(values, q, &IVqROFN::nu_lo), weights, p);
  const auto nu_hi = evaluate_side(plan, false, endpoint_powers(values, q, &IVqROFN::nu_hi), weights, p);

  ClosedFormTrace trace;
  const std::size_t n = values.size();
  trace.helpers.reserve(mu_lo.helpers.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++k) {
      HelperTerms h;
      h.i = i;
      h.j = j;
      h.V_lo = mu_lo.helpers[k].high();
      h.W_lo = mu_lo.helpers[k].low;
      h.VW_gap_lo = mu_lo.helpers[k].gap;
      h.V_hi = mu_hi.helpers[k].high();
      h.W_hi = mu_hi.helpers[k].low;
      h.VW_gap_hi = mu_hi.helpers[k].gap;
      h.N_lo = nu_lo.helpers[k].high();
      h.M_lo = nu_lo.helpers[k].low;
      h.NM_gap_lo = nu_lo.helpers[k].gap;
      h.N_hi = nu_hi.helpers[k].high();
      h.M_hi = nu_hi.helpers[k].low;
      h.NM_gap_hi = nu_hi.helpers[k].gap;
      trace.helpers.push_back(h);
    }
  }
  trace.acc = {mu_lo.acc.high(), mu_hi.acc.high(), mu_lo.acc.low, mu_hi.acc.low,
               nu_lo.acc.high(), nu_hi.acc.high(), nu_lo.acc.low, nu_hi.acc.low};
  trace.result = {qroot(mu_lo.value, q), qroot(mu_hi.value, q), qroot(nu_lo.value, q),
                  qroot(nu_hi.value, q)};
  return trace;
}

IVqROFN hmm(std::span<const IVqROFN> values, const AggParams& p) {
  return trace_closed_form(Operator::Hmm, values, {}, p).result;
}

IVqROFN hhmwa(std::span<const IVqROFN> values, const WeightVector& weights,
              const AggParams& p) {
  return trace_closed_form(Operator::Hhmwa, values, weights.entries(), p).result;
}

IVqROFN hhmga(std::span<const IVqROFN> values, const WeightVector& weights,
              const AggParams& p, GeometricMode mode) {
  const Operator op =
      mode == GeometricMode::Dual ? Operator::HhmgaDual : Operator::HhmgaLiteral;
  return trace_closed_form(op, values, weights.entries(), p).result;
}

IVqROFN hmm_special_xy(std::span<const IVqROFN> values, const AggParams& p,
                       SpecialCase which) {
  AggParams special = p;
  special.x = which == SpecialCase::X1Y0 ? 1.0 : 0.0;
  special.y = which == SpecialCase::X1Y0 ? 0.0 : 1.0;
  return hmm(values, special);
}

IVqROFN hmm_phi1(std::span<const IVqROFN> values, double q, double x, double y) {
  check_inputs(values, AggParams{q, 1.0, x, y});
  const std::size_t n = values.size();
  const double spread = 2.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
  const double outer = 1.0 / (x + y);

  // k * log(1 - s), with a zero exponent dropping the factor entirely
  auto log_complement = [](double k, double s) {
    return k == 0.0 ? 0.0 : k * std::log1p(-s);
  };

  auto membership = [&](double IVqROFN::*field) {
    double log_g = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ui = std::pow(values[i].*field, q);
      for (std::size_t j = i; j < n; ++j) {
        const double uj = std::pow(values[j].*field, q);
        // 1 - (1 - U_i)^x (1 - U_j)^y
        const double term = -std::expm1(log_complement(x, ui) + log_complement(y, uj));
        log_g += spread * std::log(term);
      }
    }
    const double g = std::exp(log_g);
    return qroot(-std::expm1(outer * std::log1p(-g)), q);
  };

  auto non_membership = [&](double IVqROFN::*field) {
    double log_rest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = std::pow(values[i].*field, q);
      for (std::size_t j = i; j < n; ++j) {
        const double vj = std::pow(values[j].*field, q);
        log_rest += spread * std::log1p(-(std::pow(vi, x) * std::pow(vj, y)));
      }
    }
    return qroot(std::pow(-std::expm1(log_rest), outer), q);
  };

  return {membership(&IVqROFN::mu_lo), membership(&IVqROFN::mu_hi),
          non_membership(&IVqROFN::nu_lo), non_membership(&IVqROFN::nu_hi)};
}

}  // namespace ivqrof
