#include "ivqrof/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "ivqrof/hamacher.hpp"
#include "ivqrof/oracle.hpp"

namespace ivqrof::properties {

namespace {

std::string describe(const FuzzCase& c) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << c.values.size() << " q=" << c.params.q << " phi=" << c.params.phi
     << " x=" << c.params.x << " y=" << c.params.y << " values=";
  for (const auto& a : c.values) os << a;
  os << " weights=(";
  for (std::size_t i = 0; i < c.weights.size(); ++i) os << (i ? "," : "") << c.weights[i];
  os << ")";
  return os.str();
}

const char* op_name(Operator op) {
  switch (op) {
    case Operator::Hmm:
      return "hmm";
    case Operator::Hhmwa:
      return "hhmwa";
    case Operator::HhmgaDual:
      return "hhmga(dual)";
    case Operator::HhmgaLiteral:
      return "hhmga(literal)";
  }
  return "?";
}

// Runs `body` once per drawn case. `body` returns the deviation for that
// case; deviations above the tolerance count as failures. Errors thrown by
// the operators are failures too.
SuiteResult run(std::string name, const SuiteConfig& cfg, double tol,
                const std::function<double(FuzzCase&, CaseGenerator&)>& body) {
  SuiteResult r;
  r.name = std::move(name);
  r.tolerance = tol;
  CaseGenerator gen(cfg.seed);
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    FuzzCase c = draw_case(gen, cfg.domain);
    ++r.cases;
    double dev = 0.0;
    std::string note;
    try {
      dev = body(c, gen);
    } catch (const std::exception& e) {
      dev = INFINITY;
      note = std::string(" threw: ") + e.what();
    }
    const bool failed = !(dev <= tol);
    if (std::isfinite(dev)) r.worst = std::max(r.worst, dev);
    if (failed) {
      if (r.failures == 0) {
        std::ostringstream os;
        os << "case " << k << " deviation " << dev << note << "; " << describe(c);
        r.first_failure = os.str();
      }
      ++r.failures;
    }
  }
  return r;
}

WeightVector permuted(const WeightVector& w, const std::vector<std::size_t>& perm) {
  std::vector<double> out;
  for (std::size_t i : perm) out.push_back(w[i]);
  return WeightVector(std::move(out));
}

double einstein_sum(double a, double b) { return (a + b) / (1.0 + a * b); }
double einstein_prod(double a, double b) { return a * b / (1.0 + (1.0 - a) * (1.0 - b)); }
double einstein_multiple(double s, double t) {
  const double p = std::pow(1.0 + s, t);
  const double m = std::pow(1.0 - s, t);
  return (p - m) / (p + m);
}
double einstein_power(double s, double t) {
  const double p = std::pow(2.0 - s, t);
  const double m = std::pow(s, t);
  return 2.0 * m / (p + m);
}

}  // namespace

double distance(const IVqROFN& a, const IVqROFN& b) {
  return std::max({std::abs(a.mu_lo - b.mu_lo), std::abs(a.mu_hi - b.mu_hi),
                   std::abs(a.nu_lo - b.nu_lo), std::abs(a.nu_hi - b.nu_hi)});
}

IVqROFN evaluate(Operator op, const FuzzCase& c) {
  switch (op) {
    case Operator::Hmm:
      return hmm(c.values, c.params);
    case Operator::Hhmwa:
      return hhmwa(c.values, c.weights, c.params);
    case Operator::HhmgaDual:
      return hhmga(c.values, c.weights, c.params, GeometricMode::Dual);
    case Operator::HhmgaLiteral:
      return hhmga(c.values, c.weights, c.params, GeometricMode::Literal);
  }
  return {};
}

SuiteResult oracle_equivalence(Operator op, const SuiteConfig& cfg, double tol) {
  return run(std::string("oracle equivalence ") + op_name(op), cfg, tol,
             [op](FuzzCase& c, CaseGenerator&) {
               FoldSpec spec{op, c.values, std::nullopt, c.params};
               if (op != Operator::Hmm) spec.weights = c.weights;
               return distance(evaluate(op, c), fold_eval(spec));
             });
}

SuiteResult phi1_primitives(const SuiteConfig& cfg, double tol) {
  return run("phi=1 Hamacher operations equal the algebraic ones", cfg, tol,
             [](FuzzCase& c, CaseGenerator& gen) {
               AggParams p = c.params;
               p.phi = 1.0;
               const double q = p.q;
               const IVqROFN a = gen.number(q);
               const IVqROFN b = gen.number(q);
               const double t = gen.uniform(0.05, 4.0);
               return std::max({distance(h_sum(a, b, p), alg_sum(a, b, q)),
                                distance(h_prod(a, b, p), alg_prod(a, b, q)),
                                distance(h_scalar_mul(t, a, p), alg_scalar_mul(t, a, q)),
                                distance(h_power(a, t, p), alg_power(a, t, q))});
             });
}

SuiteResult phi1_hmm(const SuiteConfig& cfg, double tol) {
  return run("phi=1 hmm equals the probabilistic formula", cfg, tol,
             [](FuzzCase& c, CaseGenerator&) {
               c.params.phi = 1.0;
               return distance(hmm(c.values, c.params),
                               hmm_phi1(c.values, c.params.q, c.params.x, c.params.y));
             });
}

SuiteResult einstein_scalars(const SuiteConfig& cfg, double tol) {
  return run("phi=2 Hamacher scalars equal the Einstein forms", cfg, tol,
             [](FuzzCase&, CaseGenerator& gen) {
               const double a = gen.uniform();
               const double b = gen.uniform();
               const double t = gen.uniform(0.05, 4.0);
               return std::max({std::abs(h_sum_scalar(a, b, 2.0) - einstein_sum(a, b)),
                                std::abs(h_prod_scalar(a, b, 2.0) - einstein_prod(a, b)),
                                std::abs(h_multiple_scalar(a, t, 2.0) - einstein_multiple(a, t)),
                                std::abs(h_power_scalar(a, t, 2.0) - einstein_power(a, t))});
             });
}

SuiteResult closure(Operator op, const SuiteConfig& cfg) {
  return run(std::string("closure ") + op_name(op), cfg, 0.0,
             [op](FuzzCase& c, CaseGenerator&) {
               return is_valid(evaluate(op, c), c.params.q) ? 0.0 : 1.0;
             });
}

SuiteResult permutation_invariance(Operator op, const SuiteConfig& cfg, double tol) {
  return run(std::string("permutation invariance ") + op_name(op), cfg, tol,
             [op](FuzzCase& c, CaseGenerator& gen) {
               const auto perm = gen.permutation(c.values.size());
               FuzzCase d = c;
               d.values.clear();
               for (std::size_t i : perm) d.values.push_back(c.values[i]);
               d.weights = permuted(c.weights, perm);
               return distance(evaluate(op, c), evaluate(op, d));
             });
}

SuiteResult boundedness(Operator op, const SuiteConfig& cfg, double tol) {
  return run(std::string("boundedness by score ") + op_name(op), cfg, tol,
             [op](FuzzCase& c, CaseGenerator&) {
               const double q = c.params.q;
               const auto less = [q](const IVqROFN& a, const IVqROFN& b) {
                 return compare(a, b, q) == std::weak_ordering::less;
               };
               const auto [lo, hi] = std::minmax_element(c.values.begin(), c.values.end(), less);
               const double s = score(evaluate(op, c));
               return std::max({0.0, score(*lo) - s, s - score(*hi)});
             });
}

SuiteResult monotonicity(Operator op, const SuiteConfig& cfg, double tol) {
  return run(std::string("dominance monotonicity ") + op_name(op), cfg, tol,
             [op](FuzzCase& c, CaseGenerator& gen) {
               FuzzCase d = c;
               for (auto& a : d.values) a = gen.dominating(a, c.params.q);
               return std::max(0.0, score(evaluate(op, c)) - score(evaluate(op, d)));
             });
}

SuiteResult idempotency(Operator op, const SuiteConfig& cfg) {
  SuiteResult r = run(std::string("idempotency ") + op_name(op), cfg, INFINITY,
                      [op](FuzzCase& c, CaseGenerator&) {
                        std::fill(c.values.begin(), c.values.end(), c.values.front());
                        return distance(evaluate(op, c), c.values.front());
                      });
  r.measured_only = true;
  return r;
}

}  // namespace ivqrof::properties
