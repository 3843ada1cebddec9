#include "ivqrof/oracle.hpp"

#include <optional>
#include <sstream>

#include "ivqrof/error.hpp"
#include "ivqrof/hamacher.hpp"
#include "kernels.hpp"

namespace ivqrof {

namespace {

using kernel::wide_t;

// q-th powers of the four endpoints: U = mu^q, V = nu^q.
struct WideNumber {
  wide_t u_lo, u_hi, v_lo, v_hi;
};

wide_t ok_or_throw(bool ok, wide_t value, const char* op) {
  if (!ok) {
    throw Error(ErrorCode::NumericalDegeneracy,
                std::string("fold oracle: degenerate denominator in ") + op);
  }
  return value;
}

struct DoubleHamacher {
  using Number = IVqROFN;
  AggParams p;

  Number lift(const IVqROFN& a) const { return a; }
  IVqROFN lower(const Number& a) const { return a; }
  Number sum(const Number& a, const Number& b) const { return h_sum(a, b, p); }
  Number prod(const Number& a, const Number& b) const { return h_prod(a, b, p); }
  Number scale(double t, const Number& a) const {
    return t == 0.0 ? IVqROFN::sum_identity() : h_scalar_mul(t, a, p);
  }
  Number power(const Number& a, double t) const {
    return t == 0.0 ? IVqROFN::product_identity() : h_power(a, t, p);
  }
};

struct DoubleAlgebraic {
  using Number = IVqROFN;
  double q;

  Number lift(const IVqROFN& a) const { return a; }
  IVqROFN lower(const Number& a) const { return a; }
  Number sum(const Number& a, const Number& b) const { return alg_sum(a, b, q); }
  Number prod(const Number& a, const Number& b) const { return alg_prod(a, b, q); }
  Number scale(double t, const Number& a) const {
    return t == 0.0 ? IVqROFN::sum_identity() : alg_scalar_mul(t, a, q);
  }
  Number power(const Number& a, double t) const {
    return t == 0.0 ? IVqROFN::product_identity() : alg_power(a, t, q);
  }
};

// Shared by the two extended-precision primitive sets.
struct WideBase {
  using Number = WideNumber;
  wide_t q;

  Number lift(const IVqROFN& a) const {
    auto pw = [this](double v) { return kernel::pow_(static_cast<wide_t>(v), q); };
    return {pw(a.mu_lo), pw(a.mu_hi), pw(a.nu_lo), pw(a.nu_hi)};
  }
  IVqROFN lower(const Number& a) const {
    auto root = [this](wide_t s) {
      return static_cast<double>(kernel::pow_(kernel::clamp_unit(s), wide_t(1) / q));
    };
    return {root(a.u_lo), root(a.u_hi), root(a.v_lo), root(a.v_hi)};
  }
  static Number sum_identity() { return {0, 0, 1, 1}; }
  static Number product_identity() { return {1, 1, 0, 0}; }
};

struct WideHamacher : WideBase {
  wide_t phi;

  wide_t conorm(wide_t a, wide_t b) const {
    wide_t out = 0;
    const bool ok = kernel::hamacher_sum(a, b, phi, out);
    return ok_or_throw(ok, out, "t-conorm");
  }
  wide_t norm(wide_t a, wide_t b) const {
    wide_t out = 0;
    const bool ok = kernel::hamacher_prod(a, b, phi, out);
    return ok_or_throw(ok, out, "t-norm");
  }
  wide_t multiple(wide_t s, wide_t t) const {
    wide_t out = 0;
    const bool ok = kernel::hamacher_multiple(s, t, phi, out);
    return ok_or_throw(ok, out, "scalar multiple");
  }
  wide_t raise(wide_t s, wide_t t) const {
    wide_t out = 0;
    const bool ok = kernel::hamacher_power(s, t, phi, out);
    return ok_or_throw(ok, out, "power");
  }

  Number sum(const Number& a, const Number& b) const {
    return {conorm(a.u_lo, b.u_lo), conorm(a.u_hi, b.u_hi), norm(a.v_lo, b.v_lo),
            norm(a.v_hi, b.v_hi)};
  }
  Number prod(const Number& a, const Number& b) const {
    return {norm(a.u_lo, b.u_lo), norm(a.u_hi, b.u_hi), conorm(a.v_lo, b.v_lo),
            conorm(a.v_hi, b.v_hi)};
  }
  Number scale(double t, const Number& a) const {
    if (t == 0.0) return sum_identity();
    const wide_t w = t;
    return {multiple(a.u_lo, w), multiple(a.u_hi, w), raise(a.v_lo, w), raise(a.v_hi, w)};
  }
  Number power(const Number& a, double t) const {
    if (t == 0.0) return product_identity();
    const wide_t w = t;
    return {raise(a.u_lo, w), raise(a.u_hi, w), multiple(a.v_lo, w), multiple(a.v_hi, w)};
  }
};

struct WideAlgebraic : WideBase {
  Number sum(const Number& a, const Number& b) const {
    return {kernel::prob_sum(a.u_lo, b.u_lo), kernel::prob_sum(a.u_hi, b.u_hi),
            a.v_lo * b.v_lo, a.v_hi * b.v_hi};
  }
  Number prod(const Number& a, const Number& b) const {
    return {a.u_lo * b.u_lo, a.u_hi * b.u_hi, kernel::prob_sum(a.v_lo, b.v_lo),
            kernel::prob_sum(a.v_hi, b.v_hi)};
  }
  Number scale(double t, const Number& a) const {
    if (t == 0.0) return sum_identity();
    const wide_t w = t;
    return {kernel::prob_multiple(a.u_lo, w), kernel::prob_multiple(a.u_hi, w),
            kernel::pow_(a.v_lo, w), kernel::pow_(a.v_hi, w)};
  }
  Number power(const Number& a, double t) const {
    if (t == 0.0) return product_identity();
    const wide_t w = t;
    return {kernel::pow_(a.u_lo, w), kernel::pow_(a.u_hi, w),
            kernel::prob_multiple(a.v_lo, w), kernel::prob_multiple(a.v_hi, w)};
  }
};

void check_spec(const FoldSpec& spec) {
  check_params(spec.params);
  if (spec.values.empty()) {
    throw Error(ErrorCode::EmptyInput, "fold over an empty list");
  }
  const bool weighted = spec.kind != Operator::Hmm;
  if (weighted != spec.weights.has_value()) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                weighted ? "weighted operator needs weights"
                         : "the unweighted operator takes no weights");
  }
  if (weighted && spec.weights->size() != spec.values.size()) {
    std::ostringstream os;
    os << "got " << spec.weights->size() << " weights for " << spec.values.size()
       << " values";
    throw Error(ErrorCode::WeightDimensionMismatch, os.str());
  }
  for (const auto& a : spec.values) validate(a, spec.params.q);
}

template <class Prim>
IVqROFN fold(const FoldSpec& spec, const Prim& prim) {
  using Number = typename Prim::Number;
  const auto& p = spec.params;
  const std::size_t n = spec.values.size();
  std::vector<Number> inputs;
  inputs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Number a = prim.lift(spec.values[i]);
    inputs.push_back(spec.kind == Operator::Hmm ? a : prim.power(a, (*spec.weights)[i]));
  }
  const double spread = 2.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
  const double outer = 1.0 / (p.x + p.y);

  std::optional<Number> acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Number term;
      switch (spec.kind) {
        case Operator::Hmm:
        case Operator::Hhmwa:
          // (x a_i + y a_j)^spread, folded by product
          term = prim.power(prim.sum(prim.scale(p.x, inputs[i]), prim.scale(p.y, inputs[j])),
                            spread);
          acc = acc ? prim.prod(*acc, term) : term;
          break;
        case Operator::HhmgaDual:
          // spread * (a_i^x a_j^y), folded by sum
          term = prim.scale(spread, prim.prod(prim.power(inputs[i], p.x),
                                              prim.power(inputs[j], p.y)));
          acc = acc ? prim.sum(*acc, term) : term;
          break;
        case Operator::HhmgaLiteral:
          // ((x a_i)(y a_j))^spread, folded by sum
          term = prim.power(prim.prod(prim.scale(p.x, inputs[i]), prim.scale(p.y, inputs[j])),
                            spread);
          acc = acc ? prim.sum(*acc, term) : term;
          break;
      }
    }
  }
  if (spec.kind == Operator::HhmgaDual) return prim.lower(prim.power(*acc, outer));
  return prim.lower(prim.scale(outer, *acc));
}

}  // namespace

IVqROFN fold_eval(const FoldSpec& spec, FoldPrecision precision) {
  check_spec(spec);
  if (precision == FoldPrecision::Double) return fold(spec, DoubleHamacher{spec.params});
  WideHamacher prim;
  prim.q = spec.params.q;
  prim.phi = spec.params.phi;
  return fold(spec, prim);
}

IVqROFN fold_eval_algebraic(const FoldSpec& spec, FoldPrecision precision) {
  check_spec(spec);
  if (spec.kind != Operator::Hmm && spec.kind != Operator::Hhmwa) {
    throw Error(ErrorCode::InvalidParameter,
                "algebraic fold is defined for the arithmetic operators only");
  }
  if (precision == FoldPrecision::Double) return fold(spec, DoubleAlgebraic{spec.params.q});
  WideAlgebraic prim;
  prim.q = spec.params.q;
  return fold(spec, prim);
}

}  // namespace ivqrof
