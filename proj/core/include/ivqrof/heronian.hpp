#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ivqrof/fuzzy.hpp"

namespace ivqrof {

/// The Hamacher-Heronian aggregation operators.
enum class Operator {
  Hmm,           ///< unweighted
  Hhmwa,         ///< weighted arithmetic: inputs raised to their weights, outer product
  HhmgaDual,     ///< weighted geometric, outer sum and final power
  HhmgaLiteral,  ///< weighted geometric, outer sum and final scalar 1/(x+y)
};

enum class GeometricMode { Dual, Literal };

enum class SpecialCase { X1Y0, X0Y1 };

/// Real-valued Heronian mean over the pairs i <= j:
/// ((2 / (n(n+1))) * sum a_i^x a_j^y)^(1/(x+y)).
double hm_real(std::span<const double> values, double x, double y);

IVqROFN hmm(std::span<const IVqROFN> values, const AggParams& p);

/// Probabilistic (phi = 1) case as a direct formula:
///   mu^q = 1 - (1 - prod (1 - (1-U_i)^x (1-U_j)^y)^e)^(1/(x+y))
///   nu^q = (1 - prod (1 - V_i^x V_j^y)^e)^(1/(x+y))
/// with U = mu^q, V = nu^q and e = 2/(n(n+1)).
IVqROFN hmm_phi1(std::span<const IVqROFN> values, double q, double x, double y);

IVqROFN hhmwa(std::span<const IVqROFN> values, const WeightVector& weights,
              const AggParams& p);

IVqROFN hhmga(std::span<const IVqROFN> values, const WeightVector& weights,
              const AggParams& p, GeometricMode mode = GeometricMode::Dual);

/// hmm at (x, y) = (1, 0) or (0, 1); the x and y of p are ignored.
IVqROFN hmm_special_xy(std::span<const IVqROFN> values, const AggParams& p,
                       SpecialCase which);

/// Per-pair generator terms of the closed form. (V, W) are the membership pair
/// and (N, M) the non-membership pair after the i/j terms are combined; the
/// stored differences are computed without cancellation.
struct HelperTerms {
  std::size_t i = 0;
  std::size_t j = 0;
  double V_lo = 0, V_hi = 0, W_lo = 0, W_hi = 0;
  double N_lo = 0, N_hi = 0, M_lo = 0, M_hi = 0;
  double VW_gap_lo = 0, VW_gap_hi = 0, NM_gap_lo = 0, NM_gap_hi = 0;
};

/// Final pairs before decoding: mu^q and nu^q are recovered from (a, b) and
/// (c, d) by the quotient forms (a - b) / (a + (phi-1) b) or
/// phi b / (a + (phi-1) b), depending on which algebra the side ends in.
struct Accumulators {
  double a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
  double c_lo = 0, c_hi = 0, d_lo = 0, d_hi = 0;
};

struct ClosedFormTrace {
  std::vector<HelperTerms> helpers;  // pair order: i ascending, then j >= i
  Accumulators acc;
  IVqROFN result;
};

/// Evaluates an operator in closed form and keeps the intermediates.
/// `weights` must be empty for Operator::Hmm and match `values` otherwise.
ClosedFormTrace trace_closed_form(Operator op, std::span<const IVqROFN> values,
                                  std::span<const double> weights, const AggParams& p);

}  // namespace ivqrof
