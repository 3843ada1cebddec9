#pragma once

#include <optional>
#include <vector>

#include "ivqrof/fuzzy.hpp"
#include "ivqrof/heronian.hpp"

namespace ivqrof {

/// Reference evaluation request: an operator, its inputs, and (for the
/// weighted kinds) one weight per input.
struct FoldSpec {
  Operator kind = Operator::Hmm;
  std::vector<IVqROFN> values;
  std::optional<WeightVector> weights;
  AggParams params;
};

/// Arithmetic used for the intermediates of a fold.
///
/// Extended carries the q-th powers of all endpoints through the fold in a
/// wider floating type (binary128 where available) and rounds to double once
/// at the end. Double chains the public double-precision operations
/// (h_sum, h_prod, h_scalar_mul, h_power) and rounds after every step; once an
/// intermediate membership is within one ulp of 1 the information in
/// 1 - mu^q is gone, so large x + y can cost it several digits.
enum class FoldPrecision { Extended, Double };

/// Evaluates the operator by literally folding the Hamacher primitives
/// (t-conorm, t-norm, scalar multiple, power) over the pairs i <= j, in index
/// order. Slow but direct; the closed forms are checked against it.
///
/// A zero Heronian exponent or zero weight contributes the neutral element of
/// the surrounding operation (the limit of the primitive as its scalar -> 0).
IVqROFN fold_eval(const FoldSpec& spec, FoldPrecision precision = FoldPrecision::Extended);

/// The same fold for Operator::Hmm / Operator::Hhmwa built on the probabilistic
/// primitives (alg_sum, alg_prod, alg_scalar_mul, alg_power); params.phi is
/// ignored. Agrees with fold_eval at phi = 1.
IVqROFN fold_eval_algebraic(const FoldSpec& spec,
                            FoldPrecision precision = FoldPrecision::Extended);

}  // namespace ivqrof
