#pragma once

#include <cstddef>
#include <cstdint>

#include "ivqrof/cli_io.hpp"
#include "ivqrof/heronian.hpp"
#include "ivqrof/random_cases.hpp"

namespace ivqrof::properties {

// Seeded property suites over random operator inputs. Each returns the number
// of cases run, the number that failed, the worst deviation seen and a
// description of the first failure.

struct SuiteConfig {
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
  FuzzDomain domain;
};

/// Closed form against the fold oracle, componentwise.
SuiteResult oracle_equivalence(Operator op, const SuiteConfig& cfg, double tol = 1e-9);

/// At phi = 1 the Hamacher operations on IVq-ROFNs against the algebraic ones.
SuiteResult phi1_primitives(const SuiteConfig& cfg, double tol = 1e-9);
/// At phi = 1, hmm against the independent probabilistic formula.
SuiteResult phi1_hmm(const SuiteConfig& cfg, double tol = 1e-9);
/// At phi = 2 the scalar Hamacher operations against the Einstein forms.
SuiteResult einstein_scalars(const SuiteConfig& cfg, double tol = 1e-12);

/// Results are valid at the input rung.
SuiteResult closure(Operator op, const SuiteConfig& cfg);

/// Output unchanged (componentwise, 1e-12) under a random permutation of the
/// inputs, weights moving with their values.
SuiteResult permutation_invariance(Operator op, const SuiteConfig& cfg, double tol = 1e-12);

/// score(min) <= score(result) <= score(max) with min and max under the
/// score/accuracy comparison.
SuiteResult boundedness(Operator op, const SuiteConfig& cfg, double tol = 1e-12);

/// Dominating inputs never lower the score of the result.
SuiteResult monotonicity(Operator op, const SuiteConfig& cfg, double tol = 1e-12);

/// Largest componentwise |op(a, ..., a) - a|; measured, not asserted.
SuiteResult idempotency(Operator op, const SuiteConfig& cfg);

/// Evaluates any operator by its closed form; weights are ignored for Hmm.
IVqROFN evaluate(Operator op, const FuzzCase& c);

/// Componentwise max |a - b|.
double distance(const IVqROFN& a, const IVqROFN& b);

}  // namespace ivqrof::properties
