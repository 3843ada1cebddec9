#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivqrof/fuzzy.hpp"
#include "ivqrof/heronian.hpp"

namespace ivqrof {

/// Row-major m x n matrix: rows are alternatives, columns are criteria.
using Matrix = std::vector<std::vector<IVqROFN>>;

struct Expert {
  std::string id;
  std::optional<double> weight;
  Matrix matrix;

  friend bool operator==(const Expert&, const Expert&) = default;
};

/// Parameters shared by both aggregation stages. An empty q means "infer it
/// from the data".
struct ProblemParams {
  std::optional<int> q;
  double phi = 3.0;
  double x = 3.0;
  double y = 3.0;
  ScoreKind score = ScoreKind::Eq6;

  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<Expert> experts;
  WeightVector criteria_weights = WeightVector::uniform(1);
  ProblemParams params;

  std::size_t m() const noexcept { return alternatives.size(); }
  std::size_t n() const noexcept { return criteria.size(); }

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

/// Structural checks: labels present, every matrix m x n, criteria weights of
/// length n, expert weights all present or all absent. Entry validity at a
/// rung is checked by resolve_q. Throws ValueError or WeightSumViolation with
/// the offending location in the message.
void check_problem(const DecisionProblem& problem);

/// Expert weights, uniform when the problem gives none.
WeightVector expert_weights(const DecisionProblem& problem);

/// The explicit q after checking every entry against it, or infer_q over
/// all entries of all experts.
int resolve_q(const DecisionProblem& problem);

/// Cell (i, j) is hhmwa over the experts' values at (i, j) with the expert
/// weights.
Matrix aggregate_experts(const DecisionProblem& problem, int q);

/// One value per row of R: hhmwa (or the chosen weighted operator) over the
/// row with the criteria weights.
std::vector<IVqROFN> aggregate_criteria(const Matrix& R, const WeightVector& omega,
                                        const AggParams& p,
                                        Operator op = Operator::Hhmwa);

struct RankedAlternative {
  std::size_t index = 0;  // position in the input
  std::string label;
  IVqROFN value;
  double score = 0.0;
  double accuracy = 0.0;
  int rank = 0;  // 1 = best
};

/// Orders by descending score, then descending accuracy; values that compare
/// equal keep their input order. Ranks are 1..m in that order. Labels are left
/// empty.
std::vector<RankedAlternative> rank(const std::vector<IVqROFN>& xs, double q,
                                    ScoreKind kind = ScoreKind::Eq6);

struct SolveOptions {
  /// Operator for the criteria stage: Hhmwa, HhmgaDual or HhmgaLiteral.
  Operator criteria_op = Operator::Hhmwa;
  bool keep_intermediates = false;
};

struct RankingReport {
  std::vector<RankedAlternative> ranking;  // best first
  int q = 0;
  bool q_inferred = false;
  AggParams params;
  ScoreKind score_kind = ScoreKind::Eq6;
  Operator criteria_op = Operator::Hhmwa;
  std::optional<Matrix> intermediate;  // R, when requested
};

RankingReport solve(const DecisionProblem& problem, const SolveOptions& options = {});

/// "A2 > A3 > A1 > A4 > A5"
std::string ranking_string(const RankingReport& report);

}  // namespace ivqrof
