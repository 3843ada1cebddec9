#include "ivqrof/mcgdm.hpp"

#include <algorithm>
#include <sstream>

#include "ivqrof/error.hpp"

namespace ivqrof {

namespace {

std::string cell_name(const Expert& e, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "expert '" << e.id << "', row " << i << ", column " << j;
  return os.str();
}

AggParams agg_params(const DecisionProblem& problem, int q) {
  return {static_cast<double>(q), problem.params.phi, problem.params.x, problem.params.y};
}

}  // namespace

void check_problem(const DecisionProblem& problem) {
  if (problem.alternatives.empty()) {
    throw Error(ErrorCode::ValueError, "problem has no alternatives");
  }
  if (problem.criteria.empty()) {
    throw Error(ErrorCode::ValueError, "problem has no criteria");
  }
  if (problem.experts.empty()) {
    throw Error(ErrorCode::ValueError, "problem has no experts");
  }
  const std::size_t m = problem.m();
  const std::size_t n = problem.n();
  if (problem.criteria_weights.size() != n) {
    std::ostringstream os;
    os << "criteria_weights has " << problem.criteria_weights.size() << " entries for " << n
       << " criteria";
    throw Error(ErrorCode::ValueError, os.str());
  }
  std::size_t weighted = 0;
  for (const auto& e : problem.experts) {
    if (e.weight) ++weighted;
    if (e.matrix.size() != m) {
      std::ostringstream os;
      os << "expert '" << e.id << "' matrix has " << e.matrix.size() << " rows, expected " << m;
      throw Error(ErrorCode::ValueError, os.str());
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (e.matrix[i].size() != n) {
        std::ostringstream os;
        os << "expert '" << e.id << "' row " << i << " has " << e.matrix[i].size()
           << " cells, expected " << n;
        throw Error(ErrorCode::ValueError, os.str());
      }
    }
  }
  if (weighted != 0 && weighted != problem.experts.size()) {
    throw Error(ErrorCode::ValueError, "either every expert has a weight or none does");
  }
  expert_weights(problem);
}

WeightVector expert_weights(const DecisionProblem& problem) {
  if (problem.experts.empty() || !problem.experts.front().weight) {
    return WeightVector::uniform(problem.experts.size());
  }
  std::vector<double> w;
  w.reserve(problem.experts.size());
  for (const auto& e : problem.experts) {
    if (!e.weight) {
      throw Error(ErrorCode::ValueError, "either every expert has a weight or none does");
    }
    w.push_back(*e.weight);
  }
  try {
    return WeightVector(std::move(w));
  } catch (const Error& err) {
    throw Error(err.code(), std::string("expert weights: ") + err.what());
  }
}

int resolve_q(const DecisionProblem& problem) {
  if (problem.params.q) {
    const int q = *problem.params.q;
    check_rung(q);
    for (const auto& e : problem.experts) {
      for (std::size_t i = 0; i < e.matrix.size(); ++i) {
        for (std::size_t j = 0; j < e.matrix[i].size(); ++j) {
          try {
            validate(e.matrix[i][j], q);
          } catch (const Error& err) {
            throw Error(err.code(), cell_name(e, i, j) + ": " + err.what());
          }
        }
      }
    }
    return q;
  }
  std::vector<IVqROFN> all;
  for (const auto& e : problem.experts) {
    for (const auto& row : e.matrix) all.insert(all.end(), row.begin(), row.end());
  }
  return infer_q(all);
}

Matrix aggregate_experts(const DecisionProblem& problem, int q) {
  const WeightVector lambda = expert_weights(problem);
  const AggParams p = agg_params(problem, q);
  const std::size_t m = problem.m();
  const std::size_t n = problem.n();
  Matrix R(m, std::vector<IVqROFN>(n));
  std::vector<IVqROFN> column(problem.experts.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < problem.experts.size(); ++t) {
        column[t] = problem.experts[t].matrix[i][j];
      }
      R[i][j] = hhmwa(column, lambda, p);
    }
  }
  return R;
}

std::vector<IVqROFN> aggregate_criteria(const Matrix& R, const WeightVector& omega,
                                        const AggParams& p, Operator op) {
  std::vector<IVqROFN> xs;
  xs.reserve(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (R[i].size() != omega.size()) {
      std::ostringstream os;
      os << "row " << i << " has " << R[i].size() << " cells for " << omega.size()
         << " criteria weights";
      throw Error(ErrorCode::WeightDimensionMismatch, os.str());
    }
    switch (op) {
      case Operator::Hhmwa:
        xs.push_back(hhmwa(R[i], omega, p));
        break;
      case Operator::HhmgaDual:
        xs.push_back(hhmga(R[i], omega, p, GeometricMode::Dual));
        break;
      case Operator::HhmgaLiteral:
        xs.push_back(hhmga(R[i], omega, p, GeometricMode::Literal));
        break;
      case Operator::Hmm:
        throw Error(ErrorCode::InvalidParameter,
                    "the criteria stage needs a weighted operator");
    }
  }
  return xs;
}

std::vector<RankedAlternative> rank(const std::vector<IVqROFN>& xs, double q, ScoreKind kind) {
  std::vector<RankedAlternative> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RankedAlternative r;
    r.index = i;
    r.value = xs[i];
    r.score = score(xs[i], q, kind);
    r.accuracy = accuracy(xs[i], q);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return compare(a.value, b.value, q, kind) == std::weak_ordering::greater;
  });
  for (std::size_t k = 0; k < out.size(); ++k) out[k].rank = static_cast<int>(k + 1);
  return out;
}

RankingReport solve(const DecisionProblem& problem, const SolveOptions& options) {
  check_problem(problem);
  RankingReport report;
  report.q = resolve_q(problem);
  report.q_inferred = !problem.params.q.has_value();
  report.params = agg_params(problem, report.q);
  report.score_kind = problem.params.score;
  report.criteria_op = options.criteria_op;

  Matrix R = aggregate_experts(problem, report.q);
  const auto xs =
      aggregate_criteria(R, problem.criteria_weights, report.params, options.criteria_op);
  report.ranking = rank(xs, report.q, report.score_kind);
  for (auto& r : report.ranking) r.label = problem.alternatives[r.index];
  if (options.keep_intermediates) report.intermediate = std::move(R);
  return report;
}

std::string ranking_string(const RankingReport& report) {
  std::string s;
  for (const auto& r : report.ranking) {
    if (!s.empty()) s += " > ";
    s += r.label;
  }
  return s;
}

}  // namespace ivqrof
