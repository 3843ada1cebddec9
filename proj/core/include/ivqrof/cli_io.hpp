#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivqrof/error.hpp"
#include "ivqrof/mcgdm.hpp"

namespace ivqrof {

// --- problem files ----------------------------------------------------------
//
// A problem file is one JSON document:
//
//   {
//     "alternatives": ["A1", ...],
//     "criteria": ["C1", ...],
//     "experts": [{"id": "E1", "weight": 0.33, "matrix": [[[mu_lo, mu_hi, nu_lo, nu_hi], ...], ...]}],
//     "criteria_weights": [0.2, ...],
//     "params": {"q": 3 | "auto", "phi": 3, "x": 3, "y": 3, "score": "eq6" | "qpow"}
//   }
//
// "weight" (per expert) and "score" are optional. Unknown fields are rejected.

struct CellLocation {
  std::string expert;
  std::size_t row = 0;
  std::size_t column = 0;
};

/// Parse failure with the JSON pointer of the offending field and, for matrix
/// cells, the (expert, row, column) coordinates.
class ProblemError : public Error {
 public:
  ProblemError(ErrorCode code, const std::string& what, std::string path,
               std::optional<CellLocation> cell = std::nullopt)
      : Error(code, what), path_(std::move(path)), cell_(std::move(cell)) {}

  const std::string& path() const noexcept { return path_; }
  const std::optional<CellLocation>& cell() const noexcept { return cell_; }

 private:
  std::string path_;
  std::optional<CellLocation> cell_;
};

/// Throws ProblemError with SyntaxError, SchemaError or ValueError.
DecisionProblem parse_problem(std::string_view document);
DecisionProblem load_problem(const std::string& path);

/// Inverse of parse_problem: parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const DecisionProblem& problem);

// --- reports ----------------------------------------------------------------

enum class ReportFormat { Text, Csv };

/// Numbers with 10 significant digits.
std::string format_number(double v);

std::string_view to_string(ScoreKind kind) noexcept;
std::string_view to_string(Operator op) noexcept;

/// Text: a "ranking: A2 > A3 > ..." line, the parameters, one line per
/// alternative in rank order, and R when the report carries it.
/// Csv: header alternative,rank,score,accuracy,mu_lo,mu_hi,nu_lo,nu_hi and one
/// row per alternative in rank order.
std::string emit_report(const RankingReport& report, ReportFormat format);

// --- parameter sweeps -------------------------------------------------------

enum class SweepParam { Q, Phi, X, Y };

/// Accepts "q", "phi", "x", "y"; throws InvalidParameter otherwise.
SweepParam parse_sweep_param(std::string_view name);
std::string_view to_string(SweepParam p) noexcept;

struct SweepSpec {
  SweepParam param = SweepParam::Q;
  std::vector<double> values;
  DecisionProblem base;
  SolveOptions options;
};

struct SweepRow {
  double value = 0.0;
  std::optional<ErrorCode> error;
  std::string message;         // error text when error is set
  std::vector<double> scores;  // in input order of the alternatives
  std::string ranking;
};

struct SweepResult {
  SweepParam param = SweepParam::Q;
  std::vector<std::string> alternatives;
  std::vector<SweepRow> rows;
  /// True when every row that solved produced the same ranking, and at least
  /// one did.
  bool stable = false;
  /// The first value whose ranking differs from the first solved row.
  std::optional<double> first_divergence;

  std::string verdict() const;
};

/// Solves the base problem once per value; a failing value is recorded in
/// its row and the sweep carries on.
SweepResult run_sweep(const SweepSpec& spec);

/// Text: one line per value, then the verdict. Csv: header
/// param,value,status,ranking,score_<alternative>...
std::string emit_sweep(const SweepResult& result, ReportFormat format);

// --- self check -------------------------------------------------------------

struct SelfcheckOptions {
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0.0;       // largest observed deviation
  double tolerance = 0.0;
  std::string first_failure;
  /// Measured suites report a relation without asserting it.
  bool measured_only = false;

  bool passed() const { return measured_only || failures == 0; }
};

struct SelfcheckResult {
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// One line per suite.
  std::string log() const;
};

/// Closed form against the fold oracle, reduction identities and the
/// algebraic properties that hold for every operator, on seeded random cases.
SelfcheckResult run_selfcheck(const SelfcheckOptions& options);

}  // namespace ivqrof
