#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ivqrof/cli_io.hpp"

namespace {

using namespace ivqrof;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNumericalError = 2;

int report_error(const Error& err) {
  std::cerr << "error [" << to_string(err.code()) << "]: " << err.what() << '\n';
  return is_numerical(err.code()) ? kNumericalError : kInputError;
}

ReportFormat parse_format(const std::string& s) {
  return s == "csv" ? ReportFormat::Csv : ReportFormat::Text;
}

Operator parse_criteria_op(const std::string& s) {
  if (s == "hhmga") return Operator::HhmgaDual;
  if (s == "hhmga-literal") return Operator::HhmgaLiteral;
  return Operator::Hhmwa;
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(origin) + " must be a nonnegative integer, got '" + text + "'");
  }
  return v;
}

struct SolveFlags {
  std::string file;
  std::string q;
  std::optional<double> phi, x, y;
  std::string score;
  std::string format = "text";
  std::string criteria_op = "hhmwa";
  bool intermediates = false;
};

void apply_overrides(DecisionProblem& problem, const SolveFlags& f) {
  if (!f.q.empty()) {
    if (f.q == "auto") {
      problem.params.q.reset();
    } else {
      std::size_t used = 0;
      int q = 0;
      try {
        q = std::stoi(f.q, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != f.q.size() || q < 1) {
        throw Error(ErrorCode::InvalidParameter, "--q expects an integer >= 1 or 'auto'");
      }
      problem.params.q = q;
    }
  }
  if (f.phi) problem.params.phi = *f.phi;
  if (f.x) problem.params.x = *f.x;
  if (f.y) problem.params.y = *f.y;
  if (f.score == "eq6") problem.params.score = ScoreKind::Eq6;
  if (f.score == "qpow") problem.params.score = ScoreKind::QPow;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued q-rung orthopair fuzzy Hamacher-Heronian group decision tool"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a problem file");
  validate_cmd->add_option("file", validate_file, "Problem file")->required();

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Rank the alternatives of a problem file");
  solve_cmd->add_option("file", solve.file, "Problem file")->required();
  solve_cmd->add_option("--q", solve.q, "Rung: integer >= 1 or 'auto'");
  solve_cmd->add_option("--phi", solve.phi, "Hamacher parameter (> 0)");
  solve_cmd->add_option("--x", solve.x, "Heronian exponent x (>= 0)");
  solve_cmd->add_option("--y", solve.y, "Heronian exponent y (>= 0)");
  solve_cmd->add_option("--score", solve.score, "Score function")
      ->check(CLI::IsMember({"eq6", "qpow"}));
  solve_cmd->add_option("--format", solve.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  solve_cmd->add_option("--criteria-op", solve.criteria_op, "Operator for the criteria stage")
      ->check(CLI::IsMember({"hhmwa", "hhmga", "hhmga-literal"}));
  solve_cmd->add_flag("--intermediates", solve.intermediates,
                      "Include the aggregated matrix R (text format)");

  std::string sweep_file, sweep_param, sweep_format = "text", sweep_op = "hhmwa";
  std::vector<double> sweep_values;
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve once per value of one parameter");
  sweep_cmd->add_option("file", sweep_file, "Problem file")->required();
  sweep_cmd->add_option("--param", sweep_param, "q, phi, x or y")
      ->required()
      ->check(CLI::IsMember({"q", "phi", "x", "y"}));
  sweep_cmd->add_option("--values", sweep_values, "Comma separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  sweep_cmd->add_option("--criteria-op", sweep_op, "Operator for the criteria stage")
      ->check(CLI::IsMember({"hhmwa", "hhmga", "hhmga-literal"}));

  std::size_t cases = 1000;
  std::string seed_text;
  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Check closed forms against the fold oracle");
  selfcheck_cmd->add_option("--cases", cases, "Random cases per suite")
      ->check(CLI::PositiveNumber);
  selfcheck_cmd->add_option("--seed", seed_text,
                            "Seed (default: IVQROF_SEED from the environment, else 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate_cmd) {
      const DecisionProblem p = load_problem(validate_file);
      std::cout << "ok: " << p.m() << " alternatives, " << p.n() << " criteria, "
                << p.experts.size() << " experts, q=" << resolve_q(p)
                << (p.params.q ? "" : " (inferred)") << '\n';
      return kOk;
    }
    if (*solve_cmd) {
      DecisionProblem p = load_problem(solve.file);
      apply_overrides(p, solve);
      SolveOptions opts;
      opts.criteria_op = parse_criteria_op(solve.criteria_op);
      opts.keep_intermediates = solve.intermediates;
      std::cout << emit_report(ivqrof::solve(p, opts), parse_format(solve.format));
      return kOk;
    }
    if (*sweep_cmd) {
      SweepSpec spec;
      spec.base = load_problem(sweep_file);
      spec.param = parse_sweep_param(sweep_param);
      spec.values = sweep_values;
      spec.options.criteria_op = parse_criteria_op(sweep_op);
      std::cout << emit_sweep(run_sweep(spec), parse_format(sweep_format));
      return kOk;
    }
    if (*selfcheck_cmd) {
      SelfcheckOptions opts;
      opts.cases = cases;
      if (!seed_text.empty()) {
        opts.seed = parse_seed(seed_text, "--seed");
      } else if (const char* env = std::getenv("IVQROF_SEED"); env && *env) {
        opts.seed = parse_seed(env, "IVQROF_SEED");
      }
      std::cout << "selfcheck: seed=" << opts.seed << " cases=" << opts.cases << '\n';
      const SelfcheckResult result = run_selfcheck(opts);
      std::cout << result.log();
      return result.passed() ? kOk : kNumericalError;
    }
  } catch (const Error& err) {
    return report_error(err);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
