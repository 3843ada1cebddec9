#include <cmath>
#include <sstream>

#include "ivqrof/cli_io.hpp"

namespace ivqrof {

SweepParam parse_sweep_param(std::string_view name) {
  if (name == "q") return SweepParam::Q;
  if (name == "phi") return SweepParam::Phi;
  if (name == "x") return SweepParam::X;
  if (name == "y") return SweepParam::Y;
  throw Error(ErrorCode::InvalidParameter,
              "unknown sweep parameter '" + std::string(name) + "' (expected q, phi, x or y)");
}

std::string_view to_string(SweepParam p) noexcept {
  switch (p) {
    case SweepParam::Q:
      return "q";
    case SweepParam::Phi:
      return "phi";
    case SweepParam::X:
      return "x";
    case SweepParam::Y:
      return "y";
  }
  return "?";
}

namespace {

DecisionProblem with_value(const DecisionProblem& base, SweepParam param, double v) {
  DecisionProblem p = base;
  switch (param) {
    case SweepParam::Q:
      if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) {
        throw Error(ErrorCode::InvalidParameter, "swept q must be an integer >= 1");
      }
      p.params.q = static_cast<int>(v);
      break;
    case SweepParam::Phi:
      p.params.phi = v;
      break;
    case SweepParam::X:
      p.params.x = v;
      break;
    case SweepParam::Y:
      p.params.y = v;
      break;
  }
  return p;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  result.param = spec.param;
  result.alternatives = spec.base.alternatives;
  std::optional<std::string> reference;
  for (double v : spec.values) {
    SweepRow row;
    row.value = v;
    try {
      const RankingReport report = solve(with_value(spec.base, spec.param, v), spec.options);
      row.scores.assign(report.ranking.size(), 0.0);
      for (const auto& r : report.ranking) row.scores[r.index] = r.score;
      row.ranking = ranking_string(report);
      if (!reference) {
        reference = row.ranking;
      } else if (row.ranking != *reference && !result.first_divergence) {
        result.first_divergence = v;
      }
    } catch (const Error& err) {
      row.error = err.code();
      row.message = err.what();
    }
    result.rows.push_back(std::move(row));
  }
  result.stable = reference.has_value() && !result.first_divergence;
  return result;
}

std::string SweepResult::verdict() const {
  std::ostringstream os;
  std::size_t solved = 0;
  std::string first;
  for (const auto& r : rows) {
    if (r.error) continue;
    if (solved++ == 0) first = r.ranking;
  }
  const auto name = to_string(param);
  if (solved == 0) {
    os << "verdict: no value of " << name << " could be solved";
  } else if (stable) {
    os << "verdict: stable, ranking " << first << " unchanged across " << solved << " solved value"
       << (solved == 1 ? "" : "s") << " of " << name;
  } else {
    os << "verdict: unstable, ranking first changes at " << name << "="
       << format_number(*first_divergence);
  }
  const std::size_t failed = rows.size() - solved;
  if (failed != 0) os << " (" << failed << " value" << (failed == 1 ? "" : "s") << " failed)";
  return os.str();
}

std::string emit_sweep(const SweepResult& result, ReportFormat format) {
  std::ostringstream os;
  const auto name = to_string(result.param);
  if (format == ReportFormat::Csv) {
    os << "param,value,status,ranking";
    for (const auto& a : result.alternatives) os << ",score_" << a;
    os << '\n';
    for (const auto& r : result.rows) {
      os << name << ',' << format_number(r.value) << ','
         << (r.error ? std::string(to_string(*r.error)) : std::string("ok")) << ',' << r.ranking;
      for (std::size_t i = 0; i < result.alternatives.size(); ++i) {
        os << ',';
        if (!r.error) os << format_number(r.scores[i]);
      }
      os << '\n';
    }
    return os.str();
  }
  for (const auto& r : result.rows) {
    os << name << '=' << format_number(r.value) << ": ";
    if (r.error) {
      os << to_string(*r.error) << ": " << r.message << '\n';
      continue;
    }
    os << r.ranking << "  scores=(";
    for (std::size_t i = 0; i < r.scores.size(); ++i) {
      os << (i ? ", " : "") << format_number(r.scores[i]);
    }
    os << ")\n";
  }
  os << result.verdict() << '\n';
  return os.str();
}

}  // namespace ivqrof
