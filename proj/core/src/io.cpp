#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ivqrof/cli_io.hpp"
#include "json.hpp"

namespace ivqrof {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ProblemError(ErrorCode::SchemaError, path + ": " + what, path);
}

[[noreturn]] void value_error(const std::string& path, const std::string& what,
                              std::optional<CellLocation> cell = std::nullopt) {
  throw ProblemError(ErrorCode::ValueError, path + ": " + what, path, std::move(cell));
}

void require_object(const json& j, const std::string& path, std::set<std::string> required,
                    std::set<std::string> optional = {}) {
  if (!j.is_object()) schema_error(path.empty() ? "/" : path, "expected an object");
  for (const auto& key : required) {
    if (!j.contains(key)) schema_error(path.empty() ? "/" : path, "missing field '" + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      schema_error(child(path, key), "unknown field '" + key + "'");
    }
  }
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) value_error(path, "number is not finite");
  return v;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> parse_labels(const json& j, const std::string& path) {
  require_array(j, path);
  if (j.empty()) value_error(path, "list is empty");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(require_string(j[i], child(path, i)));
    if (!seen.insert(out.back()).second) {
      value_error(child(path, i), "duplicate label '" + out.back() + "'");
    }
  }
  return out;
}

ProblemParams parse_params(const json& j, const std::string& path) {
  require_object(j, path, {"q", "phi", "x", "y"}, {"score"});
  ProblemParams p;
  const json& q = j["q"];
  if (q.is_string()) {
    if (q.get<std::string>() != "auto") value_error(child(path, "q"), "expected an integer or \"auto\"");
  } else if (q.is_number_integer()) {
    const auto v = q.get<long long>();
    if (v < 1 || v > (1LL << 30)) value_error(child(path, "q"), "rung must be an integer >= 1");
    p.q = static_cast<int>(v);
  } else {
    schema_error(child(path, "q"), "expected an integer or \"auto\"");
  }
  p.phi = require_number(j["phi"], child(path, "phi"));
  p.x = require_number(j["x"], child(path, "x"));
  p.y = require_number(j["y"], child(path, "y"));
  if (!(p.phi > 0.0)) value_error(child(path, "phi"), "phi must be positive");
  if (p.x < 0.0) value_error(child(path, "x"), "x must be nonnegative");
  if (p.y < 0.0) value_error(child(path, "y"), "y must be nonnegative");
  if (p.x + p.y <= 0.0) value_error(path, "x and y must not both be zero");
  if (j.contains("score")) {
    const std::string s = require_string(j["score"], child(path, "score"));
    if (s == "eq6") {
      p.score = ScoreKind::Eq6;
    } else if (s == "qpow") {
      p.score = ScoreKind::QPow;
    } else {
      value_error(child(path, "score"), "expected \"eq6\" or \"qpow\"");
    }
  }
  return p;
}

IVqROFN parse_cell(const json& j, const std::string& path, const CellLocation& where) {
  require_array(j, path);
  if (j.size() != 4) schema_error(path, "expected [mu_lo, mu_hi, nu_lo, nu_hi]");
  const IVqROFN a{require_number(j[0], child(path, 0)), require_number(j[1], child(path, 1)),
                  require_number(j[2], child(path, 2)), require_number(j[3], child(path, 3))};
  try {
    validate_order(a);
  } catch (const Error& err) {
    std::ostringstream os;
    os << to_string(err.code()) << " at (" << where.expert << ", " << where.row << ", "
       << where.column << "): " << err.what();
    value_error(path, os.str(), where);
  }
  return a;
}

Expert parse_expert(const json& j, const std::string& path, std::size_t m, std::size_t n) {
  require_object(j, path, {"id", "matrix"}, {"weight"});
  Expert e;
  e.id = require_string(j["id"], child(path, "id"));
  if (j.contains("weight")) e.weight = require_number(j["weight"], child(path, "weight"));
  const std::string mpath = child(path, "matrix");
  const json& rows = require_array(j["matrix"], mpath);
  if (rows.size() != m) {
    value_error(mpath, "expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::string rpath = child(mpath, i);
    const json& row = require_array(rows[i], rpath);
    if (row.size() != n) {
      value_error(rpath, "expected " + std::to_string(n) + " cells, got " + std::to_string(row.size()));
    }
    std::vector<IVqROFN> cells;
    cells.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      cells.push_back(parse_cell(row[c], child(rpath, c), CellLocation{e.id, i, c}));
    }
    e.matrix.push_back(std::move(cells));
  }
  return e;
}

void check_rung_cells(const DecisionProblem& problem) {
  const int q = *problem.params.q;
  for (std::size_t t = 0; t < problem.experts.size(); ++t) {
    const Expert& e = problem.experts[t];
    for (std::size_t i = 0; i < e.matrix.size(); ++i) {
      for (std::size_t c = 0; c < e.matrix[i].size(); ++c) {
        try {
          validate(e.matrix[i][c], q);
        } catch (const Error& err) {
          std::ostringstream os;
          os << to_string(err.code()) << " at (" << e.id << ", " << i << ", " << c
             << "): " << err.what();
          value_error("/experts/" + std::to_string(t) + "/matrix/" + std::to_string(i) + "/" +
                          std::to_string(c),
                      os.str(), CellLocation{e.id, i, c});
        }
      }
    }
  }
}

ordered_json cell_json(const IVqROFN& a) {
  return ordered_json::array({a.mu_lo, a.mu_hi, a.nu_lo, a.nu_hi});
}

}  // namespace

DecisionProblem parse_problem(std::string_view document) {
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& err) {
    throw ProblemError(ErrorCode::SyntaxError,
                       std::string("malformed document: ") + err.what(), "");
  }
  require_object(root, "", {"alternatives", "criteria", "experts", "criteria_weights", "params"});

  DecisionProblem problem;
  problem.alternatives = parse_labels(root["alternatives"], "/alternatives");
  problem.criteria = parse_labels(root["criteria"], "/criteria");
  problem.params = parse_params(root["params"], "/params");

  const json& experts = require_array(root["experts"], "/experts");
  if (experts.empty()) value_error("/experts", "no experts");
  std::set<std::string> ids;
  std::size_t weighted = 0;
  for (std::size_t t = 0; t < experts.size(); ++t) {
    const std::string path = child("/experts", t);
    problem.experts.push_back(parse_expert(experts[t], path, problem.m(), problem.n()));
    if (!ids.insert(problem.experts.back().id).second) {
      value_error(child(path, "id"), "duplicate expert id '" + problem.experts.back().id + "'");
    }
    if (problem.experts.back().weight) ++weighted;
  }
  if (weighted != 0 && weighted != experts.size()) {
    value_error("/experts", "either every expert has a weight or none does");
  }
  if (weighted != 0) {
    try {
      expert_weights(problem);
    } catch (const Error& err) {
      value_error("/experts", err.what());
    }
  }

  const json& cw = require_array(root["criteria_weights"], "/criteria_weights");
  if (cw.size() != problem.n()) {
    value_error("/criteria_weights", "expected " + std::to_string(problem.n()) +
                                         " weights, got " + std::to_string(cw.size()));
  }
  std::vector<double> omega;
  for (std::size_t i = 0; i < cw.size(); ++i) {
    omega.push_back(require_number(cw[i], child("/criteria_weights", i)));
  }
  try {
    problem.criteria_weights = WeightVector(std::move(omega));
  } catch (const Error& err) {
    value_error("/criteria_weights", std::string("weight sum: ") + err.what());
  }

  if (problem.params.q) {
    check_rung_cells(problem);
  } else {
    try {
      resolve_q(problem);
    } catch (const Error& err) {
      value_error("/params/q", std::string(to_string(err.code())) + ": " + err.what());
    }
  }
  return problem;
}

DecisionProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ProblemError(ErrorCode::SyntaxError, "cannot open '" + path + "'", "");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const DecisionProblem& problem) {
  ordered_json root;
  root["alternatives"] = problem.alternatives;
  root["criteria"] = problem.criteria;
  ordered_json experts = ordered_json::array();
  for (const auto& e : problem.experts) {
    ordered_json je;
    je["id"] = e.id;
    if (e.weight) je["weight"] = *e.weight;
    ordered_json rows = ordered_json::array();
    for (const auto& row : e.matrix) {
      ordered_json r = ordered_json::array();
      for (const auto& cell : row) r.push_back(cell_json(cell));
      rows.push_back(std::move(r));
    }
    je["matrix"] = std::move(rows);
    experts.push_back(std::move(je));
  }
  root["experts"] = std::move(experts);
  root["criteria_weights"] = std::vector<double>(problem.criteria_weights.entries().begin(),
                                                 problem.criteria_weights.entries().end());
  ordered_json params;
  if (problem.params.q) {
    params["q"] = *problem.params.q;
  } else {
    params["q"] = "auto";
  }
  params["phi"] = problem.params.phi;
  params["x"] = problem.params.x;
  params["y"] = problem.params.y;
  params["score"] = std::string(to_string(problem.params.score));
  root["params"] = std::move(params);
  return root.dump(2) + "\n";
}

}  // namespace ivqrof
