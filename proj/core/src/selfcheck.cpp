#include <algorithm>
#include <sstream>

#include "ivqrof/cli_io.hpp"
#include "ivqrof/properties.hpp"

namespace ivqrof {

namespace {

SuiteResult measured(SuiteResult r) {
  r.measured_only = true;
  return r;
}

}  // namespace

bool SelfcheckResult::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

std::string SelfcheckResult::log() const {
  std::ostringstream os;
  for (const auto& s : suites) {
    os << (s.measured_only ? "INFO" : (s.passed() ? "PASS" : "FAIL")) << ' ' << s.name
       << ": cases=" << s.cases << " failures=" << s.failures << " worst=" << s.worst;
    if (!s.measured_only) os << " tol=" << s.tolerance;
    os << '\n';
    if (s.failures != 0 && !s.first_failure.empty()) os << "    first: " << s.first_failure << '\n';
  }
  os << (passed() ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  return os.str();
}

SelfcheckResult run_selfcheck(const SelfcheckOptions& options) {
  namespace pr = properties;
  const Operator closed[] = {Operator::Hmm, Operator::Hhmwa, Operator::HhmgaDual};

  pr::SuiteConfig cfg;
  cfg.cases = options.cases;
  cfg.seed = options.seed;

  pr::SuiteConfig small = cfg;
  small.cases = std::max<std::size_t>(200, options.cases / 5);

  pr::SuiteConfig symmetric = cfg;
  symmetric.domain.xy = {{1, 1}, {2, 2}, {3, 3}};

  SelfcheckResult out;
  for (Operator op : closed) out.suites.push_back(pr::oracle_equivalence(op, cfg));
  out.suites.push_back(measured(pr::oracle_equivalence(Operator::HhmgaLiteral, cfg)));
  out.suites.push_back(pr::phi1_primitives(small));
  out.suites.push_back(pr::phi1_hmm(small));
  out.suites.push_back(pr::einstein_scalars(small));
  for (Operator op : closed) out.suites.push_back(pr::closure(op, cfg));
  out.suites.push_back(pr::closure(Operator::HhmgaLiteral, cfg));
  for (Operator op : closed) {
    SuiteResult r = pr::permutation_invariance(op, symmetric);
    r.name += " (x = y)";
    out.suites.push_back(std::move(r));
  }
  for (Operator op : closed) out.suites.push_back(pr::monotonicity(op, cfg));
  for (Operator op : closed) out.suites.push_back(measured(pr::permutation_invariance(op, cfg)));
  for (Operator op : closed) out.suites.push_back(measured(pr::boundedness(op, cfg)));
  for (Operator op : closed) out.suites.push_back(pr::idempotency(op, small));
  return out;
}

}  // namespace ivqrof
