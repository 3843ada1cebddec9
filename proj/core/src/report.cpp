#include <cstdio>
#include <sstream>

#include "ivqrof/cli_io.hpp"

namespace ivqrof {

namespace {

std::string tuple_text(const IVqROFN& a) {
  return "([" + format_number(a.mu_lo) + ", " + format_number(a.mu_hi) + "], [" +
         format_number(a.nu_lo) + ", " + format_number(a.nu_hi) + "])";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string_view to_string(ScoreKind kind) noexcept {
  return kind == ScoreKind::Eq6 ? "eq6" : "qpow";
}

std::string_view to_string(Operator op) noexcept {
  switch (op) {
    case Operator::Hmm:
      return "hmm";
    case Operator::Hhmwa:
      return "hhmwa";
    case Operator::HhmgaDual:
      return "hhmga";
    case Operator::HhmgaLiteral:
      return "hhmga-literal";
  }
  return "?";
}

std::string emit_report(const RankingReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << "alternative,rank,score,accuracy,mu_lo,mu_hi,nu_lo,nu_hi\n";
    for (const auto& r : report.ranking) {
      os << csv_field(r.label) << ',' << r.rank << ',' << format_number(r.score) << ','
         << format_number(r.accuracy) << ',' << format_number(r.value.mu_lo) << ','
         << format_number(r.value.mu_hi) << ',' << format_number(r.value.nu_lo) << ','
         << format_number(r.value.nu_hi) << '\n';
    }
    return os.str();
  }

  os << "ranking: " << ranking_string(report) << '\n';
  os << "params: q=" << report.q << (report.q_inferred ? " (inferred)" : "")
     << " phi=" << format_number(report.params.phi) << " x=" << format_number(report.params.x)
     << " y=" << format_number(report.params.y) << " score=" << to_string(report.score_kind)
     << " criteria-op=" << to_string(report.criteria_op) << '\n';
  os << '\n';
  for (const auto& r : report.ranking) {
    os << r.rank << ". " << r.label << "  score=" << format_number(r.score)
       << "  accuracy=" << format_number(r.accuracy) << "  x=" << tuple_text(r.value) << '\n';
  }
  if (report.intermediate) {
    os << "\naggregated matrix R (rows in input order):\n";
    for (std::size_t i = 0; i < report.intermediate->size(); ++i) {
      os << "  row " << i << ':';
      for (const auto& cell : (*report.intermediate)[i]) os << ' ' << tuple_text(cell);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace ivqrof
