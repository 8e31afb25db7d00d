#include "hyperavg/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hyperavg {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"claim", r.claim},
                   {"measured", r.measured},
                   {"reference", r.reference},
                   {"relation", relation_symbol(r.relation)},
                   {"tolerance", r.tolerance},
                   {"verdict", r.verdict ? "pass" : "fail"},
                   {"stderr", r.stderr_measured},
                   {"metadata", r.metadata}});
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "claim,measured,reference,relation,tolerance,verdict,stderr,metadata\n";
  for (const auto& r : reports) {
    out << csv_escape(r.claim) << ',' << num(r.measured) << ',' << num(r.reference) << ','
        << relation_symbol(r.relation) << ',' << num(r.tolerance) << ','
        << (r.verdict ? "pass" : "fail") << ',' << num(r.stderr_measured) << ','
        << csv_escape(r.metadata) << '\n';
  }
  return out.str();
}

std::string series_to_csv(const std::vector<SeriesRow>& rows) {
  std::ostringstream out;
  out << "t,mean_sq_norm2,stderr_sq_norm2,mean_delta1,stderr_delta1\n";
  for (const auto& r : rows) {
    out << r.t << ',' << num(r.mean_sq) << ',' << num(r.se_sq) << ',' << num(r.mean_d1) << ','
        << num(r.se_d1) << '\n';
  }
  return out.str();
}

std::string figure_to_csv(const std::vector<SeriesRow>& rows) {
  std::ostringstream out;
  out << "t,mean_delta1,stderr_delta1\n";
  for (const auto& r : rows) {
    out << r.t << ',' << num(r.mean_d1) << ',' << num(r.se_d1) << '\n';
  }
  return out.str();
}

std::string probe_to_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream out;
  out << "instance,t,mean_delta1,stderr_delta1,ell2_initial,ratio\n";
  for (const auto& r : rows) {
    out << csv_escape(r.instance) << ',' << r.t << ',' << num(r.mean_delta1) << ','
        << num(r.se_delta1) << ',' << num(r.ell2_initial) << ',' << num(r.ratio) << '\n';
  }
  return out.str();
}

std::string int_matrix_to_csv(const IntSymmetricMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ',';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperavg
