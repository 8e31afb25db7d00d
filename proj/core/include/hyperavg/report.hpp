#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperavg/experiments.hpp"
#include "hyperavg/matrix.hpp"

namespace hyperavg {

// JSON array of report objects; fields mirror VerificationReport exactly.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

// CSV with header claim,measured,reference,relation,tolerance,verdict,stderr,metadata.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// Simulation series: t,mean_sq_norm2,stderr_sq_norm2,mean_delta1,stderr_delta1.
std::string series_to_csv(const std::vector<SeriesRow>& rows);

// Figure series: t,mean_delta1,stderr_delta1.
std::string figure_to_csv(const std::vector<SeriesRow>& rows);

// Probe rows: instance,t,mean_delta1,stderr_delta1,ell2_initial,ratio.
std::string probe_to_csv(const std::vector<ProbeRow>& rows);

// Integer CSV dump of a symmetric matrix, one row per line.
std::string int_matrix_to_csv(const IntSymmetricMatrix& m);

}  // namespace hyperavg
