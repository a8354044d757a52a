#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "curvop/curvature.hpp"
#include "curvop/hodge.hpp"
#include "curvop/pinching.hpp"
#include "curvop/sweep.hpp"
#include "curvop/weitzenboeck.hpp"

namespace curvop {

// Curvature JSON: {"n": int, "components": [{"i","j","k","l","value"}...]}
// with 1-based canonical quadruples.  The reader expands by symmetry and
// re-validates; a failed validation throws ValidationError.
void write_curvature_json(std::ostream& os, const CurvatureTensor& r);
CurvatureTensor read_curvature_json(std::istream& is);
void write_curvature_file(const std::string& path, const CurvatureTensor& r);
CurvatureTensor read_curvature_file(const std::string& path);

std::string pinching_report_json(const PinchingReport& rep);
std::string bound_checks_json(const std::vector<BoundCheck>& checks);
std::string rigidity_report_json(const RigidityReport& rep);
std::string sweep_summary_json(const SweepSummary& summary);
std::string form_diagnostics_json(const std::vector<std::pair<int, FormDiagnostics>>& diags);

void write_bound_checks_csv(std::ostream& os, const std::vector<BoundCheck>& checks);
void write_spectrum_csv(std::ostream& os, const Eigen::Ref<const Eigen::VectorXd>& eigenvalues);

}  // namespace curvop
