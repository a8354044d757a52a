#include "curvop/io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "curvop/digest.hpp"

namespace curvop {

using nlohmann::json;

namespace {

json plane_json(const Plane& p) {
  return json::array({std::vector<double>(p.x.begin(), p.x.end()),
                      std::vector<double>(p.y.begin(), p.y.end())});
}

json bound_json(const BoundCheck& c) {
  return json{{"bound_tag", to_string(c.tag)},
              {"space", to_string(c.space)},
              {"n", c.n},
              {"degree", c.degree},
              {"alpha_or_beta", c.alpha_or_beta},
              {"rhs", c.rhs},
              {"lambda_extreme", c.lambda_extreme},
              {"margin", c.margin},
              {"satisfied", c.satisfied},
              {"vacuous", c.vacuous},
              {"tolerance", c.tolerance},
              {"inputs_digest", c.inputs_digest}};
}

}  // namespace

void write_curvature_json(std::ostream& os, const CurvatureTensor& r) {
  json comps = json::array();
  for (const auto& c : canonical_components(r))
    comps.push_back(json{{"i", c.i + 1},
                         {"j", c.j + 1},
                         {"k", c.k + 1},
                         {"l", c.l + 1},
                         {"value", c.value}});
  os << json{{"n", r.n()}, {"components", comps}}.dump(2) << "\n";
}

CurvatureTensor read_curvature_json(std::istream& is) {
  const json doc = json::parse(is);
  const int n = doc.at("n").get<int>();
  if (n < 2) throw ValidationError("curvature JSON: dimension must be >= 2");
  std::vector<CanonicalComponent> comps;
  for (const json& entry : doc.at("components")) {
    CanonicalComponent c{entry.at("i").get<int>() - 1, entry.at("j").get<int>() - 1,
                         entry.at("k").get<int>() - 1, entry.at("l").get<int>() - 1,
                         entry.at("value").get<double>()};
    if (c.i < 0 || c.j >= n || c.k < 0 || c.l >= n)
      throw ValidationError("curvature JSON: index out of range");
    comps.push_back(c);
  }
  CurvatureTensor r = from_canonical(n, comps);
  if (!validate(r).passed)
    throw ValidationError("curvature JSON: symmetry validation failed");
  return r;
}

void write_curvature_file(const std::string& path, const CurvatureTensor& r) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open for writing: " + path);
  write_curvature_json(os, r);
}

CurvatureTensor read_curvature_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open for reading: " + path);
  return read_curvature_json(is);
}

std::string pinching_report_json(const PinchingReport& rep) {
  json doc{{"n", rep.n},
           {"sec_min", rep.sec_min},
           {"sec_max", rep.sec_max},
           {"argmin_plane", plane_json(rep.argmin_plane)},
           {"argmax_plane", plane_json(rep.argmax_plane)},
           {"ric_min", rep.ric_min},
           {"ric_max", rep.ric_max},
           {"second_kind_min", rep.second_kind_min},
           {"second_kind_max", rep.second_kind_max},
           {"verdicts",
            json{{"lemma1_strict", rep.lemma1_strict},
                 {"lemma1_nonneg", rep.lemma1_nonneg},
                 {"double_pinch_strict", rep.double_pinch_strict},
                 {"double_pinch_nonneg", rep.double_pinch_nonneg},
                 {"lemma2_strict", rep.lemma2_strict},
                 {"lemma2_nonneg", rep.lemma2_nonneg}}},
           {"margins",
            json{{"lemma1", rep.lemma1_margin},
                 {"double_pinch", rep.double_pinch_margin},
                 {"lemma2", rep.lemma2_margin}}},
           {"strict_margin", kStrictMargin},
           {"restarts", rep.restarts},
           {"tol", rep.tol}};
  return doc.dump(2) + "\n";
}

std::string bound_checks_json(const std::vector<BoundCheck>& checks) {
  json arr = json::array();
  for (const BoundCheck& c : checks) arr.push_back(bound_json(c));
  return arr.dump(2) + "\n";
}

std::string rigidity_report_json(const RigidityReport& rep) {
  return json{{"verdict", to_string(rep.verdict)},
              {"scalar", rep.scalar},
              {"einstein_residual", rep.einstein_residual},
              {"sec_min", rep.sec_min},
              {"threshold", rep.threshold},
              {"second_kind_min", rep.second_kind_min}}
             .dump(2) +
         "\n";
}

std::string sweep_summary_json(const SweepSummary& summary) {
  json items = json::array();
  json violating = json::array();
  for (const SweepItem& item : summary.items) {
    items.push_back(json{{"seed", item.seed},
                         {"lemma1_strict", item.lemma1_strict},
                         {"lemma2_strict", item.lemma2_strict},
                         {"vacuous", item.vacuous},
                         {"margin", item.margin},
                         {"sec_min", item.sec_min},
                         {"sec_max", item.sec_max},
                         {"ric_min", item.ric_min},
                         {"ric_max", item.ric_max},
                         {"violation", item.violation}});
    if (item.violation) violating.push_back(item.seed);
  }
  json doc{{"base_digest", summary.base_digest},
           {"config",
            json{{"seed", summary.config.seed},
                 {"count", summary.config.count},
                 {"eps", summary.config.eps},
                 {"restarts", summary.config.restarts},
                 {"tol", summary.config.tol}}},
           {"violations", summary.violations},
           {"vacuous", summary.vacuous_count},
           {"violating_seeds", violating},
           {"histogram",
            json{{"lo", summary.histogram.lo},
                 {"hi", summary.histogram.hi},
                 {"bins", summary.histogram.bins}}},
           {"items", items}};
  return doc.dump(2) + "\n";
}

std::string form_diagnostics_json(
    const std::vector<std::pair<int, FormDiagnostics>>& diags) {
  json arr = json::array();
  for (const auto& [q, d] : diags)
    arr.push_back(json{{"q", q},
                       {"q_operator", d.q_operator},
                       {"q_half_coefficient", d.q_half_coefficient},
                       {"aux_trace_residual", d.aux_trace_residual},
                       {"aux_identity_residual", d.aux_identity_residual},
                       {"aux_norm_residual", d.aux_norm_residual}});
  return arr.dump(2) + "\n";
}

void write_bound_checks_csv(std::ostream& os, const std::vector<BoundCheck>& checks) {
  os << "bound_tag,space,n,degree,alpha_or_beta,rhs,lambda_extreme,margin,satisfied,"
        "vacuous,inputs_digest\n";
  for (const BoundCheck& c : checks)
    os << to_string(c.tag) << "," << to_string(c.space) << "," << c.n << "," << c.degree
       << "," << format_g17(c.alpha_or_beta) << "," << format_g17(c.rhs) << ","
       << format_g17(c.lambda_extreme) << "," << format_g17(c.margin) << ","
       << (c.satisfied ? 1 : 0) << "," << (c.vacuous ? 1 : 0) << "," << c.inputs_digest
       << "\n";
}

void write_spectrum_csv(std::ostream& os,
                        const Eigen::Ref<const Eigen::VectorXd>& eigenvalues) {
  os << "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    os << i << "," << format_g17(eigenvalues[i]) << "\n";
}

}  // namespace curvop
