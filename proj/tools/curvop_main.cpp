// Command-line front end: model generation, pinching analysis, bound checks,
// fuzz sweeps, and the discrete sphere spectrum.
//
// Exit codes: 0 success, 1 bound violation, 2 usage or input error,
// 3 validation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curvop/digest.hpp"
#include "curvop/hodge.hpp"
#include "curvop/io.hpp"
#include "curvop/mesh.hpp"
#include "curvop/random.hpp"
#include "curvop/sweep.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_kv(const std::vector<std::string>& params,
                   const std::set<std::string>& allowed) {
  KeyValues kv;
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("expected key=value, got '" + p + "'");
    const std::string key = p.substr(0, eq);
    if (!allowed.count(key)) throw UsageError("unknown parameter: " + key);
    if (kv.count(key)) throw UsageError("duplicate parameter: " + key);
    kv[key] = p.substr(eq + 1);
  }
  return kv;
}

const std::string& require(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw UsageError("missing parameter: " + key);
  return it->second;
}

int to_int(const std::string& s) {
  size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw UsageError("not a number: " + s);
  return v;
}

std::vector<std::pair<int, double>> parse_factors(const std::string& spec) {
  std::vector<std::pair<int, double>> factors;
  size_t start = 0;
  while (start <= spec.size()) {
    const size_t comma = spec.find(',', start);
    const std::string part = spec.substr(start, comma - start);
    const size_t colon = part.find(':');
    if (colon == std::string::npos)
      throw UsageError("product factor must be dim:kappa, got '" + part + "'");
    factors.emplace_back(to_int(part.substr(0, colon)), to_double(part.substr(colon + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return factors;
}

void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(path);
  if (!os) throw curvop::ValidationError("cannot open for writing: " + path);
  os << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature operators on tensor spaces: models, pinching "
               "classification, eigenvalue bound checks, sphere spectrum"};
  app.require_subcommand(1);

  // model
  auto* model = app.add_subcommand("model", "write a curvature tensor as JSON");
  bool model_constant = false, model_random = false;
  std::string model_product, model_fs, model_out;
  std::vector<std::string> model_params;
  model->add_flag("--constant", model_constant, "constant curvature; params n=, kappa=");
  model->add_option("--product", model_product, "product of factors, e.g. 2:1,2:1");
  model->add_option("--fubini-study", model_fs, "complex projective model, m=2 or 2");
  model->add_flag("--random", model_random,
                  "seeded random tensor; params n=, seed=, eps=, base= (optional file)");
  model->add_option("params", model_params, "model parameters as key=value");
  model->add_option("--out,-o", model_out, "output path (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "pinching classification report");
  std::string analyze_in, analyze_out;
  int analyze_restarts = 64;
  double analyze_tol = 1e-10;
  analyze->add_option("--in,-i", analyze_in, "curvature JSON")->required();
  analyze->add_option("--out,-o", analyze_out, "report path (default stdout)");
  analyze->add_option("--restarts", analyze_restarts, "extremum search restarts");
  analyze->add_option("--tol", analyze_tol, "extremum search tolerance");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "eigenvalue bound checks");
  std::string bounds_in, bounds_out, bounds_csv;
  std::vector<int> bounds_p, bounds_q;
  int bounds_restarts = 64;
  bool bounds_diag = false;
  bounds->add_option("--in,-i", bounds_in, "curvature JSON")->required();
  bounds->add_option("--p", bounds_p, "symmetric degrees")->delimiter(',');
  bounds->add_option("--q", bounds_q, "form degrees")->delimiter(',');
  bounds->add_option("--out,-o", bounds_out, "JSON path (default stdout)");
  bounds->add_option("--csv", bounds_csv, "CSV path");
  bounds->add_option("--restarts", bounds_restarts, "extremum search restarts");
  bounds->add_flag("--form-diagnostics", bounds_diag,
                   "append reported-only form diagnostics");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "seeded perturbation sweep");
  std::string sweep_base, sweep_out;
  curvop::SweepConfig sweep_cfg;
  sweep->add_option("--base", sweep_base, "base curvature JSON")->required();
  sweep->add_option("--count", sweep_cfg.count, "number of perturbations")->required();
  sweep->add_option("--eps", sweep_cfg.eps, "perturbation size");
  sweep->add_option("--seed", sweep_cfg.seed, "first seed");
  sweep->add_option("--restarts", sweep_cfg.restarts, "extremum search restarts");
  sweep->add_option("--out,-o", sweep_out, "summary path (default stdout)");

  // sphere-spectrum
  auto* spectrum = app.add_subcommand("sphere-spectrum",
                                      "discrete 1-cochain spectrum of the unit sphere");
  int spec_level = 3, spec_k = 8;
  std::string spec_csv, spec_out, spec_off;
  spectrum->add_option("--level", spec_level, "icosphere subdivision level (0..5)");
  spectrum->add_option("--k", spec_k, "number of lowest eigenvalues");
  spectrum->add_option("--csv", spec_csv, "spectrum CSV path (default stdout)");
  spectrum->add_option("--out,-o", spec_out, "bound check JSON path");
  spectrum->add_option("--off", spec_off, "mesh OFF export path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(model)) {
      const int chosen = (model_constant ? 1 : 0) + (!model_product.empty() ? 1 : 0) +
                         (!model_fs.empty() ? 1 : 0) + (model_random ? 1 : 0);
      if (chosen != 1)
        throw UsageError("choose exactly one of --constant, --product, --fubini-study, --random");

      curvop::CurvatureTensor r(2);
      if (model_constant) {
        const KeyValues kv = parse_kv(model_params, {"n", "kappa"});
        r = curvop::constant_curvature(to_int(require(kv, "n")),
                                       to_double(require(kv, "kappa")));
      } else if (!model_product.empty()) {
        if (!model_params.empty()) throw UsageError("--product takes no extra parameters");
        r = curvop::product_space(parse_factors(model_product));
      } else if (!model_fs.empty()) {
        if (!model_params.empty())
          throw UsageError("--fubini-study takes no extra parameters");
        const std::string spec = model_fs.rfind("m=", 0) == 0 ? model_fs.substr(2) : model_fs;
        r = curvop::fubini_study(to_int(spec));
      } else {
        const KeyValues kv = parse_kv(model_params, {"n", "seed", "eps", "base"});
        const int n = to_int(require(kv, "n"));
        const auto seed = static_cast<std::uint64_t>(std::stoull(require(kv, "seed")));
        const double eps = to_double(require(kv, "eps"));
        if (kv.count("base")) {
          const curvop::CurvatureTensor base = curvop::read_curvature_file(kv.at("base"));
          r = curvop::random_curvature(n, seed, eps, base);
        } else {
          r = curvop::random_curvature(n, seed, eps);
        }
      }
      if (model_out.empty()) {
        curvop::write_curvature_json(std::cout, r);
      } else {
        curvop::write_curvature_file(model_out, r);
      }
      return 0;
    }

    if (app.got_subcommand(analyze)) {
      const curvop::CurvatureTensor r = curvop::read_curvature_file(analyze_in);
      emit(analyze_out,
           curvop::pinching_report_json(curvop::classify(r, analyze_restarts, analyze_tol)));
      return 0;
    }

    if (app.got_subcommand(bounds)) {
      const curvop::CurvatureTensor r = curvop::read_curvature_file(bounds_in);
      if (bounds_p.empty() && bounds_q.empty()) {
        bounds_p = {2};
        bounds_q = {1};
      }
      const curvop::PinchingReport rep = curvop::classify(r, bounds_restarts);
      std::vector<curvop::BoundCheck> checks;
      for (int p : bounds_p) {
        checks.push_back(curvop::bound_positive_sym(r, p, curvop::BoundTag::eq2_7, rep));
        checks.push_back(curvop::bound_positive_sym(r, p, curvop::BoundTag::eq2_9, rep));
        checks.push_back(curvop::bound_negative_sym(r, p, rep));
      }
      for (int q : bounds_q) checks.push_back(curvop::bound_form(r, q, rep));

      std::string payload = curvop::bound_checks_json(checks);
      if (bounds_diag) {
        std::vector<std::pair<int, curvop::FormDiagnostics>> diags;
        for (int q : bounds_q) {
          curvop::TensorCoeffs omega{
              curvop::build_basis(r.n(), q, curvop::Symmetry::alternating), {}};
          std::mt19937_64 rng(42);
          omega.values.resize(omega.basis.size());
          for (Eigen::Index i = 0; i < omega.values.size(); ++i)
            omega.values[i] = curvop::uniform_pm1(rng);
          diags.emplace_back(q, curvop::form_q_diagnostics(r, omega));
        }
        payload += curvop::form_diagnostics_json(diags);
      }
      emit(bounds_out, payload);
      if (!bounds_csv.empty()) {
        std::ofstream os(bounds_csv);
        if (!os) throw curvop::ValidationError("cannot open for writing: " + bounds_csv);
        curvop::write_bound_checks_csv(os, checks);
      }
      for (const curvop::BoundCheck& c : checks)
        if (!c.satisfied) return 1;
      return 0;
    }

    if (app.got_subcommand(sweep)) {
      const curvop::CurvatureTensor base = curvop::read_curvature_file(sweep_base);
      const curvop::SweepSummary summary = curvop::run_sweep(base, sweep_cfg);
      emit(sweep_out, curvop::sweep_summary_json(summary));
      return summary.violations > 0 ? 1 : 0;
    }

    if (app.got_subcommand(spectrum)) {
      if (spec_level < 0 || spec_level > 5) throw UsageError("level must be in [0, 5]");
      if (spec_k < 0) throw UsageError("k must be >= 0");
      const curvop::TriMesh mesh = curvop::icosphere(spec_level);
      if (!spec_off.empty()) {
        std::ofstream os(spec_off);
        if (!os) throw curvop::ValidationError("cannot open for writing: " + spec_off);
        curvop::write_off(mesh, os);
      }
      const Eigen::VectorXd eigs =
          spec_k == 0 ? Eigen::VectorXd()
                      : curvop::lowest_eigenvalues(curvop::hodge1_matrix(mesh), spec_k);
      if (spec_csv.empty()) {
        curvop::write_spectrum_csv(std::cout, eigs);
      } else {
        std::ofstream os(spec_csv);
        if (!os) throw curvop::ValidationError("cannot open for writing: " + spec_csv);
        curvop::write_spectrum_csv(os, eigs);
      }
      if (spec_k > 0) {
        const curvop::BoundCheck check = curvop::verify_form_bound(mesh, spec_k);
        emit(spec_out, curvop::bound_checks_json({check}));
        if (!check.satisfied) return 1;
      }
      return 0;
    }
  } catch (const curvop::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
