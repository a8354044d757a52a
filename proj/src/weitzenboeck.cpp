#include "curvop/weitzenboeck.hpp"

#include <cmath>

#include "curvop/digest.hpp"
#include "curvop/linalg.hpp"

namespace curvop {

const char* to_string(OperatorSpace space) {
  switch (space) {
    case OperatorSpace::sym_full: return "S^p";
    case OperatorSpace::sym_traceless: return "S^p_0";
    case OperatorSpace::form: return "Lambda^q";
    case OperatorSpace::second_kind: return "S^2_0-second-kind";
  }
  return "?";
}

const char* to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::eq2_7: return "eq2.7";
    case BoundTag::eq2_9: return "eq2.9";
    case BoundTag::eq3_1: return "eq3.1";
    case BoundTag::eq4_1: return "eq4.1";
    case BoundTag::thm3: return "thm3";
    case BoundTag::sec3_eigen: return "sec3-eigen";
    case BoundTag::sec4_eigen: return "sec4-eigen";
  }
  return "?";
}

const char* to_string(RigidityVerdict verdict) {
  switch (verdict) {
    case RigidityVerdict::rigid: return "rigid";
    case RigidityVerdict::inconclusive: return "inconclusive";
    case RigidityVerdict::not_einstein: return "not_einstein";
  }
  return "?";
}

Eigen::VectorXd weitz_apply(const CurvatureTensor& r, const MultiIndexBasis& basis,
                            const Eigen::Ref<const Eigen::VectorXd>& values) {
  if (basis.n() != r.n()) throw DimensionError("weitz_apply: dimension mismatch");
  if (values.size() != basis.size())
    throw DimensionError("weitz_apply: coefficient length mismatch");
  const int n = r.n();
  const int p = basis.degree();
  const Eigen::MatrixXd ric = ricci(r);

  auto value_at = [&](const IndexTuple& idx) -> double {
    auto [pos, sign] = basis.component(idx);
    return pos < 0 ? 0.0 : sign * values[pos];
  };

  Eigen::VectorXd out(basis.size());
  IndexTuple work;
  for (Eigen::Index t = 0; t < basis.size(); ++t) {
    const IndexTuple& tup = basis.tuple(t);
    double acc = 0.0;
    for (int a = 0; a < p; ++a) {
      work = tup;
      for (int k = 0; k < n; ++k) {
        const double rc = ric(tup[a], k);
        if (rc == 0.0) continue;
        work[a] = k;
        acc += rc * value_at(work);
      }
    }
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (a == b) continue;
        work = tup;
        for (int k = 0; k < n; ++k) {
          work[a] = k;
          for (int l = 0; l < n; ++l) {
            const double rv = r(tup[a], k, tup[b], l);
            if (rv == 0.0) continue;
            work[b] = l;
            acc -= rv * value_at(work);
          }
          work[b] = tup[b];
        }
      }
    out[t] = acc;
  }
  return out;
}

Eigen::MatrixXd weitz_matrix_raw(const CurvatureTensor& r, const MultiIndexBasis& basis) {
  Eigen::MatrixXd m(basis.size(), basis.size());
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(basis.size());
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    unit[c] = 1.0;
    m.col(c) = weitz_apply(r, basis, unit);
    unit[c] = 0.0;
  }
  return m;
}

WeitzenboeckMatrix weitz_matrix(const CurvatureTensor& r, OperatorSpace space, int degree,
                                double t) {
  if (space == OperatorSpace::second_kind)
    throw DimensionError("weitz_matrix: use second_kind_matrix for the second-kind operator");
  if (degree < 1) throw DimensionError("weitz_matrix: degree must be >= 1");
  if (space == OperatorSpace::sym_traceless && degree < 2)
    throw DimensionError("weitz_matrix: traceless restriction needs degree >= 2");

  WeitzenboeckMatrix out;
  out.space = space;
  out.degree = degree;
  out.n = r.n();
  out.t = t;
  out.basis = build_basis(r.n(), degree,
                          space == OperatorSpace::form ? Symmetry::alternating
                                                       : Symmetry::symmetric);
  const Eigen::MatrixXd raw = weitz_matrix_raw(r, out.basis);
  const Eigen::VectorXd& w = out.basis.weights();

  if (space == OperatorSpace::sym_traceless) {
    out.frame = traceless_basis(r.n(), degree);
    out.matrix = t * (out.frame.transpose() * w.asDiagonal() * raw * out.frame);
  } else {
    const Eigen::VectorXd sqrt_w = w.cwiseSqrt();
    out.frame = Eigen::MatrixXd(sqrt_w.cwiseInverse().asDiagonal());
    out.matrix = t * (sqrt_w.asDiagonal() * raw * sqrt_w.cwiseInverse().asDiagonal());
  }
  return out;
}

WeitzenboeckMatrix second_kind_matrix(const CurvatureTensor& r) {
  const int n = r.n();
  WeitzenboeckMatrix out;
  out.space = OperatorSpace::second_kind;
  out.degree = 2;
  out.n = n;
  out.t = 1.0;
  out.basis = build_basis(n, 2, Symmetry::symmetric);
  out.frame = traceless_basis(n, 2);

  // phi |-> R_{iklj} phi^{kl} on canonical 2-tensor coefficients
  auto apply = [&](const Eigen::Ref<const Eigen::VectorXd>& values) {
    Eigen::VectorXd img(out.basis.size());
    for (Eigen::Index t = 0; t < out.basis.size(); ++t) {
      const int i = out.basis.tuple(t)[0];
      const int j = out.basis.tuple(t)[1];
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double rv = r(i, k, l, j);
          if (rv == 0.0) continue;
          auto [pos, sign] = out.basis.component({k, l});
          acc += rv * sign * values[pos];
        }
      img[t] = acc;
    }
    return img;
  };

  const Eigen::Index dim = out.frame.cols();
  Eigen::MatrixXd m(dim, dim);
  const Eigen::VectorXd& w = out.basis.weights();
  for (Eigen::Index c = 0; c < dim; ++c)
    m.col(c) = out.frame.transpose() * w.asDiagonal() * apply(out.frame.col(c));
  out.matrix = m;
  return out;
}

double q_form_value(const CurvatureTensor& r, const TensorCoeffs& phi) {
  if (phi.basis.n() != r.n()) throw DimensionError("q_form_value: dimension mismatch");
  const Eigen::VectorXd image = weitz_apply(r, phi.basis, phi.values);
  return image.cwiseProduct(phi.basis.weights()).dot(phi.values);
}

double diag_identity_residual(const CurvatureTensor& r, const TensorCoeffs& phi) {
  if (phi.basis.degree() != 2 || phi.basis.symmetry() != Symmetry::symmetric)
    throw DimensionError("diag_identity_residual: expects a symmetric 2-tensor");
  const int n = r.n();
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index t = 0; t < phi.basis.size(); ++t) {
    const int i = phi.basis.tuple(t)[0];
    const int j = phi.basis.tuple(t)[1];
    mat(i, j) = phi.values[t];
    mat(j, i) = phi.values[t];
  }
  const SymEigen eig = sym_eigen(mat);

  const double q2 = q_form_value(r, phi);
  double eigensum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double diff = eig.eigenvalues(i) - eig.eigenvalues(j);
      if (diff == 0.0) continue;
      eigensum += plane_curvature(r, eig.eigenvectors.col(i), eig.eigenvectors.col(j)) *
                  diff * diff;
    }
  return std::abs(q2 - eigensum) / std::max(1.0, std::abs(q2));
}

namespace {

std::string bound_digest(const CurvatureTensor& r, BoundTag tag, int degree,
                         double alpha_or_beta) {
  return curvature_digest(r) + "|" + to_string(tag) + "|deg=" + std::to_string(degree) +
         "|bound_base=" + format_g17(alpha_or_beta);
}

}  // namespace

BoundCheck bound_positive_sym(const CurvatureTensor& r, int p, BoundTag which,
                              const PinchingReport& rep) {
  if (which != BoundTag::eq2_7 && which != BoundTag::eq2_9)
    throw DimensionError("bound_positive_sym: tag must be eq2.7 or eq2.9");
  if (p < 2) throw DimensionError("bound_positive_sym: degree must be >= 2");
  const double n = static_cast<double>(r.n());
  const double alpha = rep.sec_min;
  const bool hypotheses = which == BoundTag::eq2_7
                              ? (rep.lemma1_strict || rep.double_pinch_strict)
                              : (rep.lemma1_nonneg || rep.double_pinch_nonneg);

  const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::sym_traceless, p);
  const SymEigen eig = sym_eigen(op.matrix);
  const double lambda_min = eig.eigenvalues(0);
  const double rhs =
      (which == BoundTag::eq2_7 ? p * (n + p - 2.0) : p * (n - 1.0)) * alpha;

  BoundCheck check;
  check.tag = which;
  check.space = OperatorSpace::sym_traceless;
  check.n = r.n();
  check.degree = p;
  check.alpha_or_beta = alpha;
  check.rhs = rhs;
  check.lambda_extreme = lambda_min;
  check.margin = lambda_min - rhs;
  check.vacuous = !hypotheses;
  check.tolerance = kBoundTolerance;
  check.satisfied = check.vacuous || check.margin >= -kBoundTolerance;
  check.inputs_digest = bound_digest(r, which, p, alpha);
  return check;
}

BoundCheck bound_positive_sym(const CurvatureTensor& r, int p, BoundTag which) {
  return bound_positive_sym(r, p, which, classify(r));
}

BoundCheck bound_negative_sym(const CurvatureTensor& r, int p, const PinchingReport& rep) {
  if (p < 2) throw DimensionError("bound_negative_sym: degree must be >= 2");
  const double n = static_cast<double>(r.n());
  const double beta = -rep.sec_max;
  const bool hypotheses = rep.lemma2_strict || rep.lemma2_nonneg;

  const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::sym_traceless, p);
  const SymEigen eig = sym_eigen(op.matrix);
  const double lambda_max = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double rhs = -p * (n + p - 2.0) * beta;

  BoundCheck check;
  check.tag = BoundTag::eq3_1;
  check.space = OperatorSpace::sym_traceless;
  check.n = r.n();
  check.degree = p;
  check.alpha_or_beta = beta;
  check.rhs = rhs;
  check.lambda_extreme = lambda_max;
  check.margin = rhs - lambda_max;
  check.vacuous = !hypotheses;
  check.tolerance = kBoundTolerance;
  check.satisfied = check.vacuous || check.margin >= -kBoundTolerance;
  check.inputs_digest = bound_digest(r, BoundTag::eq3_1, p, beta);
  return check;
}

BoundCheck bound_negative_sym(const CurvatureTensor& r, int p) {
  return bound_negative_sym(r, p, classify(r));
}

BoundCheck bound_form(const CurvatureTensor& r, int q, const PinchingReport& rep) {
  if (q < 1 || q > r.n()) throw DimensionError("bound_form: form degree out of range");
  const double n = static_cast<double>(r.n());
  const double alpha = rep.sec_min;
  const bool hypotheses = rep.lemma1_strict || rep.double_pinch_strict;

  const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::form, q);
  const SymEigen eig = sym_eigen(op.matrix);
  const double lambda_min = eig.eigenvalues(0);
  const double rhs = q * (n - q) * alpha;

  BoundCheck check;
  check.tag = BoundTag::eq4_1;
  check.space = OperatorSpace::form;
  check.n = r.n();
  check.degree = q;
  check.alpha_or_beta = alpha;
  check.rhs = rhs;
  check.lambda_extreme = lambda_min;
  check.margin = lambda_min - rhs;
  check.vacuous = !hypotheses;
  check.tolerance = kBoundTolerance;
  check.satisfied = check.vacuous || check.margin >= -kBoundTolerance;
  check.inputs_digest = bound_digest(r, BoundTag::eq4_1, q, alpha);
  return check;
}

BoundCheck bound_form(const CurvatureTensor& r, int q) {
  return bound_form(r, q, classify(r));
}

double eigen_bound_constants(int n, int degree, double value, BoundTag which) {
  if (n < 2 || degree < 1 || value <= 0)
    throw DimensionError("eigen_bound_constants: inputs must be positive");
  switch (which) {
    case BoundTag::thm3:
    case BoundTag::sec3_eigen:
      return degree * (n + degree - 2.0) * value;
    case BoundTag::sec4_eigen:
      return degree * (n - degree) * value;
    default:
      throw DimensionError("eigen_bound_constants: tag has no eigenvalue constant");
  }
}

RigidityReport rigidity_check(const CurvatureTensor& r, int budget, double tol) {
  const int n = r.n();
  const Eigen::MatrixXd ric = ricci(r);
  const double s = ric.trace();

  RigidityReport rep;
  rep.scalar = s;
  rep.einstein_residual =
      (ric - (s / n) * Eigen::MatrixXd::Identity(n, n)).norm();
  if (rep.einstein_residual > 1e-8 * std::max(1.0, std::abs(s))) {
    rep.verdict = RigidityVerdict::not_einstein;
    rep.sec_min = 0;
    rep.threshold = 0;
    const SymEigen sk = sym_eigen(second_kind_matrix(r).matrix);
    rep.second_kind_min = sk.eigenvalues(0);
    return rep;
  }

  const PinchingReport pin = classify(r, budget, tol);
  rep.sec_min = pin.sec_min;
  rep.threshold = n * static_cast<double>(n) * pin.sec_min;
  rep.second_kind_min = pin.second_kind_min;
  rep.verdict = (pin.sec_min > 0 && s <= rep.threshold - kStrictMargin)
                    ? RigidityVerdict::rigid
                    : RigidityVerdict::inconclusive;
  return rep;
}

FormDiagnostics form_q_diagnostics(const CurvatureTensor& r, const TensorCoeffs& omega) {
  if (omega.basis.symmetry() != Symmetry::alternating)
    throw DimensionError("form_q_diagnostics: expects an alternating tensor");
  if (omega.basis.n() != r.n()) throw DimensionError("form_q_diagnostics: dimension mismatch");
  const int n = r.n();
  const int q = omega.basis.degree();
  const double s = scalar_curvature(r);
  const Eigen::MatrixXd ric = ricci(r);

  auto value_at = [&](const IndexTuple& idx) -> double {
    auto [pos, sign] = omega.basis.component(idx);
    return pos < 0 ? 0.0 : sign * omega.values[pos];
  };

  // iterate all tuples of a given length with indices in [0, n)
  auto for_each_tuple = [&](int len, auto&& fn) {
    IndexTuple idx(static_cast<size_t>(len), 0);
    while (true) {
      fn(idx);
      int c = len - 1;
      while (c >= 0 && ++idx[c] == n) idx[c--] = 0;
      if (c < 0) break;
    }
  };

  double ric_term = 0.0;
  for_each_tuple(q - 1, [&](const IndexTuple& rest) {
    IndexTuple a(rest.size() + 1), b(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), a.begin() + 1);
    std::copy(rest.begin(), rest.end(), b.begin() + 1);
    for (int i = 0; i < n; ++i) {
      a[0] = i;
      const double va = value_at(a);
      if (va == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        b[0] = j;
        ric_term += ric(i, j) * va * value_at(b);
      }
    }
  });

  double curv_term = 0.0;
  if (q >= 2) {
    for_each_tuple(q - 2, [&](const IndexTuple& rest) {
      IndexTuple a(rest.size() + 2), b(rest.size() + 2);
      std::copy(rest.begin(), rest.end(), a.begin() + 2);
      std::copy(rest.begin(), rest.end(), b.begin() + 2);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          a[0] = i;
          a[1] = k;
          const double va = value_at(a);
          if (va == 0.0) continue;
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
              b[0] = j;
              b[1] = l;
              curv_term += r(i, j, k, l) * va * value_at(b);
            }
        }
    });
  }

  FormDiagnostics diag;
  diag.q_operator = q_form_value(r, omega);
  diag.q_half_coefficient = q * (ric_term - 0.5 * (q - 1.0) * curv_term);

  const double omega_norm_sq = omega.norm_sq();
  double trace_residual = 0.0;
  double contraction_lhs = 0.0;
  double norm_lhs = 0.0;
  Eigen::MatrixXd aux(n, n);
  IndexTuple shifted;
  for (const IndexTuple& base : omega.basis.tuples()) {
    const double w_base = value_at(base);
    aux.setZero();
    for (int jj = 0; jj < n; ++jj)
      for (int kk = 0; kk < n; ++kk) {
        double v = 0.0;
        for (int a = 0; a < q; ++a) {
          if (base[a] == kk) {
            shifted = base;
            shifted[a] = jj;
            v += value_at(shifted);
          }
          if (base[a] == jj) {
            shifted = base;
            shifted[a] = kk;
            v += value_at(shifted);
          }
        }
        if (jj == kk) v -= (3.0 * q / n) * w_base;
        aux(jj, kk) = v;
      }
    trace_residual = std::max(trace_residual, std::abs(aux.trace()));
    norm_lhs += aux.squaredNorm();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            contraction_lhs += r(i, j, k, l) * aux(i, l) * aux(j, k);
  }

  const double contraction_rhs =
      q * ((2.0 * (n + 4.0 * q) / n) * ric_term - 3.0 * (q - 1.0) * curv_term -
           (4.0 * q / (n * static_cast<double>(n))) * s * omega_norm_sq);
  const double norm_rhs = 2.0 * q * (n + 2.0) * (n - q) / n * omega_norm_sq;

  diag.aux_trace_residual = trace_residual;
  diag.aux_identity_residual =
      std::abs(contraction_lhs - contraction_rhs) / std::max(1.0, std::abs(contraction_lhs));
  diag.aux_norm_residual =
      std::abs(norm_lhs - norm_rhs) / std::max(1.0, std::abs(norm_lhs));
  return diag;
}

}  // namespace curvop
