#pragma once

#include <Eigen/Core>

#include <string>

#include "curvop/curvature.hpp"
#include "curvop/multi_index.hpp"
#include "curvop/pinching.hpp"

namespace curvop {

enum class OperatorSpace { sym_full, sym_traceless, form, second_kind };

const char* to_string(OperatorSpace space);

/// Curvature term of a Lichnerowicz-type Laplacian as a dense symmetric
/// matrix.  `matrix` lives in an orthonormal basis of the requested space;
/// `frame` holds that basis as canonical coefficient columns over `basis`,
/// so eigenvectors map back to tensors as frame * v.
struct WeitzenboeckMatrix {
  OperatorSpace space;
  int degree;
  int n;
  double t;
  Eigen::MatrixXd matrix;
  MultiIndexBasis basis;
  Eigen::MatrixXd frame;
};

/// Action of the Weitzenboeck curvature operator on canonical coefficients:
/// Ricci contraction on each slot minus the paired curvature contraction over
/// ordered slot pairs.  Valid for symmetric and alternating bases alike.
Eigen::VectorXd weitz_apply(const CurvatureTensor& r, const MultiIndexBasis& basis,
                            const Eigen::Ref<const Eigen::VectorXd>& values);

/// Raw-basis operator matrix: column s holds weitz_apply of the s-th unit
/// coefficient vector.  Self-adjoint in the weighted inner product, not
/// symmetric as a plain array.
Eigen::MatrixXd weitz_matrix_raw(const CurvatureTensor& r, const MultiIndexBasis& basis);

/// Operator matrix of t * (Weitzenboeck curvature term) restricted to the
/// requested space, in an orthonormal basis.  sym_traceless requires
/// degree >= 2.  Throws DimensionError for invalid combinations.
WeitzenboeckMatrix weitz_matrix(const CurvatureTensor& r, OperatorSpace space, int degree,
                                double t = 1.0);

/// Curvature operator of the second kind: traceless projection of
/// phi |-> R_{iklj} phi^{kl} on traceless symmetric 2-tensors.
WeitzenboeckMatrix second_kind_matrix(const CurvatureTensor& r);

/// Quadratic form g(ROp(phi), phi) with the full-contraction inner product.
double q_form_value(const CurvatureTensor& r, const TensorCoeffs& phi);

/// For traceless symmetric 2-tensors: relative gap between the quadratic form
/// and its eigenbasis expression sum_{i != j} sec(e_i,e_j) (eps_i - eps_j)^2.
double diag_identity_residual(const CurvatureTensor& r, const TensorCoeffs& phi);

// ---- bound checks ----------------------------------------------------------

enum class BoundTag { eq2_7, eq2_9, eq3_1, eq4_1, thm3, sec3_eigen, sec4_eigen };

const char* to_string(BoundTag tag);

struct BoundCheck {
  BoundTag tag;
  OperatorSpace space;
  int n;
  int degree;
  double alpha_or_beta;    // sec_min for lower bounds, -sec_max for upper
  double rhs;              // bound constant
  double lambda_extreme;   // relevant extreme eigenvalue
  double margin;           // sign-adjusted so satisfied <=> margin >= -tolerance
  bool satisfied;
  bool vacuous;            // hypotheses fail; reported satisfied by convention
  double tolerance;
  std::string inputs_digest;
};

inline constexpr double kBoundTolerance = 1e-9;

/// lambda_min of the traceless symmetric degree-p operator against
/// p(n+p-2)*alpha (eq2.7) or p(n-1)*alpha (eq2.9).  Vacuous unless the
/// positive-side pinching hypotheses hold.
BoundCheck bound_positive_sym(const CurvatureTensor& r, int p, BoundTag which,
                              const PinchingReport& rep);
BoundCheck bound_positive_sym(const CurvatureTensor& r, int p, BoundTag which);

/// lambda_max of the traceless symmetric degree-p operator against
/// -p(n+p-2)*beta.  Vacuous unless the negative-side hypotheses hold.
BoundCheck bound_negative_sym(const CurvatureTensor& r, int p, const PinchingReport& rep);
BoundCheck bound_negative_sym(const CurvatureTensor& r, int p);

/// lambda_min of the degree-q form operator against q(n-q)*alpha.
BoundCheck bound_form(const CurvatureTensor& r, int q, const PinchingReport& rep);
BoundCheck bound_form(const CurvatureTensor& r, int q);

/// Eigenvalue lower-bound constants: p(n+p-2)*value for thm3/sec3-eigen,
/// q(n-q)*value for sec4-eigen.
double eigen_bound_constants(int n, int degree, double value, BoundTag which);

// ---- rigidity ---------------------------------------------------------------

enum class RigidityVerdict { rigid, inconclusive, not_einstein };

const char* to_string(RigidityVerdict verdict);

struct RigidityReport {
  RigidityVerdict verdict;
  double scalar;             // scalar curvature s
  double einstein_residual;  // ||Ric - (s/n) I||_F
  double sec_min;
  double threshold;          // n^2 * sec_min
  double second_kind_min;    // direct positivity witness
};

/// Einstein test, then the scalar-curvature criterion s < n^2 * sec_min with
/// sec_min > 0, else inconclusive.
RigidityReport rigidity_check(const CurvatureTensor& r, int budget = 64,
                              double tol = 1e-10);

// ---- reported-only diagnostics ---------------------------------------------

/// Residuals of an auxiliary traceless-two-tensor construction for forms and
/// of an alternative printed coefficient for the form quadratic form.  These
/// quantities do not reproduce the operator values; they are reported for
/// inspection and never asserted.
struct FormDiagnostics {
  double q_operator;            // g(ROp(omega), omega) from the restricted operator
  double q_half_coefficient;    // q * (Ric term - (q-1)/2 * curvature term)
  double aux_trace_residual;    // max |trace of the auxiliary two-tensor|
  double aux_identity_residual; // |LHS - RHS| of the contraction identity
  double aux_norm_residual;     // |LHS - RHS| of the norm identity
};

FormDiagnostics form_q_diagnostics(const CurvatureTensor& r, const TensorCoeffs& omega);

}  // namespace curvop
