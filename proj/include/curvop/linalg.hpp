#pragma once

#include <Eigen/Core>

#include "curvop/errors.hpp"

namespace curvop {

struct SymEigen {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

/// Largest entrywise asymmetry |m(i,j) - m(j,i)|.
double asymmetry(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Symmetric within tolerance 1e-12 * max(1, ||m||_F).
bool is_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Spectral decomposition of a symmetric matrix.  Eigenvalues ascending,
/// eigenvectors orthonormal, each with its first nonzero component positive
/// so repeated runs produce identical output.  Throws SymmetryError when the
/// input is not symmetric within tolerance.
SymEigen sym_eigen(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Orthonormal basis of the numerical null space: right singular vectors
/// whose singular value is <= tol * sigma_max.  A zero matrix yields the
/// identity columns.  Result columns are sign-normalized.
Eigen::MatrixXd kernel_basis(const Eigen::Ref<const Eigen::MatrixXd>& m, double tol);

}  // namespace curvop
