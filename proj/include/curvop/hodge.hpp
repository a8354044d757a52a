#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "curvop/mesh.hpp"
#include "curvop/weitzenboeck.hpp"

namespace curvop {

/// Signed incidence matrices and diagonal Hodge stars of a triangle mesh.
/// Circumcentric dual with cotan weights; d1 * d0 = 0 holds exactly since the
/// incidences are integers.
struct DECOperators {
  Eigen::SparseMatrix<double> d0;  // edges x vertices
  Eigen::SparseMatrix<double> d1;  // triangles x edges
  Eigen::VectorXd star0;           // vertex dual areas
  Eigen::VectorXd star1;           // edge cotan weights
  Eigen::VectorXd star2;           // inverse triangle areas
};

/// Throws MeshQualityError on degenerate triangles, boundary edges, or
/// non-positive weights.
DECOperators build_dec(const TriMesh& mesh);

/// Generalized symmetric eigenproblem (A, M) for the Hodge Laplacian on
/// 1-cochains: A = star1 d0 star0^-1 d0^T star1 + d1^T star2 d1, M = star1.
/// A is symmetric positive semidefinite in the M-inner product.
struct Hodge1System {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass;
};

Hodge1System hodge1_matrix(const TriMesh& mesh);

/// k smallest eigenvalues of (A, M), ascending.  Dense solve up to 2000
/// edges; larger systems use shift-inverted subspace iteration on a sparse
/// factorization.
Eigen::VectorXd lowest_eigenvalues(const Hodge1System& system, int k);

/// Smallest 1-cochain eigenvalue of the unit-sphere mesh against the
/// sec4-eigen constant q(n-q)*alpha = 1 (n = 2, q = 1, alpha = 1 analytic).
BoundCheck verify_form_bound(const TriMesh& mesh, int k);

}  // namespace curvop
