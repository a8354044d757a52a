#include "curvop/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace curvop {

namespace {

void sign_normalize_columns(Eigen::MatrixXd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > 1e-12) {
        if (m(r, c) < 0) m.col(c) = -m.col(c);
        break;
      }
    }
  }
}

}  // namespace

double asymmetry(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

bool is_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return asymmetry(m) <= 1e-12 * std::max(1.0, m.norm());
}

SymEigen sym_eigen(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (!m.allFinite()) throw SymmetryError("sym_eigen: non-finite entries");
  if (!is_symmetric(m)) throw SymmetryError("sym_eigen: matrix is not symmetric");
  // Symmetrize to kill last-bit asymmetry before factorizing.
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  SymEigen out{solver.eigenvalues(), solver.eigenvectors()};
  sign_normalize_columns(out.eigenvectors);
  return out;
}

Eigen::MatrixXd kernel_basis(const Eigen::Ref<const Eigen::MatrixXd>& m, double tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax == 0.0) return Eigen::MatrixXd::Identity(cols, cols);

  Eigen::Index first_null = sv.size();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol * smax) {
      first_null = i;
      break;
    }
  }
  const Eigen::Index dim = cols - first_null;  // includes V columns past rank(m)
  Eigen::MatrixXd kernel = svd.matrixV().rightCols(dim);
  sign_normalize_columns(kernel);
  return kernel;
}

}  // namespace curvop
