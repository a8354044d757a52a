#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <utility>
#include <vector>

#include "curvop/errors.hpp"

namespace curvop {

/// Algebraic curvature tensor R_{ijkl} in an orthonormal frame of dimension n,
/// stored densely.  Sign convention: the constant-curvature model is
/// R_{ijkl} = kappa (d_{ik} d_{jl} - d_{il} d_{jk}), so sec(e_i, e_j) = R_{ijij}.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int n);

  int n() const { return n_; }
  double operator()(int i, int j, int k, int l) const {
    return comp_[flat_index(i, j, k, l)];
  }
  double& at(int i, int j, int k, int l) { return comp_[flat_index(i, j, k, l)]; }
  const Eigen::VectorXd& flat() const { return comp_; }
  Eigen::VectorXd& flat() { return comp_; }
  double max_abs() const { return comp_.size() ? comp_.cwiseAbs().maxCoeff() : 0.0; }

  Eigen::Index flat_index(int i, int j, int k, int l) const {
    return ((static_cast<Eigen::Index>(i) * n_ + j) * n_ + k) * n_ + l;
  }

 private:
  int n_;
  Eigen::VectorXd comp_;
};

/// One independent component: indices 0-based with i < j, k < l,
/// (i, j) <= (k, l) lexicographically.
struct CanonicalComponent {
  int i, j, k, l;
  double value;
};

struct ValidationReport {
  double antisym_first;   // max |R_{ijkl} + R_{jikl}|
  double antisym_second;  // max |R_{ijkl} + R_{ijlk}|
  double pair_symmetry;   // max |R_{ijkl} - R_{klij}|
  double bianchi;         // max |R_{ijkl} + R_{iklj} + R_{iljk}|
  double scale;           // max(1, max |R|)
  bool passed;            // all residuals <= 1e-10 * scale
};

ValidationReport validate(const CurvatureTensor& r);

// ---- model zoo -----------------------------------------------------------

CurvatureTensor constant_curvature(int n, double kappa);

/// Block-diagonal curvature of a Riemannian product of constant-curvature
/// factors (n_i, kappa_i); mixed components vanish.
CurvatureTensor product_space(const std::vector<std::pair<int, double>>& factors);

/// Complex projective space of complex dimension m >= 2, holomorphic
/// sectional curvature 4 (so the sectional range is [1, 4]).
CurvatureTensor fubini_study(int m);

/// base + eps * (seeded random 4-tensor projected onto the space of algebraic
/// curvature tensors).  eps == 0 returns base unchanged, bit for bit.
CurvatureTensor random_curvature(int n, std::uint64_t seed, double eps,
                                 const CurvatureTensor& base);
CurvatureTensor random_curvature(int n, std::uint64_t seed, double eps);

// ---- derived quantities ---------------------------------------------------

/// Ric_{kl} = sum_i R_{ikil}
Eigen::MatrixXd ricci(const CurvatureTensor& r);

/// trace of the Ricci matrix
double scalar_curvature(const CurvatureTensor& r);

/// R(X,Y,X,Y) / (|X|^2 |Y|^2 - <X,Y>^2).  Throws DegeneratePlaneError when
/// the Gram determinant is <= 1e-12.
double sectional(const CurvatureTensor& r, const Eigen::Ref<const Eigen::VectorXd>& x,
                 const Eigen::Ref<const Eigen::VectorXd>& y);

/// R(X,Y,X,Y) for an orthonormal pair, no Gram division.
double plane_curvature(const CurvatureTensor& r,
                       const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y);

// ---- canonical component form --------------------------------------------

/// Nonzero canonical components (deduplicated by symmetry).
std::vector<CanonicalComponent> canonical_components(const CurvatureTensor& r);

/// Expands canonical components by symmetry into a dense tensor.  Does not
/// validate; callers decide whether to re-check.
CurvatureTensor from_canonical(int n, const std::vector<CanonicalComponent>& comps);

/// Orthogonal projector of a flat n^4 array onto the subspace satisfying all
/// curvature symmetries and the first Bianchi identity.  Cached per n.
const Eigen::MatrixXd& curvature_symmetry_projector(int n);

}  // namespace curvop
