#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "curvop/errors.hpp"

namespace curvop {

enum class Symmetry { symmetric, alternating };

/// Index tuple into an n-dimensional frame, 0-based.
using IndexTuple = std::vector<int>;

/// Ordered basis of the space of symmetric p-tensors or alternating q-tensors
/// over an n-dimensional inner-product space with an orthonormal frame.
///
/// Canonical tuples are nondecreasing (symmetric) or strictly increasing
/// (alternating), listed in lexicographic order.  Each tuple carries the
/// number of distinct permutations of its indices; the inner product of two
/// coefficient vectors is the full contraction over all index tuples,
/// i.e. sum_T weight(T) * a_T * b_T.
class MultiIndexBasis {
 public:
  MultiIndexBasis() = default;
  MultiIndexBasis(int n, int degree, Symmetry symmetry,
                  std::vector<IndexTuple> tuples);

  int n() const { return n_; }
  int degree() const { return degree_; }
  Symmetry symmetry() const { return symmetry_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(tuples_.size()); }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }
  const IndexTuple& tuple(Eigen::Index i) const { return tuples_[static_cast<size_t>(i)]; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(Eigen::Index i) const { return weights_[i]; }

  /// Resolves an arbitrary index tuple to (canonical position, sign).
  /// The sign is 0 when the component vanishes identically (repeated index
  /// in the alternating case), otherwise +1 or the permutation parity.
  std::pair<Eigen::Index, double> component(const IndexTuple& idx) const;

 private:
  Eigen::Index code_of(const IndexTuple& sorted) const;

  int n_ = 0;
  int degree_ = 0;
  Symmetry symmetry_ = Symmetry::symmetric;
  std::vector<IndexTuple> tuples_;
  Eigen::VectorXd weights_;
  std::vector<Eigen::Index> pos_by_code_;  // dense lookup keyed by base-n digits
};

/// Coefficient vector over a canonical basis; values are the tensor
/// components at the canonical tuples.
struct TensorCoeffs {
  MultiIndexBasis basis;
  Eigen::VectorXd values;

  double norm_sq() const;
};

/// Enumerates the canonical basis.  Throws DimensionError for n < 2,
/// degree < 1, or degree > n in the alternating case.
MultiIndexBasis build_basis(int n, int degree, Symmetry symmetry);

/// Degree-0 companion basis (single empty tuple), the target space of the
/// pair trace on 2-tensors.
MultiIndexBasis scalar_basis(int n);

/// Full-contraction squared norm of a coefficient vector.
double tensor_norm_sq(const MultiIndexBasis& basis,
                      const Eigen::Ref<const Eigen::VectorXd>& values);

/// Matrix of the contraction over slot pair (a, b), 1 <= a < b <= p, mapping
/// canonical degree-p coefficients to canonical degree-(p-2) coefficients.
/// For symmetric tensors every slot pair yields the same map.  Alternating
/// input throws SymmetryError.
Eigen::MatrixXd trace_map(const MultiIndexBasis& basis, int slot_a, int slot_b);

/// Columns are canonical coefficient vectors of an orthonormal (in the
/// full-contraction inner product) basis of the totally traceless symmetric
/// p-tensors.  Column count is C(n+p-1,p) - C(n+p-3,p-2).
Eigen::MatrixXd traceless_basis(int n, int p);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace curvop
