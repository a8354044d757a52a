#include "curvop/multi_index.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/linalg.hpp"

namespace curvop {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double tuple_weight(const IndexTuple& t, Symmetry symmetry) {
  const int p = static_cast<int>(t.size());
  if (symmetry == Symmetry::alternating) return factorial(p);
  double w = factorial(p);
  int run = 1;
  for (size_t i = 1; i <= t.size(); ++i) {
    if (i < t.size() && t[i] == t[i - 1]) {
      ++run;
    } else {
      w /= factorial(run);
      run = 1;
    }
  }
  return w;
}

void enumerate_tuples(int n, int degree, bool strict, int start, IndexTuple& cur,
                      std::vector<IndexTuple>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate_tuples(n, degree, strict, strict ? i + 1 : i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Eigen::Index MultiIndexBasis::code_of(const IndexTuple& sorted) const {
  Eigen::Index code = 0;
  for (int v : sorted) code = code * n_ + v;
  return code;
}

MultiIndexBasis::MultiIndexBasis(int n, int degree, Symmetry symmetry,
                                 std::vector<IndexTuple> tuples)
    : n_(n), degree_(degree), symmetry_(symmetry), tuples_(std::move(tuples)) {
  weights_.resize(static_cast<Eigen::Index>(tuples_.size()));
  Eigen::Index table = 1;
  for (int d = 0; d < degree_; ++d) table *= n_;
  pos_by_code_.assign(static_cast<size_t>(table), -1);
  for (size_t i = 0; i < tuples_.size(); ++i) {
    weights_[static_cast<Eigen::Index>(i)] = tuple_weight(tuples_[i], symmetry_);
    pos_by_code_[static_cast<size_t>(code_of(tuples_[i]))] = static_cast<Eigen::Index>(i);
  }
}

std::pair<Eigen::Index, double> MultiIndexBasis::component(const IndexTuple& idx) const {
  IndexTuple key = idx;
  double sign = 1.0;
  if (symmetry_ == Symmetry::alternating) {
    // insertion sort, tracking parity; repeated index kills the component
    for (size_t i = 1; i < key.size(); ++i) {
      for (size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
        std::swap(key[j - 1], key[j]);
        sign = -sign;
      }
    }
    for (size_t i = 1; i < key.size(); ++i)
      if (key[i] == key[i - 1]) return {-1, 0.0};
  } else {
    std::sort(key.begin(), key.end());
  }
  const Eigen::Index pos = pos_by_code_[static_cast<size_t>(code_of(key))];
  if (pos < 0) return {-1, 0.0};
  return {pos, sign};
}

double TensorCoeffs::norm_sq() const { return tensor_norm_sq(basis, values); }

MultiIndexBasis build_basis(int n, int degree, Symmetry symmetry) {
  if (n < 2) throw DimensionError("build_basis: dimension must be >= 2");
  if (degree < 1) throw DimensionError("build_basis: degree must be >= 1");
  if (symmetry == Symmetry::alternating && degree > n)
    throw DimensionError("build_basis: alternating degree exceeds dimension");
  std::vector<IndexTuple> tuples;
  IndexTuple cur;
  enumerate_tuples(n, degree, symmetry == Symmetry::alternating, 0, cur, tuples);
  return MultiIndexBasis(n, degree, symmetry, std::move(tuples));
}

MultiIndexBasis scalar_basis(int n) {
  return MultiIndexBasis(n, 0, Symmetry::symmetric, {IndexTuple{}});
}

double tensor_norm_sq(const MultiIndexBasis& basis,
                      const Eigen::Ref<const Eigen::VectorXd>& values) {
  return values.cwiseProduct(basis.weights()).dot(values);
}

Eigen::MatrixXd trace_map(const MultiIndexBasis& basis, int slot_a, int slot_b) {
  if (basis.symmetry() == Symmetry::alternating)
    throw SymmetryError("trace_map: pair trace of an alternating tensor is identically zero");
  const int p = basis.degree();
  if (p < 2) throw DimensionError("trace_map: degree must be >= 2");
  if (slot_a < 1 || slot_b <= slot_a || slot_b > p)
    throw DimensionError("trace_map: slot pair out of range");

  const MultiIndexBasis target =
      p == 2 ? scalar_basis(basis.n()) : build_basis(basis.n(), p - 2, Symmetry::symmetric);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(target.size(), basis.size());
  for (Eigen::Index row = 0; row < target.size(); ++row) {
    for (int k = 0; k < basis.n(); ++k) {
      IndexTuple full = target.tuple(row);
      full.insert(full.begin() + (slot_a - 1), k);
      full.insert(full.begin() + (slot_b - 1), k);
      auto [col, sign] = basis.component(full);
      if (col >= 0) m(row, col) += sign;
    }
  }
  return m;
}

Eigen::MatrixXd traceless_basis(int n, int p) {
  if (n < 2 || p < 2) throw DimensionError("traceless_basis: need n >= 2 and p >= 2");
  const MultiIndexBasis basis = build_basis(n, p, Symmetry::symmetric);
  // All slot pairs give the same contraction on symmetric tensors, so the
  // kernel of one pair trace is the totally traceless subspace.
  const Eigen::MatrixXd tr = trace_map(basis, 1, 2);
  const Eigen::VectorXd inv_sqrt_w = basis.weights().cwiseSqrt().cwiseInverse();
  // Kernel in weight-normalized coordinates, so the returned coefficient
  // columns come out orthonormal in the full-contraction inner product.
  const Eigen::MatrixXd kernel = kernel_basis(tr * inv_sqrt_w.asDiagonal(), 1e-10);
  return inv_sqrt_w.asDiagonal() * kernel;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return std::round(r);
}

}  // namespace curvop
