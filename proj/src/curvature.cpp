#include "curvop/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "curvop/linalg.hpp"
#include "curvop/random.hpp"

namespace curvop {

CurvatureTensor::CurvatureTensor(int n) : n_(n) {
  if (n < 2) throw DimensionError("CurvatureTensor: dimension must be >= 2");
  comp_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n) * n * n * n);
}

ValidationReport validate(const CurvatureTensor& r) {
  const int n = r.n();
  ValidationReport rep{0, 0, 0, 0, std::max(1.0, r.max_abs()), false};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          rep.antisym_first = std::max(rep.antisym_first, std::abs(v + r(j, i, k, l)));
          rep.antisym_second = std::max(rep.antisym_second, std::abs(v + r(i, j, l, k)));
          rep.pair_symmetry = std::max(rep.pair_symmetry, std::abs(v - r(k, l, i, j)));
          rep.bianchi =
              std::max(rep.bianchi, std::abs(v + r(i, k, l, j) + r(i, l, j, k)));
        }
  const double tol = 1e-10 * rep.scale;
  rep.passed = rep.antisym_first <= tol && rep.antisym_second <= tol &&
               rep.pair_symmetry <= tol && rep.bianchi <= tol;
  return rep;
}

CurvatureTensor constant_curvature(int n, double kappa) {
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r.at(i, j, i, j) += kappa;
      r.at(i, j, j, i) -= kappa;
    }
  return r;
}

CurvatureTensor product_space(const std::vector<std::pair<int, double>>& factors) {
  if (factors.size() < 2) throw DimensionError("product_space: need at least 2 factors");
  int n = 0;
  for (const auto& [ni, ki] : factors) {
    (void)ki;
    if (ni < 2) throw DimensionError("product_space: each factor needs dimension >= 2");
    n += ni;
  }
  CurvatureTensor r(n);
  int offset = 0;
  for (const auto& [ni, ki] : factors) {
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j) {
        if (i == j) continue;
        r.at(offset + i, offset + j, offset + i, offset + j) += ki;
        r.at(offset + i, offset + j, offset + j, offset + i) -= ki;
      }
    offset += ni;
  }
  return r;
}

CurvatureTensor fubini_study(int m) {
  if (m < 2) throw DimensionError("fubini_study: complex dimension must be >= 2");
  const int n = 2 * m;
  // J e_{2a} = e_{2a+1}, J e_{2a+1} = -e_{2a}
  Eigen::MatrixXd jmat = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < m; ++a) {
    jmat(2 * a, 2 * a + 1) = 1.0;
    jmat(2 * a + 1, 2 * a) = -1.0;
  }
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double del = (i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) -
                             (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0);
          r.at(i, j, k, l) = del + jmat(i, k) * jmat(j, l) - jmat(i, l) * jmat(j, k) +
                             2.0 * jmat(i, j) * jmat(k, l);
        }
  return r;
}

const Eigen::MatrixXd& curvature_symmetry_projector(int n) {
  static std::map<int, Eigen::MatrixXd> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n * n * n;
  auto flat = [n](int i, int j, int k, int l) {
    return ((static_cast<Eigen::Index>(i) * n + j) * n + k) * n + l;
  };
  // Stacked linear constraints: both antisymmetries, pair symmetry, and the
  // first Bianchi identity, one row per index quadruple each.
  Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(4 * dim, dim);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          constraints(row, flat(i, j, k, l)) += 1.0;
          constraints(row, flat(j, i, k, l)) += 1.0;
          ++row;
          constraints(row, flat(i, j, k, l)) += 1.0;
          constraints(row, flat(i, j, l, k)) += 1.0;
          ++row;
          constraints(row, flat(i, j, k, l)) += 1.0;
          constraints(row, flat(k, l, i, j)) -= 1.0;
          ++row;
          constraints(row, flat(i, j, k, l)) += 1.0;
          constraints(row, flat(i, k, l, j)) += 1.0;
          constraints(row, flat(i, l, j, k)) += 1.0;
          ++row;
        }
  const Eigen::MatrixXd kernel = kernel_basis(constraints, 1e-10);
  auto [pos, inserted] = cache.emplace(n, kernel * kernel.transpose());
  (void)inserted;
  return pos->second;
}

CurvatureTensor random_curvature(int n, std::uint64_t seed, double eps,
                                 const CurvatureTensor& base) {
  if (base.n() != n) throw DimensionError("random_curvature: base dimension mismatch");
  if (eps < 0) throw DimensionError("random_curvature: eps must be >= 0");
  if (eps == 0.0) return base;
  std::mt19937_64 rng(seed);
  Eigen::VectorXd raw(base.flat().size());
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw[i] = uniform_pm1(rng);
  CurvatureTensor out = base;
  out.flat() += eps * (curvature_symmetry_projector(n) * raw);
  return out;
}

CurvatureTensor random_curvature(int n, std::uint64_t seed, double eps) {
  return random_curvature(n, seed, eps, CurvatureTensor(n));
}

Eigen::MatrixXd ricci(const CurvatureTensor& r) {
  const int n = r.n();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += r(i, k, i, l);
      ric(k, l) = s;
    }
  return ric;
}

double scalar_curvature(const CurvatureTensor& r) { return ricci(r).trace(); }

double plane_curvature(const CurvatureTensor& r,
                       const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y) {
  const int n = r.n();
  double v = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0.0) continue;
      double inner = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) inner += r(i, j, k, l) * x[k] * y[l];
      v += x[i] * y[j] * inner;
    }
  }
  return v;
}

double sectional(const CurvatureTensor& r, const Eigen::Ref<const Eigen::VectorXd>& x,
                 const Eigen::Ref<const Eigen::VectorXd>& y) {
  if (x.size() != r.n() || y.size() != r.n())
    throw DimensionError("sectional: vector length mismatch");
  const double gram = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
  if (gram <= 1e-12) throw DegeneratePlaneError("sectional: vectors do not span a 2-plane");
  return plane_curvature(r, x, y) / gram;
}

std::vector<CanonicalComponent> canonical_components(const CurvatureTensor& r) {
  const int n = r.n();
  std::vector<CanonicalComponent> comps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          const double v = r(i, j, k, l);
          if (v != 0.0) comps.push_back({i, j, k, l, v});
        }
  return comps;
}

CurvatureTensor from_canonical(int n, const std::vector<CanonicalComponent>& comps) {
  CurvatureTensor r(n);
  for (const auto& c : comps) {
    if (c.i < 0 || c.j >= n || c.k < 0 || c.l >= n || c.i >= c.j || c.k >= c.l ||
        std::make_pair(c.i, c.j) > std::make_pair(c.k, c.l))
      throw ValidationError("from_canonical: non-canonical index quadruple");
    r.at(c.i, c.j, c.k, c.l) = c.value;
    r.at(c.j, c.i, c.k, c.l) = -c.value;
    r.at(c.i, c.j, c.l, c.k) = -c.value;
    r.at(c.j, c.i, c.l, c.k) = c.value;
    r.at(c.k, c.l, c.i, c.j) = c.value;
    r.at(c.l, c.k, c.i, c.j) = -c.value;
    r.at(c.k, c.l, c.j, c.i) = -c.value;
    r.at(c.l, c.k, c.j, c.i) = c.value;
  }
  return r;
}

}  // namespace curvop
