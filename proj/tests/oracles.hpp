// Test-only reference computations, kept independent of the library paths
// they are used to check.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "curvop/curvature.hpp"
#include "curvop/multi_index.hpp"
#include "curvop/random.hpp"

namespace oracles {

// ---- characteristic polynomial ---------------------------------------------

// Monic coefficients [1, c1, ..., cn] by the Faddeev-LeVerrier recurrence.
inline std::vector<double> char_poly(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  std::vector<double> coeffs{1.0};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  double c = 1.0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * (m + c * Eigen::MatrixXd::Identity(n, n));
    c = -m.trace() / static_cast<double>(k);
    coeffs.push_back(c);
  }
  return coeffs;
}

inline double poly_eval(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (double c : coeffs) v = v * x + c;
  return v;
}

inline std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  const size_t deg = coeffs.size() - 1;
  std::vector<double> d;
  for (size_t i = 0; i < deg; ++i)
    d.push_back(coeffs[i] * static_cast<double>(deg - i));
  const double lead = d[0];
  for (double& c : d) c /= lead;  // keep monic for stability
  return d;
}

// All roots of a real-rooted monic polynomial: bisect between the critical
// points (found recursively), bracketed by the Cauchy bound.
inline std::vector<double> real_roots_all_real(const std::vector<double>& coeffs) {
  const size_t deg = coeffs.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-coeffs[1]};

  double bound = 1.0;
  for (size_t i = 1; i < coeffs.size(); ++i) bound = std::max(bound, std::abs(coeffs[i]));
  bound += 1.0;

  std::vector<double> cuts = real_roots_all_real(poly_derivative(coeffs));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), -bound);
  cuts.push_back(bound);

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    double flo = poly_eval(coeffs, lo), fhi = poly_eval(coeffs, hi);
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if (flo * fhi > 0.0) {
      // repeated root pinned at a critical point
      if (i + 1 < cuts.size() - 1 && std::abs(fhi) < 1e-9 * std::max(1.0, bound))
        roots.push_back(hi);
      continue;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = poly_eval(coeffs, mid);
      if (fmid == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fmid < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fmid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---- direct contraction loops ----------------------------------------------

inline Eigen::MatrixXd ricci_brute(const curvop::CurvatureTensor& r) {
  const int n = r.n();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i) ric(k, l) += r(i, k, i, l);
  return ric;
}

// Raw-basis matrix of the 2-tensor curvature action assembled from its
// explicit per-component formula, bypassing the general slot machinery:
// out_{ij} = Ric_{ik} phi_{kj} + Ric_{jk} phi_{ki} - 2 R_{ikjl} phi_{kl}.
inline Eigen::MatrixXd explicit_two_tensor_raw(const curvop::CurvatureTensor& r) {
  const int n = r.n();
  const Eigen::MatrixXd ric = ricci_brute(r);
  const curvop::MultiIndexBasis basis =
      curvop::build_basis(n, 2, curvop::Symmetry::symmetric);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
  for (Eigen::Index col = 0; col < basis.size(); ++col) {
    const int a = basis.tuple(col)[0];
    const int b = basis.tuple(col)[1];
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n, n);
    phi(a, b) = 1.0;
    phi(b, a) = 1.0;
    Eigen::MatrixXd out = ric * phi + phi * ric;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) s += r(i, k, j, l) * phi(k, l);
        out(i, j) -= 2.0 * s;
      }
    for (Eigen::Index row = 0; row < basis.size(); ++row)
      m(row, col) = out(basis.tuple(row)[0], basis.tuple(row)[1]);
  }
  return m;
}

// 2 * (Ric_{ij} phi^{ik} phi^j_k - R_{ijkl} phi^{ik} phi^{jl})
inline double q2_direct(const curvop::CurvatureTensor& r, const Eigen::MatrixXd& phi) {
  const int n = r.n();
  const Eigen::MatrixXd ric = ricci_brute(r);
  double ric_term = 0.0, curv_term = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ric_term += ric(i, j) * phi(i, k) * phi(j, k);
        for (int l = 0; l < n; ++l) curv_term += r(i, j, k, l) * phi(i, k) * phi(j, l);
      }
  return 2.0 * (ric_term - curv_term);
}

// quadratic form of the second-kind action, sum R_{iklj} phi_{kl} phi_{ij}
inline double second_kind_form_direct(const curvop::CurvatureTensor& r,
                                      const Eigen::MatrixXd& phi) {
  const int n = r.n();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += r(i, k, l, j) * phi(k, l) * phi(i, j);
  return s;
}

// ---- random generators -------------------------------------------------------

inline Eigen::VectorXd random_gaussian(std::mt19937_64& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    const double u1 = std::max(curvop::uniform01(rng), 1e-300);
    const double u2 = curvop::uniform01(rng);
    v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  return v;
}

inline Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = curvop::uniform_pm1(rng);
  return m;
}

inline Eigen::MatrixXd random_traceless_symmetric(std::mt19937_64& rng, int n) {
  Eigen::MatrixXd m = random_symmetric(rng, n);
  m -= (m.trace() / n) * Eigen::MatrixXd::Identity(n, n);
  return m;
}

inline curvop::TensorCoeffs coeffs_from_matrix(const Eigen::MatrixXd& phi) {
  curvop::TensorCoeffs c{curvop::build_basis(static_cast<int>(phi.rows()), 2,
                                             curvop::Symmetry::symmetric),
                         {}};
  c.values.resize(c.basis.size());
  for (Eigen::Index t = 0; t < c.basis.size(); ++t)
    c.values[t] = phi(c.basis.tuple(t)[0], c.basis.tuple(t)[1]);
  return c;
}

// ---- sectional extrema by sampling -----------------------------------------

inline bool orthonormalize_pair(Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const double nx = x.norm();
  if (nx < 1e-12) return false;
  x /= nx;
  y -= x.dot(y) * x;
  const double ny = y.norm();
  if (ny < 1e-12) return false;
  y /= ny;
  return true;
}

// Dense random sampling of 2-planes followed by shrinking-step hill climbing
// from the best samples.  No gradients involved.
inline std::pair<double, double> sec_extrema_sampling(const curvop::CurvatureTensor& r,
                                                      int samples,
                                                      std::uint64_t seed = 7777) {
  const int n = r.n();
  std::mt19937_64 rng(seed);
  double lo = 0, hi = 0;
  Eigen::VectorXd lo_x, lo_y, hi_x, hi_y;
  bool first = true;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x = random_gaussian(rng, n), y = random_gaussian(rng, n);
    if (!orthonormalize_pair(x, y)) continue;
    const double v = curvop::plane_curvature(r, x, y);
    if (first || v < lo) {
      lo = v;
      lo_x = x;
      lo_y = y;
    }
    if (first || v > hi) {
      hi = v;
      hi_x = x;
      hi_y = y;
    }
    first = false;
  }
  auto refine = [&](Eigen::VectorXd x, Eigen::VectorXd y, double best, double dir) {
    double step = 0.3;
    while (step > 1e-9) {
      bool improved = false;
      for (int t = 0; t < 60; ++t) {
        Eigen::VectorXd cx = x + step * random_gaussian(rng, n);
        Eigen::VectorXd cy = y + step * random_gaussian(rng, n);
        if (!orthonormalize_pair(cx, cy)) continue;
        const double v = curvop::plane_curvature(r, cx, cy);
        if (dir * v > dir * best) {
          best = v;
          x = cx;
          y = cy;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    return best;
  };
  return {refine(lo_x, lo_y, lo, -1.0), refine(hi_x, hi_y, hi, +1.0)};
}

}  // namespace oracles
