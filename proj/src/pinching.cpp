#include "curvop/pinching.hpp"

#include <cmath>
#include <random>

#include "curvop/linalg.hpp"
#include "curvop/random.hpp"
#include "curvop/weitzenboeck.hpp"

namespace curvop {

namespace {

// gradient of f(X,Y) = R(X,Y,X,Y) over the ambient frame pair
void plane_gradient(const CurvatureTensor& r, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& y, Eigen::VectorXd& gx, Eigen::VectorXd& gy) {
  const int n = r.n();
  gx.setZero(n);
  gy.setZero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          if (v == 0.0) continue;
          gx[i] += 2.0 * v * y[j] * x[k] * y[l];
          gy[j] += 2.0 * v * x[i] * x[k] * y[l];
        }
}

bool orthonormalize(Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const double nx = x.norm();
  if (nx < 1e-14) return false;
  x /= nx;
  y -= x.dot(y) * x;
  const double ny = y.norm();
  if (ny < 1e-14) return false;
  y /= ny;
  return true;
}

// Projected-gradient ascent of sign * R(X,Y,X,Y) over orthonormal frames,
// Armijo backtracking, until the accepted step norm drops below tol.
double optimize_plane(const CurvatureTensor& r, double sign, Eigen::VectorXd& x,
                      Eigen::VectorXd& y, double tol, int max_iter = 300) {
  const double scale = std::max(1.0, r.max_abs());
  double f = sign * plane_curvature(r, x, y);
  Eigen::VectorXd gx, gy;
  double eta = 0.5 / scale;
  for (int iter = 0; iter < max_iter; ++iter) {
    plane_gradient(r, x, y, gx, gy);
    if (sign < 0) {
      gx = -gx;
      gy = -gy;
    }
    // tangent projection: directions orthogonal to the current plane
    const double xgx = x.dot(gx), ygx = y.dot(gx);
    const double xgy = x.dot(gy), ygy = y.dot(gy);
    gx -= xgx * x + ygx * y;
    gy -= xgy * x + ygy * y;
    const double gnorm2 = gx.squaredNorm() + gy.squaredNorm();
    if (gnorm2 <= tol * tol * scale * scale) break;

    double step = eta;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      Eigen::VectorXd cx = x + step * gx;
      Eigen::VectorXd cy = y + step * gy;
      if (orthonormalize(cx, cy)) {
        const double fc = sign * plane_curvature(r, cx, cy);
        if (fc >= f + 1e-4 * step * gnorm2) {
          x = cx;
          y = cy;
          f = fc;
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if (step * std::sqrt(gnorm2) < tol) break;
    eta = std::min(2.0 * step, 4.0 / scale);
  }
  return sign * f;
}

Eigen::VectorXd random_unit(std::mt19937_64& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    // Box-Muller from explicit uniform bits
    const double u1 = std::max(uniform01(rng), 1e-300);
    const double u2 = uniform01(rng);
    v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  return v;
}

}  // namespace

SecExtrema sec_extrema(const CurvatureTensor& r, int budget, double tol) {
  const int n = r.n();
  if (budget < 1) budget = 1;

  std::vector<Plane> seeds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Plane p{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
      p.x[i] = 1.0;
      p.y[j] = 1.0;
      seeds.push_back(std::move(p));
    }
  std::mt19937_64 rng(0x5ec5eedULL);
  for (int s = 0; s < budget; ++s) {
    Plane p{random_unit(rng, n), random_unit(rng, n)};
    if (orthonormalize(p.x, p.y)) seeds.push_back(std::move(p));
  }

  SecExtrema out;
  bool first = true;
  for (const Plane& seed : seeds) {
    for (double sign : {-1.0, 1.0}) {
      Eigen::VectorXd x = seed.x, y = seed.y;
      const double value = optimize_plane(r, sign, x, y, tol);
      if (first || value < out.sec_min) {
        out.sec_min = value;
        out.argmin = {x, y};
      }
      if (first || value > out.sec_max) {
        out.sec_max = value;
        out.argmax = {x, y};
      }
      first = false;
    }
  }
  return out;
}

std::pair<double, double> ricci_extrema(const CurvatureTensor& r) {
  const SymEigen e = sym_eigen(ricci(r));
  return {e.eigenvalues(0), e.eigenvalues(e.eigenvalues.size() - 1)};
}

PinchingReport classify(const CurvatureTensor& r, int budget, double tol) {
  PinchingReport rep;
  rep.n = r.n();
  rep.restarts = budget;
  rep.tol = tol;

  const SecExtrema se = sec_extrema(r, budget, tol);
  rep.sec_min = se.sec_min;
  rep.sec_max = se.sec_max;
  rep.argmin_plane = se.argmin;
  rep.argmax_plane = se.argmax;
  std::tie(rep.ric_min, rep.ric_max) = ricci_extrema(r);

  const SymEigen sk = sym_eigen(second_kind_matrix(r).matrix);
  rep.second_kind_min = sk.eigenvalues(0);
  rep.second_kind_max = sk.eigenvalues(sk.eigenvalues.size() - 1);

  const double n = static_cast<double>(rep.n);
  const double ratio = n / (n - 1.0);
  const double positive = rep.sec_min;  // must exceed 0 strictly in every positive-side set

  rep.lemma1_margin = std::min(positive, n * rep.sec_min - rep.ric_max);
  rep.lemma1_strict = positive >= kStrictMargin &&
                      rep.ric_max <= n * rep.sec_min - kStrictMargin;
  rep.lemma1_nonneg = positive >= kStrictMargin &&
                      rep.ric_max <= n * rep.sec_min + kStrictMargin;

  rep.double_pinch_margin = std::min(positive, ratio * rep.sec_min - rep.sec_max);
  rep.double_pinch_strict = positive >= kStrictMargin &&
                            rep.sec_max <= ratio * rep.sec_min - kStrictMargin;
  rep.double_pinch_nonneg = positive >= kStrictMargin &&
                            rep.sec_max <= ratio * rep.sec_min + kStrictMargin;

  const double negative = -rep.sec_max;  // beta-hat
  rep.lemma2_margin = std::min(negative, rep.sec_min - ratio * rep.sec_max);
  rep.lemma2_strict = negative >= kStrictMargin &&
                      rep.sec_min >= ratio * rep.sec_max + kStrictMargin;
  rep.lemma2_nonneg = negative >= kStrictMargin &&
                      rep.sec_min >= ratio * rep.sec_max - kStrictMargin;
  return rep;
}

}  // namespace curvop
