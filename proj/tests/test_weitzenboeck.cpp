#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "curvop/linalg.hpp"
#include "curvop/weitzenboeck.hpp"
#include "oracles.hpp"

using namespace curvop;

namespace {

TensorCoeffs random_traceless_coeffs(std::mt19937_64& rng, int n) {
  return oracles::coeffs_from_matrix(oracles::random_traceless_symmetric(rng, n));
}

}  // namespace

TEST_CASE("second-kind operator is the curvature scale on space forms") {
  for (auto [n, kappa] : {std::pair{3, 1.0}, std::pair{4, -1.0}, std::pair{5, 2.0}}) {
    const WeitzenboeckMatrix sk = second_kind_matrix(constant_curvature(n, kappa));
    const Eigen::Index dim = sk.matrix.rows();
    CHECK(dim == n * (n + 1) / 2 - 1);
    CHECK((sk.matrix - kappa * Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("second-kind quadratic form matches the direct contraction") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    const CurvatureTensor r = random_curvature(n, 500 + trial, 1.0);
    const WeitzenboeckMatrix sk = second_kind_matrix(r);
    const Eigen::MatrixXd phi = oracles::random_traceless_symmetric(rng, n);
    const TensorCoeffs coeffs = oracles::coeffs_from_matrix(phi);
    // coordinates of phi in the orthonormal traceless frame
    const Eigen::VectorXd v =
        sk.frame.transpose() * coeffs.basis.weights().asDiagonal() * coeffs.values;
    const double via_matrix = v.dot(sk.matrix * v);
    const double direct = oracles::second_kind_form_direct(r, phi);
    CHECK(via_matrix == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("space-form eigenvalue scales on traceless tensors and forms") {
  for (int n = 2; n <= 6; ++n) {
    for (double kappa : {1.0, -0.5}) {
      const CurvatureTensor r = constant_curvature(n, kappa);
      for (int p = 2; p <= 4; ++p) {
        const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::sym_traceless, p);
        const double expected = p * (n + p - 2.0) * kappa;
        CHECK((op.matrix - expected * Eigen::MatrixXd::Identity(op.matrix.rows(),
                                                                op.matrix.cols()))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
      }
      for (int q = 1; q <= n - 1; ++q) {
        const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::form, q);
        const double expected = q * (n - q) * kappa;
        CHECK((op.matrix - expected * Eigen::MatrixXd::Identity(op.matrix.rows(),
                                                                op.matrix.cols()))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("degree-1 restriction is the Ricci action") {
  const CurvatureTensor r = random_curvature(4, 321, 1.0);
  const WeitzenboeckMatrix op = weitz_matrix(r, OperatorSpace::form, 1);
  CHECK((op.matrix - ricci(r)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("general assembly at degree 2 matches the explicit formula") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    const CurvatureTensor r = random_curvature(n, 42 + trial, 1.0);
    const Eigen::MatrixXd raw =
        weitz_matrix_raw(r, build_basis(n, 2, Symmetry::symmetric));
    CHECK((raw - oracles::explicit_two_tensor_raw(r)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("assembled operators are symmetric") {
  for (int n : {3, 4}) {
    const CurvatureTensor r = random_curvature(n, 60 + n, 1.0);
    for (int p : {1, 2, 3})
      CHECK(asymmetry(weitz_matrix(r, OperatorSpace::sym_full, p).matrix) <= 1e-12);
    for (int p : {2, 3})
      CHECK(asymmetry(weitz_matrix(r, OperatorSpace::sym_traceless, p).matrix) <= 1e-12);
    for (int q = 1; q <= 3; ++q)
      CHECK(asymmetry(weitz_matrix(r, OperatorSpace::form, q).matrix) <= 1e-12);
    CHECK(asymmetry(second_kind_matrix(r).matrix) <= 1e-12);
  }
}

TEST_CASE("pair trace commutes with the operator") {
  for (int n : {3, 4}) {
    const CurvatureTensor r = random_curvature(n, 600 + n, 1.0);
    // degree 2: the traced operator is the zero map on scalars
    {
      const MultiIndexBasis b2 = build_basis(n, 2, Symmetry::symmetric);
      const Eigen::MatrixXd lhs = trace_map(b2, 1, 2) * weitz_matrix_raw(r, b2);
      CHECK(lhs.cwiseAbs().maxCoeff() <= 1e-10);
    }
    // degree 3: the traced operator is the Ricci action on 1-tensors
    {
      const MultiIndexBasis b3 = build_basis(n, 3, Symmetry::symmetric);
      const MultiIndexBasis b1 = build_basis(n, 1, Symmetry::symmetric);
      const Eigen::MatrixXd tr = trace_map(b3, 1, 2);
      const Eigen::MatrixXd lhs = tr * weitz_matrix_raw(r, b3);
      const Eigen::MatrixXd rhs = weitz_matrix_raw(r, b1) * tr;
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("degree-2 operator splits into Ricci action plus twice the second kind") {
  for (int n : {3, 4}) {
    const CurvatureTensor r = random_curvature(n, 777 + n, 1.0);
    const WeitzenboeckMatrix full = weitz_matrix(r, OperatorSpace::sym_traceless, 2);
    const WeitzenboeckMatrix sk = second_kind_matrix(r);

    const MultiIndexBasis basis = sk.basis;
    const Eigen::MatrixXd ric = ricci(r);
    const Eigen::Index dim = sk.frame.cols();
    Eigen::MatrixXd ric_action(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(n, n);
      for (Eigen::Index t = 0; t < basis.size(); ++t) {
        phi(basis.tuple(t)[0], basis.tuple(t)[1]) = sk.frame(t, c);
        phi(basis.tuple(t)[1], basis.tuple(t)[0]) = sk.frame(t, c);
      }
      const Eigen::MatrixXd img = ric * phi + phi * ric;
      Eigen::VectorXd raw(basis.size());
      for (Eigen::Index t = 0; t < basis.size(); ++t)
        raw[t] = img(basis.tuple(t)[0], basis.tuple(t)[1]);
      ric_action.col(c) = sk.frame.transpose() * basis.weights().asDiagonal() * raw;
    }
    CHECK((full.matrix - ric_action - 2.0 * sk.matrix).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("scale parameter flips the operator sign") {
  const CurvatureTensor r = constant_curvature(3, 1.0);
  const WeitzenboeckMatrix plus = weitz_matrix(r, OperatorSpace::sym_traceless, 2, 1.0);
  const WeitzenboeckMatrix minus = weitz_matrix(r, OperatorSpace::sym_traceless, 2, -1.0);
  CHECK((plus.matrix + minus.matrix).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("quadratic form values") {
  const CurvatureTensor s3 = constant_curvature(3, 1.0);
  const MultiIndexBasis b2 = build_basis(3, 2, Symmetry::symmetric);
  CHECK(q_form_value(s3, TensorCoeffs{b2, Eigen::VectorXd::Zero(b2.size())}) == 0.0);

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = trial % 2 ? 3 : 5;
    const CurvatureTensor sphere = constant_curvature(n, 1.5);
    const TensorCoeffs phi = random_traceless_coeffs(rng, n);
    CHECK(q_form_value(sphere, phi) ==
          doctest::Approx(2.0 * n * 1.5 * phi.norm_sq()).epsilon(1e-11));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    const CurvatureTensor r = random_curvature(n, 3200 + trial, 1.0);
    const Eigen::MatrixXd phi = oracles::random_traceless_symmetric(rng, n);
    CHECK(q_form_value(r, oracles::coeffs_from_matrix(phi)) ==
          doctest::Approx(oracles::q2_direct(r, phi)).epsilon(1e-10));
  }
}

TEST_CASE("eigenbasis identity for the degree-2 quadratic form") {
  const CurvatureTensor s3 = constant_curvature(3, 1.0);
  Eigen::MatrixXd diag = Eigen::Vector3d(1, -1, 0).asDiagonal();
  const TensorCoeffs phi = oracles::coeffs_from_matrix(diag);
  CHECK(q_form_value(s3, phi) == doctest::Approx(12.0));
  CHECK(diag_identity_residual(s3, phi) <= 1e-10);

  const MultiIndexBasis b2 = build_basis(3, 2, Symmetry::symmetric);
  CHECK(diag_identity_residual(s3, TensorCoeffs{b2, Eigen::VectorXd::Zero(b2.size())}) ==
        0.0);

  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    const CurvatureTensor r = random_curvature(n, 5000 + trial, 1.0);
    CHECK(diag_identity_residual(r, random_traceless_coeffs(rng, n)) <= 1e-10);
  }
}

TEST_CASE("second-kind lower bound rearrangement holds under a sectional floor") {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    const CurvatureTensor r =
        random_curvature(n, 40000 + trial, 0.05, constant_curvature(n, 1.0));
    const PinchingReport rep = classify(r, 16);
    const Eigen::MatrixXd ric = ricci(r);
    const Eigen::MatrixXd phi = oracles::random_traceless_symmetric(rng, n);
    const double lhs = oracles::second_kind_form_direct(r, phi);
    const double ric_form = (ric * phi * phi).trace();
    const double rhs = n * rep.sec_min * phi.squaredNorm() - ric_form;
    CHECK(lhs >= rhs - 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("bound checks attain equality on space forms") {
  {
    const BoundCheck c = bound_positive_sym(constant_curvature(3, 1.0), 2, BoundTag::eq2_7);
    CHECK_FALSE(c.vacuous);
    CHECK(c.rhs == doctest::Approx(6.0));
    CHECK(std::abs(c.margin) <= 1e-9);
    CHECK(c.satisfied);
  }
  {
    const BoundCheck c = bound_positive_sym(constant_curvature(4, 1.0), 3, BoundTag::eq2_7);
    CHECK(c.rhs == doctest::Approx(15.0));
    CHECK(c.lambda_extreme == doctest::Approx(15.0));
    CHECK(c.satisfied);
  }
  {
    const BoundCheck c = bound_positive_sym(constant_curvature(3, 1.0), 2, BoundTag::eq2_9);
    CHECK(c.rhs == doctest::Approx(4.0));
    CHECK(c.lambda_extreme == doctest::Approx(6.0));
    CHECK(c.satisfied);
  }
  {
    const BoundCheck c = bound_negative_sym(constant_curvature(3, -1.0), 2);
    CHECK_FALSE(c.vacuous);
    CHECK(c.rhs == doctest::Approx(-6.0));
    CHECK(std::abs(c.margin) <= 1e-9);
    CHECK(c.satisfied);
  }
  {
    const BoundCheck c = bound_negative_sym(constant_curvature(4, -1.0), 2);
    CHECK(c.lambda_extreme == doctest::Approx(-8.0));
    CHECK(c.satisfied);
  }
  {
    const BoundCheck c = bound_form(constant_curvature(4, 1.0), 2);
    CHECK(c.rhs == doctest::Approx(4.0));
    CHECK(std::abs(c.margin) <= 1e-9);
  }
  {
    const BoundCheck c = bound_form(constant_curvature(4, 1.0), 1);
    CHECK(c.rhs == doctest::Approx(3.0));
    CHECK(c.lambda_extreme == doctest::Approx(3.0));
  }
}

TEST_CASE("bound checks stay satisfied under small perturbations") {
  const CurvatureTensor sphere = constant_curvature(4, 1.0);
  const CurvatureTensor hyperbolic = constant_curvature(4, -1.0);
  int positive_cases = 0, negative_cases = 0;
  for (int i = 0; i < 50; ++i) {
    {
      const CurvatureTensor r = random_curvature(4, 81000 + i, 0.02, sphere);
      const PinchingReport rep = classify(r, 24);
      if (rep.lemma1_strict) {
        ++positive_cases;
        CHECK(bound_positive_sym(r, 2, BoundTag::eq2_7, rep).satisfied);
        CHECK(bound_positive_sym(r, 3, BoundTag::eq2_7, rep).satisfied);
        CHECK(bound_positive_sym(r, 2, BoundTag::eq2_9, rep).satisfied);
        CHECK(bound_form(r, 1, rep).satisfied);
        CHECK(bound_form(r, 2, rep).satisfied);
      }
    }
    {
      const CurvatureTensor r = random_curvature(4, 91000 + i, 0.02, hyperbolic);
      const PinchingReport rep = classify(r, 24);
      if (rep.lemma2_strict) {
        ++negative_cases;
        CHECK(bound_negative_sym(r, 2, rep).satisfied);
      }
    }
  }
  CHECK(positive_cases >= 40);
  CHECK(negative_cases >= 40);
}

TEST_CASE("hypothesis-free inputs yield vacuous, satisfied checks") {
  const CurvatureTensor prod = product_space({{2, 1.0}, {2, 1.0}});
  const BoundCheck c = bound_positive_sym(prod, 2, BoundTag::eq2_7);
  CHECK(c.vacuous);
  CHECK(c.satisfied);
  const BoundCheck f = bound_form(prod, 2);
  CHECK(f.vacuous);
  CHECK(f.satisfied);
}

TEST_CASE("positivity certificates track the lemma verdicts") {
  for (int i = 0; i < 40; ++i) {
    const CurvatureTensor r =
        random_curvature(4, 60000 + i, 0.05, constant_curvature(4, 1.0));
    const PinchingReport rep = classify(r, 16);
    if (!rep.lemma1_strict && !rep.double_pinch_strict) continue;
    for (int p : {2, 3}) {
      const SymEigen e = sym_eigen(weitz_matrix(r, OperatorSpace::sym_traceless, p).matrix);
      CHECK(e.eigenvalues(0) > 0.0);
    }
  }
  for (int i = 0; i < 40; ++i) {
    const CurvatureTensor r =
        random_curvature(4, 70000 + i, 0.05, constant_curvature(4, -1.0));
    const PinchingReport rep = classify(r, 16);
    if (!rep.lemma2_strict) continue;
    for (int p : {2, 3}) {
      const SymEigen e = sym_eigen(weitz_matrix(r, OperatorSpace::sym_traceless, p).matrix);
      CHECK(e.eigenvalues(e.eigenvalues.size() - 1) < 0.0);
    }
  }
}

TEST_CASE("eigenvalue bound constants") {
  CHECK(eigen_bound_constants(3, 2, 1.0, BoundTag::thm3) == doctest::Approx(6.0));
  CHECK(eigen_bound_constants(2, 1, 1.0, BoundTag::sec4_eigen) == doctest::Approx(1.0));
  CHECK(eigen_bound_constants(4, 2, 1.0, BoundTag::sec3_eigen) == doctest::Approx(8.0));
  CHECK_THROWS_AS(eigen_bound_constants(4, 2, -1.0, BoundTag::thm3), DimensionError);
  CHECK_THROWS_AS(eigen_bound_constants(4, 2, 1.0, BoundTag::eq2_7), DimensionError);
}

TEST_CASE("rigidity verdicts") {
  const RigidityReport sphere = rigidity_check(constant_curvature(4, 1.0), 16);
  CHECK(sphere.verdict == RigidityVerdict::rigid);
  CHECK(sphere.scalar == doctest::Approx(12.0));
  CHECK(sphere.threshold == doctest::Approx(16.0));

  const RigidityReport fs = rigidity_check(fubini_study(2), 32);
  CHECK(fs.verdict == RigidityVerdict::inconclusive);
  CHECK(fs.scalar == doctest::Approx(24.0));
  CHECK(fs.second_kind_min < 0.0);  // reported positivity witness

  const RigidityReport prod = rigidity_check(product_space({{2, 1.0}, {2, 1.0}}), 16);
  CHECK(prod.verdict == RigidityVerdict::inconclusive);
  CHECK(prod.einstein_residual <= 1e-12);

  const RigidityReport uneven = rigidity_check(product_space({{2, 1.0}, {3, 1.0}}), 16);
  CHECK(uneven.verdict == RigidityVerdict::not_einstein);
}

TEST_CASE("form diagnostics are reported, not asserted") {
  std::mt19937_64 rng(42);
  const CurvatureTensor s4 = constant_curvature(4, 1.0);
  TensorCoeffs omega{build_basis(4, 2, Symmetry::alternating), {}};
  omega.values.resize(omega.basis.size());
  for (Eigen::Index i = 0; i < omega.values.size(); ++i)
    omega.values[i] = uniform_pm1(rng);

  const FormDiagnostics diag = form_q_diagnostics(s4, omega);
  CHECK(std::isfinite(diag.q_operator));
  CHECK(std::isfinite(diag.q_half_coefficient));
  CHECK(std::isfinite(diag.aux_trace_residual));
  CHECK(std::isfinite(diag.aux_identity_residual));
  CHECK(std::isfinite(diag.aux_norm_residual));
  MESSAGE("form diagnostics q=2 on the round 4-sphere: operator=",
          diag.q_operator, " half-coefficient=", diag.q_half_coefficient,
          " aux trace residual=", diag.aux_trace_residual,
          " aux identity residual=", diag.aux_identity_residual,
          " aux norm residual=", diag.aux_norm_residual);
}
