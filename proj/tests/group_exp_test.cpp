#include "isoforge/group_exp.hpp"
#include "isoforge/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace isoforge;

namespace {

// Axis-angle rotation built from the classical closed form
// R = I + sin(t) K + (1 - cos(t)) K^2, independent of the series code.
Matrix rodrigues(const Vector& axis, double angle) {
  Matrix k = Matrix::Zero(3, 3);
  k(0, 1) = -axis(2);
  k(0, 2) = axis(1);
  k(1, 0) = axis(2);
  k(1, 2) = -axis(0);
  k(2, 0) = -axis(1);
  k(2, 1) = axis(0);
  return Matrix::Identity(3, 3) + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

double relative_gap(const Matrix& a, const Matrix& b) {
  return max_abs_diff(a, b) / std::max(1.0, infinity_norm(b));
}

}  // namespace

TEST(Expm, ZeroParameterGivesIdentity) {
  for (const auto& g : generator_basis(lorentzian_metric(3), BasisForm::natural)) {
    GroupElement e = expm(g, 0.0);
    EXPECT_EQ(max_abs_diff(e.m, Matrix::Identity(e.dim(), e.dim())), 0.0);
  }
}

TEST(Expm, QuarterTurnMovesBasisVector) {
  GroupElement r = expm(rotation_generator(2, 3, 3), std::numbers::pi / 2);
  Point image = apply(r, make_point({0, 1, 0}));
  EXPECT_NEAR(image.coords(0), 0.0, 1e-12);
  EXPECT_NEAR(image.coords(1), 0.0, 1e-12);
  EXPECT_NEAR(image.coords(2), 1.0, 1e-12);
}

TEST(Expm, MatchesRodriguesOnSo3) {
  struct Plane {
    int i, j;
    Vector axis;
  };
  // plane (2,3) spins about axis 1, (3,1) about axis 2, (1,2) about axis 3
  std::vector<Plane> planes{{2, 3, make_point({1, 0, 0}).coords},
                            {1, 3, make_point({0, -1, 0}).coords},
                            {1, 2, make_point({0, 0, 1}).coords}};
  for (const auto& p : planes)
    for (double t : {-2.5, -0.3, 0.7, 3.1, 9.0}) {
      Matrix direct = expm(rotation_generator(p.i, p.j, 3), t).m;
      EXPECT_LT(relative_gap(direct, rodrigues(p.axis, t)), 1e-13);
    }
}

TEST(Expm, BoostGivesCoshSinhBlock) {
  for (double phi : {0.25, 1.0, 3.0, 10.0}) {
    Matrix m = expm(boost_generator(1, 3), phi).m;
    Matrix expected = Matrix::Identity(4, 4);
    expected(0, 0) = expected(1, 1) = std::cosh(phi);
    expected(0, 1) = expected(1, 0) = std::sinh(phi);
    EXPECT_LT(relative_gap(m, expected), 1e-13);
  }
}

TEST(Expm, GuardsLargeArguments) {
  EXPECT_THROW(expm(boost_generator(1, 3), 2e4), std::invalid_argument);
}

TEST(ExpmClosed, TranslationOperators) {
  // combined translation, lifted: exp is exactly I + g
  Vector eps = make_point({0.3, -1.25, 2.0}).coords;
  GeneratorMatrix t = combine({eps(0), eps(1), eps(2)},
                              {translation_generator(1, 3), translation_generator(2, 3),
                               translation_generator(3, 3)});
  GroupElement op = expm_closed(t, 1.0);
  Matrix expected = Matrix::Identity(4, 4);
  expected(0, 3) = 0.3;
  expected(1, 3) = -1.25;
  expected(2, 3) = 2.0;
  EXPECT_EQ(max_abs_diff(op.m, expected), 0.0);

  // spacetime version, one extra row
  std::vector<GeneratorMatrix> w;
  for (int mu = 0; mu <= 3; ++mu) w.push_back(poincare_translation_generator(mu, 3));
  GeneratorMatrix ts = combine({1.5, -0.5, 0.25, 4.0}, w);
  GroupElement ops = expm_closed(ts, 1.0);
  EXPECT_EQ(ops.dim(), 5);
  EXPECT_EQ(ops.m(0, 4), 1.5);
  EXPECT_EQ(ops.m(3, 4), 4.0);
  EXPECT_EQ(ops.m(4, 4), 1.0);
  EXPECT_EQ(max_abs_diff(ops.m.topLeftCorner(4, 4), Matrix::Identity(4, 4)), 0.0);
}

TEST(ExpmClosed, HalfTurnInThePlane) {
  GroupElement r = expm_closed(rotation_generator(1, 2, 2), std::numbers::pi);
  EXPECT_NEAR(r.m(0, 0), -1.0, 1e-15);
  EXPECT_NEAR(r.m(1, 1), -1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.m(0, 1)), 0.0, 1e-15);
}

TEST(ExpmClosed, AgreesWithSeriesWhereverDefined) {
  std::vector<GeneratorMatrix> generators;
  for (int i = 1; i <= 3; ++i) {
    generators.push_back(boost_generator(i, 3));
    generators.push_back(translation_generator(i, 3));
    for (int j = i + 1; j <= 3; ++j) {
      generators.push_back(rotation_generator(i, j, 3));
      generators.push_back(lorentz_rotation_generator(i, j, 3));
    }
  }
  for (const auto& g : generators)
    for (double t : {-10.0, -3.0, -0.4, 0.0, 0.8, 2.0, 10.0}) {
      Matrix series = expm(g, t).m;
      Matrix closed = expm_closed(g, t).m;
      EXPECT_LT(relative_gap(series, closed), 1e-13) << label_string(g) << " t=" << t;
    }
}

TEST(ExpmClosed, RejectsUnsupportedShapes) {
  GeneratorMatrix mixed = combine(
      {1.0, 1.0}, {rotation_generator(1, 2, 3), rotation_generator(1, 3, 3)});
  EXPECT_THROW(expm_closed(mixed, 1.0), std::domain_error);

  // symmetric pair away from the time row is no boost
  GeneratorMatrix fake{Matrix::Zero(4, 4), false, std::nullopt, lorentzian_metric(3)};
  fake.m(1, 2) = fake.m(2, 1) = 1.0;
  EXPECT_THROW(expm_closed(fake, 1.0), std::domain_error);
}

TEST(OneParameterSubgroup, AdditionLaw) {
  Rng rng(31);
  for (const auto& g : generator_basis(lorentzian_metric(3), BasisForm::natural)) {
    for (int trial = 0; trial < 10; ++trial) {
      const double s = rng.uniform(-5.0, 5.0);
      const double t = rng.uniform(-5.0, 5.0);
      Matrix product = expm(g, s).m * expm(g, t).m;
      Matrix direct = expm(g, s + t).m;
      EXPECT_LT(max_abs_diff(product, direct) / std::max(1.0, infinity_norm(direct)),
                1e-11);
    }
  }
}

TEST(PreservesMetric, RotationPassesIdentityIsTight) {
  GroupElement r = expm(rotation_generator(2, 3, 3), 1.234);
  MetricPreservationReport report = preserves_metric(r, 100, 5);
  EXPECT_TRUE(report.pass);

  MetricPreservationReport id_report =
      preserves_metric(identity_element(euclidean_metric(3), false), 50, 5);
  EXPECT_EQ(id_report.max_deviation, 0.0);
}

TEST(PreservesMetric, ScalingMatrixFails) {
  GroupElement stretch{Matrix::Identity(3, 3), false, euclidean_metric(3)};
  stretch.m(0, 0) = 2.0;
  MetricPreservationReport report = preserves_metric(stretch, 50, 5);
  EXPECT_FALSE(report.pass);
}

TEST(PreservesMetric, LiftedTranslationDifferenceCheck) {
  GroupElement t = expm(translation_generator(1, 3), 7.5);
  MetricPreservationReport report = preserves_metric(t, 100, 5, 1e-10);
  EXPECT_TRUE(report.pass);
}

TEST(ComposeInvert, InverseCancelsAndTranslationsAdd) {
  Rng rng(41);
  for (const auto& g : generator_basis(euclidean_metric(3), BasisForm::natural)) {
    GroupElement e = expm(g, rng.uniform(-3.0, 3.0));
    GroupElement round = compose(e, invert(e));
    EXPECT_LT(max_abs_diff(round.m, Matrix::Identity(e.dim(), e.dim())), 1e-10);
  }

  Vector eps1 = make_point({1.0, 2.0, 3.0}).coords;
  Vector eps2 = make_point({-0.5, 0.25, 1.5}).coords;
  GroupElement t1 = se_compose_parts(identity_element(euclidean_metric(3), false), eps1);
  GroupElement t2 = se_compose_parts(identity_element(euclidean_metric(3), false), eps2);
  GroupElement sum = compose(t1, t2);
  EXPECT_EQ(max_abs_diff(sum.m.topRightCorner(3, 1), (eps1 + eps2).eval()), 0.0);
}

TEST(ComposeInvert, AngleAdditionInOnePlane) {
  GeneratorMatrix g = rotation_generator(1, 2, 3);
  GroupElement product = compose(expm(g, 0.7), expm(g, 1.1));
  EXPECT_LT(max_abs_diff(product.m, expm_closed(g, 1.8).m), 1e-13);
}

TEST(ComposeInvert, MismatchAndDecayErrors) {
  GroupElement r = expm(rotation_generator(1, 2, 3), 1.0);
  GroupElement t = expm(translation_generator(1, 3), 1.0);
  EXPECT_THROW(compose(r, t), std::invalid_argument);

  GroupElement stretch{Matrix::Identity(3, 3), false, euclidean_metric(3)};
  stretch.m(0, 0) = 2.0;
  EXPECT_THROW(compose(stretch, stretch), std::domain_error);
}

TEST(CheckElement, FlagsTheUsualSuspects) {
  EXPECT_TRUE(check_element(expm(boost_generator(1, 3), 10.0)).ok);
  GroupElement stretch{Matrix::Identity(4, 4), false, lorentzian_metric(3)};
  stretch.m(2, 2) = 2.0;
  EXPECT_FALSE(check_element(stretch).ok);

  GroupElement bad_lift{Matrix::Identity(4, 4), true, euclidean_metric(3)};
  bad_lift.m(3, 0) = 1e-6;
  EXPECT_FALSE(check_element(bad_lift).ok);
}

TEST(SeDecompose, SplitsTranslationAndRotation) {
  Vector eps = make_point({0.3, -1.25, 2.0}).coords;
  GeneratorMatrix t = combine({eps(0), eps(1), eps(2)},
                              {translation_generator(1, 3), translation_generator(2, 3),
                               translation_generator(3, 3)});
  SEParts parts = se_decompose(expm_closed(t, 1.0));
  EXPECT_EQ(max_abs_diff(parts.linear.m, Matrix::Identity(3, 3)), 0.0);
  EXPECT_EQ(max_abs_diff(parts.translation, eps), 0.0);

  GroupElement lifted_rotation =
      expm(lifted_generator(rotation_generator(1, 2, 3)), 0.9);
  SEParts rparts = se_decompose(lifted_rotation);
  EXPECT_EQ(rparts.translation.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT(max_abs_diff(rparts.linear.m, expm(rotation_generator(1, 2, 3), 0.9).m),
            1e-15);
}

TEST(SeDecompose, RejectsNonIsometricBlock) {
  GroupElement bad{Matrix::Identity(4, 4), true, euclidean_metric(3)};
  bad.m(0, 0) = 2.0;
  EXPECT_THROW(se_decompose(bad), std::domain_error);
  EXPECT_THROW(se_decompose(expm(rotation_generator(1, 2, 3), 1.0)),
               std::invalid_argument);
}

TEST(SeComposeParts, SemidirectLawHolds) {
  Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement r1 = expm(rotation_generator(1, 2, 3), rng.uniform(-3.0, 3.0));
    GroupElement r2 = expm(rotation_generator(2, 3, 3), rng.uniform(-3.0, 3.0));
    Vector t1 = rng.uniform_vector(3, -2.0, 2.0);
    Vector t2 = rng.uniform_vector(3, -2.0, 2.0);

    GroupElement product = compose(se_compose_parts(r1, t1), se_compose_parts(r2, t2));
    GroupElement expected =
        se_compose_parts(GroupElement{r1.m * r2.m, false, r1.metric},
                         (r1.m * t2 + t1).eval());
    EXPECT_LT(max_abs_diff(product.m, expected.m), 1e-12);
  }
}

TEST(DeterminantStaysSpecial, AcrossParameters) {
  Rng rng(61);
  for (const auto& g : generator_basis(lorentzian_metric(3), BasisForm::natural)) {
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement e = expm(g, rng.uniform(-10.0, 10.0));
      EXPECT_LE(check_element(e).det_defect, 1e-10) << label_string(g);
    }
  }
}

TEST(DerivativeOfExp, RecoversInducedField) {
  Rng rng(67);
  for (const auto& g : generator_basis(lorentzian_metric(3), BasisForm::natural)) {
    AffineVectorField field = induce_field(g);
    const int d = field.dim();
    for (int trial = 0; trial < 5; ++trial) {
      Point x{rng.uniform_vector(d, -1.0, 1.0), false};
      Vector expected = evaluate_field(field, x);
      double previous_error = -1.0;
      for (double h : {1e-3, 1e-4, 1e-5}) {
        Point moved = apply(expm(g, h), x);
        Vector fd = (moved.coords - x.coords) / h;
        double error = (fd - expected).cwiseAbs().maxCoeff();
        if (previous_error > 1e-9)
          EXPECT_LT(error, 0.3 * previous_error);  // first-order decay
        else if (previous_error >= 0.0)
          EXPECT_LT(error, 1e-9);  // nilpotent directions are exact
        previous_error = error;
      }
    }
  }
}

TEST(Expm, OverflowingHyperbolicsAreReported) {
  // within the argument guard, but cosh(800) has no double representation
  EXPECT_THROW(expm(boost_generator(1, 3), 800.0), std::domain_error);
}
