#pragma once

#include "isoforge/bridge.hpp"
#include "isoforge/rng.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace isoforge {

// Invertible matrix together with the metric it is supposed to preserve.
struct GroupElement {
  Matrix m;
  bool lifted = false;
  FlatMetric metric;

  int dim() const { return static_cast<int>(m.rows()); }
};

inline GroupElement identity_element(const FlatMetric& metric, bool lifted) {
  const int d = metric.dim() + (lifted ? 1 : 0);
  return GroupElement{Matrix::Identity(d, d), lifted, metric};
}

inline constexpr double kExpArgLimit = 1e4;

// Scaling and squaring with a Taylor core; accurate to ~1e-13 relative for
// ||a|| <= 10 and plenty at the sizes handled here.
inline Matrix matrix_exponential(const Matrix& a) {
  const int d = static_cast<int>(a.rows());
  const double norm = infinity_norm(a);
  int squarings = 0;
  while (norm / std::exp2(squarings) > 0.5) ++squarings;
  Matrix b = a / std::exp2(squarings);
  Matrix sum = Matrix::Identity(d, d);
  Matrix term = Matrix::Identity(d, d);
  for (int k = 1; k <= 60; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    sum += term;
    if (term.cwiseAbs().maxCoeff() <=
        0.5 * std::numeric_limits<double>::epsilon() * sum.cwiseAbs().maxCoeff())
      break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

inline GroupElement expm(const GeneratorMatrix& g, double t) {
  if (std::abs(t) * infinity_norm(g.m) > kExpArgLimit)
    throw std::invalid_argument("expm: |t|*norm(g) exceeds the overflow guard");
  Matrix e = matrix_exponential(t * g.m);
  if (!e.allFinite()) throw std::domain_error("expm: overflow in matrix exponential");
  return GroupElement{std::move(e), g.lifted, g.metric};
}

// Closed forms: cos/sin for a single rotation plane, cosh/sinh for a single
// boost plane, I + tg for the nilpotent translation family.  The family is
// read off the sparsity pattern, so scaled generators and translation
// combinations work too.
inline GroupElement expm_closed(const GeneratorMatrix& g, double t) {
  const int d = g.dim();
  if (g.lifted) {
    if (g.m.row(d - 1).cwiseAbs().maxCoeff() != 0.0 ||
        g.m.topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff() != 0.0)
      throw std::domain_error("expm_closed: lifted generator is not a pure translation");
    return GroupElement{Matrix::Identity(d, d) + t * g.m, true, g.metric};
  }

  std::vector<std::pair<int, int>> nonzeros;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (g.m(r, c) != 0.0) nonzeros.emplace_back(r, c);
  if (nonzeros.empty()) return identity_element(g.metric, false);
  if (nonzeros.size() != 2 || nonzeros[0].first != nonzeros[1].second ||
      nonzeros[0].second != nonzeros[1].first)
    throw std::domain_error("expm_closed: generator is not a single-plane element");

  const int i = std::min(nonzeros[0].first, nonzeros[0].second);
  const int j = std::max(nonzeros[0].first, nonzeros[0].second);
  const double upper = g.m(i, j);
  const double lower = g.m(j, i);
  Matrix m = Matrix::Identity(d, d);
  if (upper == -lower) {  // rotation plane
    const double theta = t * lower;
    m(i, i) = m(j, j) = std::cos(theta);
    m(j, i) = std::sin(theta);
    m(i, j) = -std::sin(theta);
  } else if (upper == lower && g.metric.lorentzian() && i == 0) {  // boost plane
    const double phi = t * lower;
    m(i, i) = m(j, j) = std::cosh(phi);
    m(i, j) = m(j, i) = std::sinh(phi);
  } else {
    throw std::domain_error("expm_closed: generator not in a supported family");
  }
  return GroupElement{std::move(m), false, g.metric};
}

// ||m^T eta m - eta||_max over the squared magnitude of m.  The normalization
// keeps the defect meaningful at large boost parameters, where the raw
// entries of m^T eta m carry rounding of order ||m||^2 * eps.
inline double isometry_defect(const Matrix& m, const FlatMetric& metric) {
  Matrix eta = metric.matrix();
  const double denom = std::max(1.0, infinity_norm(m) * infinity_norm(m));
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff() / denom;
}

// Bottom-row deviation from (0, ..., 0, 1).
inline double lifted_row_defect(const Matrix& m) {
  const int d = static_cast<int>(m.rows());
  double worst = std::abs(m(d - 1, d - 1) - 1.0);
  for (int c = 0; c < d - 1; ++c) worst = std::max(worst, std::abs(m(d - 1, c)));
  return worst;
}

struct ElementCheck {
  double isometry = 0.0;
  double det_defect = 0.0;
  double lift_defect = 0.0;
  bool ok = false;
};

inline ElementCheck check_element(const GroupElement& e, double tolerance = 1e-10) {
  ElementCheck chk;
  const double det = e.m.determinant();
  const double denom = std::max(1.0, infinity_norm(e.m) * infinity_norm(e.m));
  chk.det_defect = std::abs(std::abs(det) - 1.0) / denom;
  if (e.lifted) {
    chk.lift_defect = lifted_row_defect(e.m);
    const int d = e.dim() - 1;
    chk.isometry = isometry_defect(e.m.topLeftCorner(d, d), e.metric);
    chk.ok = chk.lift_defect <= kLiftTolerance && chk.isometry <= tolerance &&
             chk.det_defect <= tolerance;
  } else {
    chk.isometry = isometry_defect(e.m, e.metric);
    chk.ok = chk.isometry <= tolerance && chk.det_defect <= tolerance;
  }
  return chk;
}

struct MetricPreservationReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  double scale = 1.0;
  double tolerance = 0.0;  // already scaled
  bool pass = false;
};

// Samples random pairs and compares inner products before and after the
// element acts.  Lifted elements are checked on coordinate differences,
// which translations preserve.
inline MetricPreservationReport preserves_metric(const GroupElement& e, int samples,
                                                 std::uint64_t seed,
                                                 double tolerance = 1e-9) {
  Rng rng(seed);
  const FlatMetric& metric = e.metric;
  const int d = metric.dim();
  MetricPreservationReport report;
  report.samples = samples;
  report.seed = seed;
  for (int s = 0; s < samples; ++s) {
    Point x{rng.uniform_vector(d, -1.0, 1.0), false};
    Point y{rng.uniform_vector(d, -1.0, 1.0), false};
    double before, after;
    if (!e.lifted) {
      Point ex{e.m * x.coords, false};
      Point ey{e.m * y.coords, false};
      before = inner(metric, x, y);
      after = inner(metric, ex, ey);
      report.scale = std::max(report.scale, ex.coords.norm() * ey.coords.norm());
    } else {
      Point ex = unlift_point(Point{e.m * lift_point(x).coords, true});
      Point ey = unlift_point(Point{e.m * lift_point(y).coords, true});
      Point diff{x.coords - y.coords, false};
      Point ediff{ex.coords - ey.coords, false};
      before = inner(metric, diff, diff);
      after = inner(metric, ediff, ediff);
      report.scale = std::max(report.scale, ediff.coords.squaredNorm());
    }
    report.max_deviation = std::max(report.max_deviation, std::abs(after - before));
  }
  report.tolerance = tolerance * report.scale;
  report.pass = report.max_deviation < report.tolerance;
  return report;
}

inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim() || a.lifted != b.lifted || !(a.metric == b.metric))
    throw std::invalid_argument("compose: size/lift/metric mismatch");
  GroupElement out{a.m * b.m, a.lifted, a.metric};
  if (!check_element(out).ok)
    throw std::domain_error("compose: result violates group-element invariants");
  return out;
}

inline GroupElement invert(const GroupElement& e) {
  GroupElement out{e.m.inverse(), e.lifted, e.metric};
  if (!check_element(out).ok)
    throw std::domain_error("invert: result violates group-element invariants");
  return out;
}

// Element action on a point.  A lifted element applied to an unlifted point
// goes through the homogeneous lift and back.
inline Point apply(const GroupElement& e, const Point& p) {
  if (e.lifted && !p.lifted)
    return unlift_point(Point{e.m * lift_point(p).coords, true});
  if (!e.lifted && p.lifted)
    throw std::invalid_argument("apply: unlifted element cannot act on a lifted point");
  if (e.dim() != p.dim()) throw std::invalid_argument("apply: dimension mismatch");
  return Point{e.m * p.coords, p.lifted};
}

struct SEParts {
  GroupElement linear;
  Vector translation;
};

inline SEParts se_decompose(const GroupElement& e, double tolerance = 1e-10) {
  if (!e.lifted) throw std::invalid_argument("se_decompose: element must be lifted");
  const int d = e.dim() - 1;
  GroupElement linear{e.m.topLeftCorner(d, d), false, e.metric};
  if (isometry_defect(linear.m, e.metric) > tolerance)
    throw std::domain_error("se_decompose: linear block is not an isometry");
  return SEParts{std::move(linear), e.m.topRightCorner(d, 1)};
}

inline GroupElement se_compose_parts(const GroupElement& linear, const Vector& translation) {
  if (linear.lifted)
    throw std::invalid_argument("se_compose_parts: linear part must be unlifted");
  if (linear.dim() != translation.size())
    throw std::invalid_argument("se_compose_parts: dimension mismatch");
  const int d = linear.dim();
  Matrix m = Matrix::Identity(d + 1, d + 1);
  m.topLeftCorner(d, d) = linear.m;
  m.topRightCorner(d, 1) = translation;
  return GroupElement{std::move(m), true, linear.metric};
}

}  // namespace isoforge
