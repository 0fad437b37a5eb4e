#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace isoforge {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Largest-entry difference; handy for exact-equality assertions.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

inline double infinity_norm(const Matrix& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

// Signature of a diagonal flat metric: `negatives` copies of -1 followed by
// `positives` copies of +1 on the diagonal.  Only the Euclidean (0, d) and
// Lorentzian (1, d-1) cases are supported, and the -1 entry always sits first.
struct Signature {
  int negatives = 0;
  int positives = 0;

  int dim() const { return negatives + positives; }
};

inline bool operator==(const Signature& a, const Signature& b) {
  return a.negatives == b.negatives && a.positives == b.positives;
}

struct FlatMetric {
  Signature signature;

  int dim() const { return signature.dim(); }
  bool lorentzian() const { return signature.negatives == 1; }

  // eta_{mu mu}
  double eta(int mu) const { return mu < signature.negatives ? -1.0 : 1.0; }

  Matrix matrix() const {
    Matrix m = Matrix::Zero(dim(), dim());
    for (int mu = 0; mu < dim(); ++mu) m(mu, mu) = eta(mu);
    return m;
  }
};

inline bool operator==(const FlatMetric& a, const FlatMetric& b) {
  return a.signature == b.signature;
}

inline FlatMetric make_metric(Signature signature) {
  if (signature.negatives < 0 || signature.positives < 1)
    throw std::invalid_argument(
        "make_metric: signature needs negatives >= 0 and positives >= 1");
  if (signature.negatives > 1)
    throw std::invalid_argument(
        "make_metric: only (0,d) and (1,d-1) signatures are supported");
  return FlatMetric{signature};
}

inline FlatMetric euclidean_metric(int n) { return make_metric({0, n}); }

// Minkowski metric on R^{1+n} with n spatial directions.
inline FlatMetric lorentzian_metric(int n) { return make_metric({1, n}); }

// A coordinate point.  Lifted points carry the extra affine coordinate,
// which must stay exactly 1.
struct Point {
  Vector coords;
  bool lifted = false;

  int dim() const { return static_cast<int>(coords.size()); }
};

inline Point make_point(std::initializer_list<double> values) {
  Vector v(static_cast<int>(values.size()));
  int k = 0;
  for (double x : values) v(k++) = x;
  return Point{v, false};
}

inline double inner(const FlatMetric& metric, const Point& x, const Point& y) {
  if (x.lifted || y.lifted)
    throw std::invalid_argument("inner: points must be unlifted");
  if (x.dim() != metric.dim() || y.dim() != metric.dim())
    throw std::invalid_argument("inner: dimension mismatch");
  double sum = 0.0;
  for (int mu = 0; mu < metric.dim(); ++mu)
    sum += metric.eta(mu) * x.coords(mu) * y.coords(mu);
  return sum;
}

inline Point lift_point(const Point& x) {
  if (x.lifted) throw std::invalid_argument("lift_point: point is already lifted");
  Vector v(x.dim() + 1);
  v.head(x.dim()) = x.coords;
  v(x.dim()) = 1.0;
  return Point{v, true};
}

inline constexpr double kLiftTolerance = 1e-12;

inline Point unlift_point(const Point& x) {
  if (!x.lifted) throw std::invalid_argument("unlift_point: point is not lifted");
  const double last = x.coords(x.dim() - 1);
  if (std::abs(last - 1.0) > kLiftTolerance)
    throw std::domain_error(
        "unlift_point: lift coordinate is not 1 (non-affine matrix applied?)");
  return Point{x.coords.head(x.dim() - 1), false};
}

}  // namespace isoforge
