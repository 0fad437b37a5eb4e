#pragma once

#include "isoforge/metric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace isoforge {

enum class Family { translation, rotation, boost, mixed };

// Basis-element tag.  Index conventions follow the constructor arguments:
// rotations carry the plane (i, j) with i < j, boosts the spatial axis i,
// translations the axis (1-based in Euclidean space, 0-based on spacetime).
struct Label {
  Family family = Family::mixed;
  int i = 0;
  int j = 0;
};

inline bool operator==(const Label& a, const Label& b) {
  return a.family == b.family && a.i == b.i && a.j == b.j;
}

// Degree <= 1 polynomial vector field xi^mu(x) = a^mu + omega^mu_nu x^nu.
struct AffineVectorField {
  Vector a;
  Matrix omega;
  std::optional<Label> label;

  int dim() const { return static_cast<int>(a.size()); }
};

inline AffineVectorField make_field(Vector a, Matrix omega,
                                    std::optional<Label> label = std::nullopt) {
  if (omega.rows() != a.size() || omega.cols() != a.size())
    throw std::invalid_argument("make_field: constant/linear part size mismatch");
  return AffineVectorField{std::move(a), std::move(omega), label};
}

inline AffineVectorField zero_field(int d) {
  return AffineVectorField{Vector::Zero(d), Matrix::Zero(d, d), std::nullopt};
}

// P_i = d_i on (R^n, delta); i in 1..n.
inline AffineVectorField translation_field(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("translation_field: index out of range");
  AffineVectorField f = zero_field(n);
  f.a(i - 1) = 1.0;
  f.label = Label{Family::translation, i, 0};
  return f;
}

// J_ij = x^i d_j - x^j d_i on (R^n, delta); 1 <= i < j <= n.
inline AffineVectorField rotation_field(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("rotation_field: need 1 <= i < j <= n");
  AffineVectorField f = zero_field(n);
  f.omega(j - 1, i - 1) = 1.0;
  f.omega(i - 1, j - 1) = -1.0;
  f.label = Label{Family::rotation, i, j};
  return f;
}

// K_i = x^i d_0 + x^0 d_i on (R^{1+n}, eta); i in 1..n.
inline AffineVectorField boost_field(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("boost_field: index out of range");
  AffineVectorField f = zero_field(n + 1);
  f.omega(0, i) = 1.0;
  f.omega(i, 0) = 1.0;
  f.label = Label{Family::boost, i, 0};
  return f;
}

// Spatial rotation plane of (R^{1+n}, eta); 1 <= i < j <= n.
inline AffineVectorField lorentz_rotation_field(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("lorentz_rotation_field: need 1 <= i < j <= n");
  AffineVectorField f = zero_field(n + 1);
  f.omega(j, i) = 1.0;
  f.omega(i, j) = -1.0;
  f.label = Label{Family::rotation, i, j};
  return f;
}

// P_mu = d_mu on (R^{1+n}, eta); mu in 0..n.
inline AffineVectorField poincare_translation_field(int mu, int n) {
  if (mu < 0 || mu > n)
    throw std::invalid_argument("poincare_translation_field: index out of range");
  AffineVectorField f = zero_field(n + 1);
  f.a(mu) = 1.0;
  f.label = Label{Family::translation, mu, 0};
  return f;
}

// Cyclic single-index alias on R^3: J_1 = J_23, J_2 = J_31, J_3 = J_12.
inline AffineVectorField cyclic_rotation_field(int i) {
  switch (i) {
    case 1: return rotation_field(2, 3, 3);
    case 2: {
      AffineVectorField f = zero_field(3);
      f.omega(0, 2) = 1.0;   // J_31 = x^3 d_1 - x^1 d_3
      f.omega(2, 0) = -1.0;
      f.label = Label{Family::rotation, 3, 1};
      return f;
    }
    case 3: return rotation_field(1, 2, 3);
    default: throw std::invalid_argument("cyclic_rotation_field: index must be 1, 2 or 3");
  }
}

inline Vector evaluate_field(const AffineVectorField& f, const Point& x) {
  if (x.lifted) throw std::invalid_argument("evaluate_field: point must be unlifted");
  if (x.dim() != f.dim()) throw std::invalid_argument("evaluate_field: dimension mismatch");
  return f.a + f.omega * x.coords;
}

// Symmetrized lowered linear part, (eta omega) + (eta omega)^T.  Zero exactly
// when the field solves the flat Killing equation; the constant part never
// contributes.
inline Matrix killing_residual(const AffineVectorField& f, const FlatMetric& metric) {
  if (f.dim() != metric.dim())
    throw std::invalid_argument("killing_residual: dimension mismatch");
  Matrix lowered = metric.matrix() * f.omega;
  return lowered + lowered.transpose();
}

// Residual entries are sums/differences of stored coefficients, so the
// default comparison is exact.  Pass a small tolerance for fields assembled
// by floating-point arithmetic.
inline bool is_killing(const AffineVectorField& f, const FlatMetric& metric,
                       double tolerance = 0.0) {
  return killing_residual(f, metric).cwiseAbs().maxCoeff() <= tolerance;
}

// The maximal basis, d(d+1)/2 fields: translations first, then rotation
// planes in lexicographic (i, j) order, then boosts in increasing i.
inline std::vector<AffineVectorField> enumerate_killing_basis(const FlatMetric& metric) {
  std::vector<AffineVectorField> basis;
  const int d = metric.dim();
  if (!metric.lorentzian()) {
    for (int i = 1; i <= d; ++i) basis.push_back(translation_field(i, d));
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) basis.push_back(rotation_field(i, j, d));
  } else {
    const int n = d - 1;
    for (int mu = 0; mu <= n; ++mu) basis.push_back(poincare_translation_field(mu, n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) basis.push_back(lorentz_rotation_field(i, j, n));
    for (int i = 1; i <= n; ++i) basis.push_back(boost_field(i, n));
  }
  return basis;
}

// Commutator of affine fields as derivations, [f, g]^k = f^nu d_nu g^k - g^nu d_nu f^k.
// Closed form: constant part omega_g a_f - omega_f a_g, linear part
// omega_g omega_f - omega_f omega_g.
inline AffineVectorField field_bracket(const AffineVectorField& f,
                                       const AffineVectorField& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("field_bracket: dimension mismatch");
  Vector a = g.omega * f.a - f.omega * g.a;
  Matrix omega = g.omega * f.omega - f.omega * g.omega;
  return AffineVectorField{std::move(a), std::move(omega), std::nullopt};
}

struct Expansion {
  Vector coefficients;
  double residual = 0.0;
};

// Least-squares expansion of f over the given fields, flattening (a, omega)
// into one coordinate vector per field.  The solve goes through the Gram
// matrix, which is diagonal for the enumerated bases, so expansions of
// integer-coefficient fields are exact.
inline Expansion expand_in_field_basis(const AffineVectorField& f,
                                       const std::vector<AffineVectorField>& basis) {
  if (basis.empty()) throw std::invalid_argument("expand_in_field_basis: empty basis");
  const int d = f.dim();
  const int rows = d + d * d;
  Matrix system(rows, static_cast<int>(basis.size()));
  auto flatten = [d](const AffineVectorField& v) {
    Vector out(d + d * d);
    out.head(d) = v.a;
    out.tail(d * d) = Eigen::Map<const Vector>(v.omega.data(), d * d);
    return out;
  };
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    if (basis[k].dim() != d)
      throw std::invalid_argument("expand_in_field_basis: dimension mismatch");
    system.col(k) = flatten(basis[k]);
  }
  Vector target = flatten(f);
  Eigen::FullPivLU<Matrix> lu(Matrix(system.transpose() * system));
  Vector coeff = lu.isInvertible() ? Vector(lu.solve(system.transpose() * target))
                                   : Vector(system.colPivHouseholderQr().solve(target));
  double residual = (system * coeff - target).norm();
  return Expansion{std::move(coeff), residual};
}

}  // namespace isoforge
