#pragma once

#include "isoforge/killing.hpp"

#include <string>
#include <vector>

namespace isoforge {

// Matrix generator acting on the base space (unlifted) or on the homogeneous
// lift of it (lifted, one extra affine coordinate).
//
// Invariants: a lifted generator has an all-zero bottom row, so its
// exponential fixes the lift coordinate; an unlifted rotation or boost g
// satisfies g^T eta + eta g = 0 exactly.
struct GeneratorMatrix {
  Matrix m;
  bool lifted = false;
  std::optional<Label> label;
  FlatMetric metric;  // metric of the base space the generator belongs to

  int dim() const { return static_cast<int>(m.rows()); }
};

// Stable string form used in JSON documents and CLI flags.  Family-only
// labels (negative index, e.g. a combined translation) render without the
// index part.
inline std::string label_string(const std::optional<Label>& label,
                                const FlatMetric& metric) {
  if (!label || label->family == Family::mixed) return "mixed";
  const bool family_only = label->i < 0;
  switch (label->family) {
    case Family::translation: {
      const std::string kind = metric.lorentzian() ? "strans" : "trans";
      return family_only ? kind : kind + ":" + std::to_string(label->i);
    }
    case Family::rotation: {
      const std::string kind = metric.lorentzian() ? "lrot" : "rot";
      return family_only ? kind
                         : kind + ":" + std::to_string(label->i) + "," +
                               std::to_string(label->j);
    }
    case Family::boost:
      return family_only ? "boost" : "boost:" + std::to_string(label->i);
    default:
      return "mixed";
  }
}

inline std::string label_string(const GeneratorMatrix& g) {
  return label_string(g.label, g.metric);
}

// (A_ij)_kl = d_il d_jk - d_ik d_jl; n x n, so(n).
inline GeneratorMatrix rotation_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("rotation_generator: need 1 <= i < j <= n");
  Matrix m = Matrix::Zero(n, n);
  m(j - 1, i - 1) = 1.0;
  m(i - 1, j - 1) = -1.0;
  return GeneratorMatrix{std::move(m), false, Label{Family::rotation, i, j},
                         euclidean_metric(n)};
}

// (T_i)_jk = d_ij d_{n+1,k}; (n+1) x (n+1), lifted.
inline GeneratorMatrix translation_generator(int i, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("translation_generator: index out of range");
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m(i - 1, n) = 1.0;
  return GeneratorMatrix{std::move(m), true, Label{Family::translation, i, 0},
                         euclidean_metric(n)};
}

// (C_i)^a_b = d^a_0 eta_ib - d^a_i eta_0b; (1+n) x (1+n), so(1,n) boost sector.
inline GeneratorMatrix boost_generator(int i, int n) {
  if (i < 1 || i > n)
    throw std::invalid_argument("boost_generator: index out of range");
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m(0, i) = 1.0;
  m(i, 0) = 1.0;
  return GeneratorMatrix{std::move(m), false, Label{Family::boost, i, 0},
                         lorentzian_metric(n)};
}

// (B_ij)^a_b = d^a_j eta_ib - d^a_i eta_jb; (1+n) x (1+n), so(1,n) rotation sector.
inline GeneratorMatrix lorentz_rotation_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("lorentz_rotation_generator: need 1 <= i < j <= n");
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m(j, i) = 1.0;
  m(i, j) = -1.0;
  return GeneratorMatrix{std::move(m), false, Label{Family::rotation, i, j},
                         lorentzian_metric(n)};
}

// (W_mu)_ab = d_{mu a} d_{n+1,b}; (n+2) x (n+2), lifted; mu in 0..n.
inline GeneratorMatrix poincare_translation_generator(int mu, int n) {
  if (mu < 0 || mu > n)
    throw std::invalid_argument("poincare_translation_generator: index out of range");
  Matrix m = Matrix::Zero(n + 2, n + 2);
  m(mu, n + 1) = 1.0;
  return GeneratorMatrix{std::move(m), true, Label{Family::translation, mu, 0},
                         lorentzian_metric(n)};
}

// Cyclic alias on R^3: tau_1 = A_23, tau_2 = A_31, tau_3 = A_12.
inline GeneratorMatrix so3_cyclic_generator(int i) {
  switch (i) {
    case 1: return rotation_generator(2, 3, 3);
    case 2: {
      GeneratorMatrix g = rotation_generator(1, 3, 3);
      g.m = -g.m;
      g.label = Label{Family::rotation, 3, 1};
      return g;
    }
    case 3: return rotation_generator(1, 2, 3);
    default: throw std::invalid_argument("so3_cyclic_generator: index must be 1, 2 or 3");
  }
}

inline GeneratorMatrix scaled(GeneratorMatrix g, double c) {
  g.m *= c;
  return g;
}

// Linear combination of same-shape generators.  The label is dropped unless
// every input shares one family, in which case only the family survives.
inline GeneratorMatrix combine(const std::vector<double>& coefficients,
                               const std::vector<GeneratorMatrix>& generators) {
  if (generators.empty() || coefficients.size() != generators.size())
    throw std::invalid_argument("combine: need one coefficient per generator");
  GeneratorMatrix out = generators.front();
  out.m = coefficients.front() * generators.front().m;
  out.label = std::nullopt;
  for (std::size_t k = 1; k < generators.size(); ++k) {
    const GeneratorMatrix& g = generators[k];
    if (g.dim() != out.dim() || g.lifted != out.lifted || !(g.metric == out.metric))
      throw std::invalid_argument("combine: size/lift/metric mismatch");
    out.m += coefficients[k] * g.m;
  }
  bool same_family = generators.front().label.has_value();
  for (const auto& g : generators)
    same_family = same_family && g.label &&
                  g.label->family == generators.front().label->family;
  if (same_family)
    out.label = Label{generators.front().label->family, -1, -1};
  return out;
}

// ||g^T eta + eta g||_max; zero exactly for the rotation/boost constructors.
inline double metric_antisymmetry_defect(const GeneratorMatrix& g) {
  if (g.lifted)
    throw std::invalid_argument("metric_antisymmetry_defect: generator is lifted");
  Matrix eta = g.metric.matrix();
  return (g.m.transpose() * eta + eta * g.m).cwiseAbs().maxCoeff();
}

inline bool generator_invariants_ok(const GeneratorMatrix& g) {
  if (g.lifted) {
    if (g.dim() != g.metric.dim() + 1) return false;
    return g.m.row(g.dim() - 1).cwiseAbs().maxCoeff() == 0.0;
  }
  if (g.dim() != g.metric.dim() || !g.label) return true;
  if (g.label->family == Family::rotation || g.label->family == Family::boost)
    return metric_antisymmetry_defect(g) == 0.0;
  return true;
}

// Zero-pad an unlifted generator to the lifted space (last row and column
// zero) so it can be bracketed with translation generators.  Idempotent.
inline GeneratorMatrix lifted_generator(const GeneratorMatrix& g) {
  if (g.lifted) return g;
  Matrix m = Matrix::Zero(g.dim() + 1, g.dim() + 1);
  m.topLeftCorner(g.dim(), g.dim()) = g.m;
  return GeneratorMatrix{std::move(m), true, g.label, g.metric};
}

// Derivative at t = 0 of the one-parameter action t -> exp(tg) x.  For a
// lifted generator the result lives on the base space: constant part from the
// last column, linear part from the top-left block.
inline AffineVectorField induce_field(const GeneratorMatrix& g) {
  if (!g.lifted)
    return AffineVectorField{Vector::Zero(g.dim()), g.m, g.label};
  const int d = g.dim() - 1;
  if (g.m.row(d).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("induce_field: lifted generator has a nonzero bottom row");
  return AffineVectorField{g.m.topRightCorner(d, 1), g.m.topLeftCorner(d, d), g.label};
}

inline constexpr double kKillingTolerance = 1e-12;

// Inverse of induce_field on Killing fields: the unique matrix whose induced
// field is f.  Pure-linear fields come back unlifted; anything with a
// translation part comes back lifted.
inline GeneratorMatrix extract_generator(const AffineVectorField& f,
                                         const FlatMetric& metric) {
  if (f.dim() != metric.dim())
    throw std::invalid_argument("extract_generator: dimension mismatch");
  if (!is_killing(f, metric, kKillingTolerance))
    throw std::domain_error("extract_generator: field is not Killing for this metric");
  if (f.a.cwiseAbs().maxCoeff() == 0.0)
    return GeneratorMatrix{f.omega, false, f.label, metric};
  const int d = f.dim();
  Matrix m = Matrix::Zero(d + 1, d + 1);
  m.topLeftCorner(d, d) = f.omega;
  m.topRightCorner(d, 1) = f.a;
  return GeneratorMatrix{std::move(m), true, f.label, metric};
}

enum class BasisForm {
  natural,  // translations lifted, rotations/boosts unlifted
  lifted    // everything zero-padded to the lifted space
};

// Full generator basis of the isometry algebra, ordered to match
// enumerate_killing_basis: translations, rotation planes, boosts.
inline std::vector<GeneratorMatrix> generator_basis(const FlatMetric& metric,
                                                    BasisForm form) {
  std::vector<GeneratorMatrix> basis;
  const int d = metric.dim();
  if (!metric.lorentzian()) {
    for (int i = 1; i <= d; ++i) basis.push_back(translation_generator(i, d));
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) basis.push_back(rotation_generator(i, j, d));
  } else {
    const int n = d - 1;
    for (int mu = 0; mu <= n; ++mu)
      basis.push_back(poincare_translation_generator(mu, n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        basis.push_back(lorentz_rotation_generator(i, j, n));
    for (int i = 1; i <= n; ++i) basis.push_back(boost_generator(i, n));
  }
  if (form == BasisForm::lifted)
    for (auto& g : basis) g = lifted_generator(g);
  return basis;
}

// Unlifted so(n) / so(1,n) sector: rotation planes, then boosts.
inline std::vector<GeneratorMatrix> rotation_sector_basis(const FlatMetric& metric) {
  std::vector<GeneratorMatrix> basis;
  if (!metric.lorentzian()) {
    const int n = metric.dim();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) basis.push_back(rotation_generator(i, j, n));
  } else {
    const int n = metric.dim() - 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        basis.push_back(lorentz_rotation_generator(i, j, n));
    for (int i = 1; i <= n; ++i) basis.push_back(boost_generator(i, n));
  }
  return basis;
}

inline std::vector<GeneratorMatrix> so3_cyclic_basis() {
  return {so3_cyclic_generator(1), so3_cyclic_generator(2), so3_cyclic_generator(3)};
}

inline bool exact_equal(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  return a.lifted == b.lifted && a.metric == b.metric && a.m.rows() == b.m.rows() &&
         max_abs_diff(a.m, b.m) == 0.0;
}

inline bool exact_equal(const AffineVectorField& a, const AffineVectorField& b) {
  return a.dim() == b.dim() && max_abs_diff(a.a, b.a) == 0.0 &&
         max_abs_diff(a.omega, b.omega) == 0.0;
}

}  // namespace isoforge
