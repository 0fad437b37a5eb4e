#pragma once

#include "isoforge/bridge.hpp"

#include <string>
#include <vector>

namespace isoforge {

// Rank-3 array of expansion coefficients, [e_i, e_j] = c^k_ij e_k.
struct StructureConstants {
  std::vector<std::string> labels;
  int size = 0;
  std::vector<double> c;  // flattened, (i*size + j)*size + k

  double at(int i, int j, int k) const { return c[(i * size + j) * size + k]; }
  double& at(int i, int j, int k) { return c[(i * size + j) * size + k]; }
};

inline GeneratorMatrix matrix_bracket(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  if (a.dim() != b.dim() || a.lifted != b.lifted)
    throw std::invalid_argument("matrix_bracket: size/lift mismatch");
  return GeneratorMatrix{a.m * b.m - b.m * a.m, a.lifted, std::nullopt, a.metric};
}

struct SpanExpansion {
  Vector coefficients;
  double residual = 0.0;
};

// Least squares through the Gram matrix.  The generator bases have disjoint
// supports and integer entries, which makes the Gram matrix diagonal and the
// expansion coefficients exact; a QR fallback covers dependent inputs.
inline SpanExpansion least_squares_expansion(const Matrix& system, const Vector& rhs) {
  Matrix gram = system.transpose() * system;
  Eigen::FullPivLU<Matrix> lu(gram);
  Vector coeff;
  if (lu.isInvertible())
    coeff = lu.solve(system.transpose() * rhs);
  else
    coeff = system.colPivHouseholderQr().solve(rhs);
  double residual = (system * coeff - rhs).norm();
  return SpanExpansion{std::move(coeff), residual};
}

inline SpanExpansion expand_in_matrix_span(const Matrix& target,
                                           const std::vector<GeneratorMatrix>& basis) {
  if (basis.empty())
    return SpanExpansion{Vector(), std::sqrt(target.squaredNorm())};
  const int entries = static_cast<int>(target.size());
  Matrix system(entries, static_cast<int>(basis.size()));
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    if (basis[k].m.size() != target.size())
      throw std::invalid_argument("expand_in_matrix_span: size mismatch");
    system.col(k) = Eigen::Map<const Vector>(basis[k].m.data(), entries);
  }
  Vector rhs = Eigen::Map<const Vector>(target.data(), entries);
  return least_squares_expansion(system, rhs);
}

inline constexpr double kClosureTolerance = 1e-10;

// Pairwise brackets expanded back over the basis.  Throws if the basis is
// linearly dependent or some bracket leaves its span (closure failure).
inline StructureConstants structure_constants(const std::vector<GeneratorMatrix>& basis,
                                              double tolerance = kClosureTolerance) {
  if (basis.empty()) throw std::invalid_argument("structure_constants: empty basis");
  const int n = static_cast<int>(basis.size());
  for (const auto& g : basis)
    if (g.dim() != basis.front().dim() || g.lifted != basis.front().lifted)
      throw std::invalid_argument("structure_constants: mixed sizes or lift status");

  const int entries = static_cast<int>(basis.front().m.size());
  Matrix system(entries, n);
  for (int k = 0; k < n; ++k)
    system.col(k) = Eigen::Map<const Vector>(basis[k].m.data(), entries);
  Eigen::FullPivLU<Matrix> gram_lu(Matrix(system.transpose() * system));
  if (!gram_lu.isInvertible())
    throw std::invalid_argument("structure_constants: basis is linearly dependent");

  StructureConstants sc;
  sc.size = n;
  sc.c.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const auto& g : basis) sc.labels.push_back(label_string(g));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      GeneratorMatrix br = matrix_bracket(basis[i], basis[j]);
      Vector rhs = Eigen::Map<const Vector>(br.m.data(), entries);
      Vector coeff = gram_lu.solve(system.transpose() * rhs);
      double residual = (system * coeff - rhs).norm();
      if (residual >= tolerance)
        throw std::domain_error("structure_constants: bracket [" + sc.labels[i] + "," +
                                sc.labels[j] + "] leaves the span (residual " +
                                std::to_string(residual) + ")");
      for (int k = 0; k < n; ++k) sc.at(i, j, k) = coeff(k);
    }
  }
  return sc;
}

inline double antisymmetry_defect(const StructureConstants& sc) {
  double worst = 0.0;
  for (int i = 0; i < sc.size; ++i)
    for (int j = 0; j < sc.size; ++j)
      for (int k = 0; k < sc.size; ++k)
        worst = std::max(worst, std::abs(sc.at(i, j, k) + sc.at(j, i, k)));
  return worst;
}

// max |sum_m (c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj)|
inline double jacobi_defect(const StructureConstants& sc) {
  double worst = 0.0;
  for (int i = 0; i < sc.size; ++i)
    for (int j = 0; j < sc.size; ++j)
      for (int k = 0; k < sc.size; ++k)
        for (int l = 0; l < sc.size; ++l) {
          double sum = 0.0;
          for (int m = 0; m < sc.size; ++m)
            sum += sc.at(i, j, m) * sc.at(m, k, l) + sc.at(j, k, m) * sc.at(m, i, l) +
                   sc.at(k, i, m) * sc.at(m, j, l);
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

struct SemidirectReport {
  // (a) translations form an abelian ideal
  double translation_bracket_deviation = 0.0;  // max |[T,T']| entry
  double ideal_residual = 0.0;                 // [linear, T] outside span{T}
  bool abelian_ideal_ok = false;
  // (b) rotations/boosts close among themselves
  double linear_residual = 0.0;
  bool linear_subalgebra_ok = false;
  // (c) no bracket leaves the full span
  double closure_residual = 0.0;
  bool closed_ok = false;

  bool pass = false;
};

// Checks the split of a labeled basis into a translation ideal and a
// rotation/boost subalgebra.  Never throws on a failed check; the report
// carries the verdicts.
inline SemidirectReport verify_semidirect_split(const std::vector<GeneratorMatrix>& basis,
                                                double tolerance = kClosureTolerance) {
  std::vector<GeneratorMatrix> translations;
  std::vector<GeneratorMatrix> linears;
  for (const auto& g : basis) {
    if (!g.label || g.label->family == Family::mixed)
      throw std::invalid_argument("verify_semidirect_split: basis must be labeled by family");
    if (g.label->family == Family::translation)
      translations.push_back(g);
    else
      linears.push_back(g);
  }

  SemidirectReport report;
  for (std::size_t i = 0; i < translations.size(); ++i)
    for (std::size_t j = i + 1; j < translations.size(); ++j)
      report.translation_bracket_deviation =
          std::max(report.translation_bracket_deviation,
                   matrix_bracket(translations[i], translations[j]).m.cwiseAbs().maxCoeff());
  for (const auto& r : linears)
    for (const auto& t : translations)
      report.ideal_residual = std::max(
          report.ideal_residual,
          expand_in_matrix_span(matrix_bracket(r, t).m, translations).residual);
  report.abelian_ideal_ok = report.translation_bracket_deviation <= tolerance &&
                            report.ideal_residual < tolerance;

  for (std::size_t i = 0; i < linears.size(); ++i)
    for (std::size_t j = i + 1; j < linears.size(); ++j)
      report.linear_residual = std::max(
          report.linear_residual,
          expand_in_matrix_span(matrix_bracket(linears[i], linears[j]).m, linears).residual);
  report.linear_subalgebra_ok = report.linear_residual < tolerance;

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      report.closure_residual = std::max(
          report.closure_residual,
          expand_in_matrix_span(matrix_bracket(basis[i], basis[j]).m, basis).residual);
  report.closed_ok = report.closure_residual < tolerance;

  report.pass = report.abelian_ideal_ok && report.linear_subalgebra_ok && report.closed_ok;
  return report;
}

}  // namespace isoforge
