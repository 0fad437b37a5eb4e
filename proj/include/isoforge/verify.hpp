#pragma once

#include "isoforge/flow.hpp"
#include "isoforge/lie_algebra.hpp"
#include "isoforge/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoforge {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifySettings {
  int n = 3;  // spatial dimension
  bool lorentzian = false;
  std::uint64_t seed = 0;
  std::optional<double> tolerance_override;  // replaces every inexact threshold
  int random_combinations = 20;
  int metric_parameter_draws = 10;  // random t values per generator
  int metric_samples = 20;          // point pairs per element
  int flow_steps = 10000;
};

// Deterministic batch of the library's property checks for one space.
// Exact checks use tolerance 0; sampled ones use the stated defaults unless
// overridden.
inline std::vector<CheckResult> run_verification_suite(const VerifySettings& s) {
  const FlatMetric metric =
      s.lorentzian ? lorentzian_metric(s.n) : euclidean_metric(s.n);
  const int d = metric.dim();
  auto tol = [&s](double fallback) {
    return s.tolerance_override.value_or(fallback);
  };

  std::vector<CheckResult> results;
  const std::vector<AffineVectorField> fields = enumerate_killing_basis(metric);
  const std::vector<GeneratorMatrix> natural = generator_basis(metric, BasisForm::natural);
  const std::vector<GeneratorMatrix> lifted = generator_basis(metric, BasisForm::lifted);

  {  // every enumerated field solves the Killing equation exactly
    CheckResult r{"killing_residuals", 0.0, tol(0.0), false};
    for (const auto& f : fields)
      r.deviation = std::max(r.deviation, killing_residual(f, metric).cwiseAbs().maxCoeff());
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // maximal count d(d+1)/2
    CheckResult r{"basis_count", 0.0, tol(0.0), false};
    r.deviation = std::abs(static_cast<double>(fields.size()) - d * (d + 1) / 2.0);
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // induce/extract round trips on the basis and random combinations
    CheckResult r{"round_trips", 0.0, tol(0.0), false};
    for (std::size_t k = 0; k < fields.size(); ++k) {
      GeneratorMatrix g = extract_generator(fields[k], metric);
      AffineVectorField back = induce_field(g);
      r.deviation = std::max(r.deviation, max_abs_diff(back.a, fields[k].a));
      r.deviation = std::max(r.deviation, max_abs_diff(back.omega, fields[k].omega));
      AffineVectorField induced = induce_field(natural[k]);
      GeneratorMatrix round = extract_generator(induced, metric);
      r.deviation = std::max(r.deviation, round.lifted == natural[k].lifted
                                              ? max_abs_diff(round.m, natural[k].m)
                                              : 1.0);
    }
    Rng rng(s.seed + 1);
    for (int trial = 0; trial < s.random_combinations; ++trial) {
      AffineVectorField f = zero_field(d);
      for (const auto& basis_field : fields) {
        const double c = rng.uniform(-2.0, 2.0);
        f.a += c * basis_field.a;
        f.omega += c * basis_field.omega;
      }
      AffineVectorField back = induce_field(extract_generator(f, metric));
      r.deviation = std::max(r.deviation, max_abs_diff(back.a, f.a));
      r.deviation = std::max(r.deviation, max_abs_diff(back.omega, f.omega));
    }
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // g^T eta + eta g = 0 for the unlifted constructors
    CheckResult r{"metric_antisymmetry", 0.0, tol(0.0), false};
    for (const auto& g : natural)
      if (!g.lifted) r.deviation = std::max(r.deviation, metric_antisymmetry_defect(g));
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // brackets of the lifted basis close over it
    CheckResult r{"closure", 0.0, tol(kClosureTolerance), false};
    for (std::size_t i = 0; i < lifted.size(); ++i)
      for (std::size_t j = i + 1; j < lifted.size(); ++j)
        r.deviation = std::max(
            r.deviation,
            expand_in_matrix_span(matrix_bracket(lifted[i], lifted[j]).m, lifted).residual);
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // translation ideal + rotation/boost subalgebra
    CheckResult r{"semidirect_split", 0.0, tol(kClosureTolerance), false};
    SemidirectReport report = verify_semidirect_split(lifted, r.tolerance);
    r.deviation = std::max({report.translation_bracket_deviation, report.ideal_residual,
                            report.linear_residual, report.closure_residual});
    r.pass = report.pass;
    results.push_back(r);
  }

  {  // sampled isometry check of exp(tg); deviations are scale-normalized
    CheckResult r{"metric_preservation", 0.0, tol(1e-9), false};
    Rng rng(s.seed + 2);
    for (const auto& g : natural) {
      for (int draw = 0; draw < s.metric_parameter_draws; ++draw) {
        const double t = rng.uniform(-10.0, 10.0);
        GroupElement e = expm(g, t);
        MetricPreservationReport rep =
            preserves_metric(e, s.metric_samples, s.seed + 100 + draw, r.tolerance);
        r.deviation = std::max(r.deviation, rep.max_deviation / rep.scale);
      }
    }
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  {  // RK4 flow of each generator tracks its exponential action
    CheckResult r{"flow_comparison", 0.0, tol(1e-7), false};
    Rng rng(s.seed + 3);
    for (const auto& g : natural) {
      Point start{rng.uniform_vector(metric.dim(), -1.0, 1.0), false};
      Point p0 = g.lifted ? lift_point(start) : start;
      FlowReport rep = flow_compare(g, p0, 1.0, s.flow_steps, r.tolerance);
      r.deviation =
          std::max(r.deviation, rep.max_deviation / (1.0 + p0.coords.norm()));
    }
    r.pass = r.deviation <= r.tolerance;
    results.push_back(r);
  }

  return results;
}

}  // namespace isoforge
