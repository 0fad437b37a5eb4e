#pragma once

#include "isoforge/group_exp.hpp"

#include <string>
#include <vector>

namespace isoforge {

struct FlowReport {
  std::string label;
  Point start;
  double t_final = 0.0;
  int steps = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Classical fixed-step RK4 on dx/dt = a + omega x.  Returns the whole
// trajectory including both endpoints.  Lifted starts integrate in lifted
// coordinates; the lift coordinate is checked every step so any non-affine
// contamination trips immediately.
inline std::vector<Point> integrate_flow(const AffineVectorField& f, const Point& p0,
                                         double t_final, int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_flow: steps must be >= 1");
  if (f.dim() != p0.dim())
    throw std::invalid_argument("integrate_flow: dimension mismatch");
  const int d = p0.dim();
  const double h = t_final / steps;
  std::vector<Point> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(p0);
  Vector x = p0.coords;
  Vector k1(d), k2(d), k3(d), k4(d), stage(d);
  for (int step = 0; step < steps; ++step) {
    k1.noalias() = f.omega * x;
    k1 += f.a;
    stage = x + (0.5 * h) * k1;
    k2.noalias() = f.omega * stage;
    k2 += f.a;
    stage = x + (0.5 * h) * k2;
    k3.noalias() = f.omega * stage;
    k3 += f.a;
    stage = x + h * k3;
    k4.noalias() = f.omega * stage;
    k4 += f.a;
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite())
      throw std::domain_error("integrate_flow: non-finite state (step too large?)");
    if (p0.lifted && std::abs(x(d - 1) - 1.0) > kLiftTolerance)
      throw std::domain_error("integrate_flow: lift coordinate drifted from 1");
    trajectory.push_back(Point{x, p0.lifted});
  }
  return trajectory;
}

// Integrates the generator's linear field with RK4 and measures the largest
// gap to the exponential action exp(t_k g) p0 along the trajectory.
inline FlowReport flow_compare(const GeneratorMatrix& g, const Point& p0, double t_final,
                               int steps, double tolerance_coefficient = 1e-7) {
  if (g.lifted != p0.lifted)
    throw std::invalid_argument("flow_compare: point must be lifted iff the generator is");
  if (g.dim() != p0.dim())
    throw std::invalid_argument("flow_compare: dimension mismatch");

  AffineVectorField field{Vector::Zero(g.dim()), g.m, g.label};
  std::vector<Point> trajectory = integrate_flow(field, p0, t_final, steps);

  GroupElement step = expm(g, t_final / steps);
  Vector reference = p0.coords;
  double max_deviation = 0.0;
  for (std::size_t k = 1; k < trajectory.size(); ++k) {
    reference = (step.m * reference).eval();
    max_deviation = std::max(max_deviation, (trajectory[k].coords - reference).norm());
  }

  FlowReport report;
  report.label = label_string(g);
  report.start = p0;
  report.t_final = t_final;
  report.steps = steps;
  report.max_deviation = max_deviation;
  report.tolerance = tolerance_coefficient * (1.0 + p0.coords.norm());
  report.pass = max_deviation < report.tolerance;
  return report;
}

}  // namespace isoforge
