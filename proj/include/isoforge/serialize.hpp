#pragma once

#include "isoforge/flow.hpp"
#include "isoforge/json_writer.hpp"
#include "isoforge/lie_algebra.hpp"

namespace isoforge {

inline JsonValue to_json(const Vector& v) {
  JsonValue arr = JsonValue::array();
  for (int k = 0; k < v.size(); ++k) arr.push_back(v(k));
  return arr;
}

inline JsonValue to_json(const Matrix& m) {
  JsonValue rows = JsonValue::array();
  for (int r = 0; r < m.rows(); ++r) {
    JsonValue row = JsonValue::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline JsonValue to_json(const Signature& s) {
  return JsonValue::object().set("neg", s.negatives).set("pos", s.positives);
}

inline JsonValue metric_json(const FlatMetric& m) {
  return JsonValue::object().set("signature", to_json(m.signature));
}

inline JsonValue point_json(const FlatMetric& m, const Point& p) {
  return JsonValue::object()
      .set("signature", to_json(m.signature))
      .set("coords", to_json(p.coords))
      .set("lifted", p.lifted);
}

inline std::string field_label_string(const std::optional<Label>& label) {
  if (!label) return "mixed";
  switch (label->family) {
    case Family::translation: return "translation";
    case Family::rotation: return "rotation";
    case Family::boost: return "boost";
    default: return "mixed";
  }
}

inline JsonValue to_json(const AffineVectorField& f) {
  return JsonValue::object()
      .set("d", f.dim())
      .set("a", to_json(f.a))
      .set("omega", to_json(f.omega))
      .set("label", field_label_string(f.label));
}

inline JsonValue to_json(const GeneratorMatrix& g) {
  return JsonValue::object()
      .set("matrix", to_json(g.m))
      .set("lifted", g.lifted)
      .set("label", label_string(g))
      .set("metric", metric_json(g.metric));
}

inline JsonValue to_json(const GroupElement& e) {
  return JsonValue::object()
      .set("matrix", to_json(e.m))
      .set("lifted", e.lifted)
      .set("metric", metric_json(e.metric))
      .set("det", e.m.determinant());
}

inline JsonValue to_json(const StructureConstants& sc) {
  JsonValue labels = JsonValue::array();
  for (const auto& l : sc.labels) labels.push_back(l);
  JsonValue c = JsonValue::array();
  for (int i = 0; i < sc.size; ++i) {
    JsonValue plane = JsonValue::array();
    for (int j = 0; j < sc.size; ++j) {
      JsonValue row = JsonValue::array();
      for (int k = 0; k < sc.size; ++k) row.push_back(sc.at(i, j, k));
      plane.push_back(std::move(row));
    }
    c.push_back(std::move(plane));
  }
  return JsonValue::object().set("labels", std::move(labels)).set("c", std::move(c));
}

inline JsonValue to_json(const SemidirectReport& r) {
  return JsonValue::object()
      .set("translation_bracket_deviation", r.translation_bracket_deviation)
      .set("ideal_residual", r.ideal_residual)
      .set("abelian_ideal_ok", r.abelian_ideal_ok)
      .set("linear_residual", r.linear_residual)
      .set("linear_subalgebra_ok", r.linear_subalgebra_ok)
      .set("closure_residual", r.closure_residual)
      .set("closed_ok", r.closed_ok)
      .set("pass", r.pass);
}

inline JsonValue to_json(const MetricPreservationReport& r) {
  return JsonValue::object()
      .set("samples", r.samples)
      .set("seed", r.seed)
      .set("max_deviation", r.max_deviation)
      .set("scale", r.scale)
      .set("tolerance", r.tolerance)
      .set("pass", r.pass);
}

inline JsonValue to_json(const FlowReport& r) {
  return JsonValue::object()
      .set("label", r.label)
      .set("start", to_json(r.start.coords))
      .set("lifted", r.start.lifted)
      .set("t_final", r.t_final)
      .set("steps", r.steps)
      .set("max_deviation", r.max_deviation)
      .set("tolerance", r.tolerance)
      .set("pass", r.pass);
}

}  // namespace isoforge
