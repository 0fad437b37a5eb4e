// Command-line front door: generator bases, verification batches, matrix
// exponentials and flow trajectories, all as JSON on stdout or --out.

#include "isoforge/isoforge.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace isoforge;

struct Config {
  int dim = 3;  // spatial dimension n
  std::string signature = "euclidean";
  std::uint64_t seed = 42;
  std::optional<double> tolerance;
  std::string out_path;
};

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--dim", cfg.dim, "Spatial dimension n (n >= 2)");
  cmd->add_option("--signature", cfg.signature, "euclidean | lorentz")
      ->check(CLI::IsMember({"euclidean", "lorentz"}));
  cmd->add_option("--seed", cfg.seed, "Seed for sampled checks")
      ->envname("ISOFORGE_SEED");
  cmd->add_option("--tolerance", cfg.tolerance,
                  "Override the thresholds of the inexact checks");
  cmd->add_option("--out", cfg.out_path, "Write the document here instead of stdout");
}

FlatMetric config_metric(const Config& cfg) {
  if (cfg.dim < 2)
    throw std::invalid_argument("--dim must be at least 2");
  return cfg.signature == "lorentz" ? lorentzian_metric(cfg.dim)
                                    : euclidean_metric(cfg.dim);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  file << text;
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    values.push_back(std::stod(item, &used));
    if (used != item.size())
      throw std::invalid_argument("bad coordinate list: " + text);
  }
  if (values.empty()) throw std::invalid_argument("empty coordinate list");
  return values;
}

// rot:i,j | trans:i | boost:i | lrot:i,j | strans:mu
GeneratorMatrix generator_from_label(const std::string& label, const Config& cfg) {
  const auto colon = label.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown generator label: " + label);
  const std::string kind = label.substr(0, colon);
  std::vector<int> idx;
  {
    std::stringstream stream(label.substr(colon + 1));
    std::string item;
    while (std::getline(stream, item, ',')) idx.push_back(std::stoi(item));
  }
  const int n = cfg.dim;
  auto need = [&](std::size_t count, bool lorentz) {
    if (idx.size() != count)
      throw std::invalid_argument("bad index count in label: " + label);
    const std::string expected = lorentz ? "lorentz" : "euclidean";
    if (cfg.signature != expected)
      throw std::invalid_argument("label " + label + " needs --signature " + expected);
  };
  if (kind == "rot") {
    need(2, false);
    return rotation_generator(idx[0], idx[1], n);
  }
  if (kind == "trans") {
    need(1, false);
    return translation_generator(idx[0], n);
  }
  if (kind == "boost") {
    need(1, true);
    return boost_generator(idx[0], n);
  }
  if (kind == "lrot") {
    need(2, true);
    return lorentz_rotation_generator(idx[0], idx[1], n);
  }
  if (kind == "strans") {
    need(1, true);
    return poincare_translation_generator(idx[0], n);
  }
  throw std::invalid_argument("unknown generator label: " + label);
}

JsonValue config_json(const Config& cfg) {
  JsonValue obj = JsonValue::object();
  obj.set("dim", cfg.dim).set("signature", cfg.signature).set("seed", cfg.seed);
  if (cfg.tolerance)
    obj.set("tolerance", *cfg.tolerance);
  else
    obj.set("tolerance", nullptr);
  return obj;
}

int cmd_generators(const Config& cfg) {
  const FlatMetric metric = config_metric(cfg);
  const auto fields = enumerate_killing_basis(metric);
  const auto generators = generator_basis(metric, BasisForm::natural);

  JsonValue entries = JsonValue::array();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const GeneratorMatrix& g = generators[k];
    const AffineVectorField induced = induce_field(g);
    const GeneratorMatrix round = extract_generator(induced, metric);
    const bool round_trip = exact_equal(round, g) && exact_equal(induced, fields[k]);
    entries.push_back(JsonValue::object()
                          .set("generator", to_json(g))
                          .set("field", to_json(fields[k]))
                          .set("round_trip_exact", round_trip));
  }

  JsonValue doc = JsonValue::object();
  doc.set("version", 1)
      .set("command", "generators")
      .set("config", config_json(cfg))
      .set("metric", metric_json(metric))
      .set("count", static_cast<int>(generators.size()))
      .set("generators", std::move(entries));
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Config& cfg) {
  config_metric(cfg);  // validates dim/signature
  VerifySettings settings;
  settings.n = cfg.dim;
  settings.lorentzian = cfg.signature == "lorentz";
  settings.seed = cfg.seed;
  settings.tolerance_override = cfg.tolerance;

  const std::vector<CheckResult> checks = run_verification_suite(settings);
  bool all_pass = true;
  JsonValue list = JsonValue::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    list.push_back(JsonValue::object()
                       .set("name", c.name)
                       .set("deviation", c.deviation)
                       .set("tolerance", c.tolerance)
                       .set("pass", c.pass));
  }

  JsonValue doc = JsonValue::object();
  doc.set("version", 1)
      .set("command", "verify")
      .set("config", config_json(cfg))
      .set("checks", std::move(list))
      .set("all_pass", all_pass);
  emit(cfg, doc.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

int cmd_exp(const Config& cfg, const std::string& label, double t,
            const std::string& apply_coords) {
  config_metric(cfg);
  const GeneratorMatrix g = generator_from_label(label, cfg);
  const GroupElement element = expm(g, t);

  JsonValue doc = JsonValue::object();
  doc.set("version", 1)
      .set("command", "exp")
      .set("config", config_json(cfg))
      .set("generator", to_json(g))
      .set("t", t);
  doc.set("element", to_json(element));
  if (!apply_coords.empty()) {
    const std::vector<double> values = parse_coords(apply_coords);
    Vector coords(static_cast<int>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k)
      coords(static_cast<int>(k)) = values[k];
    const Point image = apply(element, Point{coords, false});
    doc.set("image", point_json(g.metric, image));
  }
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

int cmd_structure_constants(const Config& cfg) {
  const FlatMetric metric = config_metric(cfg);
  const auto basis = generator_basis(metric, BasisForm::lifted);
  const StructureConstants sc =
      structure_constants(basis, cfg.tolerance.value_or(kClosureTolerance));
  const SemidirectReport split =
      verify_semidirect_split(basis, cfg.tolerance.value_or(kClosureTolerance));

  JsonValue doc = JsonValue::object();
  doc.set("version", 1)
      .set("command", "structure-constants")
      .set("config", config_json(cfg))
      .set("structure_constants", to_json(sc))
      .set("semidirect", to_json(split));
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

int cmd_flow(const Config& cfg, const std::string& label, const std::string& start,
             double t_final, int steps, int stride) {
  config_metric(cfg);
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (stride < 1) throw std::invalid_argument("--stride must be >= 1");
  const GeneratorMatrix g = generator_from_label(label, cfg);

  const std::vector<double> values = parse_coords(start);
  if (static_cast<int>(values.size()) != g.metric.dim())
    throw std::invalid_argument("--start needs " + std::to_string(g.metric.dim()) +
                                " coordinates");
  Vector coords(static_cast<int>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k)
    coords(static_cast<int>(k)) = values[k];
  Point p0{coords, false};
  if (g.lifted) p0 = lift_point(p0);

  AffineVectorField field{Vector::Zero(g.dim()), g.m, g.label};
  const std::vector<Point> trajectory = integrate_flow(field, p0, t_final, steps);

  std::string out;
  const double h = t_final / steps;
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (k % static_cast<std::size_t>(stride) != 0 && k + 1 != trajectory.size())
      continue;
    JsonValue line = JsonValue::object();
    line.set("t", static_cast<double>(k) * h)
        .set("x", to_json(trajectory[k].coords));
    out += line.dump(0) + "\n";
  }
  emit(cfg, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Killing fields, isometry generators and their groups on flat spaces"};
  app.require_subcommand(1);

  Config cfg;

  CLI::App* generators = app.add_subcommand(
      "generators", "Emit the labeled generator basis with matching Killing fields");
  add_common_options(generators, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the property suite; exit 0 iff every check passes");
  add_common_options(verify, cfg);

  std::string exp_label;
  double exp_t = 0.0;
  std::string exp_apply;
  CLI::App* exp_cmd = app.add_subcommand("exp", "Exponentiate a labeled generator");
  add_common_options(exp_cmd, cfg);
  exp_cmd->add_option("--generator", exp_label, "rot:i,j | trans:i | boost:i | lrot:i,j | strans:mu")
      ->required();
  exp_cmd->add_option("--t", exp_t, "Group parameter")->required();
  exp_cmd->add_option("--apply", exp_apply, "Comma-separated point to transform");

  CLI::App* sc_cmd = app.add_subcommand(
      "structure-constants", "Structure constants and semidirect split of the algebra");
  add_common_options(sc_cmd, cfg);

  std::string flow_label;
  std::string flow_start;
  double flow_t_final = 1.0;
  int flow_steps = 1000;
  int flow_stride = 1;
  CLI::App* flow_cmd =
      app.add_subcommand("flow", "Integrate a generator flow; JSON lines output");
  add_common_options(flow_cmd, cfg);
  flow_cmd->add_option("--generator", flow_label, "Generator label")->required();
  flow_cmd->add_option("--start", flow_start, "Comma-separated start point")->required();
  flow_cmd->add_option("--t-final", flow_t_final, "Integration time");
  flow_cmd->add_option("--steps", flow_steps, "RK4 step count");
  flow_cmd->add_option("--stride", flow_stride, "Keep every k-th trajectory line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generators->parsed()) return cmd_generators(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (exp_cmd->parsed()) return cmd_exp(cfg, exp_label, exp_t, exp_apply);
    if (sc_cmd->parsed()) return cmd_structure_constants(cfg);
    if (flow_cmd->parsed())
      return cmd_flow(cfg, flow_label, flow_start, flow_t_final, flow_steps, flow_stride);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
