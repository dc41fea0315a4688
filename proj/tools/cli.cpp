// Copyright 2026 The Triport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "triport/basis.hpp"
#include "triport/verify.hpp"

namespace triport::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Scheme parse_scheme(const std::string& s) {
  if (s == "epr3") return Scheme::epr3;
  if (s == "ghz2") return Scheme::ghz2;
  throw std::invalid_argument("unknown scheme '" + s + "' (epr3 or ghz2)");
}

NoiseKind parse_noise_kind(const std::string& s) {
  if (s == "none") return NoiseKind::none;
  if (s == "bitflip") return NoiseKind::bit_flip;
  if (s == "phaseflip") return NoiseKind::phase_flip;
  if (s == "depolarizing") return NoiseKind::depolarizing;
  throw std::invalid_argument("unknown noise kind '" + s +
                              "' (none, bitflip, phaseflip, depolarizing)");
}

std::string placement_str(const NoiseSpec& noise) {
  if (noise.is_none()) return "none";
  if (noise.placement == NoisePlacement::uniform_average) return "average";
  return "q" + std::to_string(noise.qubit);
}

/// "average" or "qN"; returns nullopt for "average".
std::optional<int> parse_placement(const std::string& s) {
  if (s == "average") return std::nullopt;
  if (s.size() >= 2 && s[0] == 'q') {
    const int qubit = std::stoi(s.substr(1));
    return qubit;
  }
  throw std::invalid_argument("placement must be 'average' or one of q2 q4 "
                              "q6 q7 q8 q9");
}

AverageMethod parse_method(const std::string& s) {
  if (s.rfind("quad", 0) == 0) {
    QuadratureMethod m;
    if (s.size() > 4) {
      if (s[4] != ':')
        throw std::invalid_argument("quadrature method is quad[:order]");
      m.order = std::stoi(s.substr(5));
    }
    return m;
  }
  if (s.rfind("mc:", 0) == 0) {
    const auto rest = s.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument(
          "monte carlo method needs an explicit seed: mc:samples:seed");
    MonteCarloMethod m;
    m.samples = std::stoll(rest.substr(0, colon));
    m.seed = std::stoull(rest.substr(colon + 1));
    return m;
  }
  throw std::invalid_argument("method must be quad[:order] or mc:samples:seed");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file " + path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_text_file(path, content);
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct TeleportArgs {
  std::string scheme = "epr3";
  std::string theta = "45deg";
  std::string phi = "45deg";
  std::string input;  // "theta0,phi_in"
  bool random_input = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string noise = "none";
  double p = 0.0;
  std::string placement = "q2";
  std::string json_path;
};

int cmd_teleport(const TeleportArgs& args) {
  SchemeConfig cfg{parse_scheme(args.scheme), parse_angle(args.theta),
                   parse_angle(args.phi)};
  InputState input = InputState::equal_superposition();
  if (!args.input.empty() && args.random_input)
    throw std::invalid_argument("--input and --random-input are exclusive");
  if (!args.input.empty()) {
    const auto comma = args.input.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--input needs 'theta0,phi_in'");
    input = InputState::from_angles(parse_angle(args.input.substr(0, comma)),
                                    parse_angle(args.input.substr(comma + 1)));
  } else if (args.random_input) {
    if (!args.seed_given)
      throw std::invalid_argument("--random-input needs --seed");
    std::mt19937_64 rng(args.seed);
    const double u = uniform_unit(rng);
    input = InputState::from_angles(0.5 * std::acos(1.0 - 2.0 * u),
                                    2.0 * kPi * uniform_unit(rng));
  }
  const NoiseKind kind = parse_noise_kind(args.noise);
  NoiseSpec noise = NoiseSpec::none();
  if (kind != NoiseKind::none) {
    const auto qubit = parse_placement(args.placement);
    if (!qubit)
      throw std::invalid_argument(
          "teleport needs a concrete placement (q2..q9); 'average' only "
          "applies to sweep and fidelity reports");
    noise = NoiseSpec::on_qubit(kind, args.p, *qubit);
  }
  const TeleportRun run = teleport(input, cfg, noise);
  std::cout << teleport_text(run);
  if (!args.json_path.empty())
    write_text_file(args.json_path, teleport_json(run));
  return 0;
}

struct SweepArgs {
  std::string scheme = "both";
  std::string noise = "none";
  std::string theta_grid = "45deg";
  std::string phi_grid = "45deg";
  std::string p_grid = "0";
  std::string placement = "average";
  std::string method = "quad:32";
  std::string output;
  bool delta_f_mode = false;
  bool table1_mode = false;
  bool theta_given = false;
  bool phi_given = false;
  bool p_given = false;
};

std::vector<Scheme> schemes_of(const std::string& s) {
  if (s == "both") return {Scheme::epr3, Scheme::ghz2};
  return {parse_scheme(s)};
}

std::vector<NoiseKind> noises_of(const std::string& s) {
  if (s == "all")
    return {NoiseKind::bit_flip, NoiseKind::phase_flip,
            NoiseKind::depolarizing};
  return {parse_noise_kind(s)};
}

int cmd_sweep_delta(const SweepArgs& args) {
  // Closed-form advantage map; defaults to a dense interior grid.
  const GridAxis dflt{(kPi / 2.0) / 202.0, 201.0 * (kPi / 2.0) / 202.0, 201};
  const GridAxis theta =
      args.theta_given ? parse_grid(args.theta_grid, true) : dflt;
  const GridAxis phi = args.phi_given ? parse_grid(args.phi_grid, true) : dflt;
  const NoiseKind kind = parse_noise_kind(args.noise);
  const GridAxis p_axis = parse_grid(args.p_grid, false);
  if (kind != NoiseKind::none && p_axis.count != 1)
    throw std::invalid_argument("--delta-f uses a single p value");
  const double p = kind == NoiseKind::none ? 0.0 : p_axis.min;
  std::vector<DeltaRow> rows;
  DeltaRow best;
  best.delta = -1.0;
  for (double t : theta.values()) {
    for (double f : phi.values()) {
      DeltaRow row{t, f, kind, p, delta_f(t, f, kind, p)};
      rows.push_back(row);
      if (row.delta > best.delta) best = row;
    }
  }
  emit(args.output, render_delta_csv(rows));
  const double s = std::sin(2.0 * best.theta) * std::sin(2.0 * best.phi);
  std::cout << "max_delta_f " << g12(best.delta) << " at theta "
            << g12(best.theta) << " phi " << g12(best.phi) << " (s "
            << g12(s) << ")\n";
  return 0;
}

int cmd_sweep_table1(const SweepArgs& args) {
  SweepSpec spec;
  spec.schemes = {Scheme::epr3, Scheme::ghz2};
  spec.noises = {NoiseKind::bit_flip, NoiseKind::phase_flip,
                 NoiseKind::depolarizing};
  spec.theta = GridAxis{kPi / 4.0, kPi / 4.0, 1};
  spec.phi = GridAxis{kPi / 4.0, kPi / 4.0, 1};
  spec.p = args.p_given ? parse_grid(args.p_grid, false)
                        : GridAxis{0.0, 0.25, 6};
  spec.placement = NoisePlacement::uniform_average;
  spec.method = parse_method(args.method);
  const std::vector<FidelityReport> reports = grid_sweep(spec);
  emit(args.output, render_sweep_csv(reports));
  // Fitted slope per (scheme, noise) block.
  const std::vector<double> ps = spec.p.values();
  std::size_t at = 0;
  for (Scheme scheme : spec.schemes) {
    for (NoiseKind kind : spec.noises) {
      std::vector<double> f;
      for (std::size_t i = 0; i < ps.size(); ++i)
        f.push_back(reports[at++].avg_fidelity_sim);
      std::cout << scheme_name(scheme) << " " << noise_name(kind)
                << " slope " << g12(lsq_slope(ps, f)) << "\n";
    }
  }
  return 0;
}

int cmd_sweep(const SweepArgs& args) {
  if (args.delta_f_mode) return cmd_sweep_delta(args);
  if (args.table1_mode) return cmd_sweep_table1(args);
  SweepSpec spec;
  spec.schemes = schemes_of(args.scheme);
  spec.noises = noises_of(args.noise);
  spec.theta = parse_grid(args.theta_grid, true);
  spec.phi = parse_grid(args.phi_grid, true);
  spec.p = parse_grid(args.p_grid, false);
  const auto qubit = parse_placement(args.placement);
  spec.placement =
      qubit ? NoisePlacement::qubit : NoisePlacement::uniform_average;
  if (qubit) spec.qubit = *qubit;
  spec.method = parse_method(args.method);
  emit(args.output, render_sweep_csv(grid_sweep(spec)));
  return 0;
}

struct BasisArgs {
  int num_qubits = 3;
  std::string phi = "45deg";
  std::string output;
};

int cmd_basis(const BasisArgs& args) {
  emit(args.output, render_basis_csv(args.num_qubits, parse_angle(args.phi)));
  return 0;
}

int cmd_verify(const std::string& only) {
  const auto results = verify::run_criteria(only);
  if (results.empty()) {
    std::cerr << "error: no criterion matches '" << only << "'\n";
    return 2;
  }
  std::cout << verify::format_report(results);
  return verify::count_failures(results) == 0 ? 0 : 1;
}

}  // namespace

double parse_angle(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty angle");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  }
  const std::string suffix = text.substr(used);
  if (suffix.empty() || suffix == "rad") return value;
  if (suffix == "deg") return value * kPi / 180.0;
  throw std::invalid_argument("angle suffix must be 'deg' or 'rad': '" +
                              text + "'");
}

GridAxis parse_grid(const std::string& text, bool angles) {
  const auto parse_value = [&](const std::string& s) {
    if (angles) return parse_angle(s);
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse grid value '" + s + "'");
    }
  };
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    const double v = parse_value(text);
    return GridAxis{v, v, 1};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("grid spec is 'lo:hi:count' or one value");
  GridAxis axis;
  axis.min = parse_value(text.substr(0, c1));
  axis.max = parse_value(text.substr(c1 + 1, c2 - c1 - 1));
  axis.count = std::stoi(text.substr(c2 + 1));
  if (axis.count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (axis.count > 1 && !(axis.max > axis.min))
    throw std::invalid_argument("grid needs max > min when count > 1");
  return axis;
}

std::string render_sweep_csv(std::span<const FidelityReport> reports) {
  std::string out =
      "scheme,theta,phi,noise,p,placement,avg_fidelity_sim,"
      "avg_fidelity_closed,abs_dev\n";
  for (const FidelityReport& r : reports) {
    out += scheme_name(r.config.scheme);
    out += ',';
    out += g12(r.config.theta);
    out += ',';
    out += g12(r.config.phi);
    out += ',';
    out += noise_name(r.noise.kind);
    out += ',';
    out += g12(r.noise.is_none() ? 0.0 : r.noise.p);
    out += ',';
    out += placement_str(r.noise);
    out += ',';
    out += g12(r.avg_fidelity_sim);
    out += ',';
    out += r.avg_fidelity_closed ? g12(*r.avg_fidelity_closed) : "";
    out += ',';
    out += r.abs_deviation ? g12(*r.abs_deviation) : "";
    out += '\n';
  }
  return out;
}

std::string render_delta_csv(std::span<const DeltaRow> rows) {
  std::string out = "theta,phi,noise,p,delta_f\n";
  for (const DeltaRow& r : rows) {
    out += g12(r.theta);
    out += ',';
    out += g12(r.phi);
    out += ',';
    out += noise_name(r.kind);
    out += ',';
    out += g12(r.p);
    out += ',';
    out += g12(r.delta);
    out += '\n';
  }
  return out;
}

std::string render_basis_csv(int num_qubits, double phi) {
  std::string out = "index,mu,lambda,element\n";
  const std::size_t count = std::size_t{1} << num_qubits;
  for (std::size_t e = 0; e < count; ++e) {
    const BasisLabel label = basis_label_from_index(num_qubits, phi, e);
    const StateVector v = basis_element(label);
    out += std::to_string(e);
    out += ',';
    out += std::to_string(label.mu);
    out += ',';
    for (int bit : label.lambda) out += static_cast<char>('0' + bit);
    out += ',';
    bool first = true;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      const double a = v[i].real();
      if (v[i] == Complex{}) continue;
      if (!first) out += ' ';
      out += a < 0 ? '-' : '+';
      out += g12(std::abs(a));
      out += '|';
      for (int s = 0; s < num_qubits; ++s)
        out += static_cast<char>('0' + bit_at(i, s, num_qubits));
      out += '>';
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string teleport_json(const TeleportRun& run) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["scheme"] = scheme_name(run.config.scheme);
  doc["theta"] = run.config.theta;
  doc["phi"] = run.config.phi;
  doc["input"] = {{"c0", {run.input.c0.real(), run.input.c0.imag()}},
                  {"c1", {run.input.c1.real(), run.input.c1.imag()}}};
  doc["noise"] = {{"kind", noise_name(run.noise.kind)},
                  {"p", run.noise.is_none() ? 0.0 : run.noise.p},
                  {"placement", placement_str(run.noise)}};
  doc["noise_budget"] = {
      {"p0", run.noise_budget.p0},
      {"p1", run.noise_budget.p1},
      {"p2", run.noise_budget.p2},
      {"single_error_dominant", run.noise_budget.single_error_dominant}};
  doc["total_fidelity"] = run.total_fidelity;
  doc["probability_sum"] = run.probability_sum;
  if (run.noise.is_none())
    doc["per_input_closed_fidelity"] = per_input_fidelity_closed(
        run.config.scheme, run.input, run.config.theta, run.config.phi);
  doc["outcomes"] = nlohmann::ordered_json::array();
  for (const OutcomeRecord& rec : run.outcomes) {
    nlohmann::ordered_json o;
    o["code"] = rec.outcome.code;
    o["bits"] = rec.outcome.bits();
    o["probability"] = rec.probability;
    if (rec.conditional_fidelity)
      o["conditional_fidelity"] = *rec.conditional_fidelity;
    else
      o["conditional_fidelity"] = nullptr;
    doc["outcomes"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

std::string teleport_text(const TeleportRun& run) {
  std::string out;
  out += "scheme " + std::string(scheme_name(run.config.scheme)) + "  theta " +
         g12(run.config.theta) + "  phi " + g12(run.config.phi) + "\n";
  out += "input c0 " + g12(run.input.c0.real()) +
         (run.input.c0.imag() < 0 ? "-" : "+") +
         g12(std::abs(run.input.c0.imag())) + "i  c1 " +
         g12(run.input.c1.real()) + (run.input.c1.imag() < 0 ? "-" : "+") +
         g12(std::abs(run.input.c1.imag())) + "i\n";
  out += "noise " + std::string(noise_name(run.noise.kind));
  if (!run.noise.is_none()) {
    out += " p " + g12(run.noise.p) + " on " + placement_str(run.noise);
    char budget[160];
    std::snprintf(budget, sizeof(budget),
                  "\nerror budget p0 %.6f  p1 %.6f  p2 %.6f%s",
                  run.noise_budget.p0, run.noise_budget.p1,
                  run.noise_budget.p2,
                  run.noise_budget.single_error_dominant
                      ? ""
                      : "  [warning: p >= 2/7, single-error regime invalid]");
    out += budget;
  }
  out += "\n";
  out += "code bits    probability     conditional_fidelity\n";
  for (const OutcomeRecord& rec : run.outcomes) {
    char line[120];
    if (rec.conditional_fidelity) {
      std::snprintf(line, sizeof(line), "%4d %s  %.12f  %.12f\n",
                    rec.outcome.code, rec.outcome.bits().c_str(),
                    rec.probability, *rec.conditional_fidelity);
    } else {
      std::snprintf(line, sizeof(line), "%4d %s  %.12f  -\n",
                    rec.outcome.code, rec.outcome.bits().c_str(),
                    rec.probability);
    }
    out += line;
  }
  char totals[160];
  std::snprintf(totals, sizeof(totals),
                "total fidelity %.6f\nprobability sum %.12f\n",
                run.total_fidelity, run.probability_sum);
  out += totals;
  if (run.noise.is_none()) {
    const double closed = per_input_fidelity_closed(
        run.config.scheme, run.input, run.config.theta, run.config.phi);
    out += "closed-form fidelity " + g12(closed) + "  abs dev " +
           g12(std::abs(run.total_fidelity - closed)) + "\n";
  }
  return out;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"triport: three-qubit teleportation fidelity engine"};
  app.require_subcommand(1);

  TeleportArgs tele_args;
  auto* tele = app.add_subcommand(
      "teleport", "run the protocol once and list every outcome record");
  tele->add_option("--scheme", tele_args.scheme, "epr3 or ghz2");
  tele->add_option("--theta", tele_args.theta, "channel angle (e.g. 30deg)");
  tele->add_option("--phi", tele_args.phi, "measurement basis angle");
  tele->add_option("--input", tele_args.input,
                   "input state as 'theta0,phi_in'");
  tele->add_flag("--random-input", tele_args.random_input,
                 "draw the input from the uniform state measure");
  auto* seed_opt =
      tele->add_option("--seed", tele_args.seed, "seed for --random-input");
  tele->add_option("--noise", tele_args.noise,
                   "none, bitflip, phaseflip or depolarizing");
  tele->add_option("--p", tele_args.p, "noise probability");
  tele->add_option("--placement", tele_args.placement,
                   "noisy channel qubit (q2 q4 q6 q7 q8 q9)");
  tele->add_option("--json", tele_args.json_path,
                   "also write the run as JSON to this file");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "average fidelities over parameter grids (CSV)");
  sweep->add_option("--scheme", sweep_args.scheme, "epr3, ghz2 or both");
  sweep->add_option("--noise", sweep_args.noise,
                    "none, bitflip, phaseflip, depolarizing or all");
  auto* tg = sweep->add_option("--theta-grid", sweep_args.theta_grid,
                               "lo:hi:count (angles)");
  auto* pg = sweep->add_option("--phi-grid", sweep_args.phi_grid,
                               "lo:hi:count (angles)");
  auto* pp = sweep->add_option("--p-grid", sweep_args.p_grid,
                               "lo:hi:count (probabilities)");
  sweep->add_option("--placement", sweep_args.placement,
                    "average or a concrete qubit q2..q9");
  sweep->add_option("--method", sweep_args.method,
                    "quad[:order] or mc:samples:seed");
  sweep->add_option("-o,--output", sweep_args.output, "CSV output file");
  sweep->add_flag("--delta-f", sweep_args.delta_f_mode,
                  "closed-form ghz2-epr3 advantage map");
  sweep->add_flag("--table1", sweep_args.table1_mode,
                  "fidelity-vs-p table at theta=phi=45deg with fitted slopes");

  BasisArgs basis_args;
  auto* basis = app.add_subcommand(
      "basis", "dump one entangled measurement basis as CSV");
  basis->add_option("--n", basis_args.num_qubits, "qubits per element")
      ->check(CLI::Range(2, 10));
  basis->add_option("--phi", basis_args.phi, "basis angle");
  basis->add_option("-o,--output", basis_args.output, "CSV output file");

  std::string only;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the reference battery and report pass/fail per criterion");
  verify_cmd->add_option("--only", only, "run criteria whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tele->parsed()) {
      tele_args.seed_given = seed_opt->count() > 0;
      return cmd_teleport(tele_args);
    }
    if (sweep->parsed()) {
      sweep_args.theta_given = tg->count() > 0;
      sweep_args.phi_given = pg->count() > 0;
      sweep_args.p_given = pp->count() > 0;
      return cmd_sweep(sweep_args);
    }
    if (basis->parsed()) return cmd_basis(basis_args);
    if (verify_cmd->parsed()) return cmd_verify(only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace triport::cli
