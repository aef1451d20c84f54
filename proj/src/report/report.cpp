// Copyright 2026 The nmrsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmrsep/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "nmrsep/ensemble_engine.hpp"
#include "nmrsep/entanglement.hpp"
#include "nmrsep/errors.hpp"

namespace nmrsep {
namespace {

template <typename T>
Report optional_json(const std::optional<T>& v) {
  return v ? Report(*v) : Report(nullptr);
}

std::string basis_label(std::size_t k, std::size_t n_spins) {
  std::string s = "|";
  for (std::size_t j = 0; j < n_spins; ++j) s += ((k >> (n_spins - 1 - j)) & 1U) ? '1' : '0';
  return s + ">";
}

double pathway_tolerance(double molecule_count) { return 1e-10 * molecule_count; }

ThermalEnsemble make_ensemble(const RunConfig& cfg) {
  return ThermalEnsemble::boltzmann(SpinSystem::zeeman(cfg.larmor), cfg.temperature,
                                    cfg.molecule_count);
}

Report config_echo(const RunConfig& cfg, const std::optional<Circuit>& circuit) {
  Report j;
  j["n_spins"] = cfg.n_spins;
  j["larmor"] = cfg.larmor;
  j["temperature"] = cfg.temperature;
  j["molecule_count"] = cfg.molecule_count;
  j["circuit_path"] =
      cfg.circuit_path ? Report(cfg.circuit_path->generic_string()) : Report(nullptr);
  j["circuit"] = circuit ? Report(format_circuit(*circuit)) : Report(nullptr);
  j["gate_order"] = "first listed gate applied first; U = U_L ... U_2 U_1";
  j["observable"] = cfg.observable.to_string();
  const std::optional<Bipartition> cut = cfg.cut();
  j["bipartition"] = cut ? Report(cut->to_string()) : Report(nullptr);
  j["ball_radius"] = optional_json(cfg.ball_radius);
  j["seed"] = optional_json(cfg.seed);
  return j;
}

Report ensemble_section(const ThermalEnsemble& ens) {
  const EpsilonReport eps = epsilon_report(ens);
  Report j;
  j["delta_e"] = eps.delta_e;
  j["epsilon"] = eps.epsilon;
  j["max_population_spread"] = eps.max_population_spread;
  j["temperature"] = ens.temperature();
  j["molecule_count"] = ens.molecule_count();
  Report levels = Report::array();
  const std::vector<double> p = ens.probabilities();
  for (std::size_t k = 0; k < ens.dim(); ++k) {
    Report level;
    level["level"] = k;
    level["label"] = basis_label(k, ens.system().n_spins());
    level["energy"] = ens.system().level_energies()[k];
    level["population"] = ens.populations()[k];
    level["probability"] = p[k];
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  return j;
}

Report pathways_section(const PathwayResult& r, const ThermalEnsemble& ens,
                        const ObservableSpec& obs) {
  Report j;
  j["observable"] = obs.to_string();
  j["expectation_sum"] = r.expectation_sum;
  j["expectation_trace"] = r.expectation_trace;
  j["abs_difference"] = r.abs_difference;
  j["tolerance"] = pathway_tolerance(ens.molecule_count());
  j["agree"] = r.abs_difference <= pathway_tolerance(ens.molecule_count());
  j["per_state_values"] = r.per_state_values;
  return j;
}

Report entanglement_section(const ComplexMatrix& u, const Bipartition& cut) {
  Report j;
  j["bipartition"] = cut.to_string();
  j["measure"] = "entanglement entropy of the Schmidt spectrum, bits";
  j["schmidt_cutoff"] = tol::kSchmidtCutoff;
  const std::size_t n = cut.n_spins();
  Report levels = Report::array();
  std::size_t entangled = 0;
  double max_entropy = 0.0;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const StateVector psi = evolve_eigenstate(u, k);
    const EntanglementReport e = entanglement_report(psi, cut);
    Report level;
    level["level"] = k;
    level["initial_state"] = basis_label(k, n);
    level["schmidt_coefficients"] = e.schmidt_coefficients;
    level["entropy_bits"] = e.entropy_bits;
    level["schmidt_rank"] = e.schmidt_rank;
    level["is_product"] = e.is_product;
    level["fully_product"] = is_fully_product(psi);
    levels.push_back(std::move(level));
    if (!e.is_product) ++entangled;
    max_entropy = std::max(max_entropy, e.entropy_bits);
  }
  j["evolved_states"] = std::move(levels);
  j["entangled_count"] = entangled;
  j["max_entropy_bits"] = max_entropy;
  return j;
}

Report separability_json(const SeparabilityReport& s) {
  Report j;
  if (s.ppt) {
    j["min_pt_eigenvalue"] = s.ppt->min_pt_eigenvalue;
    j["negativity"] = s.ppt->negativity;
    j["ppt_holds"] = s.ppt->ppt_holds;
    j["ppt_criterion"] = ppt_strength_name(s.ppt->criterion);
  } else {
    j["min_pt_eigenvalue"] = nullptr;
    j["negativity"] = nullptr;
    j["ppt_holds"] = nullptr;
    j["ppt_criterion"] = nullptr;
  }
  j["frobenius_to_mixed"] = s.mixedness.frobenius_to_mixed;
  j["purity"] = s.mixedness.purity;
  j["ball_radius_used"] = optional_json(s.mixedness.ball_radius_used);
  j["within_ball"] = optional_json(s.mixedness.within_ball);
  return j;
}

Report separability_section(const DensityMatrix& before, const DensityMatrix& after,
                            const std::optional<Bipartition>& cut,
                            std::optional<double> ball_radius) {
  Report j;
  j["bipartition"] = cut ? Report(cut->to_string()) : Report(nullptr);
  j["before_evolution"] = separability_json(separability_report(before, cut, ball_radius));
  j["after_evolution"] = separability_json(separability_report(after, cut, ball_radius));
  return j;
}

// Fills pathways/entanglement/separability for one circuit.
void add_circuit_sections(Report& report, const RunConfig& cfg, const Circuit& circuit,
                          const ThermalEnsemble& ens) {
  const ComplexMatrix u = compose_propagator(circuit);
  const ComplexMatrix obs = cfg.observable.matrix(cfg.n_spins);
  const PathwayResult r = compare_pathways(u, ens, obs);
  report["pathways"] = pathways_section(r, ens, cfg.observable);

  const std::optional<Bipartition> cut = cfg.cut();
  report["entanglement"] = cut ? entanglement_section(u, *cut) : Report(nullptr);

  const DensityMatrix before = equilibrium_density_matrix(ens);
  report["separability"] =
      separability_section(before, before.conjugated_by(u), cut, cfg.ball_radius);
}

std::optional<Circuit> load_circuit(const RunConfig& cfg) {
  if (!cfg.circuit_path) return std::nullopt;
  return parse_circuit(read_text_file(*cfg.circuit_path), cfg.n_spins);
}

Report skeleton(const RunConfig& cfg, const std::optional<Circuit>& circuit,
                const ThermalEnsemble& ens) {
  Report report;
  report["config_echo"] = config_echo(cfg, circuit);
  report["ensemble"] = ensemble_section(ens);
  report["pathways"] = nullptr;
  report["entanglement"] = nullptr;
  report["separability"] = nullptr;
  report["sweep"] = nullptr;
  return report;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

Circuit random_circuit(std::mt19937_64& rng, std::size_t n_spins, std::size_t max_depth) {
  Circuit circuit(n_spins);
  if (max_depth == 0) return circuit;
  std::vector<GateKind> kinds;
  for (GateKind k : kAllGateKinds) {
    if (gate_arity(k) <= n_spins) kinds.push_back(k);
  }
  const std::size_t depth = 1 + static_cast<std::size_t>(rng() % max_depth);
  for (std::size_t d = 0; d < depth; ++d) {
    Gate g{kinds[static_cast<std::size_t>(rng() % kinds.size())]};
    g.targets[0] = 1 + static_cast<std::size_t>(rng() % n_spins);
    if (gate_arity(g.kind) == 2) {
      const std::size_t offset = 1 + static_cast<std::size_t>(rng() % (n_spins - 1));
      g.targets[1] = 1 + (g.targets[0] - 1 + offset) % n_spins;
    }
    if (is_rotation(g.kind)) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1p-53;
      g.angle = 2.0 * std::numbers::pi * unit;
    }
    circuit.append(g);
  }
  return circuit;
}

Report build_simulate_report(const RunConfig& cfg) {
  if (!cfg.circuit_path) throw ConfigError("simulate needs circuit_path in the config");
  const ThermalEnsemble ens = make_ensemble(cfg);
  const std::optional<Circuit> circuit = load_circuit(cfg);
  Report report = skeleton(cfg, circuit, ens);
  add_circuit_sections(report, cfg, *circuit, ens);
  return report;
}

Report build_sweep_report(const RunConfig& cfg, std::size_t n_circuits) {
  if (!cfg.seed) throw ConfigError("sweep needs a seed (config key 'seed' or --seed)");
  const ThermalEnsemble ens = make_ensemble(cfg);
  const std::optional<Circuit> circuit = load_circuit(cfg);
  Report report = skeleton(cfg, circuit, ens);
  if (circuit) add_circuit_sections(report, cfg, *circuit, ens);

  const ComplexMatrix obs = cfg.observable.matrix(cfg.n_spins);
  const double tolerance = pathway_tolerance(ens.molecule_count());
  std::mt19937_64 rng(*cfg.seed);
  Report cases = Report::array();
  double max_diff = 0.0;
  std::optional<std::size_t> worst;
  std::string worst_text;
  for (std::size_t i = 0; i < n_circuits; ++i) {
    const Circuit c = random_circuit(rng, cfg.n_spins);
    const PathwayResult r = compare_pathways(c, ens, obs);
    Report entry;
    entry["index"] = i;
    entry["depth"] = c.gates().size();
    entry["expectation_sum"] = r.expectation_sum;
    entry["expectation_trace"] = r.expectation_trace;
    entry["abs_difference"] = r.abs_difference;
    cases.push_back(std::move(entry));
    if (!worst || r.abs_difference > max_diff) {
      max_diff = r.abs_difference;
      worst = i;
      worst_text = format_circuit(c);
    }
  }

  Report sweep;
  sweep["seed"] = *cfg.seed;
  sweep["n_circuits"] = n_circuits;
  sweep["max_depth"] = kMaxSweepDepth;
  sweep["observable"] = cfg.observable.to_string();
  sweep["tolerance"] = tolerance;
  sweep["max_abs_difference"] = max_diff;
  sweep["passed"] = max_diff <= tolerance;
  if (worst) {
    sweep["worst_case"] = {{"index", *worst}, {"circuit", worst_text}};
  } else {
    sweep["worst_case"] = nullptr;
  }
  sweep["cases"] = std::move(cases);
  report["sweep"] = std::move(sweep);
  return report;
}

std::string render_report(const Report& report) { return report.dump(2) + "\n"; }

std::string render_summary(const Report& report) {
  std::ostringstream os;
  const Report& cfg = report["config_echo"];
  const Report& ens = report["ensemble"];
  const Report& path = report["pathways"];
  const Report& ent = report["entanglement"];
  const Report& sep = report["separability"];
  const Report& sweep = report["sweep"];

  os << "nmrsep summary\n";
  os << "molecule: " << cfg["n_spins"].get<std::size_t>() << " spins, M = "
     << format_double(cfg["molecule_count"].get<double>())
     << ", epsilon = dE/T = " << format_double(ens["epsilon"].get<double>()) << "\n";
  os << "observable: " << cfg["observable"].get<std::string>() << "\n";

  if (path.is_null()) {
    os << "pathways: n/a (no circuit)\n";
    os << "pathway agreement: n/a\n";
  } else {
    os << "sum over levels: " << format_double(path["expectation_sum"].get<double>())
       << "; ensemble trace: " << format_double(path["expectation_trace"].get<double>()) << "\n";
    os << "pathway agreement: delta = " << format_double(path["abs_difference"].get<double>())
       << " (tolerance " << format_double(path["tolerance"].get<double>()) << ", "
       << (path["agree"].get<bool>() ? "ok" : "FAIL") << ")\n";
  }

  bool entangled = false;
  if (ent.is_null()) {
    os << "per-molecule states entangled: n/a\n";
  } else {
    const auto count = ent["entangled_count"].get<std::size_t>();
    entangled = count > 0;
    os << "per-molecule states entangled: " << (entangled ? "yes" : "no") << " (" << count << "/"
       << ent["evolved_states"].size() << " evolved eigenstates, max entropy "
       << format_double(ent["max_entropy_bits"].get<double>()) << " bits across "
       << ent["bipartition"].get<std::string>() << ")\n";
  }

  bool separable = false;
  if (sep.is_null() || sep["after_evolution"]["ppt_holds"].is_null()) {
    os << "ensemble state PPT-separable: n/a\n";
  } else {
    const Report& after = sep["after_evolution"];
    separable = after["ppt_holds"].get<bool>();
    const bool exact = after["ppt_criterion"].get<std::string>() == "necessary_and_sufficient";
    os << "ensemble state PPT-separable: " << (separable ? "yes" : "no") << " (negativity "
       << format_double(after["negativity"].get<double>()) << ", PPT "
       << (exact ? "exact for two qubits" : "necessary condition only") << ")\n";
  }

  if (sep.is_null()) {
    os << "distance to I/K: n/a\n";
  } else {
    os << "distance to I/K: "
       << format_double(sep["after_evolution"]["frobenius_to_mixed"].get<double>())
       << ", purity " << format_double(sep["after_evolution"]["purity"].get<double>()) << "\n";
  }

  if (sweep.is_null()) {
    os << "sweep: not run\n";
  } else {
    os << "sweep: " << sweep["n_circuits"].get<std::size_t>() << " circuits, max delta = "
       << format_double(sweep["max_abs_difference"].get<double>()) << " ("
       << (sweep["passed"].get<bool>() ? "ok" : "FAIL") << ")\n";
  }

  if (entangled && separable) {
    os << "verdict: each molecule is entangled while the ensemble state is separable\n";
  } else if (entangled) {
    os << "verdict: molecules entangled; ensemble state not shown separable\n";
  } else {
    os << "verdict: no per-molecule entanglement across the chosen cut\n";
  }
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  out << text;
  if (!out) throw ConfigError("failed writing output file: " + path.string());
}

}  // namespace nmrsep
