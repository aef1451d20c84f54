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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.
//
// Usage: acceptance [path-to-nmrsep-binary] [configs-dir]
// Without the binary path the determinism criterion runs in-process only.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "nmrsep/circuit.hpp"
#include "nmrsep/ensemble_engine.hpp"
#include "nmrsep/entanglement.hpp"
#include "nmrsep/errors.hpp"
#include "nmrsep/qlinalg/ops.hpp"
#include "nmrsep/qlinalg/spectral.hpp"
#include "nmrsep/report.hpp"
#include "nmrsep/run_config.hpp"
#include "nmrsep/spin_system.hpp"
#include "test_util.hpp"

using namespace nmrsep;
using namespace nmrsep::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Runs `body`, checks the time budget, prints the verdict line.
bool criterion(const std::string& id, const std::string& title, double budget_s,
               const std::function<Outcome()>& body) {
  const Clock::time_point start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= budget_s) {
    out.passed = false;
    out.detail += "; over time budget " + fmt(budget_s) + " s";
  }
  std::cout << (out.passed ? "[PASS] " : "[FAIL] ") << id << " " << title << " -- " << out.detail
            << " (" << fmt(elapsed) << " s)\n";
  return out.passed;
}

std::vector<double> random_larmor(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.2, 2.0);
  std::vector<double> larmor(n);
  for (double& x : larmor) x = w(rng);
  return larmor;
}

// ---- AC1 ----

Outcome pathway_equivalence() {
  Rng rng(1001);
  std::mt19937_64 crng(1002);
  std::uniform_real_distribution<double> log_eps(-6.0, 0.0);
  std::uniform_real_distribution<double> log_m(0.0, 23.0);
  double worst = 0.0;
  std::size_t evaluations = 0;
  bool ok = true;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const SpinSystem s = SpinSystem::zeeman(random_larmor(rng, n));
    const double eps = std::pow(10.0, log_eps(rng));
    const double m = std::pow(10.0, log_m(rng));
    const ThermalEnsemble ens = ThermalEnsemble::boltzmann(s, s.delta_e() / eps, m);
    const Circuit c = random_circuit(crng, n);
    for (Axis a : {Axis::kX, Axis::kY, Axis::kZ}) {
      const PathwayResult r = compare_pathways(c, ens, collective_observable(n, a));
      ++evaluations;
      worst = std::max(worst, r.abs_difference / m);
      if (!(r.abs_difference <= 1e-10 * m)) ok = false;
    }
  }
  return {ok, std::to_string(evaluations) + " evaluations, max |sum - trace|/M = " + fmt(worst) +
                  " (limit 1e-10)"};
}

// ---- AC2 ----

Outcome headline() {
  const SpinSystem s = SpinSystem::zeeman(std::vector<double>{1.0, 1.0});
  const ThermalEnsemble ens = ThermalEnsemble::boltzmann(s, s.delta_e() / 1e-5, 1e20);
  const double eps = epsilon_report(ens).epsilon;
  const ComplexMatrix u = compose_propagator(parse_circuit("H 1\nCNOT 1 2", 2));
  const Bipartition cut = Bipartition::parse("1|2", 2);
  bool ok = std::abs(eps - 1e-5) <= 1e-18;
  double worst_entropy_err = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double e = entanglement_entropy(evolve_eigenstate(u, k), cut);
    worst_entropy_err = std::max(worst_entropy_err, std::abs(e - 1.0));
  }
  ok = ok && worst_entropy_err <= 1e-9;
  const DensityMatrix evolved = equilibrium_density_matrix(ens).conjugated_by(u);
  const PptReport ppt = ppt_report(evolved, cut);
  const double dist = mixedness_report(evolved, std::nullopt).frobenius_to_mixed;
  ok = ok && ppt.ppt_holds && ppt.negativity == 0.0 &&
       ppt.criterion == PptStrength::kNecessaryAndSufficient && dist <= 2e-5;
  return {ok, "eps = " + fmt(eps) + ", max |S_k - 1| = " + fmt(worst_entropy_err) +
                  " bits, negativity = " + fmt(ppt.negativity) + ", PPT " +
                  (ppt.ppt_holds ? "holds" : "fails") + ", ||rho - I/4||_F = " + fmt(dist)};
}

// ---- AC3 ----

Outcome thermal_limit() {
  const SpinSystem s = SpinSystem::zeeman(std::vector<double>{1.0, 0.7});
  const ComplexMatrix mixed = DensityMatrix::maximally_mixed(4).matrix();
  bool ok = true;
  double previous_spread = INFINITY;
  std::ostringstream detail;
  detail << "T/dE, max|P-1/K|, dist/eps:";
  for (int decade = 0; decade <= 4; ++decade) {
    const double t = s.delta_e() * std::pow(10.0, decade);
    const ThermalEnsemble ens = ThermalEnsemble::boltzmann(s, t, 1.0);
    const double eps = epsilon_report(ens).epsilon;
    double spread = 0.0;
    for (double p : ens.probabilities()) spread = std::max(spread, std::abs(p - 0.25));
    const double dist = frobenius_distance(equilibrium_density_matrix(ens).matrix(), mixed);
    if (!(spread < previous_spread)) ok = false;
    if (!(dist <= 2.0 * eps)) ok = false;
    previous_spread = spread;
    detail << " 1e" << decade << "," << fmt(spread) << "," << fmt(dist / eps);
  }
  return {ok, detail.str()};
}

// ---- AC4 ----

Outcome equilibrium_null() {
  Rng rng(1004);
  std::uniform_real_distribution<double> log_t(-2.0, 6.0);
  std::uniform_real_distribution<double> log_m(0.0, 23.0);
  double worst = 0.0;
  bool ok = true;
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const double m = std::pow(10.0, log_m(rng));
    const ThermalEnsemble ens = ThermalEnsemble::boltzmann(
        SpinSystem::zeeman(random_larmor(rng, n)), std::pow(10.0, log_t(rng)), m);
    for (Axis a : {Axis::kX, Axis::kY}) {
      const PathwayResult r = compare_pathways(Circuit(n), ens, collective_observable(n, a));
      const double e = std::max(std::abs(r.expectation_sum), std::abs(r.expectation_trace)) / m;
      worst = std::max(worst, e);
      if (!(e <= 1e-12)) ok = false;
      ++cases;
    }
  }
  return {ok, std::to_string(cases) + " cases, max |<J>|/M = " + fmt(worst) + " (limit 1e-12)"};
}

// ---- AC5 ----

// Each suite returns the number of failing cases; all run >= 100 seeded cases.
struct Suite {
  std::string name;
  std::function<int(int)> run;
};

int validation_suite(int cases) {
  Rng rng(2001);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const std::size_t dim = std::size_t{1} << n;
    std::mt19937_64 crng(rng());
    const ComplexMatrix u = compose_propagator(random_circuit(crng, n));
    if (u.unitarity_error() > tol::kValidation) ++bad;
    const StateVector psi = apply(u, random_state(rng, dim));
    if (std::abs(psi.norm_squared() - 1.0) > tol::kValidation) ++bad;
    const ComplexMatrix h = random_hermitian(rng, dim);
    if (h.hermiticity_error() > tol::kEquality) ++bad;
    // Corruptions must be rejected.
    ComplexMatrix skewed = u;
    skewed(0, 0) += 1e-6;
    bool rejected = false;
    try {
      ComplexMatrix::unitary(skewed);
    } catch (const ValidationError&) {
      rejected = true;
    }
    ComplexMatrix non_herm = h;
    non_herm(0, dim - 1) += Complex(0.0, 1e-6);
    if (dim == 1) non_herm(0, 0) += Complex(0.0, 1e-6);
    try {
      hermitian_eigenvalues(non_herm);
      rejected = false;
    } catch (const ValidationError&) {
    }
    std::vector<Complex> unnormalized(psi.amplitudes().begin(), psi.amplitudes().end());
    for (Complex& a : unnormalized) a *= 1.0 + 1e-6;
    try {
      StateVector tmp(unnormalized);
      rejected = false;
    } catch (const ValidationError&) {
    }
    if (!rejected) ++bad;
  }
  return bad;
}

int associativity_suite(int cases) {
  Rng rng(2002);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const ComplexMatrix a = random_matrix(rng, 1 + rng() % 4);
    const ComplexMatrix b = random_matrix(rng, 1 + rng() % 4);
    const ComplexMatrix c = random_matrix(rng, 1 + rng() % 4);
    if (tensor_product(tensor_product(a, b), c).max_abs_diff(tensor_product(a, tensor_product(b, c))) >
        1e-12) {
      ++bad;
    }
  }
  return bad;
}

int local_unitary_suite(int cases) {
  Rng rng(2003);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const std::size_t na = 1 + static_cast<std::size_t>(i % 2);
    const std::size_t nb = 1 + static_cast<std::size_t>((i / 2) % 3);
    const std::size_t da = std::size_t{1} << na;
    const std::size_t db = std::size_t{1} << nb;
    std::vector<std::size_t> left(na);
    std::iota(left.begin(), left.end(), 1);
    const Bipartition cut(na + nb, left);
    const StateVector psi = random_state(rng, da * db);
    const ComplexMatrix u = tensor_product(random_unitary(rng, da), random_unitary(rng, db));
    if (std::abs(entanglement_entropy(apply(u, psi), cut) - entanglement_entropy(psi, cut)) > 1e-10) {
      ++bad;
    }
  }
  return bad;
}

int negativity_ppt_suite(int cases) {
  Rng rng(2004);
  std::uniform_real_distribution<double> mix(0.0, 1.0);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const std::size_t dim = std::size_t{1} << n;
    const double p = mix(rng);
    const ComplexMatrix rho = random_state(rng, dim).projector() * Complex(p) +
                              DensityMatrix::maximally_mixed(dim).matrix() * Complex(1.0 - p);
    const std::vector<Bipartition> cuts = Bipartition::all_cuts(n);
    const PptReport r = ppt_report(DensityMatrix(rho), cuts[rng() % cuts.size()]);
    const bool negative = r.negativity > static_cast<double>(dim) * tol::kValidation;
    if (negative == r.ppt_holds) ++bad;
    // Product inputs always have zero negativity.
    const ComplexMatrix prod = tensor_product(random_density(rng, 2), random_density(rng, dim / 2));
    const PptReport q = ppt_report(DensityMatrix(prod), Bipartition(n, {1}));
    if (!q.ppt_holds || q.negativity > static_cast<double>(dim) * tol::kValidation) ++bad;
  }
  return bad;
}

int schmidt_normalization_suite(int cases) {
  Rng rng(2005);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const StateVector psi = random_state(rng, std::size_t{1} << n);
    const std::vector<Bipartition> cuts = Bipartition::all_cuts(n);
    const std::vector<double> s = schmidt_coefficients(psi, cuts[rng() % cuts.size()]);
    double sum = 0.0;
    for (double x : s) sum += x * x;
    if (std::abs(sum - 1.0) > tol::kValidation) ++bad;
  }
  return bad;
}

Outcome invariant_suites() {
  const std::vector<Suite> suites = {
      {"validation", validation_suite},
      {"tensor-associativity", associativity_suite},
      {"local-unitary-entropy", local_unitary_suite},
      {"negativity-ppt", negativity_ppt_suite},
      {"schmidt-normalization", schmidt_normalization_suite},
  };
  constexpr int kCases = 200;
  bool ok = true;
  std::ostringstream detail;
  for (const Suite& s : suites) {
    const int bad = s.run(kCases);
    if (bad != 0) ok = false;
    detail << s.name << " " << (kCases - bad) << "/" << kCases << "; ";
  }
  std::string d = detail.str();
  d.resize(d.size() - 2);
  return {ok, d};
}

// ---- AC6 ----

std::string run_cli_sweep(const std::string& binary, const fs::path& config, const fs::path& out) {
  const std::string cmd = "'" + binary + "' sweep --config '" + config.string() +
                          "' --n 40 --output '" + out.string() + "'";
  if (std::system(cmd.c_str()) != 0) throw std::runtime_error("command failed: " + cmd);
  return read_text_file(out);
}

Outcome determinism(const std::optional<std::string>& binary) {
  const fs::path dir =
      fs::temp_directory_path() / ("nmrsep_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path config = dir / "sweep.ini";
  write_text_file(config,
                  "n_spins = 3\nlarmor = 1.0, 0.8, 0.6\ntemperature = 1e4\n"
                  "molecule_count = 1e20\nobservable = y\nseed = 2026\n");
  Outcome out;
  try {
    const RunConfig cfg = load_config(config);
    const std::string a = render_report(build_sweep_report(cfg, 40));
    const std::string b = render_report(build_sweep_report(cfg, 40));
    out.passed = a == b;
    out.detail = "in-process reports " + std::string(a == b ? "identical" : "DIFFER") + " (" +
                 std::to_string(a.size()) + " bytes)";
    if (binary) {
      const std::string x = run_cli_sweep(*binary, config, dir / "a.json");
      const std::string y = run_cli_sweep(*binary, config, dir / "b.json");
      out.passed = out.passed && x == y && x == a;
      out.detail += "; CLI sweep runs " + std::string(x == y ? "byte-identical" : "DIFFER");
    } else {
      out.detail += "; CLI not given, skipped";
    }
  } catch (...) {
    fs::remove_all(dir);
    throw;
  }
  fs::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::string> binary;
  if (argc > 1) binary = argv[1];

  bool all = true;
  all &= criterion("AC1", "pathway equivalence over 200 random circuits", 30.0, pathway_equivalence);
  all &= criterion("AC2", "Bell circuit: entangled molecules, separable ensemble", 1.0, headline);
  all &= criterion("AC3", "thermal limit approaches I/K", 5.0, thermal_limit);
  all &= criterion("AC4", "identity circuit gives null transverse readout", 5.0, equilibrium_null);
  all &= criterion("AC5", "invariant suites", 60.0, invariant_suites);
  all &= criterion("AC6", "sweep determinism", 30.0, [&] { return determinism(binary); });
  std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILED\n");
  return all ? 0 : 1;
}
