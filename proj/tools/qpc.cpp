// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qpc: quasi-pure concurrence estimates from the command line.
//
//   qpc qpa <file> [--format human|csv]
//   qpc horodecki --a-min F --a-max F --steps N --out FILE
//   qpc simulate [--config FILE] [--d1 N ...] --out FILE
//   qpc oracle <file> [--restarts N --iterations N --seed N]
//
// Exit codes: 0 success, 2 unreadable or malformed input, 3 a state or
// config violating an invariant, 4 bad command-line flags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpc/concurrence.hpp"
#include "qpc/errors.hpp"
#include "qpc/io.hpp"
#include "qpc/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitFlags = 4;

using qpc::io::format_double;

std::string join_lambdas(const qpc::RealVector& lambdas, char sep) {
  std::string out;
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
    if (i > 0) out += sep;
    out += format_double(lambdas(i));
  }
  return out;
}

// Writes to `path`, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qpc::Error(qpc::ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

int run_qpa(const std::string& path, const std::string& format, const qpc::Tolerances& tol) {
  const qpc::DensityMatrix rho = qpc::io::read_state_file(path, tol);
  const qpc::QpaResult r = qpc::qp_concurrence(rho, tol);
  const double entropy = qpc::von_neumann_entropy(rho, tol);
  if (format == "csv") {
    std::cout << "c_qp,mu1,entropy,truncated_weight,separable_dominant,dominant_degenerate,lambdas\n"
              << format_double(r.value) << ',' << format_double(r.dominant_weight) << ',' << format_double(entropy)
              << ',' << format_double(r.truncated_weight) << ',' << int(r.separable_dominant) << ','
              << int(r.dominant_degenerate) << ',' << join_lambdas(r.lambdas, ';') << '\n';
  } else {
    std::cout << "dims                " << rho.d1() << " x " << rho.d2() << '\n'
              << "c_qp                " << format_double(r.value) << '\n'
              << "lambdas             " << join_lambdas(r.lambdas, ' ') << '\n'
              << "mu1                 " << format_double(r.dominant_weight) << '\n'
              << "entropy (nats)      " << format_double(entropy) << '\n'
              << "truncated_weight    " << format_double(r.truncated_weight) << '\n'
              << "separable_dominant  " << (r.separable_dominant ? "yes" : "no") << '\n'
              << "dominant_degenerate " << (r.dominant_degenerate ? "yes" : "no") << '\n';
  }
  return 0;
}

int run_oracle(const std::string& path, const qpc::OracleOptions& options, std::uint64_t seed,
               const qpc::Tolerances& tol) {
  const qpc::DensityMatrix rho = qpc::io::read_state_file(path, tol);
  const double qpa = qpc::qp_concurrence(rho, tol).value;
  const qpc::OracleResult oracle = qpc::brute_force_convex_roof(rho, options, seed, tol);
  std::cout << "qpa          " << format_double(qpa) << '\n';
  std::cout << "brute_force  " << format_double(oracle.value) << "  (restarts " << options.restarts << ", iterations "
            << options.iterations << ", seed " << seed << ", best restart " << oracle.best_restart << ")\n";
  bool ordered = qpa <= oracle.value + 1e-6;
  if (rho.d1() == 2 && rho.d2() == 2) {
    const double exact = qpc::wootters_concurrence_2qubit(rho, tol);
    std::cout << "wootters     " << format_double(exact) << '\n';
    ordered = ordered && qpa <= exact + 1e-9;
    std::cout << "ordering     qpa <= wootters <= brute_force: " << (ordered ? "ok" : "VIOLATED")
              << "  (brute_force - wootters = " << format_double(oracle.value - exact) << ")\n";
  } else {
    std::cout << "ordering     qpa <= brute_force: " << (ordered ? "ok" : "VIOLATED") << '\n';
  }
  return ordered ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-pure approximation of bipartite concurrence"};
  app.require_subcommand(1);

  std::string state_path;
  std::string format = "human";
  auto* qpa = app.add_subcommand("qpa", "Evaluate the approximation for a state file");
  qpa->add_option("file", state_path, "JSON state file")->required();
  qpa->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "csv"}));

  double a_min = 0.0, a_max = 1.0;
  int steps = 101;
  std::string out_path = "-";
  auto* horodecki = app.add_subcommand("horodecki", "Sweep the 3x3 PPT family");
  horodecki->add_option("--a-min", a_min, "Lower end of the a grid")->check(CLI::Range(0.0, 1.0));
  horodecki->add_option("--a-max", a_max, "Upper end of the a grid")->check(CLI::Range(0.0, 1.0));
  horodecki->add_option("--steps", steps, "Number of grid points")->check(CLI::PositiveNumber);
  horodecki->add_option("--out", out_path, "CSV output path, '-' for stdout");

  qpc::SimConfig sim;
  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Random-Hamiltonian decoherence trajectory");
  simulate->add_option("--config", config_path, "JSON config file; flags override its values");
  Eigen::Index d1 = 0, d2 = 0, d_bath = 0;
  double alpha_s = 0.0, alpha_sb = 0.0, t_start = 0.0, t_end = 0.0;
  int t_steps = 0;
  std::uint64_t sim_seed = 0;
  auto* o_d1 = simulate->add_option("--d1", d1, "Subsystem 1 dimension")->check(CLI::PositiveNumber);
  auto* o_d2 = simulate->add_option("--d2", d2, "Subsystem 2 dimension")->check(CLI::PositiveNumber);
  auto* o_db = simulate->add_option("--d-bath", d_bath, "Bath dimension")->check(CLI::PositiveNumber);
  auto* o_as = simulate->add_option("--alpha-s", alpha_s, "System Hamiltonian strength");
  auto* o_asb = simulate->add_option("--alpha-sb", alpha_sb, "System-bath coupling strength");
  auto* o_ts = simulate->add_option("--t-start", t_start, "First time point");
  auto* o_te = simulate->add_option("--t-end", t_end, "Last time point");
  auto* o_steps = simulate->add_option("--t-steps", t_steps, "Number of time points")->check(CLI::PositiveNumber);
  auto* o_seed = simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--out", out_path, "CSV output path, '-' for stdout");

  qpc::OracleOptions oracle_options;
  std::uint64_t oracle_seed = 1;
  auto* oracle = app.add_subcommand("oracle", "Compare the approximation with a brute-force convex roof search");
  oracle->add_option("file", state_path, "JSON state file")->required();
  oracle->add_option("--restarts", oracle_options.restarts, "Random restarts")->check(CLI::PositiveNumber);
  oracle->add_option("--iterations", oracle_options.iterations, "Local steps per restart")->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", oracle_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFlags;
  }

  try {
    qpc::Tolerances tol = qpc::default_tolerances();
    if (const char* override_path = std::getenv("QPC_TOL_OVERRIDE"); override_path != nullptr && *override_path) {
      tol = qpc::load_tolerance_override(override_path);
    }

    if (*qpa) return run_qpa(state_path, format, tol);

    if (*horodecki) {
      if (a_min > a_max) {
        std::cerr << "error: --a-min must not exceed --a-max\n";
        return kExitFlags;
      }
      std::ostringstream csv;
      qpc::io::write_horodecki_csv(csv, qpc::io::horodecki_sweep(a_min, a_max, steps, tol));
      emit(out_path, csv.str());
      return 0;
    }

    if (*simulate) {
      if (!config_path.empty()) sim = qpc::io::read_sim_config_file(config_path, sim);
      if (*o_d1) sim.d1 = d1;
      if (*o_d2) sim.d2 = d2;
      if (*o_db) sim.d_bath = d_bath;
      if (*o_as) sim.alpha_s = alpha_s;
      if (*o_asb) sim.alpha_sb = alpha_sb;
      if (*o_ts) sim.t_start = t_start;
      if (*o_te) sim.t_end = t_end;
      if (*o_steps) sim.t_steps = t_steps;
      if (*o_seed) sim.seed = sim_seed;
      sim.validate();
      std::ostringstream csv;
      qpc::io::write_trajectory_csv(csv, sim, qpc::run_trajectory(sim, tol));
      emit(out_path, csv.str());
      return 0;
    }

    if (*oracle) return run_oracle(state_path, oracle_options, oracle_seed, tol);
  } catch (const qpc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == qpc::ErrorKind::Parse ? kExitParse : kExitInvariant;
  }
  return 0;
}
