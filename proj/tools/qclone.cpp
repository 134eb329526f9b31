// Copyright 2026 The qclone Authors
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

// qclone: preparation-angle solving, CNOT synthesis from truth tables and
// verification of the 1 -> 2 universal qubit cloner.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>

#include "qclone/commands.hpp"

int main(int argc, char** argv) {
  using namespace qclone::cli;

  CLI::App app{"qclone - universal qubit cloner toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve for the preparation angles of a two-qubit state");
  solve_cmd->add_option("--coeffs", solve.coeffs, "C1,C2,C3,C4 amplitudes on |00>,|01>,|10>,|11>")->required();
  solve_cmd->add_flag("--json", solve.json, "Machine-readable output");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize CNOT circuits from a truth table");
  synth_cmd->add_option("--table", synth.table_path, "Truth-table file")->required();
  synth_cmd->add_flag("--all-completions", synth.all_completions, "Emit every reversible affine completion");
  synth_cmd->add_flag("--json", synth.json, "Machine-readable output");

  CloneArgs clone;
  auto* clone_cmd = app.add_subcommand("clone", "Run the cloning machine on one input qubit");
  clone_cmd->add_option("--theta", clone.theta, "Polar angle in [0, pi]")->required();
  clone_cmd->add_option("--phi", clone.phi, "Azimuthal angle in [0, 2 pi)")->required();
  clone_cmd->add_option("--row", clone.row, "Circuit table row 1..12")->capture_default_str();
  clone_cmd->add_option("--variant", clone.variant, "upper|lower")->capture_default_str();
  clone_cmd->add_flag("--json", clone.json, "Machine-readable output");

  VerifyArgs verify;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify-table", "Check every table row and variant on random inputs");
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "RNG seed (default: $QCLONE_SEED or 42)");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable output");

  FidelityArgs fidelity;
  auto* fidelity_cmd = app.add_subcommand("fidelity", "Bloch-sphere average fidelities of a machine");
  fidelity_cmd->add_option("--grid", fidelity.grid, "Quadrature grid NxM")->capture_default_str();
  fidelity_cmd->add_option("--row", fidelity.row, "Circuit table row 1..12")->capture_default_str();
  fidelity_cmd->add_option("--variant", fidelity.variant, "upper|lower")->capture_default_str();
  fidelity_cmd->add_flag("--json", fidelity.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*solve_cmd) return run_solve(solve, std::cout, std::cerr);
  if (*synth_cmd) return run_synth(synth, std::cout, std::cerr);
  if (*clone_cmd) return run_clone(clone, std::cout, std::cerr);
  if (*verify_cmd) {
    if (*seed_opt) verify.seed = seed;
    return run_verify_table(verify, std::cout, std::cerr);
  }
  if (*fidelity_cmd) return run_fidelity(fidelity, std::cout, std::cerr);
  return kUsage;
}
