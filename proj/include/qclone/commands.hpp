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

#pragma once

// Subcommands of the qclone tool, callable without a process boundary.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclone/bool_synth.hpp"
#include "qclone/documents.hpp"
#include "qclone/state.hpp"

namespace qclone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNoResult = 2,
  kUsage = 64,
  kParseFailure = 65,
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kVerifySamples = 100;

struct SolveArgs {
  std::string coeffs;  // "C1,C2,C3,C4"
  bool json = false;
};

struct SynthArgs {
  std::string table_path;
  bool all_completions = false;
  bool json = false;
};

struct CloneArgs {
  double theta = 0.0;
  double phi = 0.0;
  int row = 1;
  std::string variant = "upper";
  bool json = false;
};

struct VerifyArgs {
  std::optional<std::uint64_t> seed;
  bool json = false;
};

struct FidelityArgs {
  std::string grid = "64x64";
  int row = 1;
  std::string variant = "upper";
  bool json = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int run_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);
int run_clone(const CloneArgs& args, std::ostream& out, std::ostream& err);
int run_verify_table(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int run_fidelity(const FidelityArgs& args, std::ostream& out, std::ostream& err);

/// --seed if given, else QCLONE_SEED, else 42. Throws std::invalid_argument
/// on a malformed QCLONE_SEED.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Parses "C1,C2,C3,C4"; throws std::invalid_argument.
std::array<double, 4> parse_coefficients(const std::string& text);
/// Parses "NxM"; throws std::invalid_argument.
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text);

/// Uniform Bloch-sphere samples from a seeded mt19937_64.
std::vector<BlochAngles<double>> sample_bloch(std::uint64_t seed, std::size_t count);

SynthReport build_synth_report(const TruthTable& table, bool all_completions);
VerifyReport build_verify_report(std::uint64_t seed);

}  // namespace qclone::cli
