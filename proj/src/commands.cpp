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

#include "qclone/commands.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qclone/bool_synth.hpp"
#include "qclone/cloner.hpp"
#include "qclone/errors.hpp"
#include "qclone/prep_solver.hpp"

namespace qclone::cli {

namespace {

constexpr double kCliNormTolerance = 1e-9;

std::string basis_label(std::size_t index, std::size_t n) {
  std::string label = "|";
  for (std::size_t q = 0; q < n; ++q) label += (index >> (n - 1 - q)) & 1U ? '1' : '0';
  return label + ">";
}

AmplitudeRecord record(std::complex<double> z) { return {z.real(), z.imag()}; }

MatrixRecord record(const DensityMatrix<double>& rho) {
  MatrixRecord m(rho.dim(), std::vector<AmplitudeRecord>(rho.dim()));
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) m[r][c] = record(rho(r, c));
  }
  return m;
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream s;
  s << std::showpos << std::fixed << std::setprecision(10) << z.real() << ' ' << z.imag() << 'i';
  return s.str();
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

bool valid_row(int row) { return row >= 1 && row <= 12; }

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QCLONE_SEED"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(env, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || env[0] == '-')
      throw std::invalid_argument("QCLONE_SEED is not an unsigned integer");
    return value;
  }
  return kDefaultSeed;
}

std::array<double, 4> parse_coefficients(const std::string& text) {
  std::array<double, 4> c{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', pos);
    const bool last = i == 3;
    if (last != (comma == std::string::npos))
      throw std::invalid_argument("--coeffs expects exactly four comma-separated numbers");
    const std::string item = text.substr(pos, last ? std::string::npos : comma - pos);
    std::size_t used = 0;
    try {
      c[i] = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--coeffs: '" + item + "' is not a number");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size() || !std::isfinite(c[i]))
      throw std::invalid_argument("--coeffs: '" + item + "' is not a number");
    pos = comma + 1;
  }
  return c;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size()) throw std::invalid_argument("--grid expects NxM");
  auto number = [&](const std::string& item) {
    if (item.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("--grid expects NxM");
    return static_cast<std::size_t>(std::stoull(item));
  };
  const auto n = number(text.substr(0, x));
  const auto m = number(text.substr(x + 1));
  if (n < 2 || m < 2) throw std::invalid_argument("--grid must be at least 2x2");
  if (n > 4096 || m > 4096) throw std::invalid_argument("--grid is limited to 4096x4096");
  return {n, m};
}

std::vector<BlochAngles<double>> sample_bloch(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<BlochAngles<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = std::acos(std::clamp(1.0 - 2.0 * unit(), -1.0, 1.0));
    double phi = two_pi * unit();
    if (phi >= two_pi) phi = 0.0;
    out.push_back(BlochAngles<double>{theta, phi});
  }
  return out;
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  std::array<double, 4> raw{};
  try {
    raw = parse_coefficients(args.coeffs);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  double norm2 = 0.0;
  for (double v : raw) norm2 += v * v;
  if (!(norm2 > 0.0)) {
    err << "error: --coeffs must not be all zero\n";
    return kUsage;
  }
  SolveReport report;
  report.normalized = std::abs(norm2 - 1.0) > kCliNormTolerance;
  if (report.normalized)
    err << "warning: coefficients rescaled to unit norm (sum of squares was " << std::setprecision(12) << norm2
        << ")\n";
  const auto coeffs = PrepCoefficients::normalized(raw);
  report.coefficients = coeffs.c;

  AngleSolutions solutions;
  try {
    solutions = solve_angles_detailed(coeffs);
  } catch (const no_solution_error& e) {
    err << "no solution: " << e.what() << '\n';
    if (args.json) print_json(out, report);
    return kNoResult;
  }
  report.method = solutions.method == SolveMethod::kClosedForm ? "closed_form" : "newton";
  for (const auto& triple : solutions.triples) {
    SolutionRecord rec;
    rec.cos_squared = triple.cos_squared();
    for (std::size_t i = 0; i < 3; ++i) {
      rec.cos[i] = triple.rotations[i].cos_theta;
      rec.sin[i] = triple.rotations[i].sin_theta;
    }
    rec.signs = triple.signs().to_string();
    rec.residual = prep_residual(triple, coeffs);
    report.solutions.push_back(rec);
  }

  if (args.json) {
    print_json(out, report);
    return kSuccess;
  }
  out << std::setprecision(12);
  out << "coefficients: " << coeffs[0] << ", " << coeffs[1] << ", " << coeffs[2] << ", " << coeffs[3] << '\n';
  out << "method: " << (solutions.method == SolveMethod::kClosedForm ? "closed form" : "damped Newton fallback")
      << '\n';
  out << report.solutions.size() << " solution(s)\n";
  std::size_t k = 1;
  for (const auto& rec : report.solutions) {
    out << "  [" << k++ << "] cos^2 = (" << rec.cos_squared[0] << ", " << rec.cos_squared[1] << ", "
        << rec.cos_squared[2] << ")  signs " << rec.signs << "  residual " << std::setprecision(3) << rec.residual
        << std::setprecision(12) << '\n';
  }
  return kSuccess;
}

SynthReport build_synth_report(const TruthTable& table, bool all_completions) {
  SynthReport report;
  report.n = table.n();
  report.dont_cares = table.dont_care_count();
  const auto completions = enumerate_completions(table);
  report.completion_count = completions.size();
  for (const auto& completion : completions) {
    CompletionRecord rec;
    for (bool b : completion.assignment) rec.assignment.push_back(b ? 1 : 0);
    for (std::size_t j = 0; j < table.n(); ++j) rec.anf.push_back(anf_of(completion.table.column(j)).to_string());
    const auto program = synthesize(completion.map);
    rec.verified = verify_program(program, completion.table) && verify_program(program, table);
    if (!rec.verified) throw std::logic_error("synthesized circuit failed basis verification");
    rec.circuit = CircuitDocument::from_program(table.n(), program);
    report.completions.push_back(std::move(rec));
    if (!all_completions) break;
  }
  return report;
}

int run_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream file(args.table_path);
  if (!file) {
    err << "error: cannot open truth table '" << args.table_path << "'\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  std::optional<TruthTable> table;
  try {
    table = parse_truth_table(buffer.str());
  } catch (const parse_error& e) {
    err << args.table_path << ": " << e.what() << '\n';
    return kParseFailure;
  }

  SynthReport report;
  try {
    report = build_synth_report(*table, args.all_completions);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (args.json) print_json(out, report);

  if (report.completion_count == 0) {
    bool any_nonlinear = false;
    for (std::size_t j = 0; j < table->n(); ++j) {
      const auto column = table->column(j);
      if (admits_affine_completion(column)) continue;
      any_nonlinear = true;
      std::vector<Trit> zero_filled = column;
      for (auto& v : zero_filled) {
        if (v == Trit::kDontCare) v = Trit::kZero;
      }
      const auto anf = anf_of(zero_filled);
      err << "p" << (j + 1) << " is not affine for any don't-care choice; ANF " << anf.to_string()
          << "; nonlinear monomials:";
      for (auto m : anf.monomials) {
        if (std::popcount(m) > 1) err << ' ' << monomial_name(m, anf.n);
      }
      err << '\n';
    }
    if (!any_nonlinear) err << "every output admits an affine completion, but no joint completion is reversible\n";
    err << "no CNOT-realizable completion\n";
    return kNoResult;
  }
  if (args.json) return kSuccess;

  out << "truth table: " << report.n << " variables, " << report.dont_cares << " don't-care cell(s), "
      << report.completion_count << " reversible affine completion(s)\n";
  std::size_t k = 1;
  for (const auto& rec : report.completions) {
    out << "completion " << k++ << ":";
    if (!rec.assignment.empty()) {
      out << " don't-cares = ";
      for (int b : rec.assignment) out << b;
    }
    out << '\n';
    for (std::size_t j = 0; j < rec.anf.size(); ++j) out << "  p" << (j + 1) << " = " << rec.anf[j] << '\n';
    out << "  circuit: " << (rec.circuit.product.empty() ? "(identity)" : rec.circuit.product) << "  ["
        << rec.circuit.gates.size() << " gate(s), verified on all " << (std::size_t{1} << report.n)
        << " basis states]\n";
  }
  return kSuccess;
}

int run_clone(const CloneArgs& args, std::ostream& out, std::ostream& err) {
  if (!valid_row(args.row)) {
    err << "error: --row must be in 1..12\n";
    return kUsage;
  }
  Variant variant{};
  BlochAngles<double> angles{};
  try {
    variant = parse_variant(args.variant);
    angles = BlochAngles<double>::checked(args.theta, args.phi);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto psi = bloch_state(angles);
  const CloningMachine machine(args.row, variant);
  const auto result = machine.run(psi);
  const auto rho_in = density_of(psi);
  const auto rho_perp = density_of(orthogonal_state(psi));

  CloneReport report;
  report.theta = args.theta;
  report.phi = args.phi;
  report.row = args.row;
  report.variant = std::string(to_string(variant));
  report.circuit = format_product(machine.circuit());
  for (std::size_t k = 0; k < result.output.dim(); ++k) report.output.push_back(record(result.output[k]));
  report.rho = {record(result.rho0), record(result.rho1), record(result.rho2)};
  report.fidelity = {result.f0, result.f1, result.f2};
  report.mixture_residual = {mixture_residual(result.rho0, rho_in, rho_perp, 5.0 / 6.0),
                             mixture_residual(result.rho1, rho_in, rho_perp, 5.0 / 6.0),
                             mixture_residual(result.rho2, rho_in, rho_perp, 2.0 / 3.0)};
  report.ancilla_conjugate_residual =
      mixture_residual(result.rho2, complex_conjugate(rho_in), complex_conjugate(rho_perp), 2.0 / 3.0);
  report.max_output_error = phase_aligned_max_error(result.output, expected_output(psi));

  if (args.json) {
    print_json(out, report);
    return kSuccess;
  }
  out << "input: theta = " << args.theta << ", phi = " << args.phi << "\n";
  out << "machine: row " << args.row << ' ' << report.variant << ", circuit " << report.circuit << '\n';
  out << "output amplitudes:\n";
  for (std::size_t k = 0; k < result.output.dim(); ++k) {
    out << "  " << basis_label(k, 3) << "  " << complex_text(result.output[k]) << '\n';
  }
  const std::array<const DensityMatrix<double>*, 3> rhos{&result.rho0, &result.rho1, &result.rho2};
  for (std::size_t q = 0; q < 3; ++q) {
    out << "rho" << q << ":\n";
    for (std::size_t r = 0; r < 2; ++r) {
      out << "  [" << complex_text((*rhos[q])(r, 0)) << ", " << complex_text((*rhos[q])(r, 1)) << "]\n";
    }
  }
  out << std::setprecision(12);
  out << "fidelity: f0 = " << result.f0 << ", f1 = " << result.f1 << ", f2 = " << result.f2 << '\n';
  out << std::setprecision(3);
  out << "mixture residuals: rho0 vs 5/6 " << report.mixture_residual[0] << ", rho1 vs 5/6 "
      << report.mixture_residual[1] << ", rho2 vs 2/3 " << report.mixture_residual[2] << ", rho2 vs conjugated 2/3 "
      << report.ancilla_conjugate_residual << '\n';
  out << "max deviation from optimal output (up to phase): " << report.max_output_error << '\n';
  return kSuccess;
}

VerifyReport build_verify_report(std::uint64_t seed) {
  VerifyReport report;
  report.seed = seed;
  report.samples = kVerifySamples;
  report.tolerance = kExactTolerance;
  std::vector<PureState<double>> inputs;
  for (const auto& a : sample_bloch(seed, kVerifySamples)) inputs.push_back(bloch_state(a));

  for (const auto& row : table1_rows()) {
    for (Variant variant : {Variant::kUpper, Variant::kLower}) {
      VerifyCell cell;
      cell.row = row.number;
      cell.variant = std::string(to_string(variant));
      try {
        const CloningMachine machine(row.number, variant);
        for (const auto& psi : inputs) {
          cell.max_error = std::max(cell.max_error, phase_aligned_max_error(machine.output(psi), expected_output(psi)));
        }
        cell.pass = cell.max_error <= kExactTolerance;
      } catch (const no_solution_error&) {
        cell.max_error = 1.0;
        cell.pass = false;
      }
      report.passed += cell.pass ? 1 : 0;
      ++report.total;
      report.cells.push_back(cell);
    }
  }
  return report;
}

int run_verify_table(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = 0;
  try {
    seed = resolve_seed(args.seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto report = build_verify_report(seed);
  if (args.json) {
    print_json(out, report);
  } else {
    out << "row  variant  max error   result\n";
    for (const auto& cell : report.cells) {
      out << std::setw(3) << cell.row << "  " << std::left << std::setw(7) << cell.variant << std::right << "  "
          << std::scientific << std::setprecision(2) << cell.max_error << std::defaultfloat << "  "
          << (cell.pass ? "pass" : "FAIL") << '\n';
    }
    out << report.passed << '/' << report.total << " cells pass (seed " << seed << ", " << report.samples
        << " random inputs per cell, tolerance " << report.tolerance << ")\n";
  }
  return report.passed == report.total ? kSuccess : 1;
}

int run_fidelity(const FidelityArgs& args, std::ostream& out, std::ostream& err) {
  std::pair<std::size_t, std::size_t> grid;
  Variant variant{};
  try {
    grid = parse_grid(args.grid);
    variant = parse_variant(args.variant);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!valid_row(args.row)) {
    err << "error: --row must be in 1..12\n";
    return kUsage;
  }
  const auto f = machine_average_fidelities(args.row, variant, grid.first, grid.second);
  FidelityReport report;
  report.n_theta = grid.first;
  report.n_phi = grid.second;
  report.row = args.row;
  report.variant = std::string(to_string(variant));
  report.copy0 = f.copy0;
  report.copy1 = f.copy1;
  report.ancilla = f.ancilla;
  if (args.json) {
    print_json(out, report);
    return kSuccess;
  }
  out << "grid: " << grid.first << " Gauss-Legendre nodes in cos(theta) x " << grid.second
      << " trapezoid points in phi\n";
  out << "machine: row " << args.row << ' ' << report.variant << '\n';
  out << std::fixed << std::setprecision(9);
  out << "F_copy    = " << f.copy0 << "  (qubit 0)\n";
  out << "F_copy    = " << f.copy1 << "  (qubit 1)\n";
  out << "F_ancilla = " << f.ancilla << "  (qubit 2)\n";
  return kSuccess;
}

}  // namespace qclone::cli
