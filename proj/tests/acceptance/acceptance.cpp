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

// Acceptance checks 1-8. One PASS/FAIL line per criterion; exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qclone/bool_synth.hpp"
#include "qclone/cloner.hpp"
#include "qclone/commands.hpp"
#include "qclone/prep_solver.hpp"
#include "test_support.hpp"

using namespace qclone;
using namespace qclone::testing;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::array<Variant, 2> kVariants{Variant::kUpper, Variant::kLower};

Outcome table_reproduction() {
  Outcome o;
  const auto start = Clock::now();
  const auto samples = cli::sample_bloch(cli::kDefaultSeed, 100);
  std::vector<PureState<double>> inputs;
  for (const auto& a : samples) inputs.push_back(bloch_state(a));
  int passed = 0;
  double worst = 0;
  for (int row = 1; row <= 12; ++row) {
    for (auto v : kVariants) {
      double err = 0;
      try {
        const CloningMachine machine(row, v);
        for (const auto& psi : inputs)
          err = std::max(err, phase_aligned_max_error(machine.output(psi), expected_output(psi)));
      } catch (const no_solution_error&) {
        err = 1;
      }
      worst = std::max(worst, err);
      if (err <= 1e-12) {
        ++passed;
      } else {
        o.notes.push_back(fmt("row %d %s: max error %.3g", row, std::string(to_string(v)).c_str(), err));
      }
    }
  }
  const double elapsed = ms_since(start);
  o.pass = passed == 24 && elapsed < 1000;
  o.detail =
      fmt("%d/24 circuits match the optimal output on 100 inputs, max error %.2g, %.1f ms", passed, worst, elapsed);
  return o;
}

Outcome closed_form_angles() {
  Outcome o;
  int entries = 0, matched = 0, rebuilt = 0;
  const char* names[3] = {"cos^2 t1", "cos^2 t2", "cos^2 t3"};
  for (const auto& row : table1_rows()) {
    const auto sols = solve_angles(row.coefficients);
    for (auto v : kVariants) {
      const AngleTriple* t = nullptr;
      for (const auto& s : sols) {
        if (s.signs() == row.sign_pattern(v)) t = &s;
      }
      if (t == nullptr) {
        o.notes.push_back(
            fmt("row %d %s: no solution with the listed signs", row.number, std::string(to_string(v)).c_str()));
        entries += 3;
        continue;
      }
      const auto prepared = prepare_state(*t);
      double rebuild_err = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        rebuild_err = std::max(rebuild_err, std::abs(prepared[i] - Complex(row.coefficients[i], 0)));
      }
      rebuilt += rebuild_err <= 1e-12;
      const auto k = t->cos_squared();
      for (std::size_t col = 0; col < 3; ++col) {
        ++entries;
        const auto& printed = row.printed_cos_squared[col];
        const double expected = printed.value(v);
        if (std::abs(k[col] - expected) <= 1e-12) {
          ++matched;
        } else {
          o.notes.push_back(fmt("row %d %s %s: listed %s = %.10f, solution has %.10f", row.number,
                                std::string(to_string(v)).c_str(), names[col], printed.text.c_str(), expected, k[col]));
        }
      }
    }
  }
  o.pass = matched == entries && rebuilt == 24;
  o.detail = fmt("%d/%d listed cos^2 entries within 1e-12; coefficients rebuilt for %d/24", matched, entries, rebuilt);
  if (!o.pass) {
    o.notes.push_back(
        "the mismatching entries are misprints: 1 -+ sqrt2/3 should read 1/2 -+ sqrt2/3 (rows 1, 5, 8, 10),");
    o.notes.push_back(
        "and row 3 cos^2 t1 should read 1/2(1 -+ 2/sqrt5); the listed values do not satisfy the equations");
  }
  return o;
}

Outcome density_relations() {
  Outcome o;
  const auto samples = cli::sample_bloch(cli::kDefaultSeed, 1000);
  double copies = 0, ancilla = 0, conjugated = 0;
  for (int row = 1; row <= 12; ++row) {
    for (auto v : kVariants) {
      const CloningMachine machine(row, v);
      for (const auto& a : samples) {
        const auto psi = bloch_state(a);
        const auto r = machine.run(psi);
        const auto in = density_of(psi);
        const auto perp = density_of(orthogonal_state(psi));
        copies = std::max(
            {copies, mixture_residual(r.rho0, in, perp, 5.0 / 6), mixture_residual(r.rho1, in, perp, 5.0 / 6)});
        ancilla = std::max(ancilla, mixture_residual(r.rho2, in, perp, 2.0 / 3));
        conjugated =
            std::max(conjugated, mixture_residual(r.rho2, complex_conjugate(in), complex_conjugate(perp), 2.0 / 3));
      }
    }
  }
  o.pass = copies <= 1e-12 && ancilla <= 1e-12;
  o.detail = fmt("24 machines x 1000 inputs: copies vs 5/6 mixture %.2g, ancilla vs 2/3 mixture %.2g", copies, ancilla);
  if (ancilla > 1e-12) {
    o.notes.push_back(fmt("ancilla equals the complex conjugate of the 2/3 mixture (max residual %.2g);", conjugated));
    o.notes.push_back("the stated relation holds only for real amplitudes (phi = 0 or pi)");
  }
  return o;
}

Outcome average_fidelities() {
  Outcome o;
  int passed = 0;
  double slowest = 0, worst_copy = 0, worst_ancilla = 0, ancilla_value = 0;
  for (int row = 1; row <= 12; ++row) {
    for (auto v : kVariants) {
      const auto start = Clock::now();
      const auto f = machine_average_fidelities(row, v, 64, 64);
      const double elapsed = ms_since(start);
      slowest = std::max(slowest, elapsed);
      const double dc = std::max(std::abs(f.copy0 - 0.8333333), std::abs(f.copy1 - 0.8333333));
      const double da = std::abs(f.ancilla - 0.6666667);
      worst_copy = std::max(worst_copy, dc);
      worst_ancilla = std::max(worst_ancilla, da);
      ancilla_value = f.ancilla;
      passed += dc <= 1e-6 && da <= 1e-6 && elapsed < 1000;
    }
  }
  o.pass = passed == 24;
  o.detail = fmt("%d/24 machines; |copy - 0.8333333| <= %.2g, |ancilla - 0.6666667| <= %.2g, slowest %.1f ms", passed,
                 worst_copy, worst_ancilla, slowest);
  if (worst_ancilla > 1e-6) {
    o.notes.push_back(
        fmt("ancilla average is %.9f = 5/9 for every machine: pointwise it is (1 + |a^2 + b^2|^2)/3,", ancilla_value));
    o.notes.push_back("which is 2/3 only on the real great circle");
  }
  return o;
}

Outcome synthesis_soundness() {
  Outcome o;
  int maps = 0, verified = 0;
  for (std::uint32_t code = 0; code < 512; ++code) {
    LinearMap m;
    m.n = 3;
    m.rows = {code & 7U, (code >> 3) & 7U, (code >> 6) & 7U};
    if (!m.invertible()) continue;
    ++maps;
    const auto prog = synthesize(m);
    bool ok = verify_program(prog, m.table());
    for (std::size_t i = 0; i < 8; ++i) ok = ok && apply_classical(prog, 3, i) == m.apply_index(i);
    verified += ok;
  }
  LinearMap cloner;
  cloner.n = 3;
  cloner.rows = {0b011, 0b101, 0b111};
  const auto prog = synthesize(cloner);
  const bool equivalent = induced_table(prog, 3) == induced_table(parse_product("P21 P02 P10"), 3);
  o.pass = maps == 168 && verified == 168 && equivalent;
  o.detail = fmt("%d/%d invertible maps verified on all basis states; cloner map -> %s (%s P21 P02 P10)", verified,
                 maps, format_product(prog).c_str(), equivalent ? "equivalent to" : "NOT equivalent to");
  return o;
}

Outcome completion_search() {
  Outcome o;
  std::ifstream in(std::string(QCLONE_TEST_DATA) + "/cloner_table.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto table = parse_truth_table(ss.str());

  // Brute force: assign the starred cells, keep affine bijections.
  std::vector<std::pair<std::size_t, std::size_t>> stars;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (table.cell(i, j) == Trit::kDontCare) stars.emplace_back(i, j);
  int oracle = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << stars.size()); ++a) {
    std::array<std::size_t, 8> image{};
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        bool bit = table.cell(i, j) == Trit::kOne;
        for (std::size_t s = 0; s < stars.size(); ++s)
          if (stars[s] == std::pair{i, j}) bit = (a >> (stars.size() - 1 - s)) & 1U;
        image[i] |= std::size_t{bit} << (2 - j);
      }
    }
    std::array<bool, 8> hit{};
    bool bijective = true;
    for (auto y : image) {
      bijective = bijective && !hit[y];
      hit[y] = true;
    }
    oracle += bijective && affine_oracle([&](std::size_t i) { return image[i]; }, 3);
  }

  const auto completions = enumerate_completions(table);
  LinearMap cloner;
  cloner.n = 3;
  cloner.rows = {0b011, 0b101, 0b111};
  bool contains = false;
  for (const auto& c : completions) contains = contains || c.map == cloner;
  constexpr int kExpectedCount = 1;
  o.pass =
      !completions.empty() && contains && static_cast<int>(completions.size()) == oracle && oracle == kExpectedCount;
  o.detail = fmt("%zu completion(s), brute-force oracle %d, cloner map %s", completions.size(), oracle,
                 contains ? "present" : "missing");
  return o;
}

Outcome property_suites() {
  Outcome o;
  double norm = 0, involution = 0, trace = 0, symmetry = 0, linear = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 4;
    auto psi = random_state(n);
    auto out = apply_program(psi, random_program(n, 10));
    out = apply_rotation(out, k % n, Rotation<double>::from_angle(uniform(-3, 3)));
    norm = std::max(norm, std::abs(out.amplitudes().squaredNorm() - 1));

    const CnotGate g{k % n, (k + 1) % n, k % 3 == 0, false};
    involution =
        std::max(involution, (apply_cnot(apply_cnot(psi, g), g).amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff());

    auto a = random_state(1);
    auto b = random_state(2);
    auto rho = density_of(tensor(a, b));
    trace = std::max(trace, (partial_trace(rho, {0}).matrix() - density_of(a).matrix()).cwiseAbs().maxCoeff());
    trace = std::max(trace, (partial_trace(rho, {1, 2}).matrix() - density_of(b).matrix()).cwiseAbs().maxCoeff());
  }
  for (int row = 1; row <= 12; ++row) {
    for (auto v : kVariants) {
      const CloningMachine machine(row, v);
      const auto out0 = machine.output(PureState<double>::basis(1, 0)).amplitudes();
      const auto out1 = machine.output(PureState<double>::basis(1, 1)).amplitudes();
      for (int k = 0; k < 50; ++k) {
        auto psi = random_state(1);
        auto r = machine.run(psi);
        symmetry = std::max(symmetry, (r.rho0.matrix() - r.rho1.matrix()).cwiseAbs().maxCoeff());
        norm = std::max(norm, std::abs(r.output.amplitudes().squaredNorm() - 1));
        CVector sum = psi[0] * out0 + psi[1] * out1;
        linear = std::max(linear, (r.output.amplitudes() - sum).cwiseAbs().maxCoeff());
      }
    }
  }
  o.pass = norm <= 1e-12 && involution <= 1e-15 && trace <= 1e-12 && symmetry <= 1e-12 && linear <= 1e-12;
  o.detail = fmt("norm %.2g, involution %.2g, partial trace %.2g, rho0 = rho1 %.2g, linearity %.2g", norm, involution,
                 trace, symmetry, linear);
  return o;
}

Outcome no_cloning() {
  Outcome o;
  const auto r = run_machine(bloch_state(BlochAngles<double>{1.0, 0.5}), 1, Variant::kUpper);
  o.pass = r.f0 < 1 - 1e-3 && r.f0 >= 5.0 / 6 - 1e-9;
  o.detail = fmt("f0 = %.12f at theta = 1.0, phi = 0.5", r.f0);
  return o;
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    Outcome (*fn)();
  };
  const Item items[] = {
      {"table reproduction", table_reproduction},   {"closed-form angles", closed_form_angles},
      {"density relations", density_relations},     {"average fidelities", average_fidelities},
      {"synthesis soundness", synthesis_soundness}, {"completion search", completion_search},
      {"property suites", property_suites},         {"no-cloning sanity", no_cloning},
  };
  int failed = 0;
  int index = 1;
  for (const auto& item : items) {
    const Outcome o = item.fn();
    std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, item.name, o.detail.c_str());
    for (const auto& note : o.notes) std::printf("       %s\n", note.c_str());
    failed += !o.pass;
  }
  std::printf("%d/8 criteria pass\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
