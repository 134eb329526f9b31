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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qclone/gates.hpp"
#include "test_support.hpp"

using namespace qclone;
using namespace qclone::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// Dense matrix of a gate built from Kronecker factors.
CMatrix gate_matrix(const Gate& gate, std::size_t n, BarredControl semantics) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  if (const auto* g = std::get_if<NotGate>(&gate)) return embed_single(x, n, g->target);
  const auto& c = std::get<CnotGate>(gate);
  CMatrix m = cnot_matrix(n, c.control, c.target);
  if (c.invert_control) {
    const CMatrix xc = embed_single(x, n, c.control);
    m = semantics == BarredControl::kFlipQubit ? CMatrix(m * xc) : CMatrix(xc * m * xc);
  }
  if (c.invert_target) m = embed_single(x, n, c.target) * m;
  return m;
}

CnotGate cnot(std::size_t c, std::size_t t, bool bar_t = false, bool bar_c = false) {
  return CnotGate{c, t, bar_t, bar_c};
}

double max_diff(const PureState<double>& a, const PureState<double>& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("rotation examples") {
  auto zero = PureState<double>::basis(1, 0);
  auto id = apply_rotation(zero, 0, Rotation<double>::from_angle(0.0));
  CHECK(max_diff(id, zero) == 0.0);

  auto r = apply_rotation(zero, 0, Rotation<double>::from_angle(0.3));
  CHECK(std::abs(r[0] - Complex(std::cos(0.3), 0)) < 1e-15);
  CHECK(std::abs(r[1] - Complex(std::sin(0.3), 0)) < 1e-15);

  auto minus_one = apply_rotation(zero, 0, Rotation<double>::from_angle(kPi / 2));
  CHECK(std::abs(minus_one[1] - Complex(1, 0)) < 1e-15);
  auto back = apply_rotation(PureState<double>::basis(1, 1), 0, Rotation<double>::from_angle(kPi / 2));
  CHECK(std::abs(back[0] - Complex(-1, 0)) < 1e-15);

  CHECK_THROWS_AS(apply_rotation(zero, 1, Rotation<double>::from_angle(0.1)), std::domain_error);
  CHECK_THROWS_AS(Rotation<double>::from_pair(0.5, 0.5), std::domain_error);
}

TEST_CASE("rotation matches the Kronecker oracle and inverts") {
  for (int k = 0; k < 200; ++k) {
    auto psi = random_state(3);
    const double theta = uniform(-kPi, kPi);
    const auto rot = Rotation<double>::from_angle(theta);
    for (std::size_t q = 0; q < 3; ++q) {
      auto got = apply_rotation(psi, q, rot);
      CVector ref = embed_single(rotation_matrix(rot.cos_theta, rot.sin_theta), 3, q) * psi.amplitudes();
      CHECK((got.amplitudes() - ref).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(max_diff(apply_rotation(got, q, rot.inverse()), psi) < 1e-12);
    }
  }
}

TEST_CASE("CNOT examples") {
  auto s10 = PureState<double>::basis(2, 0b10);
  CHECK(apply_cnot(s10, cnot(0, 1))[0b11] == Complex(1, 0));
  auto s00 = PureState<double>::basis(2, 0b00);
  CHECK(apply_cnot(s00, cnot(0, 1))[0b00] == Complex(1, 0));
  CHECK(apply_cnot(s00, cnot(0, 1, true))[0b01] == Complex(1, 0));
  CHECK(apply_cnot(PureState<double>::basis(2, 0b01), cnot(1, 0))[0b11] == Complex(1, 0));
  CHECK_THROWS_AS(apply_cnot(s00, cnot(1, 1)), std::domain_error);
  CHECK_THROWS_AS(apply_cnot(s00, cnot(0, 2)), std::domain_error);
  CHECK_THROWS_AS(apply_not(s00, 2), std::domain_error);
}

TEST_CASE("barred control semantics differ on |000>") {
  const CnotGate g = cnot(2, 0, false, true);  // P!20
  CHECK(apply_classical(Gate{g}, 3, 0b000, BarredControl::kFlipQubit) == 0b101);
  CHECK(apply_classical(Gate{g}, 3, 0b000, BarredControl::kNegatedControl) == 0b100);
  CHECK(apply_classical(Gate{g}, 3, 0b001, BarredControl::kFlipQubit) == 0b000);
  CHECK(apply_classical(Gate{g}, 3, 0b001, BarredControl::kNegatedControl) == 0b001);
}

TEST_CASE("gates match their dense matrices") {
  for (auto semantics : {BarredControl::kFlipQubit, BarredControl::kNegatedControl}) {
    for (int k = 0; k < 100; ++k) {
      auto prog = random_program(3, 1);
      auto psi = random_state(3);
      const Gate& g = prog.gates.front();
      CVector ref = gate_matrix(g, 3, semantics) * psi.amplitudes();
      CHECK((apply_gate(psi, g, semantics).amplitudes() - ref).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("CNOT is an involution") {
  for (int k = 0; k < 300; ++k) {
    auto psi = random_state(3);
    const std::size_t c = k % 3;
    const std::size_t t = (c + 1 + (k / 3) % 2) % 3;
    for (bool bar_t : {false, true}) {
      auto g = cnot(c, t, bar_t);
      CHECK(max_diff(apply_cnot(apply_cnot(psi, g), g), psi) < 1e-15);
      auto gb = cnot(c, t, bar_t, true);
      CHECK(
          max_diff(apply_cnot(apply_cnot(psi, gb, BarredControl::kNegatedControl), gb, BarredControl::kNegatedControl),
                   psi) < 1e-15);
      // With the persistent flip, applying twice leaves X on the target.
      auto twice = apply_cnot(apply_cnot(psi, gb), gb);
      CHECK(max_diff(twice, apply_not(psi, t)) < 1e-15);
    }
  }
}

TEST_CASE("programs act as basis permutations") {
  for (auto semantics : {BarredControl::kFlipQubit, BarredControl::kNegatedControl}) {
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 2 + k % 4;
      auto prog = random_program(n, 1 + k % 9);
      std::vector<bool> hit(std::size_t{1} << n, false);
      for (std::size_t i = 0; i < hit.size(); ++i) {
        const std::size_t j = apply_classical(prog, n, i, semantics);
        REQUIRE(j < hit.size());
        CHECK_FALSE(hit[j]);
        hit[j] = true;
        auto out = apply_program(PureState<double>::basis(n, i), prog, semantics);
        CHECK(out[j] == Complex(1, 0));
      }
    }
  }
}

TEST_CASE("programs preserve the norm") {
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 4;
    auto psi = random_state(n);
    auto out = apply_program(psi, random_program(n, 12));
    CHECK(std::abs(out.amplitudes().squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("program application order") {
  auto prog = parse_product("P21 P02 P10");
  REQUIRE(prog.size() == 3);
  CHECK(std::get<CnotGate>(prog.gates[0]) == cnot(1, 0));
  CHECK(std::get<CnotGate>(prog.gates[1]) == cnot(0, 2));
  CHECK(std::get<CnotGate>(prog.gates[2]) == cnot(2, 1));
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t x = i >> 2, y = (i >> 1) & 1, z = i & 1;
    const std::size_t expected = ((x ^ y) << 2) | ((x ^ z) << 1) | (x ^ y ^ z);
    CHECK(apply_classical(prog, 3, i) == expected);
  }
  CnotProgram empty;
  auto psi = random_state(3);
  CHECK(max_diff(apply_program(psi, empty), psi) == 0.0);
}

TEST_CASE("NOT versus a quarter rotation on basis states") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
      auto basis = PureState<double>::basis(n, i);
      for (std::size_t q = 0; q < n; ++q) {
        auto rot = density_of(apply_rotation(basis, q, not_rotation<double>()));
        auto flip = density_of(apply_not(basis, q));
        CHECK((rot.matrix() - flip.matrix()).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("product notation") {
  auto p = parse_product("P20 P10 P01 P0!2");
  REQUIRE(p.size() == 4);
  CHECK(std::get<CnotGate>(p.gates[0]) == cnot(0, 2, true));
  CHECK(format_product(p) == "P20 P10 P01 P0!2");
  CHECK(std::get<CnotGate>(parse_product("P!20").gates[0]) == cnot(2, 0, false, true));
  CHECK(std::get<NotGate>(parse_product("X1").gates[0]).target == 1);
  CHECK(parse_product("P21P02P10") == parse_product("P21 P02 P10"));
  CHECK(parse_product("").empty());
  CHECK(format_product(CnotProgram{}).empty());
  for (const char* bad : {"P", "P1", "P11", "Q01", "P0!!1", "X", "P0 1", "P01 Y"}) {
    CHECK_THROWS_AS(parse_product(bad), std::invalid_argument);
  }
}

TEST_CASE("product notation round-trips") {
  for (int k = 0; k < 500; ++k) {
    auto p = random_program(2 + k % 8, k % 10);
    CHECK(parse_product(format_product(p)) == p);
  }
}
