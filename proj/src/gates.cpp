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

#include "qclone/gates.hpp"

#include <algorithm>
#include <cctype>

namespace qclone {

namespace {

std::size_t flip(std::size_t index, std::size_t n, std::size_t qubit) {
  return index ^ (std::size_t{1} << detail::bit_position(n, qubit));
}

bool bit(std::size_t index, std::size_t n, std::size_t qubit) {
  return ((index >> detail::bit_position(n, qubit)) & 1U) != 0;
}

}  // namespace

void validate(const Gate& gate, std::size_t n_qubits) {
  if (const auto* cnot = std::get_if<CnotGate>(&gate)) {
    if (cnot->control >= n_qubits || cnot->target >= n_qubits) {
      throw std::domain_error("CNOT: qubit index out of range");
    }
    if (cnot->control == cnot->target) throw std::domain_error("CNOT: control equals target");
  } else if (std::get<NotGate>(gate).target >= n_qubits) {
    throw std::domain_error("NOT: qubit index out of range");
  }
}

std::size_t apply_classical(const Gate& gate, std::size_t n, std::size_t index, BarredControl semantics) {
  if (const auto* not_gate = std::get_if<NotGate>(&gate)) return flip(index, n, not_gate->target);

  const auto& g = std::get<CnotGate>(gate);
  std::size_t out = index;
  bool control = bit(out, n, g.control);
  if (g.invert_control) {
    control = !control;
    if (semantics == BarredControl::kFlipQubit) out = flip(out, n, g.control);
  }
  if (control != g.invert_target) out = flip(out, n, g.target);
  return out;
}

std::size_t apply_classical(const CnotProgram& program, std::size_t n, std::size_t index, BarredControl semantics) {
  for (const Gate& g : program.gates) index = apply_classical(g, n, index, semantics);
  return index;
}

std::string format_product(const CnotProgram& program) {
  std::string out;
  for (auto it = program.gates.rbegin(); it != program.gates.rend(); ++it) {
    if (!out.empty()) out += ' ';
    if (const auto* not_gate = std::get_if<NotGate>(&*it)) {
      out += 'X';
      out += std::to_string(not_gate->target);
      continue;
    }
    const auto& g = std::get<CnotGate>(*it);
    out += 'P';
    if (g.invert_control) out += '!';
    out += std::to_string(g.control);
    if (g.invert_target) out += '!';
    out += std::to_string(g.target);
  }
  return out;
}

CnotProgram parse_product(std::string_view text) {
  std::vector<Gate> factors;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("parse_product: " + what + " at offset " + std::to_string(pos));
  };
  auto read_index = [&](bool allow_bar, bool& barred) -> std::size_t {
    barred = false;
    if (allow_bar && pos < text.size() && text[pos] == '!') {
      barred = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected qubit digit");
    return static_cast<std::size_t>(text[pos++] - '0');
  };

  skip_space();
  while (pos < text.size()) {
    const char head = text[pos++];
    bool barred = false;
    if (head == 'X') {
      factors.emplace_back(NotGate{read_index(false, barred)});
    } else if (head == 'P') {
      CnotGate g;
      g.control = read_index(true, barred);
      g.invert_control = barred;
      g.target = read_index(true, barred);
      g.invert_target = barred;
      if (g.control == g.target) fail("control equals target");
      factors.emplace_back(g);
    } else {
      --pos;
      fail("expected 'P' or 'X'");
    }
    skip_space();
  }
  std::reverse(factors.begin(), factors.end());
  return CnotProgram{std::move(factors)};
}

}  // namespace qclone
