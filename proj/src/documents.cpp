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

#include "qclone/documents.hpp"

#include <stdexcept>

namespace qclone {

void to_json(nlohmann::json& j, const GateRecord& g) {
  if (g.op == "not") {
    j = nlohmann::json{{"op", "not"}, {"target", g.target}};
    return;
  }
  j = nlohmann::json{{"op", g.op},
                     {"control", g.control},
                     {"target", g.target},
                     {"invert_target", g.invert_target},
                     {"invert_control", g.invert_control}};
}

void from_json(const nlohmann::json& j, GateRecord& g) {
  g = GateRecord{};
  g.op = j.value("op", std::string("cnot"));
  j.at("target").get_to(g.target);
  if (g.op == "not") return;
  j.at("control").get_to(g.control);
  g.invert_target = j.value("invert_target", false);
  g.invert_control = j.value("invert_control", false);
}

CircuitDocument CircuitDocument::from_program(std::size_t n_qubits, const CnotProgram& program) {
  CircuitDocument doc;
  doc.n_qubits = n_qubits;
  doc.product = format_product(program);
  for (const Gate& gate : program.gates) {
    validate(gate, n_qubits);
    GateRecord rec;
    if (const auto* cnot = std::get_if<CnotGate>(&gate)) {
      rec.control = cnot->control;
      rec.target = cnot->target;
      rec.invert_target = cnot->invert_target;
      rec.invert_control = cnot->invert_control;
    } else {
      rec.op = "not";
      rec.target = std::get<NotGate>(gate).target;
    }
    doc.gates.push_back(rec);
  }
  return doc;
}

CnotProgram CircuitDocument::to_program() const {
  if (schema != kSchemaVersion) throw std::invalid_argument("CircuitDocument: unsupported schema");
  if (order != "application") throw std::invalid_argument("CircuitDocument: order must be \"application\"");
  CnotProgram program;
  for (const auto& rec : gates) {
    if (rec.op == "cnot") {
      program.gates.emplace_back(CnotGate{rec.control, rec.target, rec.invert_target, rec.invert_control});
    } else if (rec.op == "not") {
      program.gates.emplace_back(NotGate{rec.target});
    } else {
      throw std::invalid_argument("CircuitDocument: unknown op '" + rec.op + "'");
    }
    validate(program.gates.back(), n_qubits);
  }
  return program;
}

}  // namespace qclone
