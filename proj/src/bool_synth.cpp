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

#include "qclone/bool_synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qclone/errors.hpp"
#include "qclone/state.hpp"

namespace qclone {

namespace {

constexpr std::size_t kMaxStarredCells = 24;

bool monomial_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::size_t log2_exact(std::size_t size, const char* who) {
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::domain_error(std::string(who) + ": length is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(size));
}

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch != ' ' && ch != '\t' && ch != '\r') out += ch;
  }
  return out;
}

}  // namespace

std::uint32_t index_to_vars(std::size_t index, std::size_t n) {
  std::uint32_t vars = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1U) vars |= 1U << q;
  }
  return vars;
}

std::size_t vars_to_index(std::uint32_t vars, std::size_t n) {
  std::size_t index = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((vars >> q) & 1U) index |= std::size_t{1} << (n - 1 - q);
  }
  return index;
}

TruthTable::TruthTable(std::size_t n, std::vector<std::vector<Trit>> rows) : n_(n), rows_(std::move(rows)) {
  if (n == 0 || n > kMaxQubits) throw std::domain_error("TruthTable: bad variable count");
  if (rows_.size() != (std::size_t{1} << n)) throw std::domain_error("TruthTable: need 2^n rows");
  for (const auto& r : rows_) {
    if (r.size() != n) throw std::domain_error("TruthTable: each row needs n outputs");
  }
}

std::vector<Trit> TruthTable::column(std::size_t output) const {
  if (output >= n_) throw std::domain_error("TruthTable: output index out of range");
  std::vector<Trit> col;
  col.reserve(rows_.size());
  for (const auto& r : rows_) col.push_back(r[output]);
  return col;
}

std::size_t TruthTable::dont_care_count() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += static_cast<std::size_t>(std::count(r.begin(), r.end(), Trit::kDontCare));
  return count;
}

std::size_t AnfPolynomial::degree() const {
  std::size_t d = 0;
  for (auto m : monomials) d = std::max(d, static_cast<std::size_t>(std::popcount(m)));
  return d;
}

bool AnfPolynomial::evaluate(std::uint32_t vars) const {
  bool value = false;
  for (auto m : monomials) value ^= (vars & m) == m;
  return value;
}

std::string variable_name(std::size_t var, std::size_t n) {
  if (n <= 3) return std::string(1, "xyz"[var]);
  return "x" + std::to_string(var);
}

std::string monomial_name(std::uint32_t mask, std::size_t n) {
  if (mask == 0) return "1";
  std::string out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!((mask >> v) & 1U)) continue;
    if (!out.empty()) out += '&';
    out += variable_name(v, n);
  }
  return out;
}

std::string AnfPolynomial::to_string() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (auto m : monomials) {
    if (!out.empty()) out += " ^ ";
    out += monomial_name(m, n);
  }
  return out;
}

AnfPolynomial anf_of(std::span<const Trit> column) {
  const std::size_t n = log2_exact(column.size(), "anf_of");
  if (n == 0 || n > kMaxQubits) throw std::domain_error("anf_of: bad variable count");
  std::vector<std::uint8_t> coeff(column.size());
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (column[k] == Trit::kDontCare) throw std::domain_error("anf_of: column contains a don't-care");
    coeff[k] = column[k] == Trit::kOne ? 1 : 0;
  }
  // Moebius transform over GF(2).
  for (std::size_t stride = 1; stride < coeff.size(); stride <<= 1) {
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      if (k & stride) coeff[k] ^= coeff[k ^ stride];
    }
  }
  AnfPolynomial p;
  p.n = n;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k]) p.monomials.push_back(index_to_vars(k, n));
  }
  std::sort(p.monomials.begin(), p.monomials.end(), monomial_less);
  return p;
}

bool is_affine(const AnfPolynomial& p) { return p.degree() <= 1; }

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m;
  m.n = n;
  for (std::size_t i = 0; i < n; ++i) m.rows.push_back(1U << i);
  return m;
}

std::uint32_t LinearMap::apply_vars(std::uint32_t vars) const {
  std::uint32_t out = affine;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::popcount(rows[i] & vars) & 1) out ^= 1U << i;
  }
  return out;
}

std::size_t LinearMap::apply_index(std::size_t index) const {
  return vars_to_index(apply_vars(index_to_vars(index, n)), n);
}

bool LinearMap::invertible() const {
  std::vector<std::uint32_t> m = rows;
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint32_t bit = 1U << col;
    auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(col), m.end(),
                              [bit](std::uint32_t r) { return (r & bit) != 0; });
    if (pivot == m.end()) return false;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(col), pivot);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && (m[r] & bit)) m[r] ^= m[col];
    }
  }
  return true;
}

TruthTable LinearMap::table() const {
  std::vector<std::vector<Trit>> out(std::size_t{1} << n, std::vector<Trit>(n));
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::uint32_t y = apply_vars(index_to_vars(k, n));
    for (std::size_t j = 0; j < n; ++j) out[k][j] = (y >> j) & 1U ? Trit::kOne : Trit::kZero;
  }
  return TruthTable(n, std::move(out));
}

std::optional<LinearMap> map_of_table(const TruthTable& t) {
  LinearMap m;
  m.n = t.n();
  m.rows.assign(t.n(), 0);
  for (std::size_t j = 0; j < t.n(); ++j) {
    const auto p = anf_of(t.column(j));
    if (!is_affine(p)) return std::nullopt;
    for (auto mono : p.monomials) {
      if (mono == 0) {
        m.affine |= 1U << j;
      } else {
        m.rows[j] |= mono;
      }
    }
  }
  return m;
}

bool admits_affine_completion(std::span<const Trit> column) {
  std::vector<std::size_t> starred;
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (column[k] == Trit::kDontCare) starred.push_back(k);
  }
  if (starred.size() > kMaxStarredCells) throw std::domain_error("too many don't-care cells");
  std::vector<Trit> filled(column.begin(), column.end());
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << starred.size()); ++a) {
    for (std::size_t s = 0; s < starred.size(); ++s) {
      filled[starred[s]] = (a >> (starred.size() - 1 - s)) & 1U ? Trit::kOne : Trit::kZero;
    }
    if (is_affine(anf_of(filled))) return true;
  }
  return false;
}

std::vector<Completion> enumerate_completions(const TruthTable& t) {
  struct Cell {
    std::size_t row, output;
  };
  std::vector<Cell> starred;
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (t.cell(k, j) == Trit::kDontCare) starred.push_back({k, j});
    }
  }
  if (starred.size() > kMaxStarredCells) throw std::domain_error("enumerate_completions: too many don't-care cells");

  std::vector<std::vector<Trit>> rows;
  for (std::size_t k = 0; k < t.size(); ++k) rows.push_back(t.row(k));

  std::vector<Completion> out;
  const std::size_t count = starred.size();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << count); ++a) {
    std::vector<bool> assignment(count);
    for (std::size_t s = 0; s < count; ++s) {
      assignment[s] = ((a >> (count - 1 - s)) & 1U) != 0;
      rows[starred[s].row][starred[s].output] = assignment[s] ? Trit::kOne : Trit::kZero;
    }
    TruthTable filled(t.n(), rows);
    auto map = map_of_table(filled);
    if (!map || !map->invertible()) continue;
    out.push_back(Completion{std::move(filled), std::move(*map), std::move(assignment)});
  }
  return out;
}

CnotProgram synthesize(const LinearMap& map) {
  const std::size_t n = map.n;
  if (map.rows.size() != n) throw std::domain_error("synthesize: malformed map");
  std::vector<std::uint32_t> m = map.rows;
  // Each elimination step adds row `control` into row `target`.
  std::vector<CnotGate> steps;
  auto add_row = [&](std::size_t control, std::size_t target) {
    m[target] ^= m[control];
    steps.push_back(CnotGate{control, target});
  };

  for (std::size_t col = 0; col < n; ++col) {
    const std::uint32_t bit = 1U << col;
    if (!(m[col] & bit)) {
      std::size_t r = col + 1;
      while (r < n && !(m[r] & bit)) ++r;
      if (r == n) throw not_reversible_error("synthesize: matrix is singular over GF(2)");
      add_row(r, col);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r] & bit) add_row(col, r);
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    const std::uint32_t bit = 1U << col;
    for (std::size_t r = 0; r < col; ++r) {
      if (m[r] & bit) add_row(col, r);
    }
  }

  // steps_k ... steps_1 M = I, so M = steps_1 ... steps_k: the last step acts first.
  CnotProgram program;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) program.gates.emplace_back(*it);

  for (std::size_t q = 0; q < n; ++q) {
    if (!((map.affine >> q) & 1U)) continue;
    auto last = std::find_if(program.gates.rbegin(), program.gates.rend(), [q](const Gate& g) {
      if (const auto* c = std::get_if<CnotGate>(&g)) return c->control == q || c->target == q;
      return std::get<NotGate>(g).target == q;
    });
    auto* cnot = last != program.gates.rend() ? std::get_if<CnotGate>(&*last) : nullptr;
    if (cnot && cnot->target == q && !cnot->invert_target) {
      cnot->invert_target = true;
    } else {
      program.gates.emplace_back(NotGate{q});
    }
  }
  return program;
}

bool verify_program(const CnotProgram& program, const TruthTable& t, BarredControl semantics) {
  const std::size_t n = t.n();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto out = apply_program(PureState<double>::basis(n, k), program, semantics);
    Eigen::Index image = 0;
    const double peak = out.amplitudes().cwiseAbs().maxCoeff(&image);
    if (std::abs(peak - 1.0) > kExactTolerance) return false;
    const auto index = static_cast<std::size_t>(image);
    for (std::size_t j = 0; j < n; ++j) {
      const Trit expected = t.cell(k, j);
      if (expected == Trit::kDontCare) continue;
      const bool bit = (index >> (n - 1 - j)) & 1U;
      if (bit != (expected == Trit::kOne)) return false;
    }
  }
  return true;
}

TruthTable induced_table(const CnotProgram& program, std::size_t n, BarredControl semantics) {
  std::vector<std::vector<Trit>> rows(std::size_t{1} << n, std::vector<Trit>(n));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t image = apply_classical(program, n, k, semantics);
    for (std::size_t j = 0; j < n; ++j) rows[k][j] = (image >> (n - 1 - j)) & 1U ? Trit::kOne : Trit::kZero;
  }
  return TruthTable(n, std::move(rows));
}

TruthTable parse_truth_table(std::string_view text) {
  std::size_t n = 0;
  std::vector<std::vector<Trit>> rows;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw parse_error(line_no, "expected '<bits> -> <bits>'");
    const std::string lhs = line.substr(0, arrow);
    const std::string rhs = line.substr(arrow + 2);
    if (n == 0) {
      n = lhs.size();
      if (n == 0 || n > kMaxQubits) throw parse_error(line_no, "input width must be 1.." + std::to_string(kMaxQubits));
      rows.assign(std::size_t{1} << n, {});
      seen.assign(rows.size(), false);
    }
    if (lhs.size() != n || rhs.size() != n)
      throw parse_error(line_no, "every row needs " + std::to_string(n) + " input and output bits");

    std::size_t index = 0;
    for (char ch : lhs) {
      if (ch != '0' && ch != '1') throw parse_error(line_no, "input bits must be 0 or 1");
      index = (index << 1) | static_cast<std::size_t>(ch == '1');
    }
    if (seen[index]) throw parse_error(line_no, "duplicate row " + lhs);
    seen[index] = true;

    std::vector<Trit> outputs;
    for (char ch : rhs) {
      if (ch == '0') {
        outputs.push_back(Trit::kZero);
      } else if (ch == '1') {
        outputs.push_back(Trit::kOne);
      } else if (ch == '*') {
        outputs.push_back(Trit::kDontCare);
      } else {
        throw parse_error(line_no, "output bits must be 0, 1 or *");
      }
    }
    rows[index] = std::move(outputs);
  }
  if (n == 0) throw parse_error(line_no, "empty truth table");
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw parse_error(line_no, "missing rows: need all " + std::to_string(rows.size()) + " inputs");
  }
  return TruthTable(n, std::move(rows));
}

std::string format_truth_table(const TruthTable& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t q = 0; q < t.n(); ++q) out += (k >> (t.n() - 1 - q)) & 1U ? '1' : '0';
    out += " -> ";
    for (Trit v : t.row(k)) out += v == Trit::kOne ? '1' : v == Trit::kZero ? '0' : '*';
    out += '\n';
  }
  return out;
}

}  // namespace qclone
