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

#include "qclone/prep_solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

constexpr double kSingularTolerance = 1e-9;
constexpr double kAcceptTolerance = 1e-9;
constexpr double kNewtonResidual = 1e-10;
constexpr int kNewtonIterations = 100;

using Jacobian = Eigen::Matrix<double, 4, 3>;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

Vec4 equations(const Vec3& t) {
  const double c1 = std::cos(t(0)), c2 = std::cos(t(1)), c3 = std::cos(t(2));
  const double s1 = std::sin(t(0)), s2 = std::sin(t(1)), s3 = std::sin(t(2));
  return Vec4(c1 * c2 * c3 + s1 * s2 * s3, s1 * c2 * c3 - c1 * s2 * s3, c1 * c2 * s3 - s1 * s2 * c3,
              c1 * s2 * c3 + s1 * c2 * s3);
}

Jacobian jacobian(const Vec3& t) {
  const double c1 = std::cos(t(0)), c2 = std::cos(t(1)), c3 = std::cos(t(2));
  const double s1 = std::sin(t(0)), s2 = std::sin(t(1)), s3 = std::sin(t(2));
  Jacobian j;
  j.col(0) << -s1 * c2 * c3 + c1 * s2 * s3, c1 * c2 * c3 + s1 * s2 * s3, -s1 * c2 * s3 - c1 * s2 * c3,
      -s1 * s2 * c3 + c1 * c2 * s3;
  j.col(1) << -c1 * s2 * c3 + s1 * c2 * s3, -s1 * s2 * c3 - c1 * c2 * s3, -c1 * s2 * s3 - s1 * c2 * c3,
      c1 * c2 * c3 - s1 * s2 * s3;
  j.col(2) << -c1 * c2 * s3 + s1 * s2 * c3, -s1 * c2 * s3 - c1 * s2 * c3, c1 * c2 * c3 + s1 * s2 * s3,
      -c1 * s2 * s3 + s1 * c2 * c3;
  return j;
}

void push_unique(std::vector<AngleTriple>& out, const AngleTriple& candidate, double tol) {
  for (const auto& existing : out) {
    if (existing.approx_equal(candidate, tol)) return;
  }
  out.push_back(candidate);
}

std::vector<AngleTriple> filter_signs(const std::array<double, 3>& cos_squared, const PrepCoefficients& target) {
  std::array<double, 3> cos_mag{}, sin_mag{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double k = std::clamp(cos_squared[i], 0.0, 1.0);
    cos_mag[i] = std::sqrt(k);
    sin_mag[i] = std::sqrt(1.0 - k);
  }
  std::vector<AngleTriple> out;
  // Bit i of mask negates component i of (cos1, cos2, cos3, sin1, sin2, sin3).
  for (unsigned mask = 0; mask < 64; ++mask) {
    AngleTriple candidate;
    for (std::size_t i = 0; i < 3; ++i) {
      const double c = (mask >> i) & 1U ? -cos_mag[i] : cos_mag[i];
      const double s = (mask >> (i + 3)) & 1U ? -sin_mag[i] : sin_mag[i];
      candidate.rotations[i] = Rotation<double>{c, s};
    }
    if (prep_residual(candidate, target) <= kAcceptTolerance) push_unique(out, candidate, kExactTolerance);
  }
  return out;
}

bool in_unit_interval(double k) { return k >= -kSingularTolerance && k <= 1.0 + kSingularTolerance; }

}  // namespace

PrepCoefficients PrepCoefficients::checked(const std::array<double, 4>& c) {
  double norm2 = 0.0;
  for (double v : c) {
    if (!std::isfinite(v)) throw std::domain_error("PrepCoefficients: non-finite coefficient");
    norm2 += v * v;
  }
  if (std::abs(norm2 - 1.0) > kExactTolerance) throw std::domain_error("PrepCoefficients: sum of squares is not 1");
  return PrepCoefficients{c};
}

PrepCoefficients PrepCoefficients::normalized(const std::array<double, 4>& c) {
  double norm2 = 0.0;
  for (double v : c) norm2 += v * v;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::domain_error("PrepCoefficients: zero or non-finite vector");
  const double norm = std::sqrt(norm2);
  return checked({c[0] / norm, c[1] / norm, c[2] / norm, c[3] / norm});
}

double PrepCoefficients::max_abs_diff(const PrepCoefficients& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(c[i] - other.c[i]));
  return worst;
}

SignPattern SignPattern::parse(std::string_view text) {
  SignPattern p;
  std::size_t k = 0;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (k >= 6 || (ch != '+' && ch != '-')) throw std::invalid_argument("SignPattern: expected six of '+'/'-'");
    p.s[k++] = ch == '+' ? 1 : -1;
  }
  if (k != 6) throw std::invalid_argument("SignPattern: expected six of '+'/'-'");
  return p;
}

std::string SignPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i == 3) out += ',';
    out += s[i] > 0 ? '+' : '-';
  }
  return out;
}

AngleTriple AngleTriple::from_angles(double t1, double t2, double t3) {
  return AngleTriple{
      {Rotation<double>::from_angle(t1), Rotation<double>::from_angle(t2), Rotation<double>::from_angle(t3)}};
}

std::array<double, 3> AngleTriple::cos_squared() const {
  return {rotations[0].cos_theta * rotations[0].cos_theta, rotations[1].cos_theta * rotations[1].cos_theta,
          rotations[2].cos_theta * rotations[2].cos_theta};
}

SignPattern AngleTriple::signs() const {
  SignPattern p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.s[i] = rotations[i].cos_theta < 0.0 ? -1 : 1;
    p.s[i + 3] = rotations[i].sin_theta < 0.0 ? -1 : 1;
  }
  return p;
}

bool AngleTriple::approx_equal(const AngleTriple& other, double tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(rotations[i].cos_theta - other.rotations[i].cos_theta) > tol) return false;
    if (std::abs(rotations[i].sin_theta - other.rotations[i].sin_theta) > tol) return false;
  }
  return true;
}

PrepCoefficients eval_prep_equations(const AngleTriple& a) {
  const double c1 = a.rotations[0].cos_theta, s1 = a.rotations[0].sin_theta;
  const double c2 = a.rotations[1].cos_theta, s2 = a.rotations[1].sin_theta;
  const double c3 = a.rotations[2].cos_theta, s3 = a.rotations[2].sin_theta;
  return PrepCoefficients::checked({c1 * c2 * c3 + s1 * s2 * s3, s1 * c2 * c3 - c1 * s2 * s3,
                                    c1 * c2 * s3 - s1 * s2 * c3, c1 * s2 * c3 + s1 * c2 * s3});
}

double prep_residual(const AngleTriple& angles, const PrepCoefficients& target) {
  return eval_prep_equations(angles).max_abs_diff(target);
}

std::optional<std::array<ClosedFormBranch, 2>> closed_form(const PrepCoefficients& coeffs) {
  const double c1 = coeffs[0], c2 = coeffs[1], c3 = coeffs[2], c4 = coeffs[3];
  const double q1 = c1 * c1, q2 = c2 * c2, q3 = c3 * c3, q4 = c4 * c4;

  const double mixed = 1.0 - 4.0 * (q1 * q4 + q2 * q3);
  double discriminant = mixed + 8.0 * c1 * c2 * c3 * c4;
  if (discriminant < -kSingularTolerance) throw no_solution_error("closed_form: negative discriminant");
  discriminant = std::max(discriminant, 0.0);

  // discriminant = cos^2(2 t2). The ratio den1 / sqrt(discriminant) equals
  // den1 * sqrt(discriminant) / mixed only when C1 C2 C3 C4 = 0.
  const double den1 = 1.0 - 2.0 * q3 - 2.0 * q4;
  if (std::abs(den1) < kSingularTolerance || discriminant < kSingularTolerance) return std::nullopt;
  const double ratio = std::clamp(den1 / std::sqrt(discriminant), -1.0, 1.0);

  std::array<ClosedFormBranch, 2> branches{};
  for (std::size_t b = 0; b < 2; ++b) {
    const int sign = b == 0 ? 1 : -1;
    const double k3 = 0.5 * (1.0 + sign * ratio);
    const double den2 = 1.0 - 2.0 * k3;
    if (std::abs(den2) < kSingularTolerance) return std::nullopt;
    const double k2 = (q3 + q4 - k3) / den2;
    const double k1 = (q2 - q3) / den1 + k3 * (1.0 - 2.0 * q2 - 2.0 * q4) / den1;
    branches[b] = ClosedFormBranch{sign, {k1, k2, k3}};
  }
  return branches;
}

std::vector<AngleTriple> newton_solutions(const PrepCoefficients& coeffs) {
  constexpr double pi = std::numbers::pi;
  const Vec4 target(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
  const std::array<double, 4> first{-3 * pi / 4, -pi / 4, pi / 4, 3 * pi / 4};
  const std::array<std::array<double, 2>, 4> rest{
      {{pi / 8, 3 * pi / 8}, {3 * pi / 8, -pi / 8}, {-pi / 8, -3 * pi / 8}, {-3 * pi / 8, pi / 8}}};

  std::vector<AngleTriple> out;
  for (double t1 : first) {
    for (const auto& pair : rest) {
      Vec3 t(t1, pair[0], pair[1]);
      Vec4 r = equations(t) - target;
      double cost = r.squaredNorm();
      double damping = 1e-3;
      for (int it = 0; it < kNewtonIterations && r.cwiseAbs().maxCoeff() >= kNewtonResidual * 1e-2; ++it) {
        const Jacobian j = jacobian(t);
        const Eigen::Matrix3d normal = j.transpose() * j + damping * Eigen::Matrix3d::Identity();
        const Vec3 step = normal.ldlt().solve(-j.transpose() * r);
        const Vec3 trial = t + step;
        const Vec4 trial_r = equations(trial) - target;
        const double trial_cost = trial_r.squaredNorm();
        if (trial_cost < cost) {
          t = trial;
          r = trial_r;
          cost = trial_cost;
          damping = std::max(damping * 0.1, 1e-12);
        } else {
          damping *= 10.0;
        }
      }
      if (r.cwiseAbs().maxCoeff() >= kNewtonResidual) continue;
      // Negating any two rotations leaves the coefficients unchanged.
      const auto base = AngleTriple::from_angles(t(0), t(1), t(2));
      for (const auto& flip :
           {std::array{1, 1, 1}, std::array{-1, -1, 1}, std::array{-1, 1, -1}, std::array{1, -1, -1}}) {
        AngleTriple image = base;
        for (std::size_t i = 0; i < 3; ++i) {
          image.rotations[i].cos_theta *= flip[i];
          image.rotations[i].sin_theta *= flip[i];
        }
        if (prep_residual(image, coeffs) < kNewtonResidual) push_unique(out, image, 1e-7);
      }
    }
  }
  return out;
}

AngleSolutions solve_angles_detailed(const PrepCoefficients& coeffs) {
  const auto c = PrepCoefficients::checked(coeffs.c);
  AngleSolutions result;
  if (const auto branches = closed_form(c)) {
    for (const auto& branch : *branches) {
      if (!std::all_of(branch.cos_squared.begin(), branch.cos_squared.end(), in_unit_interval)) continue;
      for (const auto& sol : filter_signs(branch.cos_squared, c)) push_unique(result.triples, sol, kExactTolerance);
    }
  }
  if (result.triples.empty()) {
    result.method = SolveMethod::kNewton;
    result.triples = newton_solutions(c);
  }
  if (result.triples.empty()) {
    throw no_solution_error("solve_angles: no real preparation angles reproduce the coefficients");
  }
  return result;
}

std::vector<AngleTriple> solve_angles(const PrepCoefficients& c) { return solve_angles_detailed(c).triples; }

PureState<double> prepare_state(const AngleTriple& angles) {
  auto state = PureState<double>::basis(2, 0);
  state = apply_rotation(state, 0, angles.rotations[0]);
  state = apply_cnot(state, CnotGate{0, 1});
  state = apply_rotation(state, 1, angles.rotations[1]);
  state = apply_cnot(state, CnotGate{1, 0});
  state = apply_rotation(state, 0, angles.rotations[2]);
  return state;
}

std::string_view to_string(Variant v) { return v == Variant::kUpper ? "upper" : "lower"; }

Variant parse_variant(std::string_view text) {
  if (text == "upper") return Variant::kUpper;
  if (text == "lower") return Variant::kLower;
  throw std::invalid_argument("variant must be 'upper' or 'lower'");
}

namespace {

struct RowSpec {
  std::array<int, 4> numerators;
  const char* upper;
  const char* lower;
  const char* upper_signs;
  const char* lower_signs;
  std::array<PrintedCosSquared, 3> printed;
};

// 1/2 (1 -/+ x) or 1/2 (1 +/- x), depending on upper_sign.
PrintedCosSquared half(const char* text, double x, int upper_sign) {
  return PrintedCosSquared{text, 0.5, 0.5 * x, upper_sign};
}

std::vector<Table1Row> build_table() {
  const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0);
  const auto h2m = half("1/2(1 -+ 1/sqrt2)", 1 / r2, -1);
  const auto h2p = half("1/2(1 +- 1/sqrt2)", 1 / r2, 1);
  const auto h5m = half("1/2(1 -+ 1/sqrt5)", 1 / r5, -1);
  const auto h5p = half("1/2(1 +- 1/sqrt5)", 1 / r5, 1);
  const auto h25m = half("1/2(1 -+ 2/sqrt5)", 2 / r5, -1);
  const auto h25p = half("1/2(1 +- 2/sqrt5)", 2 / r5, 1);
  const auto h53m = half("1/2(1 -+ sqrt5/3)", r5 / 3, -1);
  const PrintedCosSquared one23m{"1 -+ sqrt2/3", 1.0, r2 / 3, -1};

  const std::array<RowSpec, 12> specs{{
      {{2, 1, 1, 0}, "P21 P02 P10", "P12 P20 P01", "---,+++", "+++,+-+", {h2m, one23m, h2m}},
      {{2, 1, 0, 1}, "P21 P10 P02", "P10 P20 P02 P01", "+++,-+-", "+++,+++", {h5m, h53m, h25m}},
      {{2, 0, 1, 1}, "P12 P01 P20", "P01 P02 P20 P10", "+++,-+-", "+++,+++", {h5m, h53m, h5m}},
      {{1, 2, 1, 0}, "P20 P10 P01 P0!2", "P21 P10 P0!2", "---,+++", "+++,+-+", {h5p, h53m, h25m}},
      {{1, 2, 0, 1}, "P12 P!20 P01", "P21 P0!2 P10", "+++,-+-", "+++,+++", {h2p, one23m, h2m}},
      {{1, 1, 2, 0}, "P01 P02 P20 P!10", "P12 P0!1 P20", "---,+++", "+++,+-+", {h25m, h53m, h5p}},
      {{1, 1, 0, 2}, "P12 P0!1 P!20", "P01 P02 P!20 P!10", "+++,-+-", "+++,+++", {h25p, h53m, h5p}},
      {{1, 0, 2, 1}, "P21 P02 P!10", "P12 P20 P0!1", "+++,-+-", "+++,+++", {h2m, one23m, h2p}},
      {{1, 0, 1, 2}, "P21 P!10 P0!2", "P20 P10 P0!1 P0!2", "+++,-+-", "+++,+++", {h5p, h53m, h25p}},
      {{0, 1, 1, 2}, "P21 P0!2 P!10", "P12 P!20 P0!1", "---,+++", "+++,+-+", {h2p, one23m, h2p}},
      {{0, 1, 2, 1}, "P21 P!10 P02", "P20 P10 P0!1 P02", "---,+++", "+++,+-+", {h5m, h53m, h25p}},
      {{0, 2, 1, 1}, "P12 P01 P!20", "P01 P02 P!20 P10", "---,+++", "+++,+-+", {h25p, h53m, h5m}},
  }};

  std::vector<Table1Row> rows;
  rows.reserve(specs.size());
  const double r6 = std::sqrt(6.0);
  int number = 1;
  for (const auto& spec : specs) {
    Table1Row row;
    row.number = number++;
    row.numerators = spec.numerators;
    row.coefficients = PrepCoefficients::checked(
        {spec.numerators[0] / r6, spec.numerators[1] / r6, spec.numerators[2] / r6, spec.numerators[3] / r6});
    row.circuit_text = {spec.upper, spec.lower};
    row.circuits = {parse_product(spec.upper), parse_product(spec.lower)};
    row.sign_patterns = {SignPattern::parse(spec.upper_signs), SignPattern::parse(spec.lower_signs)};
    row.printed_cos_squared = spec.printed;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::span<const Table1Row> table1_rows() {
  static const std::vector<Table1Row> rows = build_table();
  return rows;
}

const Table1Row& table1_row(int number) {
  if (number < 1 || number > 12) throw std::domain_error("table row must be in 1..12");
  return table1_rows()[static_cast<std::size_t>(number - 1)];
}

}  // namespace qclone
