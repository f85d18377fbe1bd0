/*
   Copyright 2026 The opcons Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "opcons/diffop.hpp"

#include "opcons/error.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace opcons {

DiffOp DiffOp::derivative(unsigned order, FourierPoly coeff) {
  DiffOp p;
  if (!coeff.is_zero()) p.coeffs_.emplace(order, std::move(coeff));
  return p;
}

FourierPoly DiffOp::coefficient(unsigned order) const {
  auto it = coeffs_.find(order);
  return it == coeffs_.end() ? FourierPoly() : it->second;
}

unsigned DiffOp::order() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

bool DiffOp::has_constant_coefficients() const {
  for (const auto& [n, f] : coeffs_)
    if (!f.is_constant()) return false;
  return true;
}

std::set<std::string> DiffOp::symbols() const {
  std::set<std::string> out;
  for (const auto& [n, f] : coeffs_) out.merge(f.symbols());
  return out;
}

DiffOp DiffOp::scale(const ConstPoly& c) const {
  DiffOp out;
  for (const auto& [n, f] : coeffs_) out.add_coefficient(n, f.scale(c));
  return out;
}

DiffOp DiffOp::substitute(std::string_view name, const ConstPoly& value) const {
  DiffOp out;
  for (const auto& [n, f] : coeffs_) out.add_coefficient(n, f.substitute(name, value));
  return out;
}

void DiffOp::add_coefficient(unsigned order, const FourierPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(order, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  for (const auto& [n, f] : other.coeffs_) add_coefficient(n, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  for (const auto& [n, f] : other.coeffs_) add_coefficient(n, -f);
  return *this;
}

DiffOp compose(const DiffOp& p, const DiffOp& q) {
  DiffOp out;
  for (const auto& [n, a] : p.coefficients()) {
    for (const auto& [m, b] : q.coefficients()) {
      // a d^n (b d^m) = sum_j C(n,j) a b^(j) d^(n-j+m)
      FourierPoly b_deriv = b;
      Rational binom(1);
      for (unsigned j = 0; j <= n && !b_deriv.is_zero(); ++j) {
        const FourierPoly term = (a * b_deriv).scale(ConstPoly(GaussRat(binom)));
        out += DiffOp::derivative(n - j + m, term);
        binom = binom * (n - j) / (j + 1);
        b_deriv = b_deriv.diff();
      }
    }
  }
  return out;
}

FourierPoly symbol(const DiffOp& p) {
  FourierPoly sigma;
  for (const auto& [n, f] : p.coefficients()) sigma += f.scale(ConstPoly(i_pow(n)));
  return sigma;
}

DiffOp CollapsedOp::expand() const {
  return DiffOp::derivative(0, a0) + DiffOp::derivative(1, b1) + DiffOp::derivative(2, b2);
}

CollapsedOp collapse(const DiffOp& p) {
  // On psi, d^(n+2) = -d^n for n >= 1, so order n folds onto 1 (odd) or
  // 2 (even) with sign (-1)^((n-1)/2) or (-1)^((n-2)/2).
  CollapsedOp out;
  for (const auto& [n, f] : p.coefficients()) {
    if (n == 0) {
      out.a0 += f;
      continue;
    }
    const bool negate = ((n - 1) / 2) % 2 == 1;
    FourierPoly& target = (n % 2 == 1) ? out.b1 : out.b2;
    if (negate)
      target -= f;
    else
      target += f;
  }
  return out;
}

WaveSpec::WaveSpec() : WaveSpec(1.0 / std::sqrt(2.0 * std::numbers::pi), Rational(1)) {}

WaveSpec WaveSpec::with_norm(const Rational& norm) {
  if (norm <= 0) throw DomainError("wavefunction norm must be positive");
  const double rho = std::sqrt(norm.convert_to<double>() / (2.0 * std::numbers::pi));
  return WaveSpec(rho, norm);
}

WaveSpec WaveSpec::with_amplitude(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("wavefunction amplitude must be positive");
  return WaveSpec(rho, std::nullopt);
}

WaveAction apply_symbolic(const DiffOp& p, const WaveSpec& w) {
  return WaveAction{w.rho(), symbol(p) * FourierPoly::mode(1)};
}

}  // namespace opcons
