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

// Linear differential operators sum_n A_n(phi) d^n/dphi^n with Fourier
// polynomial coefficients, and their action on the single-mode wavefunction
// psi(phi) = rho e^{i phi}.
//
// "Equal" between two operators in the collapse sense means equal action on
// psi only. On psi every derivative is a power of i, so d^3 acts like -d and
// d^4 like -d^2; an operator identity is a much stronger statement.

#ifndef OPCONS_DIFFOP_HPP
#define OPCONS_DIFFOP_HPP

#include "opcons/exactnum.hpp"
#include "opcons/fourier.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace opcons {

/// Finite-order differential operator: derivative order -> coefficient
/// function. Zero coefficients are never stored.
class DiffOp {
 public:
  using Coefficients = std::map<unsigned, FourierPoly>;

  DiffOp() = default;
  /// coeff * d^order
  static DiffOp derivative(unsigned order, FourierPoly coeff = FourierPoly(1));
  /// Multiplication by f.
  static DiffOp multiplication(FourierPoly f) { return derivative(0, std::move(f)); }

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  FourierPoly coefficient(unsigned order) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest derivative order present, 0 for the zero operator.
  unsigned order() const;
  /// True when no coefficient depends on phi.
  bool has_constant_coefficients() const;
  std::set<std::string> symbols() const;

  DiffOp scale(const ConstPoly& c) const;
  DiffOp substitute(std::string_view name, const ConstPoly& value) const;

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(const DiffOp& a) { return a.scale(ConstPoly(-1)); }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void add_coefficient(unsigned order, const FourierPoly& f);

  Coefficients coeffs_;
};

/// Operator product p o q, expanded with the Leibniz rule
/// d^n (f .) = sum_j C(n, j) f^(j) d^(n-j).
DiffOp compose(const DiffOp& p, const DiffOp& q);

/// The function sigma with p psi = sigma psi for psi = rho e^{i phi}:
/// sigma = sum_n A_n i^n.
FourierPoly symbol(const DiffOp& p);

/// Second-order reduced form A0 + B1 d + B2 d^2. Any triple is legal; no
/// conservation condition is implied.
struct CollapsedOp {
  FourierPoly a0;
  FourierPoly b1;
  FourierPoly b2;

  /// {0: a0, 1: b1, 2: b2}
  DiffOp expand() const;

  friend bool operator==(const CollapsedOp&, const CollapsedOp&) = default;
};

/// Fold every order above 2 onto orders 1 and 2 using the alternating
/// identities that hold on psi: b1 = A1 - A3 + A5 - ..., b2 = A2 - A4 + A6 - ...
/// symbol(collapse(p).expand()) == symbol(p).
CollapsedOp collapse(const DiffOp& p);

/// psi(phi) = rho e^{i phi} on [0, 2 pi).
///
/// The amplitude is a positive real. When the norm <psi|psi> = 2 pi rho^2 is
/// rational it is also kept exactly, which is what exact expectation values
/// need; the default wavefunction has norm exactly 1.
class WaveSpec {
 public:
  /// rho = (2 pi)^{-1/2}, norm 1.
  WaveSpec();
  /// rho chosen so that <psi|psi> = norm. Throws DomainError unless norm > 0.
  static WaveSpec with_norm(const Rational& norm);
  /// Arbitrary positive amplitude; the exact norm is then unknown.
  static WaveSpec with_amplitude(double rho);

  double rho() const noexcept { return rho_; }
  const std::optional<Rational>& exact_norm() const noexcept { return norm_; }
  bool is_normalized() const { return norm_ && *norm_ == 1; }

 private:
  WaveSpec(double rho, std::optional<Rational> norm) : rho_(rho), norm_(std::move(norm)) {}

  double rho_;
  std::optional<Rational> norm_;
};

/// p psi written as amplitude * profile(phi).
struct WaveAction {
  double amplitude;
  FourierPoly profile;
};

/// Action of p on psi: rho * symbol(p) * e^{i phi}, with rho kept as a separate
/// floating-point factor so the profile stays exact.
WaveAction apply_symbolic(const DiffOp& p, const WaveSpec& w);

}  // namespace opcons

#endif  // OPCONS_DIFFOP_HPP
