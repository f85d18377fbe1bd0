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

// Floating-point oracle. Samples psi and operator coefficients on an
// equispaced periodic grid, differentiates the sampled psi spectrally and
// integrates with the equal-weight trapezoid rule. Nothing here reads
// symbol() or mean(); agreement with the exact engine is the point.

#ifndef OPCONS_NUMLAB_HPP
#define OPCONS_NUMLAB_HPP

#include "opcons/diffop.hpp"
#include "opcons/exactnum.hpp"
#include "opcons/fourier.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace opcons {

using Complex = std::complex<double>;

/// Values for symbolic constants.
using Binding = std::map<std::string, Rational, std::less<>>;

/// n_nodes equispaced points phi_j = 2 pi j / n on [0, 2 pi).
class GridSpec {
 public:
  /// Throws DomainError for fewer than 4 nodes.
  explicit GridSpec(std::size_t n_nodes);

  std::size_t size() const noexcept { return n_; }
  double node(std::size_t j) const;
  double weight() const;

 private:
  std::size_t n_;
};

/// Throws UnboundConstantError naming the first missing constant.
Complex eval_const(const ConstPoly& c, const Binding& b);
Complex eval_fourier(const FourierPoly& f, const Binding& b, double phi);

/// psi(phi) = rho e^{i phi}
Complex eval_wave(const WaveSpec& w, double phi);

/// (p psi)(phi_j) at every grid node. The n-th derivative of the sampled psi
/// is taken by discrete Fourier transform with (ik)^n per mode.
std::vector<Complex> apply_numeric(const DiffOp& p, const WaveSpec& w, const Binding& b,
                                   const GridSpec& g);

/// Trapezoid quadrature of conj(psi) * (p psi) over one period.
Complex quad_expectation(const DiffOp& p, const WaveSpec& w, const Binding& b, const GridSpec& g);

/// quad_expectation(p + dp) - quad_expectation(p).
Complex quad_delta_expectation(const DiffOp& p, const DiffOp& dp, const WaveSpec& w,
                               const Binding& b, const GridSpec& g);

/// Trapezoid quadrature of |psi|^2; 2 pi rho^2.
double check_normalization(const WaveSpec& w, const GridSpec& g);

/// Trapezoid quadrature of f / (2 pi) over one period.
Complex quad_mean(const FourierPoly& f, const Binding& b, const GridSpec& g);

struct ProbeReport {
  std::size_t trials = 0;
  bool family_only = false;
  std::uint64_t seed = 0;
  /// Numeric delta of the expectation value for each trial, in trial order.
  std::vector<Complex> deltas;
  double max_abs_delta = 0.0;
  /// Share of trials with |delta| > detection_threshold.
  double detected_fraction = 0.0;

  static constexpr double detection_threshold = 1e-6;
};

/// Random perturbations of p, measured by quadrature. With family_only every
/// perturbation is conserved_family(0, dB2); otherwise it is an arbitrary
/// operator of order <= 4. Coefficients are small rationals, bandwidth <= 4.
/// Trial t draws from a stream seeded by (seed, t), so reports are
/// reproducible bit for bit. Throws DomainError for trials == 0.
ProbeReport probe_ensemble(const DiffOp& p, bool family_only, std::size_t trials,
                           std::uint64_t seed, const Binding& b, const GridSpec& g,
                           const WaveSpec& w = WaveSpec());

}  // namespace opcons

#endif  // OPCONS_NUMLAB_HPP
