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

#include "opcons/numlab.hpp"

#include "opcons/conservation.hpp"
#include "opcons/error.hpp"
#include "opcons/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace opcons {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Spectral coefficients below this fraction of the largest one are roundoff;
// dropping them keeps (ik)^n from amplifying noise at high order.
constexpr double kSpectralCutoff = 1e-12;

double to_double(const Rational& r) { return r.convert_to<double>(); }

Complex to_complex(const GaussRat& g) { return {to_double(g.re()), to_double(g.im())}; }

}  // namespace

GridSpec::GridSpec(std::size_t n_nodes) : n_(n_nodes) {
  if (n_nodes < 4) throw DomainError("grid needs at least 4 nodes");
}

double GridSpec::node(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(n_); }

double GridSpec::weight() const { return kTwoPi / static_cast<double>(n_); }

Complex eval_const(const ConstPoly& c, const Binding& b) {
  Complex sum{0.0, 0.0};
  for (const auto& [m, coeff] : c.terms()) {
    double product = 1.0;
    for (const auto& [name, e] : m.factors()) {
      auto it = b.find(name);
      if (it == b.end()) throw UnboundConstantError(name);
      product *= std::pow(to_double(it->second), static_cast<int>(e));
    }
    sum += to_complex(coeff) * product;
  }
  return sum;
}

Complex eval_fourier(const FourierPoly& f, const Binding& b, double phi) {
  Complex sum{0.0, 0.0};
  for (const auto& [k, c] : f.modes()) sum += eval_const(c, b) * std::polar(1.0, k * phi);
  return sum;
}

Complex eval_wave(const WaveSpec& w, double phi) { return std::polar(w.rho(), phi); }

std::vector<Complex> apply_numeric(const DiffOp& p, const WaveSpec& w, const Binding& b,
                                   const GridSpec& g) {
  const std::size_t n = g.size();
  std::vector<Complex> psi(n);
  for (std::size_t j = 0; j < n; ++j) psi[j] = eval_wave(w, g.node(j));

  // Discrete Fourier coefficients for frequencies -n/2 .. n/2 - 1.
  const long half = static_cast<long>(n / 2);
  std::vector<long> freqs;
  std::vector<Complex> spectrum;
  double largest = 0.0;
  for (long k = -half; k < static_cast<long>(n) - half; ++k) {
    Complex c{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) c += psi[j] * std::polar(1.0, -static_cast<double>(k) * g.node(j));
    c /= static_cast<double>(n);
    freqs.push_back(k);
    spectrum.push_back(c);
    largest = std::max(largest, std::abs(c));
  }
  for (auto& c : spectrum)
    if (std::abs(c) <= kSpectralCutoff * largest) c = 0.0;

  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (const auto& [order, coeff] : p.coefficients()) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex derivative{0.0, 0.0};
      for (std::size_t m = 0; m < freqs.size(); ++m) {
        if (spectrum[m] == 0.0) continue;
        const Complex ik{0.0, static_cast<double>(freqs[m])};
        derivative += spectrum[m] * std::pow(ik, static_cast<int>(order)) *
                      std::polar(1.0, static_cast<double>(freqs[m]) * g.node(j));
      }
      out[j] += eval_fourier(coeff, b, g.node(j)) * derivative;
    }
  }
  return out;
}

Complex quad_expectation(const DiffOp& p, const WaveSpec& w, const Binding& b, const GridSpec& g) {
  const std::vector<Complex> action = apply_numeric(p, w, b, g);
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < g.size(); ++j) sum += std::conj(eval_wave(w, g.node(j))) * action[j];
  return sum * g.weight();
}

Complex quad_delta_expectation(const DiffOp& p, const DiffOp& dp, const WaveSpec& w,
                               const Binding& b, const GridSpec& g) {
  return quad_expectation(p + dp, w, b, g) - quad_expectation(p, w, b, g);
}

double check_normalization(const WaveSpec& w, const GridSpec& g) {
  double sum = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) sum += std::norm(eval_wave(w, g.node(j)));
  return sum * g.weight();
}

Complex quad_mean(const FourierPoly& f, const Binding& b, const GridSpec& g) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < g.size(); ++j) sum += eval_fourier(f, b, g.node(j));
  return sum / static_cast<double>(g.size());
}

ProbeReport probe_ensemble(const DiffOp& p, bool family_only, std::size_t trials,
                           std::uint64_t seed, const Binding& b, const GridSpec& g,
                           const WaveSpec& w) {
  if (trials == 0) throw DomainError("probe ensemble needs at least one trial");

  RandomShape shape;
  shape.bandwidth = 4;
  shape.max_order = 4;
  shape.max_numerator = 3;
  shape.max_denominator = 3;
  shape.density = 0.5;

  ProbeReport report;
  report.trials = trials;
  report.family_only = family_only;
  report.seed = seed;
  report.deltas.reserve(trials);

  const Complex base = quad_expectation(p, w, b, g);
  std::size_t detected = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_stream(seed, t);
    const DiffOp dp = family_only ? conserved_family(ConstPoly(), random_fourier(rng, shape))
                                  : random_diffop(rng, shape);
    const Complex delta = quad_expectation(p + dp, w, b, g) - base;
    report.deltas.push_back(delta);
    report.max_abs_delta = std::max(report.max_abs_delta, std::abs(delta));
    if (std::abs(delta) > ProbeReport::detection_threshold) ++detected;
  }
  report.detected_fraction = static_cast<double>(detected) / static_cast<double>(trials);
  return report;
}

}  // namespace opcons
