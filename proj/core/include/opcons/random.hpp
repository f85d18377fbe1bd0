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

// Seeded generators of random exact values, used by the probe ensemble, the
// CLI verify corpus, property tests and benchmarks.

#ifndef OPCONS_RANDOM_HPP
#define OPCONS_RANDOM_HPP

#include "opcons/diffop.hpp"
#include "opcons/exactnum.hpp"
#include "opcons/fourier.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace opcons {

struct RandomShape {
  unsigned max_order = 8;
  int bandwidth = 4;
  /// Symbols that may appear in coefficients (each with exponent <= 2).
  std::vector<std::string> symbols;
  /// Numerators in [-max_numerator, max_numerator], denominators in [1, max_denominator].
  int max_numerator = 5;
  int max_denominator = 4;
  /// Chance that a given order / frequency slot is populated.
  double density = 0.4;
};

using Rng = std::mt19937_64;

/// Stream for trial `index` of a run seeded with `seed`.
Rng derive_stream(std::uint64_t seed, std::uint64_t index);

Rational random_rational(Rng& rng, const RandomShape& shape);
GaussRat random_gauss_rat(Rng& rng, const RandomShape& shape);
ConstPoly random_const_poly(Rng& rng, const RandomShape& shape);
FourierPoly random_fourier(Rng& rng, const RandomShape& shape);
DiffOp random_diffop(Rng& rng, const RandomShape& shape);

}  // namespace opcons

#endif  // OPCONS_RANDOM_HPP
