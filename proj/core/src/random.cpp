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

#include "opcons/random.hpp"

#include <algorithm>

namespace opcons {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Rng derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Rational random_rational(Rng& rng, const RandomShape& shape) {
  std::uniform_int_distribution<int> num(-shape.max_numerator, shape.max_numerator);
  std::uniform_int_distribution<int> den(1, std::max(1, shape.max_denominator));
  return Rational(num(rng), den(rng));
}

GaussRat random_gauss_rat(Rng& rng, const RandomShape& shape) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return GaussRat(random_rational(rng, shape));
    case 1: return GaussRat(Rational(0), random_rational(rng, shape));
    default: {
      Rational re = random_rational(rng, shape);
      return GaussRat(std::move(re), random_rational(rng, shape));
    }
  }
}

ConstPoly random_const_poly(Rng& rng, const RandomShape& shape) {
  ConstPoly out(random_gauss_rat(rng, shape));
  for (std::size_t s = 0; s < shape.symbols.size(); ++s) {
    const auto& name = shape.symbols[s];
    if (coin(rng, 0.5)) out += ConstPoly(Monomial::symbol(name), random_gauss_rat(rng, shape));
    if (coin(rng, 0.15)) out += ConstPoly(Monomial::symbol(name, 2), random_gauss_rat(rng, shape));
    if (s + 1 < shape.symbols.size() && coin(rng, 0.15)) {
      const Monomial cross = Monomial::symbol(name) * Monomial::symbol(shape.symbols[s + 1]);
      out += ConstPoly(cross, random_gauss_rat(rng, shape));
    }
  }
  return out;
}

FourierPoly random_fourier(Rng& rng, const RandomShape& shape) {
  FourierPoly out;
  for (int k = -shape.bandwidth; k <= shape.bandwidth; ++k)
    if (coin(rng, shape.density)) out += FourierPoly::mode(k, random_const_poly(rng, shape));
  return out;
}

DiffOp random_diffop(Rng& rng, const RandomShape& shape) {
  DiffOp out;
  for (unsigned n = 0; n <= shape.max_order; ++n)
    if (coin(rng, shape.density)) out += DiffOp::derivative(n, random_fourier(rng, shape));
  return out;
}

}  // namespace opcons
