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

#include "opcons/fourier.hpp"

#include "gtest/gtest.h"

#include "opcons/numlab.hpp"
#include "opcons/random.hpp"
#include "oracle.hpp"

#include <numbers>

namespace opcons {
namespace {

FourierPoly E(int k) { return FourierPoly::mode(k); }
const ConstPoly kA = ConstPoly::symbol("A");
const ConstPoly kI = ConstPoly::i();

TEST(FourierPoly, OppositeFrequenciesCancel) { EXPECT_EQ(E(1) * E(-1), FourierPoly(1)); }

TEST(FourierPoly, AdditiveInverse) { EXPECT_TRUE((E(2) + (-E(2))).is_zero()); }

TEST(FourierPoly, ProductAddsFrequencies) {
  EXPECT_EQ(FourierPoly::mode(1, kA) * E(1), FourierPoly::mode(2, kA));
}

TEST(FourierPoly, DerivativeOfPsiMode) { EXPECT_EQ(E(1).diff(), E(1).scale(kI)); }

TEST(FourierPoly, DerivativeOfConstantVanishes) {
  EXPECT_TRUE(FourierPoly(kA + 3).diff().is_zero());
}

TEST(FourierPoly, SecondDerivativeFlipsSign) { EXPECT_EQ(E(1).diff().diff(), -E(1)); }

TEST(FourierPoly, Conjugation) {
  EXPECT_EQ(E(1).conj(), E(-1));
  EXPECT_EQ(FourierPoly(kI).conj(), FourierPoly(-kI));
  EXPECT_EQ((FourierPoly::mode(2, kA) + FourierPoly(kI)).conj(), FourierPoly::mode(-2, kA) - FourierPoly(kI));
}

TEST(FourierPoly, MeanKeepsZeroFrequency) {
  EXPECT_EQ((FourierPoly(kA) + FourierPoly::mode(5, 3)).mean(), kA);
  EXPECT_TRUE(E(1).mean().is_zero());
}

TEST(FourierPoly, MeanOfModulusSquaredMatchesQuadrature) {
  // Oracle: midpoint quadrature of |e^{i phi}|^2 / (2 pi).
  const auto oracle = testing::brute_mean([](double phi) { return std::norm(std::polar(1.0, phi)); });
  EXPECT_NEAR(oracle.real(), 1.0, 1e-12);
  EXPECT_EQ((E(1) * E(1).conj()).mean(), ConstPoly(1));
}

TEST(FourierPoly, Constancy) {
  EXPECT_TRUE(FourierPoly(kA).is_constant());
  EXPECT_FALSE(FourierPoly::mode(1, kA).is_constant());
  EXPECT_TRUE(FourierPoly().is_constant());
}

class FourierLaws : public ::testing::Test {
 protected:
  FourierPoly draw() { return random_fourier(rng_, shape_); }

  Rng rng_ = derive_stream(13, 0);
  RandomShape shape_ = [] {
    RandomShape s;
    s.symbols = {"A", "B"};
    s.bandwidth = 4;
    return s;
  }();
};

TEST_F(FourierLaws, DerivativeHasZeroMean) {
  for (int t = 0; t < 200; ++t) ASSERT_TRUE(draw().diff().mean().is_zero());
}

TEST_F(FourierLaws, LeibnizRule) {
  for (int t = 0; t < 200; ++t) {
    const FourierPoly f = draw(), g = draw();
    ASSERT_EQ((f * g).diff(), f.diff() * g + f * g.diff());
  }
}

TEST_F(FourierLaws, ConjugationProperties) {
  for (int t = 0; t < 200; ++t) {
    const FourierPoly f = draw(), g = draw();
    ASSERT_EQ(f.conj().conj(), f);
    ASSERT_EQ((f * g).conj(), f.conj() * g.conj());
    ASSERT_EQ(f.diff().conj(), f.conj().diff());
  }
}

TEST_F(FourierLaws, RingAxioms) {
  for (int t = 0; t < 200; ++t) {
    const FourierPoly f = draw(), g = draw(), h = draw();
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f * g, g * f);
  }
}

TEST_F(FourierLaws, NumericEvaluationMatchesTermwiseSum) {
  const Binding b{{"A", Rational(3, 2)}, {"B", Rational(-5, 7)}};
  for (int t = 0; t < 100; ++t) {
    const FourierPoly f = draw();
    for (int j = 0; j < 32; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / 32.0;
      ASSERT_LT(std::abs(eval_fourier(f, b, phi) - testing::termwise_fourier(f, b, phi)), 1e-12);
    }
  }
}

}  // namespace
}  // namespace opcons
