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

#include "gtest/gtest.h"

#include "opcons/conservation.hpp"
#include "opcons/error.hpp"
#include "opcons/random.hpp"
#include "oracle.hpp"

#include <cstring>
#include <numbers>

namespace opcons {
namespace {

constexpr double kPi = std::numbers::pi;

FourierPoly E(int k) { return FourierPoly::mode(k); }
DiffOp D(unsigned n, FourierPoly c = FourierPoly(1)) { return DiffOp::derivative(n, std::move(c)); }
const ConstPoly kA = ConstPoly::symbol("A");
const ConstPoly kI = ConstPoly::i();

TEST(EvalFourier, PsiModeAtOrigin) {
  const Complex v = eval_fourier(E(1), {}, 0.0);
  EXPECT_DOUBLE_EQ(v.real(), 1.0);
  EXPECT_DOUBLE_EQ(v.imag(), 0.0);
}

TEST(EvalFourier, BoundConstant) {
  const Binding b{{"A", Rational(2)}};
  EXPECT_DOUBLE_EQ(eval_fourier(FourierPoly(kA), b, 1.234).real(), 2.0);
}

TEST(EvalFourier, EulerIdentity) { EXPECT_LT(std::abs(eval_fourier(E(1) + E(-1), {}, kPi / 2)), 1e-15); }

TEST(EvalFourier, UnboundConstantIsNamed) {
  try {
    eval_fourier(FourierPoly(ConstPoly::symbol("hbar")), {}, 0.0);
    FAIL() << "expected UnboundConstantError";
  } catch (const UnboundConstantError& e) {
    EXPECT_EQ(e.name(), "hbar");
  }
}

TEST(GridSpec, RejectsTooFewNodes) {
  EXPECT_THROW(GridSpec(3), DomainError);
  EXPECT_NO_THROW(GridSpec(4));
}

TEST(QuadExpectation, MomentumShapeOfUnitConstant) {
  const Complex q = quad_expectation(D(1, -kI), WaveSpec(), {}, GridSpec(64));
  EXPECT_NEAR(q.real(), 1.0, 1e-10);
  EXPECT_NEAR(q.imag(), 0.0, 1e-10);
  EXPECT_EQ(expectation(D(1, -kI)), ConstPoly(1));
}

TEST(QuadExpectation, ZeroOperatorIsExactlyZero) {
  const Complex q = quad_expectation(DiffOp(), WaveSpec(), {}, GridSpec(64));
  EXPECT_EQ(q, Complex(0.0, 0.0));
}

TEST(QuadExpectation, ConservedFamilyGivesConstant) {
  const Binding b{{"A", Rational(2)}};
  const Complex q = quad_expectation(conserved_family(kA, E(2).scale(3)), WaveSpec(), b, GridSpec(64));
  EXPECT_NEAR(q.real(), 2.0, 1e-10);
  EXPECT_NEAR(q.imag(), 0.0, 1e-10);
}

TEST(QuadExpectation, UnboundConstantThrows) {
  EXPECT_THROW(quad_expectation(D(0, kA), WaveSpec(), {}, GridSpec(16)), UnboundConstantError);
}

TEST(CheckNormalization, DefaultAmplitude) { EXPECT_NEAR(check_normalization(WaveSpec(), GridSpec(32)), 1.0, 1e-12); }

TEST(CheckNormalization, UnitAmplitude) {
  EXPECT_NEAR(check_normalization(WaveSpec::with_amplitude(1.0), GridSpec(32)), 2 * kPi, 1e-12);
}

TEST(CheckNormalization, HalfAmplitude) {
  EXPECT_NEAR(check_normalization(WaveSpec::with_amplitude(0.5), GridSpec(32)), kPi / 2, 1e-12);
}

TEST(ProbeEnsemble, FamilyOnlyIsFlat) {
  const Binding b{{"A", Rational(3, 2)}};
  const ProbeReport r = probe_ensemble(D(0, kA) + D(2, E(1)), true, 100, 5, b, GridSpec(64));
  EXPECT_EQ(r.trials, 100u);
  EXPECT_EQ(r.deltas.size(), 100u);
  EXPECT_LT(r.max_abs_delta, 1e-10);
  EXPECT_EQ(r.detected_fraction, 0.0);
}

TEST(ProbeEnsemble, ArbitraryPerturbationsAreMostlyDetected) {
  const ProbeReport r = probe_ensemble(D(0, 1), false, 200, 9, {}, GridSpec(64));
  EXPECT_GE(r.detected_fraction, 0.5);
}

TEST(ProbeEnsemble, FixedConstantPerturbation) {
  const Complex d = quad_delta_expectation(D(0, 1), D(0, 1), WaveSpec(), {}, GridSpec(64));
  EXPECT_NEAR(d.real(), 1.0, 1e-10);
  EXPECT_NEAR(d.imag(), 0.0, 1e-10);
}

TEST(ProbeEnsemble, ZeroTrialsRejected) {
  EXPECT_THROW(probe_ensemble(DiffOp(), true, 0, 1, {}, GridSpec(16)), DomainError);
}

TEST(ProbeEnsemble, DeterministicBitForBit) {
  const ProbeReport a = probe_ensemble(D(1, E(1)), false, 50, 1234, {}, GridSpec(32));
  const ProbeReport b = probe_ensemble(D(1, E(1)), false, 50, 1234, {}, GridSpec(32));
  ASSERT_EQ(a.deltas.size(), b.deltas.size());
  EXPECT_EQ(std::memcmp(a.deltas.data(), b.deltas.data(), a.deltas.size() * sizeof(Complex)), 0);
  EXPECT_EQ(a.max_abs_delta, b.max_abs_delta);
  EXPECT_EQ(a.detected_fraction, b.detected_fraction);
  const ProbeReport c = probe_ensemble(D(1, E(1)), false, 50, 1235, {}, GridSpec(32));
  EXPECT_NE(std::memcmp(a.deltas.data(), c.deltas.data(), a.deltas.size() * sizeof(Complex)), 0);
}

TEST(NumlabLaws, QuadratureAgreesWithExactExpectation) {
  Rng rng = derive_stream(67, 0);
  RandomShape shape;
  shape.symbols = {"A", "B"};
  for (int t = 0; t < 200; ++t) {
    const DiffOp p = random_diffop(rng, shape);
    const Binding b{{"A", random_rational(rng, shape) + Rational(1, 3)},
                    {"B", random_rational(rng, shape) - Rational(2, 5)}};
    const Complex q = quad_expectation(p, WaveSpec(), b, GridSpec(64));
    ASSERT_LT(std::abs(q - eval_const(expectation(p), b)), 1e-9);
  }
}

TEST(NumlabLaws, TrapezoidIsExactForLowBandwidth) {
  // Oracle value: the k = 0 coefficient, evaluated term by term.
  Rng rng = derive_stream(71, 0);
  RandomShape shape;
  shape.symbols = {"A"};
  const Binding b{{"A", Rational(-3, 7)}};
  for (int t = 0; t < 200; ++t) {
    const FourierPoly f = random_fourier(rng, shape);
    const Complex exact = testing::termwise_const(f.mean(), b);
    ASSERT_LT(std::abs(quad_mean(f, b, GridSpec(32)) - exact), 1e-12);
    ASSERT_LT(std::abs(quad_mean(f, b, GridSpec(16)) - exact), 1e-12);
  }
}

TEST(NumlabLaws, TrapezoidAliasesBelowBandwidth) {
  // With 4 nodes, e^{4 i phi} is indistinguishable from a constant.
  EXPECT_NEAR(quad_mean(E(4), {}, GridSpec(4)).real(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(quad_mean(E(4), {}, GridSpec(16))), 0.0, 1e-12);
}

}  // namespace
}  // namespace opcons
