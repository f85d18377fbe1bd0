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

#include "opcons/conservation.hpp"

#include "opcons/error.hpp"
#include "opcons/syntax.hpp"

#include <stdexcept>

namespace opcons {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Alpha: return "Alpha";
    case FamilyKind::Beta: return "Beta";
    case FamilyKind::Gamma: return "Gamma";
    case FamilyKind::GeneralConserved: return "GeneralConserved";
    case FamilyKind::NullSymbol: return "NullSymbol";
    case FamilyKind::NotConserved: return "NotConserved";
  }
  return "NotConserved";
}

std::string_view to_string(EquivalenceMode mode) {
  return mode == EquivalenceMode::Integral ? "integral" : "pointwise";
}

DiffOp conserved_family(const ConstPoly& a, const FourierPoly& b2) {
  return DiffOp::derivative(0, FourierPoly(a)) + DiffOp::derivative(1, b2.scale(-ConstPoly::i())) +
         DiffOp::derivative(2, b2);
}

bool is_conserved(const DiffOp& p) {
  const CollapsedOp c = collapse(p);
  return c.a0.is_constant() && c.b1 == c.b2.scale(-ConstPoly::i());
}

ConstPoly expectation(const DiffOp& p, const WaveSpec& w) {
  const auto& norm = w.exact_norm();
  if (!norm) throw DomainError("exact expectation needs a wavefunction with a rational norm");
  return symbol(p).mean().scale(GaussRat(*norm));
}

ConstPoly delta_expectation(const DiffOp& p, const DiffOp& dp, const WaveSpec& w) {
  return expectation(p + dp, w) - expectation(p, w);
}

DiffOp special_case_template(int k) {
  const ConstPoly a = ConstPoly::symbol(kCaseConstant);
  const FourierPoly b2 = ConstPoly::symbol(kCaseCoefficient);
  const DiffOp constant = DiffOp::multiplication(a);
  const DiffOp first = DiffOp::derivative(1, b2.scale(-ConstPoly::i()));
  const DiffOp second = DiffOp::derivative(2, b2);
  switch (k) {
    case 1: return constant;
    case 2: return first;
    case 3: return second;
    case 4: return constant + first;
    case 5: return constant + second;
    case 6: return first + second;
    default: throw DomainError("special case index must be in 1..6, got " + std::to_string(k));
  }
}

namespace {

ConstPoly evaluate_at(const ConstPoly& p, const ConstPoly& a, const ConstPoly& b2) {
  return p.substitute(kCaseConstant, a).substitute(kCaseCoefficient, b2);
}

}  // namespace

CaseConstraint solve_special_case(int k, EquivalenceMode mode) {
  CaseConstraint out;
  out.case_index = k;
  out.mode = mode;
  out.template_op = special_case_template(k);

  const ConstPoly a = ConstPoly::symbol(kCaseConstant);
  const ConstPoly b2 = ConstPoly::symbol(kCaseCoefficient);
  const DiffOp master = conserved_family(a, b2);

  // The template multipliers (1, -i) do not depend on phi, so sigma_0 - sigma_k
  // is alpha*A + beta*B2(phi) with numeric alpha, beta. The integral condition
  // is alpha*A + beta*mean(B2) = 0, the pointwise one alpha*A + beta*B2(phi) = 0.
  const FourierPoly residual_fn = symbol(master) - symbol(out.template_op);
  if (!residual_fn.is_constant()) throw std::logic_error("special-case residual depends on phi");
  const ConstPoly residual = residual_fn.mean();

  const ConstPoly at_origin = evaluate_at(residual, 0, 0);
  const ConstPoly alpha = evaluate_at(residual, 1, 0) - at_origin;
  const ConstPoly beta = evaluate_at(residual, 0, 1) - at_origin;
  if (!at_origin.is_zero() || !alpha.is_constant() || !beta.is_constant() ||
      residual != a * alpha + b2 * beta)
    throw std::logic_error("special-case residual is not linear in A and B2");

  const std::string subject = mode == EquivalenceMode::Integral ? "mean(B2)" : "B2";
  if (!beta.is_zero()) {
    out.relation.kind = CaseRelation::Kind::FixesB2;
    out.relation.value = a.scale(-alpha.constant_term() * beta.constant_term().inv());
    out.condition = subject + " = " + print(out.relation.value);
    out.solved_op = out.template_op.substitute(kCaseCoefficient, out.relation.value);
  } else if (!alpha.is_zero()) {
    out.relation.kind = CaseRelation::Kind::ForcesAZero;
    out.condition = std::string(kCaseConstant) + " = 0";
    out.solved_op = out.template_op.substitute(kCaseConstant, 0);
  } else {
    out.relation.kind = CaseRelation::Kind::Identity;
    out.condition = "identity";
    out.solved_op = out.template_op;
  }
  return out;
}

Family classify(const DiffOp& p) {
  const CollapsedOp c = collapse(p);
  const bool a0_zero = c.a0.is_zero();
  const bool b1_zero = c.b1.is_zero();
  const bool b2_zero = c.b2.is_zero();

  if (!a0_zero && c.a0.is_constant() && b1_zero && b2_zero)
    return {FamilyKind::Alpha, c.a0.mean()};
  // b1 = -i A  =>  A = i b1
  if (a0_zero && !b1_zero && c.b1.is_constant() && b2_zero)
    return {FamilyKind::Beta, c.b1.mean() * ConstPoly::i()};
  if (a0_zero && b1_zero && !b2_zero && c.b2.is_constant())
    return {FamilyKind::Gamma, c.b2.mean()};
  if (symbol(p).is_zero()) return {FamilyKind::NullSymbol, {}};
  if (c.a0.is_constant() && c.b1 == c.b2.scale(-ConstPoly::i()))
    return {FamilyKind::GeneralConserved, c.a0.mean()};
  return {FamilyKind::NotConserved, {}};
}

std::string substitute_physical(const Family& f, std::string_view var_name,
                                std::string_view constant_name) {
  if (var_name.empty() || constant_name.empty())
    throw DomainError("variable and constant names must be non-empty");
  const std::string c(constant_name);
  const std::string x(var_name);
  switch (f.kind) {
    case FamilyKind::Alpha: return c;
    case FamilyKind::Beta: return "-i*" + c + "*d/d" + x;
    case FamilyKind::Gamma: return c + "*d^2/d" + x + "^2";
    default:
      throw DomainError("no physical form for family " + std::string(to_string(f.kind)));
  }
}

}  // namespace opcons
