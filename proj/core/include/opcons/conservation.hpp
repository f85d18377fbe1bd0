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

// Conservation analysis of operators acting on psi = rho e^{i phi}.
//
// An operator is conserved when its collapsed form (A0, B1, B2) satisfies
// B1 = -i B2 and A0 is independent of phi. The general conserved operator is
//
//     A - i B2(phi) d + B2(phi) d^2,
//
// whose expectation value is A whatever B2 is. Its special cases reduce to
// three canonical shapes:
//
//     Alpha:  A          Beta:  -i A d          Gamma:  A d^2

#ifndef OPCONS_CONSERVATION_HPP
#define OPCONS_CONSERVATION_HPP

#include "opcons/diffop.hpp"
#include "opcons/exactnum.hpp"
#include "opcons/fourier.hpp"

#include <string>
#include <string_view>

namespace opcons {

enum class FamilyKind { Alpha, Beta, Gamma, GeneralConserved, NullSymbol, NotConserved };

std::string_view to_string(FamilyKind kind);

/// Classification result. `constant` is the A of the matched form; it is zero
/// for NullSymbol and NotConserved and nonzero otherwise.
struct Family {
  FamilyKind kind = FamilyKind::NotConserved;
  ConstPoly constant;

  friend bool operator==(const Family&, const Family&) = default;
};

/// {0: a, 1: -i b2, 2: b2}
DiffOp conserved_family(const ConstPoly& a, const FourierPoly& b2);

/// B1 = -i B2 and A0 constant, after collapse.
bool is_conserved(const DiffOp& p);

/// Exact <psi|p|psi> = norm * mean(symbol(p)). Throws DomainError when the
/// wavefunction has no exact rational norm.
ConstPoly expectation(const DiffOp& p, const WaveSpec& w = WaveSpec());

/// expectation(p + dp) - expectation(p).
ConstPoly delta_expectation(const DiffOp& p, const DiffOp& dp, const WaveSpec& w = WaveSpec());

/// How two operators are required to agree on psi.
enum class EquivalenceMode {
  Integral,   ///< equal expectation values: mean(sigma_0 - sigma_k) = 0
  Pointwise,  ///< equal action: sigma_0(phi) = sigma_k(phi) for every phi
};

std::string_view to_string(EquivalenceMode mode);

/// Reduced relation between B2 and A imposed by one special case.
struct CaseRelation {
  enum class Kind {
    Identity,     ///< satisfied for every B2 and A
    FixesB2,      ///< mean(B2) = value (integral) or B2 == value (pointwise)
    ForcesAZero,  ///< only A = 0 works; B2 is unconstrained
  };
  Kind kind = Kind::Identity;
  ConstPoly value;

  friend bool operator==(const CaseRelation&, const CaseRelation&) = default;
};

/// Outcome of solving special case k against the general conserved operator.
struct CaseConstraint {
  int case_index = 1;
  EquivalenceMode mode = EquivalenceMode::Pointwise;
  CaseRelation relation;
  /// "mean(B2) = A", "B2 = -A", "A = 0", "identity"
  std::string condition;
  /// The case template with A and B2 still symbolic.
  DiffOp template_op;
  /// The template after applying the relation. B2 stays the symbol "B2" when
  /// it is unconstrained. In integral mode the constant solution is used.
  DiffOp solved_op;
};

/// Names used for the unknowns of the special-case templates.
inline constexpr std::string_view kCaseConstant = "A";
inline constexpr std::string_view kCaseCoefficient = "B2";

/// The k-th special case (k in 1..6) of A - i B2 d + B2 d^2, with A and B2 as
/// symbols: A, -i B2 d, B2 d^2, A - i B2 d, A + B2 d^2, -i B2 d + B2 d^2.
DiffOp special_case_template(int k);

/// Solve the equivalence of case k with the general conserved operator.
/// Throws DomainError for k outside 1..6.
CaseConstraint solve_special_case(int k, EquivalenceMode mode);

/// Collapse p and match it against the canonical forms, in order:
/// Alpha, Beta, Gamma, NullSymbol (symbol identically zero), GeneralConserved,
/// NotConserved.
Family classify(const DiffOp& p);

/// Printable form of a canonical family in a named variable with A identified
/// with a named constant, e.g. "-i*hbar*d/dx". Throws DomainError for kinds
/// other than Alpha, Beta and Gamma.
std::string substitute_physical(const Family& f, std::string_view var_name,
                                std::string_view constant_name);

}  // namespace opcons

#endif  // OPCONS_CONSERVATION_HPP
