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

// Textual operator language.
//
//   operator := ['+'|'-'] term (('+'|'-') term)*
//   term     := coeff ('*' D INT)? | D INT
//   coeff    := factor ('*' factor)*
//   factor   := NUMBER | NUMBER '/' NUMBER | 'i' | IDENT | 'E(' SINT ')'
//             | '(' ['+'|'-'] coeff (('+'|'-') coeff)* ')'
//
// "Dn" is the n-th derivative in phi (also written "D n"), E(k) is e^{ik phi}
// and any other identifier is a real symbolic constant. 'i', 'E' and
// identifiers of the form D<digits> are reserved. Whitespace is ignored.

#ifndef OPCONS_SYNTAX_HPP
#define OPCONS_SYNTAX_HPP

#include "opcons/diffop.hpp"
#include "opcons/exactnum.hpp"
#include "opcons/fourier.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace opcons {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Coefficient expression tree, before evaluation into a FourierPoly.
struct CoeffExpr {
  enum class Kind { Number, ImaginaryUnit, Symbol, Exponential, Product, Sum };

  Kind kind = Kind::Number;
  SourcePos pos;
  Rational number;          // Number
  std::string name;         // Symbol
  int frequency = 0;        // Exponential
  /// Product: factors. Sum: signed summands, with `negated` marking '-'.
  std::vector<CoeffExpr> children;
  std::vector<bool> negated;
};

/// One signed summand of an operator: coefficient times an optional derivative.
struct OperatorTerm {
  bool negated = false;
  SourcePos pos;
  /// Absent for a bare "Dn".
  std::unique_ptr<CoeffExpr> coeff;
  unsigned order = 0;
};

/// Parse tree of a full operator expression.
struct OperatorExpr {
  std::vector<OperatorTerm> terms;
};

/// Syntax only. Throws ParseError with the line and column of the problem.
OperatorExpr parse_expr(std::string_view src);
FourierPoly evaluate(const CoeffExpr& e);
DiffOp lower(const OperatorExpr& e);

/// parse_expr followed by lower.
DiffOp parse_operator(std::string_view src);

/// Canonical rendering: ascending derivative order, ascending frequency inside
/// a coefficient, rationals as p/q, the imaginary unit as 'i'.
/// parse_operator(print_operator(p)) == p.
std::string print_operator(const DiffOp& p);
std::string print(const FourierPoly& f);
std::string print(const ConstPoly& c);

}  // namespace opcons

#endif  // OPCONS_SYNTAX_HPP
