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

#include "opcons/syntax.hpp"

#include "opcons/error.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace opcons {

namespace {

constexpr unsigned kMaxOrder = 4096;
constexpr long long kMaxFrequency = 1 << 20;

enum class Tok { Number, Decimal, Ident, Derivative, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  SourcePos pos;
  std::string text;
  /// Derivative order for Tok::Derivative written as one identifier ("D3").
  std::optional<unsigned> order;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    default: return "'" + t.text + "'";
  }
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

unsigned parse_order(const std::string& digits, const SourcePos& pos) {
  if (digits.size() > 6 || std::stoul(digits) > kMaxOrder)
    throw ParseError(pos.line, pos.column, "derivative order too large");
  return static_cast<unsigned>(std::stoul(digits));
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      t.kind = Tok::Number;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
        t.kind = Tok::Decimal;
      }
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      t.text = std::string(src.substr(i, j - i));
      t.kind = Tok::Ident;
      if (t.text == "D") {
        t.kind = Tok::Derivative;
      } else if (t.text.size() > 1 && t.text[0] == 'D') {
        bool digits = true;
        for (std::size_t k = 1; k < t.text.size(); ++k) digits = digits && is_digit(t.text[k]);
        if (digits) {
          t.kind = Tok::Derivative;
          t.order = parse_order(t.text.substr(1), pos);
        }
      }
      advance(j - i);
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        default:
          throw ParseError(pos.line, pos.column, std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  OperatorExpr parse_operator() {
    OperatorExpr expr;
    bool negated = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negated = next().kind == Tok::Minus;
    expr.terms.push_back(parse_term(negated));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negated = next().kind == Tok::Minus;
      expr.terms.push_back(parse_term(negated));
    }
    if (peek().kind == Tok::Star && peek(1).kind != Tok::End)
      fail(peek(1), "'D' inside coefficient position; a derivative must end its term");
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()));
    return expr;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.pos.line, t.pos.column, message);
  }

  // Consumes a derivative token (and its separate order for "D n").
  unsigned parse_derivative() {
    const Token& d = next();
    if (d.order) return *d.order;
    const Token& n = peek();
    if (n.kind == Tok::Number) return parse_order(next().text, n.pos);
    if (n.kind == Tok::Minus) fail(n, "negative derivative order");
    if (n.kind == Tok::Decimal) fail(n, "non-integer derivative order '" + n.text + "'");
    fail(n, "expected derivative order after 'D'");
  }

  OperatorTerm parse_term(bool negated) {
    OperatorTerm term;
    term.negated = negated;
    term.pos = peek().pos;
    if (peek().kind == Tok::Derivative) {
      term.order = parse_derivative();
      return term;
    }
    term.coeff = std::make_unique<CoeffExpr>(parse_product(/*allow_trailing_derivative=*/true));
    if (peek().kind == Tok::Star && peek(1).kind == Tok::Derivative) {
      next();
      term.order = parse_derivative();
    }
    return term;
  }

  CoeffExpr parse_product(bool allow_trailing_derivative) {
    CoeffExpr first = parse_factor();
    if (peek().kind != Tok::Star) return first;
    CoeffExpr product;
    product.kind = CoeffExpr::Kind::Product;
    product.pos = first.pos;
    product.children.push_back(std::move(first));
    while (peek().kind == Tok::Star) {
      if (peek(1).kind == Tok::Derivative) {
        if (allow_trailing_derivative) break;
        fail(peek(1), "'D' inside coefficient position");
      }
      next();
      product.children.push_back(parse_factor());
    }
    return product;
  }

  CoeffExpr parse_sum() {
    CoeffExpr sum;
    sum.kind = CoeffExpr::Kind::Sum;
    sum.pos = peek().pos;
    bool negated = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negated = next().kind == Tok::Minus;
    sum.children.push_back(parse_product(false));
    sum.negated.push_back(negated);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sum.negated.push_back(next().kind == Tok::Minus);
      sum.children.push_back(parse_product(false));
    }
    return sum;
  }

  CoeffExpr parse_factor() {
    const Token& t = peek();
    CoeffExpr e;
    e.pos = t.pos;
    switch (t.kind) {
      case Tok::Number: {
        next();
        e.kind = CoeffExpr::Kind::Number;
        Rational value(boost::multiprecision::cpp_int(t.text));
        if (peek().kind == Tok::Slash) {
          next();
          const Token& den = peek();
          if (den.kind != Tok::Number) fail(den, "expected integer denominator after '/'");
          next();
          const boost::multiprecision::cpp_int d(den.text);
          if (d == 0) fail(den, "zero denominator");
          value /= Rational(d);
        }
        e.number = value;
        return e;
      }
      case Tok::Decimal:
        fail(t, "decimal literal '" + t.text + "' is not supported; write a fraction p/q");
      case Tok::Derivative:
        fail(t, "'D' inside coefficient position");
      case Tok::Ident: {
        next();
        if (t.text == "i") {
          e.kind = CoeffExpr::Kind::ImaginaryUnit;
          return e;
        }
        if (t.text == "E") {
          e.kind = CoeffExpr::Kind::Exponential;
          e.frequency = parse_frequency();
          return e;
        }
        e.kind = CoeffExpr::Kind::Symbol;
        e.name = t.text;
        return e;
      }
      case Tok::LParen: {
        next();
        if (peek().kind == Tok::RParen) fail(peek(), "empty parentheses");
        e = parse_sum();
        if (peek().kind == Tok::Derivative) fail(peek(), "'D' inside coefficient position");
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')' but found " + describe(peek()));
        next();
        return e;
      }
      default:
        fail(t, "expected a coefficient or derivative but found " + describe(t));
    }
  }

  int parse_frequency() {
    if (peek().kind != Tok::LParen) fail(peek(), "expected '(' after 'E'");
    next();
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
    const Token& n = peek();
    if (n.kind != Tok::Number) fail(n, "expected integer frequency in E(...)");
    next();
    if (n.text.size() > 7 || std::stoll(n.text) > kMaxFrequency) fail(n, "frequency too large");
    const int k = static_cast<int>(std::stoll(n.text));
    if (peek().kind != Tok::RParen) fail(peek(), "expected ')' after frequency");
    next();
    return negative ? -k : k;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// One printable summand: rational * (i?) * symbols * E(k).
struct Atom {
  Rational value;
  bool imaginary = false;
  const Monomial* monomial = nullptr;
  int frequency = 0;
};

std::vector<Atom> atoms_of(const ConstPoly& c, int frequency) {
  std::vector<Atom> out;
  for (const auto& [m, g] : c.terms()) {
    if (g.re() != 0) out.push_back({g.re(), false, &m, frequency});
    if (g.im() != 0) out.push_back({g.im(), true, &m, frequency});
  }
  return out;
}

std::vector<Atom> atoms_of(const FourierPoly& f) {
  std::vector<Atom> out;
  for (const auto& [k, c] : f.modes()) {
    auto part = atoms_of(c, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Unsigned body of an atom, or "" when it is exactly 1.
std::string atom_body(const Atom& a) {
  std::vector<std::string> parts;
  const Rational magnitude = a.value < 0 ? Rational(-a.value) : a.value;
  if (magnitude != 1) parts.push_back(to_string(magnitude));
  if (a.imaginary) parts.push_back("i");
  if (a.monomial)
    for (const auto& [name, e] : a.monomial->factors())
      for (unsigned k = 0; k < e; ++k) parts.push_back(name);
  if (a.frequency != 0) parts.push_back("E(" + std::to_string(a.frequency) + ")");
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty())
    out = negative ? "-" + body : body;
  else
    out += (negative ? " - " : " + ") + body;
}

std::string print_atoms(const std::vector<Atom>& atoms) {
  if (atoms.empty()) return "0";
  std::string out;
  for (const auto& a : atoms) {
    const std::string body = atom_body(a);
    append_signed(out, a.value < 0, body.empty() ? "1" : body);
  }
  return out;
}

}  // namespace

OperatorExpr parse_expr(std::string_view src) { return Parser(src).parse_operator(); }

FourierPoly evaluate(const CoeffExpr& e) {
  switch (e.kind) {
    case CoeffExpr::Kind::Number: return FourierPoly(GaussRat(e.number));
    case CoeffExpr::Kind::ImaginaryUnit: return FourierPoly(GaussRat::i());
    case CoeffExpr::Kind::Symbol: return FourierPoly(ConstPoly::symbol(e.name));
    case CoeffExpr::Kind::Exponential: return FourierPoly::mode(e.frequency);
    case CoeffExpr::Kind::Product: {
      FourierPoly out(1);
      for (const auto& c : e.children) out = out * evaluate(c);
      return out;
    }
    case CoeffExpr::Kind::Sum: {
      FourierPoly out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (e.negated[k])
          out -= evaluate(e.children[k]);
        else
          out += evaluate(e.children[k]);
      }
      return out;
    }
  }
  return {};
}

DiffOp lower(const OperatorExpr& e) {
  DiffOp out;
  for (const auto& term : e.terms) {
    FourierPoly coeff = term.coeff ? evaluate(*term.coeff) : FourierPoly(1);
    if (term.negated) coeff = -coeff;
    out += DiffOp::derivative(term.order, coeff);
  }
  return out;
}

DiffOp parse_operator(std::string_view src) { return lower(parse_expr(src)); }

std::string print(const ConstPoly& c) { return print_atoms(atoms_of(c, 0)); }

std::string print(const FourierPoly& f) { return print_atoms(atoms_of(f)); }

std::string print_operator(const DiffOp& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [n, f] : p.coefficients()) {
    const std::vector<Atom> atoms = atoms_of(f);
    if (n == 0) {
      for (const auto& a : atoms) {
        const std::string body = atom_body(a);
        append_signed(out, a.value < 0, body.empty() ? "1" : body);
      }
      continue;
    }
    const std::string derivative = "D" + std::to_string(n);
    if (atoms.size() == 1) {
      const std::string body = atom_body(atoms.front());
      append_signed(out, atoms.front().value < 0, body.empty() ? derivative : body + "*" + derivative);
    } else {
      append_signed(out, false, "(" + print_atoms(atoms) + ")*" + derivative);
    }
  }
  return out;
}

}  // namespace opcons
