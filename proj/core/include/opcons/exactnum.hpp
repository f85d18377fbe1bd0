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

// Exact scalars: Gaussian rationals Q(i) and polynomials over them in named
// real-valued symbolic constants.

#ifndef OPCONS_EXACTNUM_HPP
#define OPCONS_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opcons {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p" or "p/q".
std::string to_string(const Rational& r);

/// Complex number with rational real and imaginary parts.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRat(int re) : re_(re) {}           // NOLINT(google-explicit-constructor)
  GaussRat(long long re) : re_(re) {}     // NOLINT(google-explicit-constructor)

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_imaginary() const { return re_ == 0 && im_ != 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// Multiplicative inverse. Throws DomainError on zero.
  GaussRat inv() const;

  GaussRat& operator+=(const GaussRat& other);
  GaussRat& operator-=(const GaussRat& other);
  GaussRat& operator*=(const GaussRat& other);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// i^n for any integer n.
GaussRat i_pow(long long n);

/// Product of symbolic constants with positive integer exponents, kept sorted by
/// name. The empty monomial is the unit. Ordering is lexicographic over the
/// (name, exponent) sequence.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial symbol(std::string_view name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  unsigned degree() const;
  /// Exponent of `name`, 0 if absent.
  unsigned exponent(std::string_view name) const;
  /// This monomial with `name` removed.
  Monomial without(std::string_view name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

 private:
  std::vector<Factor> factors_;
};

/// Polynomial in real symbolic constants with GaussRat coefficients.
/// Canonical: no zero coefficients, terms ordered by Monomial, so structural
/// equality is mathematical equality.
class ConstPoly {
 public:
  using Terms = std::map<Monomial, GaussRat>;

  ConstPoly() = default;
  ConstPoly(GaussRat c);                  // NOLINT(google-explicit-constructor)
  ConstPoly(int c) : ConstPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  ConstPoly(const Monomial& m, GaussRat c);
  static ConstPoly symbol(std::string_view name) { return ConstPoly(Monomial::symbol(name), GaussRat(1)); }
  static ConstPoly i() { return ConstPoly(GaussRat::i()); }

  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when only the unit monomial appears (a numeric literal, possibly zero).
  /// A bare symbol such as A is not constant in this sense.
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  GaussRat constant_term() const;
  /// Coefficient of `m`, zero if absent.
  GaussRat coefficient(const Monomial& m) const;
  std::set<std::string> symbols() const;

  /// Complex conjugate; symbols are real so only coefficients change.
  ConstPoly conj() const;
  ConstPoly scale(const GaussRat& c) const;
  /// Replace every occurrence of `name` by `value`.
  ConstPoly substitute(std::string_view name, const ConstPoly& value) const;

  ConstPoly& operator+=(const ConstPoly& other);
  ConstPoly& operator-=(const ConstPoly& other);

  friend ConstPoly operator+(ConstPoly a, const ConstPoly& b) { return a += b; }
  friend ConstPoly operator-(ConstPoly a, const ConstPoly& b) { return a -= b; }
  friend ConstPoly operator*(const ConstPoly& a, const ConstPoly& b);
  friend ConstPoly operator-(const ConstPoly& a);
  friend bool operator==(const ConstPoly& a, const ConstPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const GaussRat& c);

  Terms terms_;
};

}  // namespace opcons

#endif  // OPCONS_EXACTNUM_HPP
