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

#include "opcons/exactnum.hpp"

#include "opcons/error.hpp"

#include <algorithm>

namespace opcons {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// GaussRat

GaussRat GaussRat::inv() const {
  if (is_zero()) throw DomainError("inverse of zero");
  const Rational norm = re_ * re_ + im_ * im_;
  return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat& GaussRat::operator+=(const GaussRat& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& other) {
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat i_pow(long long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat::i();
    case 2: return GaussRat(-1);
    default: return -GaussRat::i();
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::symbol(std::string_view name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::string(name), exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != name) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ConstPoly

ConstPoly::ConstPoly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

ConstPoly::ConstPoly(const Monomial& m, GaussRat c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

bool ConstPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussRat ConstPoly::constant_term() const { return coefficient(Monomial()); }

GaussRat ConstPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat() : it->second;
}

std::set<std::string> ConstPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.factors()) out.insert(name);
  return out;
}

ConstPoly ConstPoly::conj() const {
  ConstPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

ConstPoly ConstPoly::scale(const GaussRat& c) const {
  if (c.is_zero()) return {};
  ConstPoly out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

ConstPoly ConstPoly::substitute(std::string_view name, const ConstPoly& value) const {
  ConstPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(name);
    ConstPoly term(m.without(name), c);
    for (unsigned k = 0; k < e; ++k) term = term * value;
    out += term;
  }
  return out;
}

void ConstPoly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ConstPoly& ConstPoly::operator+=(const ConstPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ConstPoly& ConstPoly::operator-=(const ConstPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ConstPoly operator*(const ConstPoly& a, const ConstPoly& b) {
  ConstPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ConstPoly operator-(const ConstPoly& a) { return a.scale(GaussRat(-1)); }

}  // namespace opcons
