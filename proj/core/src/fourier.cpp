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

#include <algorithm>
#include <cstdlib>

namespace opcons {

FourierPoly::FourierPoly(ConstPoly c) {
  if (!c.is_zero()) modes_.emplace(0, std::move(c));
}

FourierPoly FourierPoly::mode(int k, ConstPoly c) {
  FourierPoly f;
  if (!c.is_zero()) f.modes_.emplace(k, std::move(c));
  return f;
}

ConstPoly FourierPoly::coefficient(int k) const {
  auto it = modes_.find(k);
  return it == modes_.end() ? ConstPoly() : it->second;
}

bool FourierPoly::is_constant() const {
  return modes_.empty() || (modes_.size() == 1 && modes_.begin()->first == 0);
}

int FourierPoly::bandwidth() const {
  int w = 0;
  for (const auto& [k, c] : modes_) w = std::max(w, std::abs(k));
  return w;
}

std::set<std::string> FourierPoly::symbols() const {
  std::set<std::string> out;
  for (const auto& [k, c] : modes_) out.merge(c.symbols());
  return out;
}

FourierPoly FourierPoly::diff() const {
  FourierPoly out;
  for (const auto& [k, c] : modes_)
    if (k != 0) out.modes_.emplace(k, c.scale(GaussRat(Rational(0), Rational(k))));
  return out;
}

FourierPoly FourierPoly::conj() const {
  FourierPoly out;
  for (const auto& [k, c] : modes_) out.modes_.emplace(-k, c.conj());
  return out;
}

ConstPoly FourierPoly::mean() const { return coefficient(0); }

FourierPoly FourierPoly::scale(const ConstPoly& c) const {
  FourierPoly out;
  for (const auto& [k, coeff] : modes_) out.add_mode(k, coeff * c);
  return out;
}

FourierPoly FourierPoly::substitute(std::string_view name, const ConstPoly& value) const {
  FourierPoly out;
  for (const auto& [k, c] : modes_) out.add_mode(k, c.substitute(name, value));
  return out;
}

void FourierPoly::add_mode(int k, const ConstPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = modes_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) modes_.erase(it);
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& other) {
  for (const auto& [k, c] : other.modes_) add_mode(k, c);
  return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& other) {
  for (const auto& [k, c] : other.modes_) add_mode(k, -c);
  return *this;
}

FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
  FourierPoly out;
  for (const auto& [ka, ca] : a.modes_)
    for (const auto& [kb, cb] : b.modes_) out.add_mode(ka + kb, ca * cb);
  return out;
}

FourierPoly operator-(const FourierPoly& a) { return a.scale(ConstPoly(-1)); }

}  // namespace opcons
