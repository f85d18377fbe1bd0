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

#ifndef OPCONS_FOURIER_HPP
#define OPCONS_FOURIER_HPP

#include "opcons/exactnum.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace opcons {

/// Finite Fourier polynomial sum_k c_k e^{ik phi} over a real variable phi,
/// with ConstPoly coefficients. Modes are stored sorted by frequency and
/// never hold a zero coefficient.
///
/// Functions are periodic on [0, 2 pi); mean() is the normalized integral over
/// one period, which picks out the k = 0 coefficient.
class FourierPoly {
 public:
  using Modes = std::map<int, ConstPoly>;

  FourierPoly() = default;
  FourierPoly(ConstPoly c);               // NOLINT(google-explicit-constructor)
  FourierPoly(GaussRat c) : FourierPoly(ConstPoly(std::move(c))) {}  // NOLINT
  FourierPoly(int c) : FourierPoly(ConstPoly(c)) {}                  // NOLINT

  /// c * e^{ik phi}
  static FourierPoly mode(int k, ConstPoly c = ConstPoly(1));

  const Modes& modes() const noexcept { return modes_; }
  ConstPoly coefficient(int k) const;

  bool is_zero() const noexcept { return modes_.empty(); }
  /// No phi dependence: only frequency 0, or nothing at all.
  bool is_constant() const;
  /// Largest |k| present, 0 for constants.
  int bandwidth() const;
  std::set<std::string> symbols() const;

  /// d/dphi, mode-wise c_k -> (ik) c_k.
  FourierPoly diff() const;
  /// Complex conjugate as a function of real phi: c_k -> conj(c_{-k}).
  FourierPoly conj() const;
  /// (1/2pi) * integral over one period.
  ConstPoly mean() const;
  FourierPoly scale(const ConstPoly& c) const;
  FourierPoly substitute(std::string_view name, const ConstPoly& value) const;

  FourierPoly& operator+=(const FourierPoly& other);
  FourierPoly& operator-=(const FourierPoly& other);

  friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
  friend FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }
  friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b);
  friend FourierPoly operator-(const FourierPoly& a);
  friend bool operator==(const FourierPoly& a, const FourierPoly& b) { return a.modes_ == b.modes_; }

 private:
  void add_mode(int k, const ConstPoly& c);

  Modes modes_;
};

}  // namespace opcons

#endif  // OPCONS_FOURIER_HPP
