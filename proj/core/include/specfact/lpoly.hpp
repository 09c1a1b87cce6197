/*
   Copyright 2026 The specfact Authors

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
#ifndef SPECFACT_LPOLY_HPP
#define SPECFACT_LPOLY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "specfact/poly.hpp"

namespace specfact {

/// Laurent polynomial sum_i coeffs[i] * z^(minpow + i). The zero element has
/// no coefficients; otherwise the first and last coefficients are nonzero, so
/// minpow is the minimum-degree and minpow + len - 1 the maximum-degree.
class LPoly {
 public:
  LPoly() = default;
  explicit LPoly(Rat constant);
  explicit LPoly(const Poly& p, int shift = 0);
  LPoly(int minpow, std::vector<Rat> coeffs);

  static LPoly monomial(Rat c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;
  int max_degree() const;
  int minpow() const { return minpow_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff_at(int power) const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && minpow_ == 0); }
  /// z^(-min_degree) * this: a polynomial with nonzero constant term.
  Poly stripped() const;
  /// The polynomial itself; requires min_degree >= 0.
  Poly to_poly() const;

  std::complex<double> eval(std::complex<double> x) const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const Rat& c);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const Rat& c) { return a *= c; }
  friend LPoly operator*(const Rat& c, LPoly a) { return a *= c; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  friend bool operator==(const LPoly& a, const LPoly& b) {
    return a.minpow_ == b.minpow_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  int minpow_ = 0;
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const LPoly& p) { return p.is_zero(); }

/// p(1/z).
LPoly star(const LPoly& p);

/// Exact quotient in the Laurent ring; nullopt when b does not divide a.
std::optional<LPoly> try_div(const LPoly& a, const LPoly& b);
/// Throws Error(DivisionNotExact) when b does not divide a.
LPoly exact_div(const LPoly& a, const LPoly& b);

std::string to_string(const LPoly& p);

}  // namespace specfact

#endif  // SPECFACT_LPOLY_HPP
