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
#ifndef SPECFACT_RATFUN_HPP
#define SPECFACT_RATFUN_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "specfact/lpoly.hpp"
#include "specfact/poly.hpp"

namespace specfact {

/// A point at which a valuation can be taken: an exact finite rational,
/// an irreducible monic real factor (standing for its roots), or infinity.
struct Infinity {};
struct RootPoint {
  std::variant<Rat, Poly, Infinity> where;

  static RootPoint at(Rat a) { return {std::move(a)}; }
  static RootPoint factor(Poly f) { return {std::move(f)}; }
  static RootPoint infinity() { return {Infinity{}}; }
  bool is_infinity() const { return std::holds_alternative<Infinity>(where); }
};

std::string to_string(const RootPoint& pt);

/// Reduced rational function num/den: den monic, gcd(num, den) = 1, and the
/// zero function is 0/1.
class RatFun {
 public:
  RatFun() : den_(Rat(1)) {}
  explicit RatFun(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit RatFun(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  explicit RatFun(const LPoly& p);
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Constant value; requires is_constant().
  Rat constant() const;
  /// True when den is a power of z, i.e. the function is a Laurent polynomial.
  bool is_lpoly() const;
  /// Requires is_lpoly().
  LPoly to_lpoly() const;

  std::complex<double> eval(std::complex<double> x) const;
  std::complex<long double> eval(std::complex<long double> x) const;

  RatFun operator-() const { return RatFun(-num_, den_, true); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatFun(Poly num, Poly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

/// f(1/z).
RatFun star(const RatFun& f);

/// v_alpha(f); nullopt stands for +infinity (f = 0). For infinity this is
/// deg den - deg num.
std::optional<int> valuation(const RatFun& f, const RootPoint& pt);

/// f(1/lambda) written as a function of lambda. Same as star, named for the
/// substitution used at infinity.
inline RatFun substitute_reciprocal(const RatFun& f) { return star(f); }

std::string to_string(const RatFun& f);

}  // namespace specfact

#endif  // SPECFACT_RATFUN_HPP
