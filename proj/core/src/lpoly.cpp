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
#include "specfact/lpoly.hpp"

#include <sstream>

#include "specfact/error.hpp"

namespace specfact {

LPoly::LPoly(Rat constant) {
  if (!specfact::is_zero(constant)) coeffs_.push_back(std::move(constant));
}

LPoly::LPoly(const Poly& p, int shift) : minpow_(shift), coeffs_(p.coeffs()) { normalize(); }

LPoly::LPoly(int minpow, std::vector<Rat> coeffs) : minpow_(minpow), coeffs_(std::move(coeffs)) {
  normalize();
}

LPoly LPoly::monomial(Rat c, int power) { return LPoly(power, std::vector<Rat>{std::move(c)}); }

void LPoly::normalize() {
  while (!coeffs_.empty() && specfact::is_zero(coeffs_.back())) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && specfact::is_zero(coeffs_[lead_zeros])) ++lead_zeros;
  if (lead_zeros > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    minpow_ += static_cast<int>(lead_zeros);
  }
  if (coeffs_.empty()) minpow_ = 0;
}

int LPoly::min_degree() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "min-degree of zero Laurent polynomial");
  return minpow_;
}

int LPoly::max_degree() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "max-degree of zero Laurent polynomial");
  return minpow_ + static_cast<int>(coeffs_.size()) - 1;
}

Rat LPoly::coeff_at(int power) const {
  const int i = power - minpow_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly LPoly::stripped() const { return Poly(coeffs_); }

Poly LPoly::to_poly() const {
  if (is_zero()) return {};
  if (minpow_ < 0) throw Error(ErrorCode::InvalidArgument, "Laurent polynomial has negative powers");
  return Poly(coeffs_).shifted(static_cast<std::size_t>(minpow_));
}

std::complex<double> LPoly::eval(std::complex<double> x) const {
  if (is_zero()) return {0.0, 0.0};
  auto v = Poly(coeffs_).eval(std::complex<long double>(x.real(), x.imag()));
  v *= std::pow(std::complex<long double>(x.real(), x.imag()), minpow_);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

LPoly LPoly::operator-() const {
  LPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(minpow_, o.minpow_);
  const int hi = std::max(max_degree(), o.max_degree());
  std::vector<Rat> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(minpow_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i + static_cast<std::size_t>(o.minpow_ - lo)] += o.coeffs_[i];
  minpow_ = lo;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) { return *this += -o; }

LPoly& LPoly::operator*=(const Rat& c) {
  if (specfact::is_zero(c)) return *this = LPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly prod = Poly(a.coeffs_) * Poly(b.coeffs_);
  return LPoly(prod, a.minpow_ + b.minpow_);
}

LPoly star(const LPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rat> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return LPoly(-p.max_degree(), std::move(rev));
}

std::optional<LPoly> try_div(const LPoly& a, const LPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "Laurent division by zero");
  if (a.is_zero()) return LPoly();
  auto [q, r] = divmod(a.stripped(), b.stripped());
  if (!r.is_zero()) return std::nullopt;
  return LPoly(q, a.minpow() - b.minpow());
}

LPoly exact_div(const LPoly& a, const LPoly& b) {
  auto q = try_div(a, b);
  if (!q) throw Error(ErrorCode::DivisionNotExact, to_string(a) + " is not divisible by " + to_string(b));
  return *q;
}

std::string to_string(const LPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.max_degree(); k >= p.min_degree(); --k) {
    Rat c = p.coeff_at(k);
    if (is_zero(c)) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (k == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "z";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace specfact
