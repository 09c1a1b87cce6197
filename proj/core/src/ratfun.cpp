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
#include "specfact/ratfun.hpp"

#include "specfact/error.hpp"

namespace specfact {

namespace {

bool is_z_power(const Poly& p) {
  if (p.is_zero()) return false;
  for (int i = 0; i < p.degree(); ++i)
    if (!is_zero(p.coeffs()[static_cast<std::size_t>(i)])) return false;
  return true;
}

}  // namespace

RatFun::RatFun(const LPoly& p) : den_(Rat(1)) {
  if (p.is_zero()) return;
  if (p.min_degree() >= 0) {
    num_ = p.to_poly();
  } else {
    num_ = p.stripped();
    den_ = Poly::monomial(Rat(1), static_cast<std::size_t>(-p.min_degree()));
  }
}

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rat l = den.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rat RatFun::constant() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "not a constant: " + to_string(*this));
  return num_.is_zero() ? Rat(0) : num_.coeff(0);
}

bool RatFun::is_lpoly() const { return is_z_power(den_); }

LPoly RatFun::to_lpoly() const {
  if (!is_lpoly()) throw Error(ErrorCode::DivisionNotExact, "not a Laurent polynomial: " + to_string(*this));
  return LPoly(num_, -den_.degree());
}

std::complex<double> RatFun::eval(std::complex<double> x) const {
  return num_.eval(x) / den_.eval(x);
}

std::complex<long double> RatFun::eval(std::complex<long double> x) const {
  return num_.eval(x) / den_.eval(x);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly ad = exact_div(a.den_, g);
  Poly bd = exact_div(b.den_, g);
  return RatFun(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_, Poly(Rat(1)), true);
  // Cross-cancel first so the final gcd works on smaller operands.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Poly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  Rat l = d.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    n *= inv;
    d *= inv;
  }
  return RatFun(std::move(n), std::move(d), true);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero rational function");
  return a * RatFun(b.den_, b.num_);
}

RatFun star(const RatFun& f) {
  if (f.is_zero()) return f;
  // n(1/z)/d(1/z) = z^(deg d - deg n) * rev(n) / rev(d)
  const int shift = f.den().degree() - f.num().degree();
  Poly n = f.num().reversed();
  Poly d = f.den().reversed();
  if (shift > 0) n = n.shifted(static_cast<std::size_t>(shift));
  if (shift < 0) d = d.shifted(static_cast<std::size_t>(-shift));
  return RatFun(std::move(n), std::move(d));
}

std::optional<int> valuation(const RatFun& f, const RootPoint& pt) {
  if (f.is_zero()) return std::nullopt;
  if (pt.is_infinity()) return f.den().degree() - f.num().degree();
  if (const Rat* a = std::get_if<Rat>(&pt.where))
    return split_at_point(f.num(), *a).first - split_at_point(f.den(), *a).first;
  const Poly& fac = std::get<Poly>(pt.where);
  if (fac.degree() < 1) throw Error(ErrorCode::InvalidArgument, "valuation at a constant factor");
  return multiplicity(f.num(), fac) - multiplicity(f.den(), fac);
}

std::string to_string(const RootPoint& pt) {
  if (pt.is_infinity()) return "inf";
  if (const Rat* a = std::get_if<Rat>(&pt.where)) return to_string(*a);
  return "roots(" + to_string(std::get<Poly>(pt.where)) + ")";
}

std::string to_string(const RatFun& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace specfact
