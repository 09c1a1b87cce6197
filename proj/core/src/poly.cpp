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
#include "specfact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "specfact/error.hpp"

namespace specfact {

Poly::Poly(Rat constant) {
  if (!specfact::is_zero(constant)) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rat c, std::size_t power) {
  if (specfact::is_zero(c)) return {};
  std::vector<Rat> v(power + 1);
  v[power] = std::move(c);
  Poly p;
  p.coeffs_ = std::move(v);
  return p;
}

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && specfact::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rat(0); }

const Rat& Poly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> Poly::eval(std::complex<long double> x) const {
  std::complex<long double> acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  auto v = eval(std::complex<long double>(x.real(), x.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Poly Poly::monic() const {
  if (coeffs_.empty() || is_monic()) return *this;
  Rat inv = 1 / coeffs_.back();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::reversed() const {
  std::vector<Rat> r(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(r));
}

Poly Poly::shifted(std::size_t k) const {
  if (coeffs_.empty() || k == 0) return *this;
  std::vector<Rat> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  Poly p;
  p.coeffs_ = std::move(v);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (specfact::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat inv_lead = 1 / b.lead();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    if (is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::DivisionNotExact, to_string(a) + " is not divisible by " + to_string(b));
  }
  return q;
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).remainder.is_zero(); }

std::vector<Int> primitive_integer_coeffs(const Poly& p) {
  std::vector<Int> out;
  if (p.is_zero()) return out;
  Int den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  out.reserve(p.coeffs().size());
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

namespace {

using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = deg(b);
  const Int& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const int shift = deg(a) - db;
    Int lr = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= lr * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

Poly to_poly(const IntPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
  IntPoly A = primitive_integer_coeffs(a);
  IntPoly B = primitive_integer_coeffs(b);
  if (deg(A) < deg(B)) std::swap(A, B);
  Int g = 1, h = 1;
  while (true) {
    const int delta = deg(A) - deg(B);
    IntPoly R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (deg(R) == 0) return Poly(Rat(1));
    A = std::move(B);
    Int divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    B = std::move(R);
    g = A.back();
    // h <- g^delta / h^(delta - 1); unchanged when delta == 0
    if (delta > 0) {
      Int gd, hd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
    }
  }
  Int c = content(B);
  for (auto& x : B) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return to_poly(B).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& p, unsigned k) {
  Poly result(Rat(1));
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::pair<int, Poly> split_at_point(const Poly& p, const Rat& alpha) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "split_at_point of zero polynomial");
  int nu = 0;
  Poly cof = p;
  // Synthetic division by (z - alpha) while alpha remains a root.
  while (cof.degree() >= 1 && is_zero(cof.eval(alpha))) {
    const auto& c = cof.coeffs();
    std::vector<Rat> q(c.size() - 1);
    Rat carry(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] + carry * alpha;
      q[i - 1] = carry;
    }
    cof = Poly(std::move(q));
    ++nu;
  }
  return {nu, cof};
}

int multiplicity(const Poly& p, const Poly& factor) {
  if (p.is_zero() || factor.degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "multiplicity needs nonzero p and nonconstant factor");
  }
  int m = 0;
  Poly rest = p;
  while (rest.degree() >= factor.degree()) {
    auto [q, r] = divmod(rest, factor);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++m;
  }
  return m;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = exact_div(f, a);
  Poly c = exact_div(d, a);
  d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    Poly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g.monic(), i);
    Poly b_next = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b_next.derivative();
    b = std::move(b_next);
    ++i;
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeffs()[static_cast<std::size_t>(k)];
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
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace specfact
