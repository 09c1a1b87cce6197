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
#include "specfact/precise.hpp"

#include <algorithm>
#include <cmath>

namespace specfact {

namespace {

mpf_class F(const Rat& x) { return mpf_class(x, kPreciseBits); }
mpf_class F(double x) { return mpf_class(x, kPreciseBits); }

Rat to_rat(const mpf_class& f) {
  Rat q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

struct Complex {
  mpf_class re{0, kPreciseBits}, im{0, kPreciseBits};
};

Complex operator*(const Complex& a, const Complex& b) {
  return {mpf_class(a.re * b.re - a.im * b.im, kPreciseBits), mpf_class(a.re * b.im + a.im * b.re, kPreciseBits)};
}
Complex operator-(const Complex& a, const Complex& b) {
  return {mpf_class(a.re - b.re, kPreciseBits), mpf_class(a.im - b.im, kPreciseBits)};
}
mpf_class norm2(const Complex& a) { return mpf_class(a.re * a.re + a.im * a.im, kPreciseBits); }
Complex operator/(const Complex& a, const Complex& b) {
  mpf_class d = norm2(b);
  return {mpf_class((a.re * b.re + a.im * b.im) / d, kPreciseBits), mpf_class((a.im * b.re - a.re * b.im) / d, kPreciseBits)};
}

Complex horner(const std::vector<mpf_class>& c, const Complex& x) {
  Complex acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x;
    acc.re += c[i];
  }
  return acc;
}

Complex newton(const std::vector<mpf_class>& c, const std::vector<mpf_class>& dc, Complex x) {
  mpf_class eps(1, kPreciseBits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), 2 * (kPreciseBits - 16));
  for (int it = 0; it < 200; ++it) {
    Complex d = horner(dc, x);
    if (norm2(d) == 0) break;
    Complex step = horner(c, x) / d;
    x = x - step;
    mpf_class size = norm2(x);
    if (size < 1) size = 1;
    if (norm2(step) <= eps * size) break;
  }
  return x;
}

}  // namespace

Rat round_precise(const Rat& x) { return sgn(x) == 0 ? Rat(0) : to_rat(F(x)); }

LPoly round_precise(const LPoly& p, double drop_rel) {
  if (p.is_zero()) return p;
  mpf_class m(0, kPreciseBits);
  for (const auto& x : p.coeffs()) m = std::max(m, mpf_class(abs(F(x))));
  const mpf_class cut = m * F(drop_rel);
  std::vector<Rat> c;
  for (const auto& x : p.coeffs()) c.push_back(abs(F(x)) <= cut ? Rat(0) : round_precise(x));
  return LPoly(p.minpow(), std::move(c));
}

Poly precise_factor(const Poly& s, const std::vector<std::complex<long double>>& roots) {
  std::vector<mpf_class> c, dc;
  for (const auto& x : s.coeffs()) c.push_back(F(x));
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(mpf_class(c[i] * static_cast<unsigned long>(i), kPreciseBits));
  std::vector<Complex> prod(1);
  prod[0].re = 1;
  for (const auto& r0 : roots) {
    Complex r = newton(c, dc, Complex{F(static_cast<double>(r0.real())), F(static_cast<double>(r0.imag()))});
    std::vector<Complex> next(prod.size() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1].re += prod[i].re;
      next[i + 1].im += prod[i].im;
      Complex t = r * prod[i];
      next[i] = next[i] - t;
    }
    prod = std::move(next);
  }
  std::vector<Rat> q;
  for (const auto& x : prod) q.push_back(to_rat(x.re));
  q.back() = 1;
  return Poly(std::move(q));
}

std::optional<std::vector<Rat>> precise_kernel(const RatMatrix& m, double rel_tol, bool last_free) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpf_class>> a(rows, std::vector<mpf_class>(cols, mpf_class(0, kPreciseBits)));
  mpf_class scale(0, kPreciseBits);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = F(m(i, j));
      scale = std::max(scale, mpf_class(abs(a[i][j])));
    }
  const mpf_class cut = scale * F(rel_tol);
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  std::size_t row = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t best = row;
    for (std::size_t i = row; i < rows; ++i)
      if (abs(a[i][j]) > abs(a[best][j])) best = i;
    if (row >= rows || abs(a[best][j]) <= cut) {
      free.push_back(j);
      continue;
    }
    std::swap(a[row], a[best]);
    const mpf_class piv = a[row][j];
    for (std::size_t k = j; k < cols; ++k) a[row][k] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i][j]) == 0) continue;
      const mpf_class f = a[i][j];
      for (std::size_t k = j; k < cols; ++k) a[i][k] -= f * a[row][k];
    }
    pivots.push_back(j);
    ++row;
  }
  if (free.empty()) return std::nullopt;
  const std::size_t fc = last_free ? free.back() : free.front();
  std::vector<Rat> v(cols, Rat(0));
  v[fc] = 1;
  mpf_class vmax(1, kPreciseBits);
  for (std::size_t i = 0; i < pivots.size(); ++i) vmax = std::max(vmax, mpf_class(abs(a[i][fc])));
  const mpf_class vcut = vmax * F(kKernelDrop);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (abs(a[i][fc]) > vcut) v[pivots[i]] = round_precise(to_rat(mpf_class(-a[i][fc])));
  return v;
}

}  // namespace specfact
