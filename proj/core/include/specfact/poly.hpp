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

#ifndef SPECFACT_POLY_HPP
#define SPECFACT_POLY_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "specfact/rational.hpp"

namespace specfact {

/// Univariate polynomial over the rationals. Coefficients are stored in
/// ascending powers of z; the zero polynomial has no coefficients and every
/// other polynomial has a nonzero last coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(Rat c, std::size_t power);
  static Poly z() { return monomial(Rat(1), 1); }
  /// z - root
  static Poly linear(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t power) const;
  const Rat& lead() const;
  bool is_monic() const;

  Rat eval(const Rat& x) const;
  std::complex<long double> eval(std::complex<long double> x) const;
  std::complex<double> eval(std::complex<double> x) const;

  Poly monic() const;
  Poly derivative() const;
  /// z^deg * p(1/z).
  Poly reversed() const;
  /// p(z) * z^k
  Poly shifted(std::size_t k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
/// a / b, throwing Error(DivisionNotExact) if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);

/// Monic greatest common divisor, via the subresultant pseudo-remainder
/// sequence on primitive integer images. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned k);

/// Scales p by a positive rational so that its coefficients are coprime
/// integers.
std::vector<Int> primitive_integer_coeffs(const Poly& p);

/// p = (z - alpha)^nu * cofactor with cofactor(alpha) != 0. Requires p != 0.
std::pair<int, Poly> split_at_point(const Poly& p, const Rat& alpha);

/// Largest m with factor^m | p. Requires p != 0 and deg factor >= 1.
int multiplicity(const Poly& p, const Poly& factor);

/// Yun's square-free decomposition of a monic p: pairs (s_i, i) with s_i
/// monic, square-free, pairwise coprime and p = prod s_i^i. Only nonconstant
/// parts are listed.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Human-readable form in z, e.g. "z^2 - 1/2*z + 3".
std::string to_string(const Poly& p);

}  // namespace specfact

#endif  // SPECFACT_POLY_HPP
