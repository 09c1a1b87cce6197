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

#include "specfact/rational.hpp"

#include <cmath>
#include <cctype>

#include "specfact/error.hpp"

namespace specfact {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

Rat from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  Rat r(x);
  r.canonicalize();
  return r;
}

std::optional<Rat> rationalize(double x, double tol, unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents of the exact binary value of x.
  Rat target = from_double(x);
  Int num = target.get_num();
  Int den = target.get_den();
  Int h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  const Rat tolerance = from_double(tol);
  while (den != 0) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int h = a * h_prev + h_prev2;
    Int k = a * k_prev + k_prev2;
    if (k > max_den) break;
    Rat c(h, k);
    c.canonicalize();
    Rat err = abs(c - target);
    if (err <= tolerance) return c;
    Int rem = num - a * den;
    num = den;
    den = rem;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace specfact
