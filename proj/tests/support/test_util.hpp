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
#ifndef SPECFACT_TEST_UTIL_HPP
#define SPECFACT_TEST_UTIL_HPP

#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "specfact/lpoly.hpp"
#include "specfact/poly.hpp"
#include "specfact/ratfun.hpp"

namespace specfact {
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }
}  // namespace specfact

namespace specfact::testing {

inline Rat q(const char* s) { return parse_rat(s); }
inline Rat q(int n) { return Rat(n); }
inline Rat q(long n) { return Rat(n); }
inline Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Ascending coefficients from strings, e.g. P({"-1/2", "0", "1"}).
inline Poly P(std::initializer_list<const char*> cs) {
  std::vector<Rat> v;
  for (const char* c : cs) v.push_back(parse_rat(c));
  return Poly(std::move(v));
}

inline LPoly L(int minpow, std::initializer_list<const char*> cs) {
  std::vector<Rat> v;
  for (const char* c : cs) v.push_back(parse_rat(c));
  return LPoly(minpow, std::move(v));
}

inline Poly prod_linear(const std::vector<Rat>& roots) {
  Poly p(Rat(1));
  for (const auto& r : roots) p *= Poly::linear(r);
  return p;
}

/// Small random rationals p/q with |p| <= num_max, 1 <= q <= den_max.
class RandomRat {
 public:
  explicit RandomRat(unsigned seed) : gen_(seed) {}
  Rat operator()(int num_max = 9, int den_max = 5) {
    std::uniform_int_distribution<int> n(-num_max, num_max), d(1, den_max);
    Rat r(n(gen_), d(gen_));
    r.canonicalize();
    return r;
  }
  Rat nonzero(int num_max = 9, int den_max = 5) {
    for (;;) {
      Rat r = (*this)(num_max, den_max);
      if (sgn(r) != 0) return r;
    }
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Poly poly(int deg) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back((*this)());
    return Poly(std::move(c));
  }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace specfact::testing

#endif  // SPECFACT_TEST_UTIL_HPP
