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

#ifndef SPECFACT_RATIONAL_HPP
#define SPECFACT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace specfact {

/// Arbitrary-precision rational, always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rat& x);

/// Exact rational square root when x is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& x);

/// Best rational approximation of x with |x - p/q| <= tol and q <= max_den,
/// taken from the continued-fraction convergents. nullopt if none qualifies.
std::optional<Rat> rationalize(double x, double tol, unsigned long max_den = 1000000UL);

/// The exact rational value of a finite double.
Rat from_double(double x);

}  // namespace specfact

#endif  // SPECFACT_RATIONAL_HPP
