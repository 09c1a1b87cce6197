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
#ifndef SPECFACT_CLI_IO_HPP
#define SPECFACT_CLI_IO_HPP

// JSON wire formats. Rationals travel as strings, polynomial coefficients
// in ascending powers.

#include <nlohmann/json.hpp>
#include <string>

#include "specfact/factorizer.hpp"

namespace specfact::cli {

using nlohmann::json;

json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// MatrixFile: {"rows", "cols", "entries"}; entries are {"num": [...]},
/// {"num": [...], "den": [...]} or {"lpoly": {"minpow", "coeffs"}}.
/// An optional "sqrt_row_scales" array s stands for diag(sqrt(s)) * entries.
json matrix_to_json(const RFMatrix& m);
json matrix_to_json(const LPolyMatrix& m);
json matrix_to_json(const RatMatrix& m);
json matrix_to_json(const PolyMatrix& m);
json matrix_to_json(const RowScaled<RatFun>& m);
RowScaled<RatFun> scaled_matrix_from_json(const json& j);
/// Throws ParseError if the file carries non-unit row scales.
RFMatrix matrix_from_json(const json& j);

json region_to_json(const RegionSpec& r);
RegionSpec region_from_json(const json& j);
json regions_to_json(const RegionPair& r);
RegionPair regions_from_json(const json& j);

json trace_to_json(const ReductionTrace& t);
json smith_mcmillan_to_json(const SmithMcMillan& s);

/// Throws Error(ParseError) on unreadable files or malformed JSON.
json read_json_file(const std::string& path);
/// Two-space indented, newline terminated.
std::string dump(const json& j);

}  // namespace specfact::cli

#endif  // SPECFACT_CLI_IO_HPP
