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
#include "specfact_cli/io.hpp"

#include <fstream>
#include <sstream>

#include "specfact/error.hpp"

namespace specfact::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t dim(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

json rats_to_json(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(rat_to_json(x));
  return a;
}

std::vector<Rat> rats_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

json lpoly_to_json(const LPoly& p) {
  return json{{"lpoly", {{"minpow", p.is_zero() ? 0 : p.minpow()}, {"coeffs", rats_to_json(p.coeffs())}}}};
}

RatFun entry_from_json(const json& e) {
  if (!e.is_object()) bad("matrix entry must be an object");
  if (e.contains("lpoly")) {
    const json& l = e.at("lpoly");
    const json& mp = field(l, "minpow");
    if (!mp.is_number_integer()) bad("\"minpow\" must be an integer");
    return RatFun(LPoly(mp.get<int>(), rats_from_json(field(l, "coeffs"))));
  }
  Poly num = poly_from_json(field(e, "num"));
  if (!e.contains("den")) return RatFun(num);
  Poly den = poly_from_json(e.at("den"));
  if (den.is_zero()) bad("zero denominator");
  return RatFun(num, den);
}

template <class T, class F>
json grid_to_json(const Matrix<T>& m, F&& entry) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json ratfun_to_json(const RatFun& f) {
  json e{{"num", poly_to_json(f.num())}};
  if (!(f.den() == Poly(Rat(1)))) e["den"] = poly_to_json(f.den());
  return e;
}

}  // namespace

json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  bad("rational must be a string \"p/q\" or an integer");
}

json poly_to_json(const Poly& p) { return rats_to_json(p.coeffs()); }
Poly poly_from_json(const json& j) { return Poly(rats_from_json(j)); }

json matrix_to_json(const RFMatrix& m) { return grid_to_json(m, ratfun_to_json); }
json matrix_to_json(const LPolyMatrix& m) { return grid_to_json(m, lpoly_to_json); }
json matrix_to_json(const RatMatrix& m) { return grid_to_json(m, [](const Rat& x) { return ratfun_to_json(RatFun(x)); }); }
json matrix_to_json(const PolyMatrix& m) { return grid_to_json(m, [](const Poly& p) { return ratfun_to_json(RatFun(p)); }); }

json matrix_to_json(const RowScaled<RatFun>& m) {
  json j = matrix_to_json(m.base);
  if (!m.exact()) j["sqrt_row_scales"] = rats_to_json(m.scales);
  return j;
}

RowScaled<RatFun> scaled_matrix_from_json(const json& j) {
  const std::size_t rows = dim(j, "rows"), cols = dim(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) bad("\"entries\" must have \"rows\" rows");
  RFMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) bad("row " + std::to_string(i) + " must have \"cols\" entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry_from_json(entries[i][k]);
  }
  std::vector<Rat> scales(rows, Rat(1));
  if (j.contains("sqrt_row_scales")) {
    scales = rats_from_json(j.at("sqrt_row_scales"));
    if (scales.size() != rows) bad("\"sqrt_row_scales\" must have one entry per row");
    for (const auto& s : scales)
      if (sgn(s) <= 0) bad("row scales must be positive");
  }
  return {std::move(scales), std::move(m)};
}

RFMatrix matrix_from_json(const json& j) {
  RowScaled<RatFun> m = scaled_matrix_from_json(j);
  if (!m.exact()) bad("irrational row scales are not accepted here");
  return m.base;
}

json region_to_json(const RegionSpec& r) {
  json flips = json::array();
  for (const auto& f : r.flips) flips.push_back(poly_to_json(f));
  return json{{"default", r.default_side == Side::Inside ? "inside" : "outside"},
              {"closed", r.closed_circle},
              {"flips", std::move(flips)}};
}

RegionSpec region_from_json(const json& j) {
  if (!j.is_object()) bad("region must be an object");
  RegionSpec r;
  if (j.contains("default")) {
    const json& d = j.at("default");
    if (d == "inside")
      r.default_side = Side::Inside;
    else if (d == "outside")
      r.default_side = Side::Outside;
    else
      bad("region \"default\" must be \"inside\" or \"outside\"");
  }
  if (j.contains("closed")) {
    if (!j.at("closed").is_boolean()) bad("region \"closed\" must be a boolean");
    r.closed_circle = j.at("closed").get<bool>();
  }
  if (j.contains("flips")) {
    if (!j.at("flips").is_array()) bad("region \"flips\" must be an array");
    for (const auto& f : j.at("flips")) r.flips.push_back(poly_from_json(f));
  }
  r.validate();
  return r;
}

json regions_to_json(const RegionPair& r) { return json{{"poles", region_to_json(r.poles)}, {"zeros", region_to_json(r.zeros)}}; }

RegionPair regions_from_json(const json& j) {
  return RegionPair{region_from_json(field(j, "poles")), region_from_json(field(j, "zeros"))};
}

json trace_to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back(json{{"v", rats_to_json(s.v)},
                         {"pivot", s.pivot},
                         {"K_before", s.K_before},
                         {"K_after", s.K_after},
                         {"omega_inv", matrix_to_json(s.omega_inv)},
                         {"omega", matrix_to_json(s.omega)}});
  json psi = json::array();
  for (const auto& p : t.psi_sequence) psi.push_back(matrix_to_json(p));
  return json{{"psi", std::move(psi)},
              {"steps", std::move(steps)},
              {"psi_final", matrix_to_json(t.psi_final)},
              {"ldl", {{"L", matrix_to_json(t.ldl.L)}, {"Dc", rats_to_json(t.ldl.Dc)}}},
              {"C", matrix_to_json(RowScaled<RatFun>{t.C.scales, to_rf(t.C.base)})},
              {"iteration_bound", t.iteration_bound},
              {"det_psi", rat_to_json(t.det_psi)},
              {"approximate", t.approximate}};
}

json smith_mcmillan_to_json(const SmithMcMillan& s) {
  json eps = json::array(), psi = json::array();
  for (const auto& p : s.eps) eps.push_back(poly_to_json(p));
  for (const auto& p : s.psi) psi.push_back(poly_to_json(p));
  return json{{"rank", s.rank},
              {"C", matrix_to_json(s.C)},
              {"D", matrix_to_json(s.D)},
              {"F", matrix_to_json(s.F)},
              {"eps", std::move(eps)},
              {"psi", std::move(psi)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace specfact::cli
