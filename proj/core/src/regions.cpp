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
#include "specfact/regions.hpp"

#include "specfact/precise.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "specfact/error.hpp"
#include "specfact/polymatrix.hpp"

namespace specfact {

namespace {

using cld = std::complex<long double>;

constexpr unsigned long kMaxDen = 10000000UL;

Poly z_power(int k) { return Poly::monomial(Rat(1), static_cast<std::size_t>(k)); }

int zero_multiplicity(const Poly& p) {
  int k = 0;
  while (k <= p.degree() && is_zero(p.coeffs()[static_cast<std::size_t>(k)])) ++k;
  return k;
}

Poly strip_z(const Poly& p) {
  const int k = zero_multiplicity(p);
  if (k == 0) return p;
  std::vector<Rat> c(p.coeffs().begin() + k, p.coeffs().end());
  return Poly(std::move(c));
}

// |r| compared with 1 exactly.
int compare_modulus_one(const Rat& r) { return cmp(abs(r), Rat(1)); }

cld polish(const Poly& p, const Poly& dp, cld x) {
  for (int it = 0; it < 8; ++it) {
    cld fx = p.eval(x), dfx = dp.eval(x);
    if (std::abs(dfx) == 0.0L) break;
    cld step = fx / dfx;
    x -= step;
    if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(x))) break;
  }
  return x;
}

std::optional<Poly> rationalize_group(const std::vector<cld>& roots) {
  std::vector<cld> c{cld(1.0L)};
  for (const cld& r : roots) {
    std::vector<cld> next(c.size() + 1, cld(0.0L));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<Rat> q;
  for (const cld& x : c) {
    const double re = static_cast<double>(x.real());
    auto v = rationalize(re, 1e-8 * std::max(1.0, std::abs(re)), kMaxDen);
    if (!v) return std::nullopt;
    q.push_back(*v);
  }
  return Poly(std::move(q));
}

Poly approximate_group(const Poly& s, const std::vector<cld>& roots) { return precise_factor(s, roots); }

// Circle split of a monic square-free polynomial with p(0) != 0.
CircleSplit split_squarefree(const Poly& s, double tol) {
  CircleSplit out{Poly(Rat(1)), Poly(Rat(1)), Poly(Rat(1)), false};
  Poly rest = s;
  for (const cld& r : numeric_roots(rest)) {
    if (rest.degree() < 1) break;
    const long double re = r.real();
    if (std::abs(r.imag()) > 1e-6L * std::max(1.0L, std::abs(r))) continue;
    auto cand = rationalize(static_cast<double>(re), 1e-9 * std::max(1.0, std::abs(static_cast<double>(re))), kMaxDen);
    if (!cand || !is_zero(rest.eval(*cand))) continue;
    rest = exact_div(rest, Poly::linear(*cand));
    const int c = compare_modulus_one(*cand);
    (c < 0 ? out.inside : c == 0 ? out.on : out.outside) *= Poly::linear(*cand);
  }
  if (rest.degree() < 1) return out;

  std::vector<cld> in, on, outr;
  for (const cld& r : numeric_roots(rest)) {
    const long double m = std::abs(r);
    if (std::abs(m - 1.0L) <= static_cast<long double>(tol)) on.push_back(r);
    else (m < 1.0L ? in : outr).push_back(r);
  }
  auto g_in = rationalize_group(in), g_on = rationalize_group(on), g_out = rationalize_group(outr);
  if (g_in && g_on && g_out && (*g_in) * (*g_on) * (*g_out) == rest) {
    out.inside *= *g_in;
    out.on *= *g_on;
    out.outside *= *g_out;
    return out;
  }
  if (!on.empty()) {
    if (!g_on || !divides(*g_on, rest))
      throw Error(ErrorCode::UnresolvableCircleProximity,
                  "roots of " + to_string(rest) + " lie within tolerance of the unit circle");
    out.on *= *g_on;
  }
  out.inside *= approximate_group(rest, in);
  out.outside *= approximate_group(rest, outr);
  out.approximate = true;
  return out;
}

Poly flips_product(const std::vector<Poly>& flips) {
  Poly p(Rat(1));
  for (const auto& f : flips) p *= f;
  return p;
}

std::vector<Poly> finite_flips(const RegionSpec& spec) {
  std::vector<Poly> out;
  for (const auto& f : spec.flips)
    if (!(f == Poly::z())) out.push_back(f);
  return out;
}

std::vector<Poly> reciprocal_flips(const RegionSpec& spec) {
  std::vector<Poly> out;
  for (const auto& f : finite_flips(spec)) out.push_back(reciprocal_monic(strip_z(f)));
  return out;
}

// Picks, for every orbit of the inside part, the representative outside A.
Poly orbit_representatives_outside(const Poly& inside_part, const RegionSpec& spec) {
  if (inside_part.degree() < 1) return inside_part;
  auto [flipped, plain] = extract_factors(inside_part, finite_flips(spec));
  // Inside roots lie in A iff default is Inside xor flipped.
  if (spec.default_side == Side::Inside) return reciprocal_monic(plain) * flipped;
  return plain * (flipped.degree() > 0 ? reciprocal_monic(flipped) : flipped);
}

Poly half_multiplicity(const Poly& on) {
  Poly out(Rat(1));
  if (on.degree() < 1) return out;
  for (const auto& [s, i] : squarefree_decomposition(on)) {
    if (i % 2 != 0)
      throw Error(ErrorCode::OddOnCircleMultiplicity,
                  "unit-circle factor " + to_string(s) + " has odd multiplicity " + std::to_string(i));
    out *= pow(s, static_cast<unsigned>(i / 2));
  }
  return out;
}

double max_abs(const std::vector<Rat>& c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x.get_d()));
  return m;
}

}  // namespace

void RegionSpec::validate() const {
  for (std::size_t i = 0; i < flips.size(); ++i) {
    const Poly& f = flips[i];
    if (f.degree() < 1) throw Error(ErrorCode::InvalidRegion, "flip factor must be nonconstant");
    if (!f.is_monic()) throw Error(ErrorCode::InvalidRegion, "flip factor " + to_string(f) + " is not monic");
    if (gcd(f, f.derivative()).degree() > 0)
      throw Error(ErrorCode::InvalidRegion, "flip factor " + to_string(f) + " is not square-free");
    if (f.degree() == 1) {
      if (compare_modulus_one(-f.coeff(0)) >= 0)
        throw Error(ErrorCode::InvalidRegion, "flip factor " + to_string(f) + " has a root outside the open disk");
    } else {
      for (const cld& r : numeric_roots(f))
        if (std::abs(r) >= 1.0L - 1e-12L)
          throw Error(ErrorCode::InvalidRegion, "flip factor " + to_string(f) + " has a root outside the open disk");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (gcd(f, flips[j]).degree() > 0)
        throw Error(ErrorCode::InvalidRegion, "flip factors " + to_string(flips[j]) + " and " + to_string(f) + " overlap");
  }
}

bool RegionSpec::contains_zero() const {
  const bool flipped = std::any_of(flips.begin(), flips.end(), [](const Poly& f) { return f == Poly::z(); });
  return (default_side == Side::Inside) != flipped;
}

bool RegionSpec::is_flipped(const Poly& inside_factor) const {
  if (flips.empty()) return false;
  return divides(inside_factor.monic(), flips_product(flips));
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::InA: return "in";
    case Membership::InStar: return "star";
    case Membership::OnCircle: return "circle";
  }
  return "?";
}

Membership membership(const RegionSpec& spec, const RootPoint& pt) {
  auto side = [&](bool in_a) { return in_a ? Membership::InA : Membership::InStar; };
  auto on_circle = [&]() {
    if (!spec.closed_circle) throw Error(ErrorCode::OnCircleAmbiguous, "point " + to_string(pt) + " is on the unit circle");
    return Membership::OnCircle;
  };
  if (pt.is_infinity()) return side(spec.contains_infinity());
  if (const Rat* a = std::get_if<Rat>(&pt.where)) {
    if (is_zero(*a)) return side(spec.contains_zero());
    const int c = compare_modulus_one(*a);
    if (c == 0) return on_circle();
    const bool inside = c < 0;
    Poly key = Poly::linear(inside ? *a : Rat(1 / *a));
    const bool base = inside == (spec.default_side == Side::Inside);
    return side(base != spec.is_flipped(key));
  }
  const Poly& f = std::get<Poly>(pt.where);
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "membership of a constant factor");
  if (f == Poly::z() || f.monic() == Poly::z()) return side(spec.contains_zero());
  int n_in = 0, n_on = 0, n_out = 0;
  for (const cld& r : numeric_roots(f)) {
    const long double m = std::abs(r);
    if (std::abs(m - 1.0L) <= 1e-12L) ++n_on;
    else (m < 1.0L ? n_in : n_out)++;
  }
  if (n_on == f.degree()) return on_circle();
  if (n_in != f.degree() && n_out != f.degree())
    throw Error(ErrorCode::InvalidArgument, "factor " + to_string(f) + " has roots on both sides of the circle");
  const bool inside = n_in == f.degree();
  Poly key = inside ? f.monic() : reciprocal_monic(f);
  Poly g = gcd(key, flips_product(spec.flips));
  if (g.degree() > 0 && g.degree() < key.degree())
    throw Error(ErrorCode::InvalidArgument, "factor " + to_string(f) + " straddles a flip");
  const bool base = inside == (spec.default_side == Side::Inside);
  return side(base != (g.degree() > 0));
}

std::vector<std::complex<long double>> numeric_roots(const Poly& p) {
  std::vector<cld> roots;
  const int n = p.degree();
  if (n < 1) return roots;
  const int k0 = zero_multiplicity(p);
  for (int i = 0; i < k0; ++i) roots.emplace_back(0.0L, 0.0L);
  Poly s = strip_z(p).monic();
  const int m = s.degree();
  if (m < 1) return roots;
  using MatLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  MatLD comp = MatLD::Zero(m, m);
  for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0L;
  for (int i = 0; i < m; ++i) comp(i, m - 1) = -static_cast<long double>(s.coeff(static_cast<std::size_t>(i)).get_d());
  Eigen::EigenSolver<MatLD> es(comp, false);
  Poly ds = s.derivative();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(polish(s, ds, es.eigenvalues()(i)));
  return roots;
}

Poly reciprocal_monic(const Poly& p) {
  if (p.degree() < 1) return Poly(Rat(1));
  if (is_zero(p.coeff(0))) throw Error(ErrorCode::InvalidArgument, "reciprocal of a polynomial vanishing at 0");
  return p.reversed().monic();
}

std::pair<Poly, Poly> extract_factors(const Poly& p, const std::vector<Poly>& fs) {
  Poly taken(Rat(1)), rest = p;
  for (const auto& f : fs) {
    for (Poly g = gcd(rest, f); g.degree() > 0; g = gcd(rest, f)) {
      taken *= g;
      rest = exact_div(rest, g);
    }
  }
  return {taken, rest};
}

CircleSplit split_circle(const Poly& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "circle split of the zero polynomial");
  CircleSplit out{z_power(zero_multiplicity(p)), Poly(Rat(1)), Poly(Rat(1)), false};
  Poly s = strip_z(p).monic();
  if (s.degree() < 1) return out;
  for (const auto& [part, mult] : squarefree_decomposition(s)) {
    CircleSplit c = split_squarefree(part, tol);
    const unsigned e = static_cast<unsigned>(mult);
    out.inside *= pow(c.inside, e);
    out.on *= pow(c.on, e);
    out.outside *= pow(c.outside, e);
    out.approximate = out.approximate || c.approximate;
  }
  return out;
}

RootClassification classify_roots(const RegionSpec& spec, const Poly& p, double tol) {
  RootClassification out;
  if (p.degree() < 1) return out;
  Poly zeros = z_power(zero_multiplicity(p));
  (spec.contains_zero() ? out.in_region : out.in_star) *= zeros;
  CircleSplit c = split_circle(strip_z(p).monic(), tol);
  out.approximate = c.approximate;
  out.on_circle = c.on;
  auto [in_fl, in_un] = extract_factors(c.inside, finite_flips(spec));
  auto [out_fl, out_un] = extract_factors(c.outside, reciprocal_flips(spec));
  if (spec.default_side == Side::Inside) {
    out.in_region *= in_un * out_fl;
    out.in_star *= in_fl * out_un;
  } else {
    out.in_region *= out_un * in_fl;
    out.in_star *= out_fl * in_un;
  }
  return out;
}

RFMatrix SplitDecomposition::Sigma() const {
  std::vector<RatFun> d;
  for (const auto& s : sigma) d.emplace_back(s);
  return RFMatrix::diagonal(d);
}
RFMatrix SplitDecomposition::Lambda() const { return RFMatrix::diagonal(lambda); }
RFMatrix SplitDecomposition::Theta() const { return RFMatrix::diagonal(theta); }
RFMatrix SplitDecomposition::Dplus() const { return Theta() * Lambda(); }
RFMatrix SplitDecomposition::reassemble() const {
  RFMatrix L = Lambda(), T = Theta();
  return Sigma() * star(L) * star(T) * T * L;
}

SplitDecomposition split_diagonal(const std::vector<Poly>& eps, const std::vector<Poly>& psi,
                                  const RegionPair& regions, double tol) {
  regions.validate();
  if (eps.size() != psi.size()) throw Error(ErrorCode::InvalidArgument, "eps/psi length mismatch");
  SplitDecomposition out;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const RatFun dk(eps[k], psi[k]);
    const int h_zero = zero_multiplicity(dk.num());
    const int h_pole = zero_multiplicity(dk.den());
    CircleSplit se = split_circle(strip_z(dk.num()).monic(), tol);
    CircleSplit sp = split_circle(strip_z(dk.den()).monic(), tol);
    if (sp.on.degree() > 0 && regions.poles.closed_circle)
      throw Error(ErrorCode::OnCircleForbidden, "unit-circle pole with a closed pole region");
    if (se.on.degree() > 0 && regions.zeros.closed_circle)
      throw Error(ErrorCode::OnCircleForbidden, "unit-circle zero with a closed zero region");
    Poly theta_num = half_multiplicity(se.on);
    Poly theta_den = half_multiplicity(sp.on);
    Poly lam_num = orbit_representatives_outside(se.inside, regions.zeros);
    Poly lam_den = orbit_representatives_outside(sp.inside, regions.poles);
    if (h_pole > 0 && !regions.poles.contains_zero()) lam_den *= z_power(h_pole);
    if (h_zero > 0 && !regions.zeros.contains_zero()) lam_num *= z_power(h_zero);
    const bool approx = se.approximate || sp.approximate;
    RatFun lambda(lam_num, lam_den), theta(theta_num, theta_den);
    RatFun rest = dk / (star(lambda) * lambda * star(theta) * theta);
    LPoly sigma;
    if (approx) {
      sigma = approx_lpoly(rest, tol);
    } else {
      if (!rest.is_lpoly())
        throw Error(ErrorCode::NotASpectrum, "diagonal entry " + std::to_string(k) + " does not split: " + to_string(rest));
      sigma = rest.to_lpoly();
    }
    if (!sigma.is_monomial())
      throw Error(ErrorCode::NotASpectrum, "diagonal entry " + std::to_string(k) + " leaves a non-monomial balance " + to_string(sigma));
    out.sigma.push_back(std::move(sigma));
    out.lambda.push_back(std::move(lambda));
    out.theta.push_back(std::move(theta));
    out.approximate = out.approximate || approx;
  }
  return out;
}

SplitDecomposition split_diagonal(const RFMatrix& D, const RegionPair& regions, double tol) {
  if (!D.is_square() || !D.is_diagonal()) throw Error(ErrorCode::InvalidArgument, "split_diagonal needs a square diagonal matrix");
  std::vector<Poly> eps, psi;
  for (std::size_t k = 0; k < D.rows(); ++k) {
    eps.push_back(D(k, k).num());
    psi.push_back(D(k, k).den());
  }
  return split_diagonal(eps, psi, regions, tol);
}

LPoly approx_lpoly(const RatFun& f, double tol) {
  if (f.is_zero()) return {};
  const int a = zero_multiplicity(f.den());
  Poly d = strip_z(f.den());
  auto [q, r] = divmod(f.num(), d);
  const double scale = std::max(max_abs(f.num().coeffs()), 1e-300);
  if (!r.is_zero() && max_abs(r.coeffs()) > tol * scale)
    throw Error(ErrorCode::NumericFallbackExceededTolerance,
                "remainder " + std::to_string(max_abs(r.coeffs()) / scale) + " exceeds tolerance");
  return round_precise(LPoly(q, -a));
}

}  // namespace specfact
