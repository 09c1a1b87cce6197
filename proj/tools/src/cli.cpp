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
#include "specfact_cli/cli.hpp"

#ifdef SPECFACT_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "specfact/version.hpp"
#include "specfact_cli/io.hpp"

namespace specfact::cli {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

void root_table(std::ostringstream& s, const char* title, const Poly& p, int at_infinity) {
  s << title << ":\n";
  if (p.degree() > 0) {
    std::vector<std::complex<long double>> roots = numeric_roots(p);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a.imag() < b.imag();
    });
    for (const auto& r : roots) {
      const double re = static_cast<double>(r.real()), im = static_cast<double>(r.imag());
      s << "  z = " << fmt(re);
      if (std::abs(im) > 1e-12) s << (im < 0 ? " - " : " + ") << fmt(std::abs(im)) << "j";
      s << "  |z| = " << fmt(static_cast<double>(std::abs(r))) << "\n";
    }
  }
  if (at_infinity > 0) s << "  z = inf  order " << at_infinity << "\n";
  if (p.degree() <= 0 && at_infinity == 0) s << "  none\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ReductionOptions reduction_options(const std::string& pivot, const std::string& kernel) {
  ReductionOptions o;
  o.pivot = pivot == "largest" ? PivotChoice::Largest : PivotChoice::Smallest;
  o.kernel = kernel == "last" ? KernelChoice::LastFree : KernelChoice::FirstFree;
  return o;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidRegion:
    case ErrorCode::InvalidArgument:
      return kExitParse;
    case ErrorCode::NotASpectrum:
    case ErrorCode::RankZero:
    case ErrorCode::OddOnCircleMultiplicity:
    case ErrorCode::OnCircleForbidden:
    case ErrorCode::NotPDOnCircle:
      return kExitNotSpectrum;
    case ErrorCode::NumericFallbackExceededTolerance:
    case ErrorCode::UnresolvableCircleProximity:
    case ErrorCode::OnCircleAmbiguous:
      return kExitNumeric;
    default:
      return kExitInternal;
  }
}

std::string factorization_report(const SpectralFactorization& f) {
  const FactorDiagnostics& d = f.diagnostics;
  std::ostringstream s;
  s << "specfact " << kVersion << " factorize\n";
  s << "rank: " << f.smm.rank << "\n";
  s << "size: " << f.W.base.rows() << " x " << f.W.base.cols() << "\n";
  s << "mcmillan_degree_phi: " << d.mcmillan_phi << "\n";
  s << "mcmillan_degree_w: " << d.mcmillan_w << "\n";
  s << "iterations: " << d.iterations << " (bound " << f.trace.iteration_bound << ")\n";
  s << "exact_path: " << yes_no(d.exact_path) << "\n";
  s << "c_exact: " << yes_no(d.c_exact) << "\n";
  s << "identity: " << (d.exact_identity ? "exact" : "sampled") << "\n";
  s << "positive_on_circle: sampled, not certified\n";
  if (d.sampled_residual) s << "sampled_residual: " << fmt(*d.sampled_residual) << "\n";
  s << "poles_avoid_region: " << yes_no(d.poles_ok) << "\n";
  s << "zeros_avoid_region: " << yes_no(d.zeros_ok) << "\n";
  root_table(s, "poles of W", d.w.poles, d.w.pole_order_at_infinity);
  root_table(s, "zeros of W", d.w.zeros, d.w.zero_order_at_infinity);
  return s.str();
}

std::string verification_report(const VerificationReport& r) {
  std::ostringstream s;
  s << "δ_M(Φ)=" << r.mcmillan_phi << ", δ_M(W)=" << r.mcmillan_w << "\n";
  s << "residual: " << (r.exact_residual_zero ? "exact zero" : fmt(r.sampled_residual)) << " "
    << (r.residual_ok ? "PASS" : "FAIL") << "\n";
  s << "poles: " << (r.poles_ok ? "PASS" : "FAIL") << "\n";
  s << "zeros: " << (r.zeros_ok ? "PASS" : "FAIL") << "\n";
  s << "minimality: " << (r.minimal ? "PASS" : "FAIL") << "\n";
  if (!r.exact_residual_zero) s << "residual check: sampled, not certified\n";
  for (const auto& f : r.failures) s << "failed: " << f << "\n";
  s << (r.ok() ? "verify: PASS" : "verify: FAIL") << "\n";
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral factorization of rational matrices", "specfact"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string input, regions_path, output, report, trace_path, pivot = "smallest", kernel = "first";
  double tol = 1e-9;
  std::size_t grid = 512;

  auto* fac = app.add_subcommand("factorize", "Compute W with Phi = W* W");
  fac->add_option("--input", input, "Spectrum Phi (MatrixFile)")->required();
  fac->add_option("--regions", regions_path, "RegionFile; default is the outer factor");
  fac->add_option("--output", output, "Where to write W (default: standard output)");
  fac->add_option("--report", report, "Where to write the text report");
  fac->add_option("--trace", trace_path, "Where to write the reduction trace");
  fac->add_option("--tol", tol, "Numeric tolerance")->capture_default_str();
  fac->add_option("--grid", grid, "Unit-circle samples")->capture_default_str();
  fac->add_option("--pivot", pivot, "Tie-break in the degree reduction")
      ->check(CLI::IsMember({"smallest", "largest"}))
      ->capture_default_str();
  fac->add_option("--kernel", kernel, "Kernel vector choice")->check(CLI::IsMember({"first", "last"}))->capture_default_str();

  auto* smm = app.add_subcommand("smith-mcmillan", "Smith-McMillan form C D F");
  smm->add_option("--input", input, "Rational matrix (MatrixFile)")->required();
  smm->add_option("--output", output, "Where to write C, D, F (default: standard output)");

  std::string phi_path, w_path;
  auto* ver = app.add_subcommand("verify", "Check Phi = W* W and the region constraints");
  ver->add_option("--phi", phi_path, "Spectrum Phi (MatrixFile)")->required();
  ver->add_option("--w", w_path, "Candidate factor W (MatrixFile)")->required();
  ver->add_option("--regions", regions_path, "RegionFile; default is the outer factor");
  ver->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  ver->add_option("--grid", grid, "Unit-circle samples")->capture_default_str();

  auto* deg = app.add_subcommand("degree", "Print the McMillan degree");
  deg->add_option("--input", input, "Rational matrix (MatrixFile)")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (fac->parsed()) {
      RFMatrix phi = matrix_from_json(read_json_file(input));
      FactorizeOptions o;
      o.tol = tol;
      o.grid = grid;
      o.reduction = reduction_options(pivot, kernel);
      SpectralFactorization f = regions_path.empty()
                                    ? factorize_youla(phi, o)
                                    : factorize(phi, regions_from_json(read_json_file(regions_path)), o);
      write_text(output, dump(matrix_to_json(f.W)), out);
      if (!trace_path.empty()) write_text(trace_path, dump(trace_to_json(f.trace)), out);
      if (!report.empty() || !output.empty()) write_text(report, factorization_report(f), out);
      return kExitOk;
    }
    if (smm->parsed()) {
      SmithMcMillan s = smith_mcmillan(matrix_from_json(read_json_file(input)));
      write_text(output, dump(smith_mcmillan_to_json(s)), out);
      return kExitOk;
    }
    if (ver->parsed()) {
      RFMatrix phi = matrix_from_json(read_json_file(phi_path));
      RowScaled<RatFun> w = scaled_matrix_from_json(read_json_file(w_path));
      RegionPair r = regions_path.empty() ? RegionPair{} : regions_from_json(read_json_file(regions_path));
      VerificationReport rep = verify(phi, w, r, tol, grid);
      out << verification_report(rep);
      return rep.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (deg->parsed()) {
      out << mcmillan_degree(matrix_from_json(read_json_file(input))) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitParse;
}

}  // namespace specfact::cli
