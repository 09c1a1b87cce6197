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
#ifndef SPECFACT_CLI_CLI_HPP
#define SPECFACT_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "specfact/error.hpp"
#include "specfact/factorizer.hpp"

namespace specfact::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitNotSpectrum = 3,
  kExitNumeric = 4,
  kExitInternal = 5,
};

int exit_code_for(ErrorCode code);

/// Human-readable factorization report, one fact per line.
std::string factorization_report(const SpectralFactorization& f);
std::string verification_report(const VerificationReport& r);

/// Entry point behind the specfact binary; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specfact::cli

#endif  // SPECFACT_CLI_CLI_HPP
