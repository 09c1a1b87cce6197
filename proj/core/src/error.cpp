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

#include "specfact/error.hpp"

namespace specfact {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::OnCircleAmbiguous: return "OnCircleAmbiguous";
    case ErrorCode::UnresolvableCircleProximity: return "UnresolvableCircleProximity";
    case ErrorCode::OddOnCircleMultiplicity: return "OddOnCircleMultiplicity";
    case ErrorCode::OnCircleForbidden: return "OnCircleForbidden";
    case ErrorCode::NotPDOnCircle: return "NotPDOnCircle";
    case ErrorCode::DegreeNotReduced: return "DegreeNotReduced";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotASpectrum: return "NotASpectrum";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::NumericFallbackExceededTolerance: return "NumericFallbackExceededTolerance";
    case ErrorCode::NotParaUnitary: return "NotParaUnitary";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace specfact
