// Copyright 2026 The fslouvain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fslouvain/error.hpp"

namespace fsl {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kZeroArea: return "ZeroArea";
    case Errc::kNonPositiveDensity: return "NonPositiveDensity";
    case Errc::kRootNotFound: return "RootNotFound";
    case Errc::kGroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kGammaOutOfRange: return "GammaOutOfRange";
    case Errc::kEmptyGraph: return "EmptyGraph";
    case Errc::kNodeSetMismatch: return "NodeSetMismatch";
    case Errc::kUnknownModel: return "UnknownModel";
    case Errc::kParse: return "ParseError";
    case Errc::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

}  // namespace fsl
