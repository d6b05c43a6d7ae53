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

#ifndef FSLOUVAIN_ERROR_HPP_
#define FSLOUVAIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsl {

enum class Errc {
  kInvalidArgument,
  kZeroArea,
  kNonPositiveDensity,
  kRootNotFound,
  kGroundSetTooLarge,
  kDimensionMismatch,
  kGammaOutOfRange,
  kEmptyGraph,
  kNodeSetMismatch,
  kUnknownModel,
  kParse,
  kIo,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this exception type; `code()`
// identifies the failure class so callers (notably the CLI) can map it to an
// exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fsl

#endif  // FSLOUVAIN_ERROR_HPP_
