// Copyright 2026 The Voronoi Game Authors.
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

#include "vgame/errors.h"

namespace vgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCoincidentSites:
      return "CoincidentSites";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kPointOutsidePolygon:
      return "PointOutsidePolygon";
    case ErrorCode::kOutsideBoard:
      return "OutsideBoard";
    case ErrorCode::kNotAGrid:
      return "NotAGrid";
    case ErrorCode::kOutOfTurn:
      return "OutOfTurn";
    case ErrorCode::kWrongPhase:
      return "WrongPhase";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kNotFound:
      return "NotFound";
  }
  return "Unknown";
}

}  // namespace vgame
