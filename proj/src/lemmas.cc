// Copyright 2026 The PSMRLab Authors. All rights reserved.
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

#include "psmrlab/lemmas.h"

#include <cmath>

#include "psmrlab/error.h"

namespace psmrlab {

double KlTwoPoint(double a, double b) {
  if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) {
    throw InvalidArgumentError("two-point means must lie in (-1, 1)");
  }
  // log1p keeps precision when a and b are close.
  const double up = 0.5 * (1.0 + a) * (std::log1p(a) - std::log1p(b));
  const double down = 0.5 * (1.0 - a) * (std::log1p(-a) - std::log1p(-b));
  return std::max(0.0, up + down);
}

SqrtFuncMax SqrtFunctionMax(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgumentError("sqrt function maximum needs a, b > 0");
  }
  return {a / (4.0 * b * b), a / (4.0 * b)};
}

double SelfBoundUpper(double a, double b, double c) {
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw InvalidArgumentError("self-bounding inputs must be nonnegative");
  }
  return a + std::sqrt(b) + 2.0 * c;
}

}  // namespace psmrlab
