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

#ifndef PSMRLAB_LEMMAS_H_
#define PSMRLAB_LEMMAS_H_

namespace psmrlab {

// KL divergence between the two-point laws on {-1,+1} with means a and b.
// Requires |a| < 1 and |b| < 1.
double KlTwoPoint(double a, double b);

struct SqrtFuncMax {
  double x_star;
  double f_star;
};

// Maximizer and maximum of x -> sqrt(a x) - b x for a, b > 0.
SqrtFuncMax SqrtFunctionMax(double a, double b);

// a + sqrt(b) + 2c: an upper bound on every x >= 0 with
// x <= sqrt(a x + b) + c.
double SelfBoundUpper(double a, double b, double c);

}  // namespace psmrlab

#endif  // PSMRLAB_LEMMAS_H_
