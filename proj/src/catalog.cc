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

#include "psmrlab/catalog.h"

#include "psmrlab/error.h"

namespace psmrlab {
namespace {

Matrix Make2x2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

Matrix LowerBoundMatrix(double k, double delta_r, double delta_c,
                        bool swapped) {
  Matrix m = Make2x2(0.0, delta_c, -delta_r, k - delta_r);
  if (swapped) m.row(0).swap(m.row(1));
  return m;
}

std::vector<GameCatalogEntry> Catalog(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidArgumentError("catalog eps must lie in (0, 1]");
  }
  std::vector<GameCatalogEntry> out;
  out.push_back({"sec4-ex1", BilinearGame::NormalForm(Make2x2(0, 1, -1, -eps)),
                 "strict PSNE with unit deviation gaps; the only positive "
                 "pair gap is eps (Tsallis-INF favoured)"});
  out.push_back({"sec4-ex2", BilinearGame::NormalForm(Make2x2(0, eps, -1, 1)),
                 "strict PSNE with column gap eps; the only positive pair "
                 "gap is 1 (PureUCB favoured)"});
  out.push_back({"remark1", BilinearGame::NormalForm(Make2x2(0, 0, 0, -1)),
                 "non-strict PSNE; sqrt(T) regret is unavoidable"});
  out.push_back({"appendixC-A",
                 BilinearGame::NormalForm(LowerBoundMatrix(1.0, 0.1, 0.1, false)),
                 "lower-bound template A with K=1, gaps 0.1/0.1; strict "
                 "PSNE at (1,1)"});
  out.push_back({"appendixC-B",
                 BilinearGame::NormalForm(LowerBoundMatrix(1.0, 0.1, 0.1, true)),
                 "lower-bound template B (rows of A swapped); strict PSNE "
                 "at (2,1)"});
  out.push_back({"matching-pennies",
                 BilinearGame::NormalForm(Make2x2(1, -1, -1, 1)),
                 "no PSNE; Nash value 0, pure maximin value -1"});
  return out;
}

GameCatalogEntry FindCatalogEntry(const std::string& id, double eps) {
  for (GameCatalogEntry& e : Catalog(eps)) {
    if (e.id == id) return std::move(e);
  }
  throw InvalidArgumentError("unknown catalog id '" + id + "'");
}

}  // namespace psmrlab
