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

#ifndef PSMRLAB_CATALOG_H_
#define PSMRLAB_CATALOG_H_

#include <string>
#include <vector>

#include "psmrlab/game.h"

namespace psmrlab {

struct GameCatalogEntry {
  std::string id;
  BilinearGame game;
  std::string provenance;
};

// Symbolic epsilon used by the two parametric example families.
inline constexpr double kDefaultCatalogEps = 0.5;

// Built-in example games: sec4-ex1, sec4-ex2, remark1, appendixC-A,
// appendixC-B and matching-pennies.
std::vector<GameCatalogEntry> Catalog(double eps = kDefaultCatalogEps);

// Throws InvalidArgumentError for unknown ids.
GameCatalogEntry FindCatalogEntry(const std::string& id,
                                  double eps = kDefaultCatalogEps);

// The 2x2 strict-PSNE pair parameterized by K and the two deviation gaps:
// A = ((0, dc), (-dr, K - dr)) and B = A with its rows swapped.
Matrix LowerBoundMatrix(double k, double delta_r, double delta_c,
                        bool swapped);

}  // namespace psmrlab

#endif  // PSMRLAB_CATALOG_H_
