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

#ifndef PSMRLAB_GAME_IO_H_
#define PSMRLAB_GAME_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "psmrlab/game.h"

namespace psmrlab {

inline constexpr int kFormatVersion = 1;

// Game file layout:
//   { "format_version": 1, "type": "normal" | "bilinear", "A": [[...]],
//     "X": [[...]], "Y": [[...]], "labels_x": [...], "labels_y": [...] }
// X and Y are rows of action vectors and appear only for bilinear games.
BilinearGame GameFromJson(const nlohmann::json& j);
nlohmann::json GameToJson(const BilinearGame& game);

// Parses text; syntax errors carry line and column, schema errors the field.
BilinearGame ParseGame(std::string_view text);
std::string SerializeGame(const BilinearGame& game);
BilinearGame LoadGameFile(const std::string& path);

// Action set file: { "format_version": 1, "vectors": [[...]], "labels": [...] }
// or a bare array of vectors.
ActionSet ActionSetFromJson(const nlohmann::json& j);
nlohmann::json ActionSetToJson(const ActionSet& set);

nlohmann::json ParseJsonText(std::string_view text);
std::string ReadTextFile(const std::string& path);

// Field accessors that raise ParseError naming the offending field.
Matrix MatrixFromJson(const nlohmann::json& j, const std::string& field);
Vector VectorFromJson(const nlohmann::json& j, const std::string& field);
nlohmann::json MatrixToJson(const Matrix& m);
nlohmann::json VectorToJson(const Vector& v);

}  // namespace psmrlab

#endif  // PSMRLAB_GAME_IO_H_
