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

#include "psmrlab/game_io.h"

#include <fstream>
#include <sstream>

#include "psmrlab/error.h"

namespace psmrlab {

using nlohmann::json;

namespace {

std::vector<std::string> LabelsFromJson(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  const json& arr = j.at(field);
  if (!arr.is_array()) throw ParseError(std::string(field) + ": expected array");
  std::vector<std::string> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) +
                       "]: expected string");
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

std::vector<Vector> RowsFromJson(const json& j, const std::string& field) {
  Matrix m = MatrixFromJson(j, field);
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).transpose());
  return rows;
}

void CheckVersion(const json& j) {
  if (!j.contains("format_version")) return;
  const json& v = j.at("format_version");
  if (!v.is_number_integer() || v.get<int>() > kFormatVersion) {
    throw ParseError("format_version: unsupported value " + v.dump());
  }
}

}  // namespace

json ParseJsonText(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    size_t line = 1, col = 1;
    const size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix MatrixFromJson(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(field + ": expected a nonempty array of rows");
  }
  const size_t rows = j.size();
  size_t cols = 0;
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].empty()) {
      throw ParseError(field + "[" + std::to_string(i) +
                       "]: expected a nonempty array of numbers");
    }
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) {
      throw ParseError(field + "[" + std::to_string(i) + "]: row has " +
                       std::to_string(j[i].size()) + " entries, expected " +
                       std::to_string(cols));
    }
  }
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < cols; ++k) {
      const json& e = j[i][k];
      if (!e.is_number()) {
        throw ParseError(field + "[" + std::to_string(i) + "][" +
                         std::to_string(k) + "]: expected number");
      }
      m(i, k) = e.get<double>();
    }
  }
  return m;
}

Vector VectorFromJson(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(field + ": expected a nonempty array of numbers");
  }
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ParseError(field + "[" + std::to_string(i) + "]: expected number");
    }
    v[i] = j[i].get<double>();
  }
  return v;
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json VectorToJson(const Vector& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

BilinearGame GameFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("game: expected an object");
  CheckVersion(j);
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw ParseError("type: expected \"normal\" or \"bilinear\"");
  }
  const std::string type = j.at("type").get<std::string>();
  if (!j.contains("A")) throw ParseError("A: missing field");
  Matrix a = MatrixFromJson(j.at("A"), "A");
  auto labels_x = LabelsFromJson(j, "labels_x");
  auto labels_y = LabelsFromJson(j, "labels_y");
  if (type == "normal") {
    if (j.contains("X") || j.contains("Y")) {
      throw ParseError("X/Y: only allowed for bilinear games");
    }
    return BilinearGame::NormalForm(std::move(a), std::move(labels_x),
                                    std::move(labels_y));
  }
  if (type == "bilinear") {
    if (!j.contains("X")) throw ParseError("X: missing field");
    if (!j.contains("Y")) throw ParseError("Y: missing field");
    ActionSet x(RowsFromJson(j.at("X"), "X"), std::move(labels_x));
    ActionSet y(RowsFromJson(j.at("Y"), "Y"), std::move(labels_y));
    return BilinearGame::Bilinear(std::move(a), std::move(x), std::move(y));
  }
  throw ParseError("type: unknown game type '" + type + "'");
}

json GameToJson(const BilinearGame& game) {
  json j;
  j["format_version"] = kFormatVersion;
  j["type"] = game.type() == GameType::kNormal ? "normal" : "bilinear";
  j["A"] = MatrixToJson(game.a());
  if (game.type() == GameType::kBilinear) {
    j["X"] = MatrixToJson(game.x().AsColumns().transpose());
    j["Y"] = MatrixToJson(game.y().AsColumns().transpose());
  }
  if (!game.x().labels().empty()) j["labels_x"] = game.x().labels();
  if (!game.y().labels().empty()) j["labels_y"] = game.y().labels();
  return j;
}

BilinearGame ParseGame(std::string_view text) {
  return GameFromJson(ParseJsonText(text));
}

std::string SerializeGame(const BilinearGame& game) {
  return GameToJson(game).dump(2);
}

BilinearGame LoadGameFile(const std::string& path) {
  return ParseGame(ReadTextFile(path));
}

ActionSet ActionSetFromJson(const json& j) {
  if (j.is_array()) return ActionSet(RowsFromJson(j, "vectors"));
  if (!j.is_object()) throw ParseError("action set: expected object or array");
  CheckVersion(j);
  if (!j.contains("vectors")) throw ParseError("vectors: missing field");
  return ActionSet(RowsFromJson(j.at("vectors"), "vectors"),
                   LabelsFromJson(j, "labels"));
}

json ActionSetToJson(const ActionSet& set) {
  json j;
  j["format_version"] = kFormatVersion;
  j["vectors"] = MatrixToJson(set.AsColumns().transpose());
  if (!set.labels().empty()) j["labels"] = set.labels();
  return j;
}

}  // namespace psmrlab
