// Copyright 2026 The Honey-X Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "honeyx/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace honeyx::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json Parse(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    if (doc.contains("schema") && doc["schema"] != kSchemaVersion) {
      throw ParseError("unsupported schema version " + doc["schema"].dump());
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& Field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double Number(const json& value, const char* what) {
  if (!value.is_number()) throw ParseError(std::string(what) + " must be a number");
  return value.get<double>();
}

Vector ReadVector(const json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  Vector out;
  out.reserve(value.size());
  for (const json& v : value) out.push_back(Number(v, what));
  return out;
}

Matrix ReadMatrix(const json& value, const char* what) {
  if (!value.is_array() || value.empty()) {
    throw ParseError(std::string(what) + " must be a non-empty array of rows");
  }
  std::vector<Vector> rows;
  for (const json& r : value) rows.push_back(ReadVector(r, what));
  try {
    return Matrix::FromRows(rows);
  } catch (const DimensionMismatch&) {
    throw ParseError(std::string(what) + " rows differ in length");
  }
}

ordered_json WriteMatrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(Vector(r.begin(), r.end()));
  }
  return rows;
}

std::string Dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

MatrixGame parse_game(std::string_view text) {
  const json doc = Parse(text);
  Matrix payoffs = ReadMatrix(Field(doc, "payoffs"), "payoffs");
  if (doc.contains("rows") && doc["rows"] != payoffs.rows()) {
    throw ParseError("\"rows\" does not match payoffs");
  }
  if (doc.contains("cols") && doc["cols"] != payoffs.cols()) {
    throw ParseError("\"cols\" does not match payoffs");
  }
  try {
    return MatrixGame(std::move(payoffs));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const MatrixGame& game) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["rows"] = game.rows();
  doc["cols"] = game.cols();
  doc["payoffs"] = WriteMatrix(game.payoffs());
  return Dump(doc);
}

DeceptionMatrix parse_deception(std::string_view text) {
  const json doc = Parse(text);
  const double budget = Number(Field(doc, "budget"), "budget");
  return DeceptionMatrix(ReadMatrix(Field(doc, "D"), "D"), budget);
}

std::string to_json(const DeceptionMatrix& deception) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["budget"] = deception.budget();
  doc["D"] = WriteMatrix(deception.matrix());
  return Dump(doc);
}

std::string to_json(const GameSolution& solution) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["value"] = solution.value;
  doc["x"] = solution.row_policy.probs();
  doc["y"] = solution.col_policy.probs();
  return Dump(doc);
}

std::string to_json(const ExactSolution& solution, double budget) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["method"] = "exact";
  doc["budget"] = budget;
  doc["x"] = solution.x.probs();
  doc["D"] = WriteMatrix(solution.deception.matrix());
  doc["y"] = solution.y.probs();
  doc["omega"] = solution.omega.probs();
  doc["v_p"] = solution.v_p;
  doc["objective"] = solution.objective;
  doc["gap"] = solution.gap;
  doc["nodes"] = solution.nodes_explored;
  doc["status"] = std::string(to_string(solution.status));
  return Dump(doc);
}

std::string to_json(const FeasibleSolution& solution) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["method"] = "binsearch";
  doc["budget"] = solution.d_bar.budget();
  doc["x"] = solution.x_bar.probs();
  doc["D"] = WriteMatrix(solution.d_bar.matrix());
  doc["y"] = solution.y_bar.probs();
  doc["v_hat"] = solution.v_hat;
  doc["v_best"] = solution.v_best;
  doc["delta"] = solution.delta;
  if (solution.robust_bound) {
    doc["robust_bound"] = *solution.robust_bound;
  } else {
    doc["robust_bound"] = nullptr;
  }
  return Dump(doc);
}

StoredSolution parse_solution(std::string_view text) {
  const json doc = Parse(text);
  StoredSolution out;
  const json& method = Field(doc, "method");
  if (!method.is_string()) throw ParseError("method must be a string");
  out.method = method.get<std::string>();
  if (out.method != "exact" && out.method != "binsearch") {
    throw ParseError("unknown method \"" + out.method + "\"");
  }
  Matrix d = ReadMatrix(Field(doc, "D"), "D");
  const double budget = doc.contains("budget")
                            ? Number(doc["budget"], "budget")
                            : operator_one_norm(d);
  out.deception = DeceptionMatrix(std::move(d), budget);
  try {
    out.x = MixedStrategy(ReadVector(Field(doc, "x"), "x"), Side::kRow);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("x: ") + e.what());
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidArgument("failed writing " + path.string());
}

}  // namespace honeyx::io
