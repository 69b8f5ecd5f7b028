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

// JSON documents for games, deceptions and solver results.
//
// Every document written here carries "schema": 1. Readers accept documents
// with or without the field but reject other schema versions.

#ifndef HONEYX_IO_HPP_
#define HONEYX_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "honeyx/binsearch.hpp"
#include "honeyx/deception.hpp"
#include "honeyx/exact.hpp"
#include "honeyx/game.hpp"

namespace honeyx::io {

inline constexpr int kSchemaVersion = 1;

// {"rows": m, "cols": n, "payoffs": [[...], ...]}
MatrixGame parse_game(std::string_view text);
std::string to_json(const MatrixGame& game);

// {"budget": b, "D": [[...], ...]}
DeceptionMatrix parse_deception(std::string_view text);
std::string to_json(const DeceptionMatrix& deception);

std::string to_json(const GameSolution& solution);
std::string to_json(const ExactSolution& solution, double budget);
std::string to_json(const FeasibleSolution& solution);

// The parts of a stored exact or binsearch solution needed to evaluate it.
struct StoredSolution {
  std::string method;
  MixedStrategy x;
  DeceptionMatrix deception;
};

// Reads either solution format. The budget is taken from "budget" when
// present and from the operator 1-norm of D otherwise.
StoredSolution parse_solution(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace honeyx::io

#endif  // HONEYX_IO_HPP_
