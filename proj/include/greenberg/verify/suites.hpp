// Copyright 2026 The greenberg Authors
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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenberg/error.hpp"
#include "json.hpp"

namespace greenberg::verify {

enum class CellStatus { Pass, Fail, Skipped };

struct Cell {
    std::string key;
    CellStatus status = CellStatus::Pass;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Cell> cells;

    bool pass() const;
    std::size_t count(CellStatus status) const;
};

/// Runs acceptance criterion 1..9. Guard overruns mark cells as skipped.
CriterionResult run_criterion(int id, const Guards& guards, std::uint64_t seed);

const std::vector<std::string>& suite_names();
/// Criteria of a suite: witt, algebra, ratpts, levels, groups, weil, all.
/// Throws InvalidArgument.
std::vector<int> suite_criteria(const std::string& suite);

nlohmann::json criterion_json(const CriterionResult& r);

}  // namespace greenberg::verify
