// Copyright 2026 The Triport Authors
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

#include <string>
#include <vector>

// Reference battery: every quantitative claim the engine is built around,
// checked end to end against the simulation with pinned tolerances.  The
// battery is deterministic; repeated runs render byte-identical reports.

namespace triport::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double max_dev = 0.0;
  double tolerance = 0.0;
  std::string detail;  // optional extra context, possibly multi-line
};

/// Runs the criteria whose name contains `filter` (all when empty), in id
/// order.
std::vector<CriterionResult> run_criteria(const std::string& filter = "");

/// One line per criterion plus a summary line.
std::string format_report(const std::vector<CriterionResult>& results);

int count_failures(const std::vector<CriterionResult>& results);

}  // namespace triport::verify
