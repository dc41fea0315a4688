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

#include <span>
#include <string>
#include <vector>

#include "triport/fidelity.hpp"
#include "triport/protocol.hpp"

// Command line front end.  Kept as a library so the tests can drive parsing
// and rendering in-process; main() only forwards to run_cli().

namespace triport::cli {

/// Parses "45deg", "0.3", "1.2rad" into radians.
double parse_angle(const std::string& text);

/// Parses "lo:hi:count" (or a single value) into a grid axis; endpoints go
/// through parse_angle when `angles` is set.
GridAxis parse_grid(const std::string& text, bool angles);

/// Fixed schema: scheme,theta,phi,noise,p,placement,avg_fidelity_sim,
/// avg_fidelity_closed,abs_dev.  Numbers carry 12 significant digits.
std::string render_sweep_csv(std::span<const FidelityReport> reports);

/// Schema: theta,phi,noise,p,delta_f.
struct DeltaRow {
  double theta = 0.0;
  double phi = 0.0;
  NoiseKind kind = NoiseKind::none;
  double p = 0.0;
  double delta = 0.0;
};
std::string render_delta_csv(std::span<const DeltaRow> rows);

/// Schema: index,mu,lambda,element — one row per basis element.
std::string render_basis_csv(int num_qubits, double phi);

/// JSON document for one protocol run (schema_version 1).
std::string teleport_json(const TeleportRun& run);

/// Human-readable outcome table.
std::string teleport_text(const TeleportRun& run);

/// Entry point; returns the process exit code (0 ok, 1 failed verification,
/// 2 usage or domain errors).
int run_cli(int argc, const char* const* argv);

}  // namespace triport::cli
