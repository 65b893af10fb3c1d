// Copyright 2026 The tetrafill Authors
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

// JSON documents read and written by the library.
//
//   state    {"n_qubits": 4, "amplitudes": [[re, im], ...]}
//   rho      [[[re, im] x16] x16]  or  {"rho": <same>}
//   profile  {"one_to_other": [4], "two_to_other": {"12|34": v, "13|24": v, "14|23": v}}
//   report   {"f4", "gmc", "gbc", "cyclic_quad_area", "degeneracy", "profile"}

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "convex_roof.hpp"
#include "measures.hpp"

namespace tetrafill {

using Json = nlohmann::ordered_json;

/// Throws Parse on malformed JSON or a wrong amplitude count.
PureState parse_state_json(std::string_view text);
Json state_to_json(const PureState &state);

DensityMatrix parse_density_json(std::string_view text);
Json density_to_json(const ComplexMatrix &rho);

Json profile_to_json(const ConcurrenceProfile &profile);
ConcurrenceProfile profile_from_json(const Json &j);

Json sigma_to_json(const SigmaSolution &solution);
Json report_to_json(const MeasureReport &report);
Json convex_roof_to_json(const ConvexRoofResult &result);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

}  // namespace tetrafill
