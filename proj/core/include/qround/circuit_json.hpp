// Copyright 2026 The qround Authors
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

#include <json.hpp>

#include "qround/circuit.hpp"

namespace qround {

inline constexpr int kCircuitSchemaVersion = 1;

// {version, qubits, clbits, registers:[...], gates:[{kind, operands, ...}]}
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ResourceReport& r);

Rational rational_from_string(std::string_view s);

}  // namespace qround
