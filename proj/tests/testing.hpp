// Copyright 2026 The clockwalk Authors
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

#pragma once

#include <string>

#include "clockwalk/circuit.hpp"
#include "clockwalk/clock_operator.hpp"
#include "clockwalk/schema.hpp"

namespace testing_util {

inline std::string data_path(const std::string& name) { return std::string(CLOCKWALK_DATA_DIR) + "/" + name; }

inline clockwalk::ReversibleCircuit load(const std::string& name) { return clockwalk::load_circuit(data_path(name)); }

inline clockwalk::Schema toggle(const std::string& name) { return clockwalk::build_toggle_schema(load(name)); }

}  // namespace testing_util
