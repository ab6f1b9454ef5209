// risfb: limited-feedback simulator for RIS-assisted FDD downlinks
// Copyright (C) 2026 The risfb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// SPDX-License-Identifier: Apache-2.0
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

#include "risfb/montecarlo.hpp"

namespace risfb
{
    // Parses a scenario file into one sweep per [sweep NAME] section.
    // `source` only labels diagnostics.
    std::vector<SweepSpec> parse_config(const std::string &text, const std::string &source = "<config>");
    std::vector<SweepSpec> parse_config_file(const std::string &path);

    std::vector<std::string> preset_names();
    const std::string &preset_text(const std::string &name); // throws ValidationError

    // "3x5" -> (3, 5)
    std::pair<int, int> parse_grid(const std::string &s);
}
