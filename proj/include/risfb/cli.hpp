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

#include <iosfwd>

namespace risfb
{
    // Entry point of the ris_sim tool. Returns the process exit status:
    // 0 success, 1 runtime or validation failure, 2 usage error.
    int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}
