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

#include <armadillo>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace risfb
{
    using cx = std::complex<double>;

    // Base class for every error thrown by the library
    struct Error : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct DegenerateGeometry : Error { using Error::Error; };
    struct InvalidPathCount : Error { using Error::Error; };
    struct IndexOutOfRange : Error { using Error::Error; };
    struct ShapeMismatch : Error { using Error::Error; };
    struct BudgetTooLarge : Error { using Error::Error; };

    // Scenario file problems; line is 0 when not tied to a specific line
    struct ParseError : Error
    {
        int line = 0;
        ParseError(const std::string &msg, int line_no = 0)
            : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
    };

    // Semantically invalid configuration (names the violated invariant)
    struct ValidationError : Error { using Error::Error; };

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
}
