// Copyright 2026 The qalt Authors
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

#include "json.hpp"
#include "qalt/kraus.hpp"
#include "qalt/lang/context.hpp"

namespace qalt::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qalt/1";

/// Values within this distance of zero print as 0.
inline constexpr double kPrintZero = 1e-14;

double clean(double x);

Json complex_json(Complex z);
Json matrix_json(const Matrix& m);
Json state_json(const DensityState& rho, const lang::Context& ctx);
Json kraus_json(const KrausSet& s);
Json choi_json(const ChoiFamily& family);

/// {schema, command, tolerance, result}.
Json envelope(const std::vector<std::string>& command, double tol, Json result);

std::string complex_text(Complex z);
std::string real_text(double x);
/// Rows on separate lines, each prefixed by indent spaces.
std::string matrix_text(const Matrix& m, int indent);

/// Comma-separated names; "bit:b" declares a bit.
lang::Context parse_context(const std::string& text);

/// {"context": [...], "blocks": [matrix, ...]} with entries either a
/// number or [re, im]. Throws InvalidArgument on a malformed document.
struct InitialState {
  lang::Context context;
  DensityState state;
};
InitialState parse_state(const Json& doc, double tol);

/// The all-zero basis state on ctx (block 0, entry (0, 0)).
DensityState zero_state(const lang::Context& ctx);

}  // namespace qalt::cli
