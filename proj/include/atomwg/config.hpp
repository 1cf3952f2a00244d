// Copyright 2026 The atomwg Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "atomwg/geometry.hpp"
#include "atomwg/propagate.hpp"

namespace awg {

using nlohmann::json;

/// Parses config text. Syntax errors become Error(config) carrying
/// "<source>:<line>:<column>".
json parse_config_text(const std::string& text, const std::string& source = "<config>");
json load_config_file(const std::filesystem::path& path);

/// Checks `value` against a template: every object key must exist in the
/// template and carry a compatible type. A null template entry accepts
/// null or a number; arrays are checked against the template's first
/// element when present. Errors name the offending JSON pointer.
void check_against_template(const json& value, const json& tmpl, const std::string& pointer = "");

/// Best-effort 1-based line of the member addressed by a JSON pointer in the
/// original text (0 when not found).
int locate_pointer(const std::string& text, const std::string& pointer);

/// Typed accessors with pointer-qualified error messages.
double get_number(const json& j, const std::string& pointer);
int get_int(const json& j, const std::string& pointer);
bool get_bool(const json& j, const std::string& pointer);
std::string get_string(const json& j, const std::string& pointer);
std::vector<double> get_numbers(const json& j, const std::string& pointer);
/// Null-or-number fields; returns false when null.
bool get_optional_number(const json& j, const std::string& pointer, double& out);

/// "z", "x", "y", "chiral" (-(x - i z)/sqrt 2), "chiral_conj", or three
/// [re, im] pairs; normalized.
CVec3 parse_dipole(const json& j, const std::string& pointer);

ChainGeometry chain_from_config(const json& cfg);
/// Resolves one entry of the "qubits" array. Fields:
///   rho_over_d, phi, z_over_d (lattice units from atom 0), dipole, gamma0,
///   detuning, resonant_k1d (in pi/d; overrides detuning with the band
///   detuning at that wave-vector), above_band_edge (overrides detuning with
///   band maximum + value), compensate_shift (subtracts the chain-induced
///   shift, gamma0 * coherent_shift, from the detuning).
ImpurityQubit qubit_from_config(const json& q, double d, const std::string& pointer);
/// Template used to fill each qubit entry.
const json& qubit_template();

PropagationOptions propagation_from_config(const json& cfg);

}  // namespace awg
