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

#include "atomwg/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "atomwg/dispersion.hpp"
#include "atomwg/guided.hpp"

namespace awg {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCategory::config, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const char* kind(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return "null";
    case json::value_t::boolean: return "boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return "integer";
    case json::value_t::number_float: return "number";
    case json::value_t::string: return "string";
    case json::value_t::array: return "array";
    case json::value_t::object: return "object";
    default: return "value";
  }
}

bool compatible(const json& v, const json& t) {
  if (t.is_null()) return v.is_null() || v.is_number();
  if (t.is_number_integer()) return v.is_number_integer() || (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>());
  if (t.is_number()) return v.is_number();
  if (t.is_boolean()) return v.is_boolean();
  if (t.is_string()) return v.is_string();
  if (t.is_array()) return v.is_array();
  if (t.is_object()) return v.is_object();
  return true;
}

const json& at_pointer(const json& j, const std::string& pointer) {
  try {
    return j.at(json::json_pointer(pointer));
  } catch (const json::exception&) {
    fail(pointer, "missing");
  }
}

}  // namespace

json parse_config_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    // byte offset -> line:column
    const std::size_t pos = std::min<std::size_t>(e.byte, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": syntax error: " << e.what();
    throw Error(ErrorCategory::config, os.str());
  }
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

void check_against_template(const json& value, const json& tmpl, const std::string& pointer) {
  if (!compatible(value, tmpl)) {
    fail(pointer, std::string("expected ") + (tmpl.is_null() ? "number or null" : kind(tmpl)) + ", got " + kind(value));
  }
  if (tmpl.is_object()) {
    for (const auto& [key, v] : value.items()) {
      const std::string p = pointer + "/" + key;
      if (!tmpl.contains(key)) fail(p, "unknown key");
      check_against_template(v, tmpl.at(key), p);
    }
  } else if (tmpl.is_array() && !tmpl.empty()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      check_against_template(value[i], tmpl[0], pointer + "/" + std::to_string(i));
    }
  }
}

int locate_pointer(const std::string& text, const std::string& pointer) {
  // Walk the pointer's object keys in order through the text; array indices
  // are skipped, so the result is approximate inside arrays.
  std::size_t pos = 0;
  bool found = false;
  std::size_t start = 1;
  while (start <= pointer.size()) {
    std::size_t end = pointer.find('/', start);
    if (end == std::string::npos) end = pointer.size();
    std::string tok = pointer.substr(start, end - start);
    start = end + 1;
    if (tok.empty() || std::isdigit(static_cast<unsigned char>(tok[0]))) continue;
    const std::size_t hit = text.find("\"" + tok + "\"", pos);
    if (hit == std::string::npos) break;
    pos = hit + 1;
    found = true;
  }
  if (!found) return 0;
  int line = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

double get_number(const json& j, const std::string& pointer) {
  const json& v = at_pointer(j, pointer);
  if (!v.is_number()) fail(pointer, std::string("expected number, got ") + kind(v));
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(pointer, "not finite");
  return x;
}

int get_int(const json& j, const std::string& pointer) {
  const double x = get_number(j, pointer);
  if (std::floor(x) != x || std::abs(x) > 2e9) fail(pointer, "expected integer");
  return static_cast<int>(x);
}

bool get_bool(const json& j, const std::string& pointer) {
  const json& v = at_pointer(j, pointer);
  if (!v.is_boolean()) fail(pointer, std::string("expected boolean, got ") + kind(v));
  return v.get<bool>();
}

std::string get_string(const json& j, const std::string& pointer) {
  const json& v = at_pointer(j, pointer);
  if (!v.is_string()) fail(pointer, std::string("expected string, got ") + kind(v));
  return v.get<std::string>();
}

std::vector<double> get_numbers(const json& j, const std::string& pointer) {
  const json& v = at_pointer(j, pointer);
  if (!v.is_array()) fail(pointer, std::string("expected array, got ") + kind(v));
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_number(j, pointer + "/" + std::to_string(i)));
  return out;
}

bool get_optional_number(const json& j, const std::string& pointer, double& out) {
  const json& v = at_pointer(j, pointer);
  if (v.is_null()) return false;
  out = get_number(j, pointer);
  return true;
}

CVec3 parse_dipole(const json& j, const std::string& pointer) {
  const json& v = at_pointer(j, pointer);
  const double s = 1.0 / std::sqrt(2.0);
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (name == "z") return CVec3(0, 0, 1);
    if (name == "x") return CVec3(1, 0, 0);
    if (name == "y") return CVec3(0, 1, 0);
    if (name == "chiral") return CVec3(-s, 0, cplx(0, s));
    if (name == "chiral_conj") return CVec3(-s, 0, cplx(0, -s));
    fail(pointer, "unknown dipole '" + name + "' (z, x, y, chiral, chiral_conj or [[re,im] x3])");
  }
  if (!v.is_array() || v.size() != 3) fail(pointer, "dipole must be a name or three [re, im] pairs");
  CVec3 out;
  for (int c = 0; c < 3; ++c) {
    const std::string p = pointer + "/" + std::to_string(c);
    const json& e = v[static_cast<std::size_t>(c)];
    if (e.is_number()) {
      out(c) = get_number(j, p);
    } else {
      if (!e.is_array() || e.size() != 2) fail(p, "expected [re, im]");
      out(c) = cplx(get_number(j, p + "/0"), get_number(j, p + "/1"));
    }
  }
  try {
    return normalized_dipole(out);
  } catch (const Error& e) {
    fail(pointer, e.what());
  }
}

ChainGeometry chain_from_config(const json& cfg) {
  const int n = get_int(cfg, "/chain/n_atoms");
  const double d = get_number(cfg, "/chain/d");
  if (n < 1) fail("/chain/n_atoms", "must be positive");
  if (!(d > 0.0 && d < 0.5)) fail("/chain/d", "spacing must lie in (0, 0.5) wavelengths");
  const CVec3 pol = parse_dipole(cfg, "/chain/polarization");
  return ChainGeometry(n, d, pol);
}

const json& qubit_template() {
  static const json t = {
      {"rho_over_d", 1.0},     {"phi", 0.0},           {"z_over_d", 0.0},
      {"dipole", "z"},         {"gamma0", 0.02},       {"detuning", 0.0},
      {"resonant_k1d", nullptr}, {"above_band_edge", nullptr}, {"compensate_shift", false},
  };
  return t;
}

ImpurityQubit qubit_from_config(const json& q_in, double d, const std::string& pointer) {
  if (!q_in.is_object()) fail(pointer, "expected object");
  json q = qubit_template();
  for (const auto& [k, v] : q_in.items()) q[k] = v;
  check_against_template(q, qubit_template(), pointer);
  ImpurityQubit out;
  out.rho_q = get_number(q, "/rho_over_d") * d;
  out.phi_q = get_number(q, "/phi");
  out.z_q = get_number(q, "/z_over_d") * d;
  out.dipole = parse_dipole(q, "/dipole");
  out.gamma0_q = get_number(q, "/gamma0");
  out.detuning_q = get_number(q, "/detuning");
  if (!(out.rho_q > 0.0)) fail(pointer + "/rho_over_d", "must be positive");
  if (!(out.gamma0_q > 0.0)) fail(pointer + "/gamma0", "must be positive");
  double v = 0.0;
  const bool resonant = get_optional_number(q, "/resonant_k1d", v);
  if (resonant) {
    if (!(v * kPi / d > kK0 && v <= 1.0)) fail(pointer + "/resonant_k1d", "wave-vector must be guided (k0 < k <= pi/d)");
    out.detuning_q = delta_for_k1d(v * kPi / d, d);
  }
  if (get_optional_number(q, "/above_band_edge", v)) {
    if (resonant) fail(pointer, "resonant_k1d and above_band_edge are exclusive");
    out.detuning_q = band_edges(d).delta_max + v;
  }
  if (get_bool(q, "/compensate_shift")) {
    out.detuning_q -= out.gamma0_q * coherent_shift(out, d, out.detuning_q);
  }
  return out;
}

PropagationOptions propagation_from_config(const json& cfg) {
  PropagationOptions o;
  o.method = parse_method(get_string(cfg, "/evolution/method"));
  return o;
}

}  // namespace awg
