// Copyright 2026 The phasepovm Authors
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

// JSON and CSV formats.
//
//   matrix JSON      [[[re, im], ...], ...]            (row-major)
//   matrix CSV       header re_1,im_1,...,re_N,im_N; one line per row
//   netlist JSON     {"M": int, "elements": [{"kind": "givens", "u", "v", "omega"}
//                                            | {"kind": "phase", "u", "phi"}]}
//                    1-based indices, radians, application order
//   distribution     {"M": int, "probabilities": [float]}  /  CSV k,probability
//   slots CSV        slot,outcome_h,p_h,outcome_v,p_v
//   state file       2x2 density matrix in the matrix JSON layout
//
// CSV uses '.' as decimal separator, a header row and '\n' line endings.
// Floats are written in shortest round-trip form so reruns are byte-identical.

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"
#include "phasepovm/decomposition.hpp"
#include "phasepovm/numerics.hpp"
#include "phasepovm/optics.hpp"
#include "phasepovm/povm.hpp"

namespace phasepovm {

/// Malformed input file or document.
class FormatError : public Error {
 public:
  using Error::Error;
};

namespace io {

using nlohmann::json;

/// Shortest representation that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc()) throw FormatError("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

// Matrices ------------------------------------------------------------------

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    throw FormatError("matrix: expected a non-empty array of rows");
  ComplexMatrix m(j.size(), j.front().size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != m.cols()) throw FormatError("matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw FormatError("matrix: entries must be [re, im] number pairs");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!m.all_finite()) throw FormatError("matrix: non-finite entry");
  return m;
}

inline std::string matrix_to_csv(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) out += ',';
    out += "re_" + std::to_string(c + 1) + ",im_" + std::to_string(c + 1);
  }
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c).real());
      out += ',';
      out += format_double(m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

// Netlists ------------------------------------------------------------------

inline json netlist_to_json(const Netlist& n) {
  json elements = json::array();
  for (const auto& e : n.elements) {
    if (const auto* g = std::get_if<GivensRotation>(&e))
      elements.push_back({{"kind", "givens"}, {"u", g->u}, {"v", g->v}, {"omega", g->omega}});
    else {
      const auto& p = std::get<PhaseShift>(e);
      elements.push_back({{"kind", "phase"}, {"u", p.u}, {"phi", p.phi}});
    }
  }
  return {{"M", n.M}, {"elements", std::move(elements)}};
}

inline Netlist netlist_from_json(const json& j) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw FormatError("netlist: " + msg);
  };
  require(j.is_object(), "expected an object");
  require(j.contains("M") && j["M"].is_number_unsigned(), "\"M\" must be a positive integer");
  require(j.contains("elements") && j["elements"].is_array(), "\"elements\" must be an array");
  Netlist n{j["M"].get<std::size_t>(), {}};
  for (const auto& e : j["elements"]) {
    require(e.is_object() && e.contains("kind") && e["kind"].is_string(), "element without \"kind\"");
    const auto kind = e["kind"].get<std::string>();
    if (kind == "givens") {
      require(e.contains("u") && e["u"].is_number_unsigned() && e.contains("v") &&
                  e["v"].is_number_unsigned() && e.contains("omega") && e["omega"].is_number(),
              "givens element needs integer u, v and numeric omega");
      n.elements.emplace_back(
          GivensRotation{e["u"].get<std::size_t>(), e["v"].get<std::size_t>(), e["omega"].get<double>()});
    } else if (kind == "phase") {
      require(e.contains("u") && e["u"].is_number_unsigned() && e.contains("phi") && e["phi"].is_number(),
              "phase element needs integer u and numeric phi");
      n.elements.emplace_back(PhaseShift{e["u"].get<std::size_t>(), e["phi"].get<double>()});
    } else {
      require(false, "unknown element kind \"" + kind + "\"");
    }
  }
  try {
    validate(n);
  } catch (const DomainError& err) {
    throw FormatError(std::string("netlist: ") + err.what());
  }
  return n;
}

inline std::string netlist_to_csv(const Netlist& n) {
  std::string out = "index,kind,u,v,angle\n";
  for (std::size_t i = 0; i < n.elements.size(); ++i) {
    out += std::to_string(i + 1) + ',';
    if (const auto* g = std::get_if<GivensRotation>(&n.elements[i]))
      out += "givens," + std::to_string(g->u) + ',' + std::to_string(g->v) + ',' + format_double(g->omega);
    else {
      const auto& p = std::get<PhaseShift>(n.elements[i]);
      out += "phase," + std::to_string(p.u) + ",," + format_double(p.phi);
    }
    out += '\n';
  }
  return out;
}

// Distributions -------------------------------------------------------------

inline json distribution_to_json(const OutcomeDistribution& d) {
  return {{"M", d.M}, {"probabilities", d.probabilities}};
}

inline OutcomeDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("M") || !j.contains("probabilities") ||
      !j["probabilities"].is_array())
    throw FormatError("distribution: expected {\"M\", \"probabilities\"}");
  OutcomeDistribution d{j["M"].get<std::size_t>(), j["probabilities"].get<std::vector<double>>()};
  if (d.probabilities.size() != d.M) throw FormatError("distribution: length does not match M");
  return d;
}

inline std::string distribution_to_csv(const OutcomeDistribution& d) {
  std::string out = "k,probability\n";
  for (std::size_t k = 0; k < d.probabilities.size(); ++k)
    out += std::to_string(k) + ',' + format_double(d.probabilities[k]) + '\n';
  return out;
}

inline json slots_to_json(const SlotDistribution& s) {
  json slots = json::array();
  for (std::size_t i = 0; i < s.slots.size(); ++i)
    slots.push_back({{"slot", i + 1},
                     {"outcome_h", i},
                     {"p_h", s.slots[i].first},
                     {"outcome_v", i + s.M / 2},
                     {"p_v", s.slots[i].second}});
  return {{"M", s.M}, {"probabilities", s.flatten().probabilities}, {"slots", std::move(slots)}};
}

inline std::string slots_to_csv(const SlotDistribution& s) {
  std::string out = "slot,outcome_h,p_h,outcome_v,p_v\n";
  for (std::size_t i = 0; i < s.slots.size(); ++i)
    out += std::to_string(i + 1) + ',' + std::to_string(i) + ',' + format_double(s.slots[i].first) + ',' +
           std::to_string(i + s.M / 2) + ',' + format_double(s.slots[i].second) + '\n';
  return out;
}

// States --------------------------------------------------------------------

inline QubitState state_from_json(const json& j) {
  const auto m = matrix_from_json(j);
  if (m.rows() != 2 || m.cols() != 2) throw FormatError("state: density matrix must be 2x2");
  try {
    return QubitState(m);
  } catch (const DomainError& err) {
    throw FormatError(std::string("state: ") + err.what());
  }
}

// Files ---------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
  if (!out) throw FormatError("write failed for " + path);
}

/// Two-space indented dump with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + '\n'; }

}  // namespace io
}  // namespace phasepovm
