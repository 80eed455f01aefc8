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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "phasepovm/phasepovm.hpp"

namespace phasepovm {
namespace {

TEST(Io, MatrixJsonRoundTripIsExact) {
  const auto z = build_extension_closed(8).matrix();
  const auto text = io::dump(io::matrix_to_json(z));
  EXPECT_EQ(max_abs_diff(io::matrix_from_json(nlohmann::json::parse(text)), z), 0.0);
}

TEST(Io, MatrixJsonRejectsMalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(io::matrix_from_json(json::parse("[]")), FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse("[[[1,0]],[[1,0],[0,0]]]")), FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse("[[[1]]]")), FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse("[[\"a\"]]")), FormatError);
}

TEST(Io, MatrixCsvLayout) {
  const ComplexMatrix m{{Complex(1, -0.5), 2}, {0, Complex(0, 3)}};
  EXPECT_EQ(io::matrix_to_csv(m), "re_1,im_1,re_2,im_2\n1,-0.5,2,0\n0,0,0,3\n");
}

TEST(Io, NetlistRoundTrip) {
  const auto n = decompose_closed(16);
  const auto back = io::netlist_from_json(io::netlist_to_json(n));
  ASSERT_EQ(back.elements.size(), n.elements.size());
  EXPECT_TRUE(netlists_equal(n, back, 0.0));
  const auto j = io::netlist_to_json(n);
  EXPECT_EQ(j["elements"][0]["kind"], "givens");
  EXPECT_EQ(j["elements"][1]["kind"], "phase");
  EXPECT_EQ(j["elements"][1]["u"], 2);
}

TEST(Io, NetlistRejectsInvalidDocuments) {
  using nlohmann::json;
  EXPECT_THROW(io::netlist_from_json(json::parse(R"({"elements": []})")), FormatError);
  EXPECT_THROW(io::netlist_from_json(json::parse(R"({"M": 4, "elements": [{"kind": "mirror"}]})")),
               FormatError);
  EXPECT_THROW(io::netlist_from_json(
                   json::parse(R"({"M": 4, "elements": [{"kind": "givens", "u": 3, "v": 2, "omega": 1}]})")),
               FormatError);
  EXPECT_THROW(io::netlist_from_json(json::parse(R"({"M": 4, "elements": [{"kind": "phase", "u": 5, "phi": 1}]})")),
               FormatError);
}

TEST(Io, NetlistCsv) {
  const Netlist n{4, {GivensRotation{1, 2, 0.25}, PhaseShift{2, 0.5}}};
  EXPECT_EQ(io::netlist_to_csv(n), "index,kind,u,v,angle\n1,givens,1,2,0.25\n2,phase,2,,0.5\n");
}

TEST(Io, DistributionFormats) {
  const OutcomeDistribution d{2, {0.75, 0.25}};
  EXPECT_EQ(io::distribution_to_csv(d), "k,probability\n0,0.75\n1,0.25\n");
  const auto back = io::distribution_from_json(io::distribution_to_json(d));
  EXPECT_EQ(back.probabilities, d.probabilities);
  EXPECT_THROW(io::distribution_from_json(nlohmann::json::parse(R"({"M": 3, "probabilities": [1]})")),
               FormatError);
}

TEST(Io, SlotsCsvHeader) {
  const auto s = simulate_folded(4, QubitState::from_phase(0));
  const auto csv = io::slots_to_csv(s);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "slot,outcome_h,p_h,outcome_v,p_v");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Io, StateFileValidation) {
  using nlohmann::json;
  const auto ok = io::state_from_json(json::parse("[[[0.5,0],[0,-0.5]],[[0,0.5],[0.5,0]]]"));
  EXPECT_NEAR(ok.density()(0, 1).imag(), -0.5, 0);
  EXPECT_THROW(io::state_from_json(json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]")), FormatError);
  EXPECT_THROW(io::state_from_json(json::parse("[[[1,0]]]")), FormatError);
}

TEST(Io, FilesAndShortestDoubles) {
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(1e-300), "1e-300");
  const auto path = (std::filesystem::temp_directory_path() / "phasepovm_io_test.json").string();
  io::write_file(path, "{\"a\": 1}");
  EXPECT_EQ(io::read_json_file(path)["a"], 1);
  io::write_file(path, "{not json");
  EXPECT_THROW(io::read_json_file(path), FormatError);
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_file(path), FormatError);
}

}  // namespace
}  // namespace phasepovm
