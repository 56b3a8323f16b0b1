/* Copyright 2026 The QuTiBench Toolkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "qutibench/error.hpp"
#include "qutibench/topology.hpp"

using namespace qutibench;

namespace {

constexpr const char* kHeader =
    "name,kind,out_h,out_w,in_ch,kernel_h,kernel_w,stride,out_ch,seq_len,hidden,bidir\n";

std::string with_header(const std::string& rows) { return std::string(kHeader) + rows; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parses a conv layer with all fields") {
  auto model = parse_topology(with_header("conv1,conv,112,112,3,7,7,2,64,,,\n"), "m");
  REQUIRE(model.layers.size() == 1);
  const LayerSpec& l = model.layers[0];
  CHECK(l.name == "conv1");
  CHECK(l.kind == LayerKind::kConv);
  CHECK(l.out_h == 112);
  CHECK(l.out_w == 112);
  CHECK(l.in_ch == 3);
  CHECK(l.kernel_h == 7);
  CHECK(l.kernel_w == 7);
  CHECK(l.stride == 2);
  CHECK(l.out_ch == 64);
}

TEST_CASE("fc layers take spatial dims of one and forbid kernels") {
  auto model = parse_topology(with_header("fc1000,fc,,,2048,,,,1000,,,\n"));
  CHECK(model.layers[0].out_h == 1);
  CHECK(model.layers[0].out_w == 1);
  CHECK(model.layers[0].in_ch == 2048);
  CHECK(model.layers[0].out_ch == 1000);
  CHECK_THROWS_AS(parse_topology(with_header("fc1,fc,,,2048,3,,,1000,,,\n")), ParseError);
}

TEST_CASE("lstm defaults its sequence length and rejects out_ch") {
  auto model = parse_topology(with_header("r1,lstm,,,26,,,,,,100,\n"));
  CHECK(model.layers[0].seq_len == kDefaultSequenceLength);
  CHECK(model.layers[0].hidden == 100);
  CHECK_FALSE(model.layers[0].bidirectional);

  auto bidir = parse_topology(with_header("r1,lstm,,,26,,,,,50,100,1\n"));
  CHECK(bidir.layers[0].seq_len == 50);
  CHECK(bidir.layers[0].bidirectional);

  CHECK_THROWS_AS(parse_topology(with_header("r1,lstm,,,26,,,,64,,100,\n")), ParseError);
}

TEST_CASE("comments and blank lines are skipped") {
  auto model = parse_topology(
      "# a comment\n\n" + with_header("# another\np1,pool,7,7,,3,3,1,64,,,\n\n"));
  REQUIRE(model.layers.size() == 1);
  CHECK(model.layers[0].kind == LayerKind::kPool);
}

TEST_CASE("errors carry the 1-based line number") {
  try {
    parse_topology(with_header("ok,conv,1,1,1,1,1,1,1,,,\nbad,conv,0,1,1,1,1,1,1,,,\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("rejects malformed inputs") {
  CHECK_THROWS_AS(parse_topology(""), ParseError);                                // no header
  CHECK_THROWS_AS(parse_topology(with_header("x,warp,1,1,1,1,1,1,1,,,\n")), ParseError);
  CHECK_THROWS_AS(parse_topology(with_header("x,conv,1,1,1,1,1,1,1,,,\n"
                                             "x,conv,1,1,1,1,1,1,1,,,\n")),
                  ParseError);  // duplicate name
  CHECK_THROWS_AS(parse_topology(with_header("x,conv,1,1,-3,1,1,1,1,,,\n")), ParseError);
  CHECK_THROWS_AS(parse_topology(with_header("x,conv,1,1,1,1,1,1\n")), ParseError);  // short
  CHECK_THROWS_AS(parse_topology(with_header("x,conv,1,1,abc,1,1,1,1,,,\n")), ParseError);
  CHECK_THROWS_AS(parse_topology(with_header(",conv,1,1,1,1,1,1,1,,,\n")), ParseError);
  CHECK_THROWS_AS(parse_topology(with_header("x,batchnorm,4,4,,3,,,16,,,\n")), ParseError);
}

TEST_CASE("bundled model fixtures parse") {
  auto resnet = parse_topology(read_file(std::string(QB_DATA_DIR) + "/models/resnet50.topo"));
  CHECK(resnet.layers.size() == 54);
  auto googlenet =
      parse_topology(read_file(std::string(QB_DATA_DIR) + "/models/googlenetv1.topo"));
  CHECK(googlenet.layers.size() == 57);
}

TEST_CASE("parse/serialize round-trips 1000 random models") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 1000; ++trial) {
    NetworkModel model = qutibench::testing::random_model(rng);
    NetworkModel reparsed = parse_topology(serialize_topology(model), model.name);
    CHECK(reparsed == model);
    if (reparsed != model) break;
  }
}
