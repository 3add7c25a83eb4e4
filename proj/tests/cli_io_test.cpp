// Copyright 2026 The ahlfors Authors
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

#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "ahlfors/error.hpp"

namespace ahlfors::cli {
namespace {

TEST(ParseComplex, AcceptedSpellings) {
  EXPECT_EQ(parse_complex("0.1+0.8i"), cplx(0.1, 0.8));
  EXPECT_EQ(parse_complex("-2"), cplx(-2.0, 0.0));
  EXPECT_EQ(parse_complex("1.5i"), cplx(0.0, 1.5));
  EXPECT_EQ(parse_complex("3-1e-2i"), cplx(3.0, -0.01));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex(" 2 + 1e+1i "), cplx(2.0, 10.0));
}

TEST(ParseComplex, RejectsGarbage) {
  for (const char* s : {"", "abc", "1+", "1+2", "i2", "1..2"}) {
    EXPECT_THROW(parse_complex(s), UsageError) << s;
  }
}

TEST(ParseList, NumbersAndIntegers) {
  EXPECT_EQ(parse_list("0.1, 0.2,0.3"), (std::vector<double>{0.1, 0.2, 0.3}));
  EXPECT_EQ(parse_int_list("20,30,40"), (std::vector<int>{20, 30, 40}));
  EXPECT_THROW(parse_int_list("2.5"), UsageError);
  EXPECT_THROW(parse_list("1,,2"), UsageError);
}

TEST(FormatNumber, RoundTripsAndSpellsSpecials) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02e23}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(format_number(NAN), "nan");
}

TEST(Csv, RenderThenParse) {
  CsvTable t({"n", "value"});
  t.add_row({4.0, 0.25});
  t.add_row({8.0, NAN});
  const std::string text = t.render("sweep");
  EXPECT_EQ(text.rfind("# ahlfors ", 0), 0u);
  const CsvData d = parse_csv(text);
  ASSERT_EQ(d.rows.size(), 2u);
  EXPECT_EQ(d.column("value"), 1);
  EXPECT_EQ(d.column("missing"), -1);
  EXPECT_EQ(d.rows[0][1], 0.25);
  EXPECT_TRUE(std::isnan(d.rows[1][1]));
}

TEST(Csv, RejectsRaggedAndEmpty) {
  EXPECT_THROW(parse_csv("a,b\n1\n"), Error);
  EXPECT_THROW(parse_csv("# only a comment\n"), Error);
}

TEST(Instance, ParsesAllKinds) {
  const Instance j = parse_instance(R"({"kind": "J", "endpoints": [-2, -1, 0.5, 2]})");
  ASSERT_TRUE(j.bands.has_value());
  EXPECT_EQ(j.bands->genus(), 1);
  const Instance s = parse_instance(R"({"kind": "S", "endpoints": [1, 2]})");
  EXPECT_EQ(s.bands->kind(), Kind::S);
  const Instance t = parse_instance(R"({"kind": "T", "endpoints": [0.5, 1, 3, 3.4]})");
  ASSERT_TRUE(t.arcs.has_value());
  const Instance p = parse_instance(
      R"({"kind": "J", "endpoints": [1.4142135623730951, 2], "preimage": {"u": [-3, 0, 1], "m": 2}})");
  ASSERT_TRUE(p.preimage.has_value());
  EXPECT_EQ(p.preimage->m, 2);
}

TEST(Instance, RejectsBadInput) {
  EXPECT_THROW(parse_instance("{"), UsageError);
  EXPECT_THROW(parse_instance(R"({"endpoints": [0, 1]})"), UsageError);
  EXPECT_THROW(parse_instance(R"({"kind": "Q", "endpoints": [0, 1]})"), UsageError);
  EXPECT_THROW(parse_instance(R"({"kind": "J", "endpoints": [1, 0]})"), UsageError);
  EXPECT_THROW(parse_instance(R"({"kind": "J", "endpoints": "x"})"), UsageError);
}

TEST(Files, AtomicWriteReplacesContent) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "ahlfors_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.csv").string();
  write_atomic(path, "first\n");
  write_atomic(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  int leftovers = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    leftovers += entry.path().filename() != "out.csv";
  }
  EXPECT_EQ(leftovers, 0);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_file(path), UsageError);
}

TEST(Plot, SweepCsvBecomesSvg) {
  CsvTable t({"n", "lower", "upper", "scaled", "predicted", "ratio", "contact", "rounds"});
  t.add_row({4, 1, 1, 0.2, 0.21, 0.95, 4, 3});
  t.add_row({8, 2, 2, 0.21, 0.21, 1.0, 8, 3});
  const PlotSpec spec = plot_from_csv(parse_csv(t.render("sweep")), "sweep");
  EXPECT_FALSE(spec.series.empty());
  const std::string svg = render_svg(spec);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_THROW(plot_from_csv(parse_csv(t.render("sweep")), "xy", "n", "nope"), Error);
}

}  // namespace
}  // namespace ahlfors::cli
