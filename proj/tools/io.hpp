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

// Input parsing, CSV formatting, atomic file output and the SVG writer
// used by the command-line tool.

#ifndef AHLFORS_TOOLS_IO_HPP_
#define AHLFORS_TOOLS_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ahlfors/geometry.hpp"
#include "ahlfors/polynomial.hpp"

namespace ahlfors::cli {

inline constexpr const char* kVersion = "0.1.0";

// Bad command line or instance file; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Preimage {
  Poly u;
  int m = 1;
};

// {"kind": "J" | "S" | "T", "endpoints": [...], "preimage": {"u": [...], "m": 2}}
// J and S endpoints follow validate_system; T endpoints are gap angles.
struct Instance {
  std::string kind;
  std::vector<double> endpoints;
  std::optional<BandSystem> bands;
  std::optional<ArcSystem> arcs;
  std::optional<Preimage> preimage;
};

Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// "0.1+0.8i", "-2", "1.5i", "3-1e-2i".
cplx parse_complex(const std::string& s);
// Comma-separated numbers.
std::vector<double> parse_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

// %.17g, with inf and nan spelled out.
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(const std::vector<double>& values);
  void add_row(const std::vector<std::string>& cells);
  // First line "# ahlfors <version> <command>", then the header row.
  std::string render(const std::string& command) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  int column(const std::string& name) const;  // -1 if absent
};

// Skips '#' lines; throws a format error on ragged or empty input.
CsvData parse_csv(const std::string& text);

// Writes to a temporary file next to path, then renames it into place.
void write_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

struct Series {
  std::string label;
  std::vector<double> x, y;
  bool points = false;  // scatter instead of a polyline
};

struct PlotSpec {
  std::string title, xlabel, ylabel;
  std::vector<Series> series;
  std::optional<double> hline;
};

std::string render_svg(const PlotSpec& spec);
// kind: "sweep" (ratio and scaled against n), "bifurcation" (rho^2 / rho~^2
// per branch against beta with the threshold line at 1), or "xy" with the
// given column names.
PlotSpec plot_from_csv(const CsvData& csv, const std::string& kind, const std::string& x = "",
                       const std::string& y = "");

}  // namespace ahlfors::cli

#endif  // AHLFORS_TOOLS_IO_HPP_
