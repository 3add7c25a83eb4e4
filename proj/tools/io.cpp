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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ahlfors/error.hpp"
#include "json.hpp"

namespace ahlfors::cli {
namespace {

using nlohmann::json;

double parse_double(const std::string& s) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("endpoints")) {
    throw UsageError("instance needs \"kind\" and \"endpoints\"");
  }
  Instance inst;
  try {
    inst.kind = j.at("kind").get<std::string>();
    inst.endpoints = j.at("endpoints").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("instance field has the wrong type: ") + e.what());
  }
  try {
    if (inst.kind == "J") {
      inst.bands = validate_system(inst.endpoints, Kind::J);
    } else if (inst.kind == "S") {
      inst.bands = validate_system(inst.endpoints, Kind::S);
    } else if (inst.kind == "T") {
      inst.arcs = validate_arcs(inst.endpoints);
    } else {
      throw UsageError("kind must be J, S or T");
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (j.contains("preimage")) {
    try {
      Preimage p;
      p.u = j.at("preimage").at("u").get<std::vector<double>>();
      p.m = j.at("preimage").value("m", 1);
      inst.preimage = p;
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad preimage block: ") + e.what());
    }
  }
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw UsageError("empty complex number");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.pop_back();
  size_t split_at = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split_at == std::string::npos) return {0.0, imag_of(s)};
  return {parse_double(s.substr(0, split_at)), imag_of(s.substr(split_at))};
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (const std::string& t : split(s, ',')) {
    if (t.empty()) throw UsageError("empty entry in list '" + s + "'");
    out.push_back(parse_double(t));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_list(s)) {
    if (v != std::floor(v)) throw UsageError("expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  for (double v : values) cells.push_back(format_number(v));
  add_row(cells);
}

void CsvTable::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("row width differs from the header");
  }
  rows_.push_back(cells);
}

std::string CsvTable::render(const std::string& command) const {
  std::string out = "# ahlfors " + std::string(kVersion) + " " + command + "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

int CsvData::column(const std::string& name) const {
  for (size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return static_cast<int>(k);
  }
  return -1;
}

CsvData parse_csv(const std::string& text) {
  CsvData out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells = split(line, ',');
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (out.header.empty()) {
      out.header = cells;
      continue;
    }
    if (cells.size() != out.header.size()) {
      throw Error(ErrorKind::kFormat, "ragged CSV row: " + line);
    }
    std::vector<double> row;
    for (const std::string& c : cells) {
      if (c == "nan") {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      } else if (c == "inf" || c == "-inf") {
        row.push_back(c[0] == '-' ? -HUGE_VAL : HUGE_VAL);
      } else if (c == "true" || c == "false") {
        row.push_back(c == "true" ? 1.0 : 0.0);
      } else {
        try {
          row.push_back(parse_double(c));
        } catch (const UsageError&) {
          throw Error(ErrorKind::kFormat, "non-numeric CSV cell: " + c);
        }
      }
    }
    out.rows.push_back(row);
  }
  if (out.header.empty() || out.rows.empty()) throw Error(ErrorKind::kFormat, "empty CSV");
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << content;
    if (!out) throw UsageError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot move output into " + path + ": " + ec.message());
  }
}

namespace {

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  constexpr double kW = 720, kH = 450, kL = 80, kR = 160, kT = 40, kB = 60;
  double x0 = HUGE_VAL, x1 = -HUGE_VAL, y0 = HUGE_VAL, y1 = -HUGE_VAL;
  for (const Series& s : spec.series) {
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (spec.hline) {
    y0 = std::min(y0, *spec.hline);
    y1 = std::max(y1, *spec.hline);
  }
  if (!(x0 <= x1) || !(y0 <= y1)) throw Error(ErrorKind::kFormat, "nothing to plot");
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); };
  auto py = [&](double y) { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(kW / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
    << esc(spec.title) << "</text>\n";
  o << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR << "\" height=\""
    << kH - kT - kB << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double xv = x0 + (x1 - x0) * k / 5.0, yv = y0 + (y1 - y0) * k / 5.0;
    o << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kH - kB + 18)
      << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
    o << "<text x=\"" << num(kL - 6) << "\" y=\"" << num(py(yv) + 4)
      << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
  }
  o << "<text x=\"" << num(px(0.5 * (x0 + x1))) << "\" y=\"" << num(kH - 15)
    << "\" text-anchor=\"middle\">" << esc(spec.xlabel) << "</text>\n";
  o << "<text x=\"18\" y=\"" << num(py(0.5 * (y0 + y1))) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << num(py(0.5 * (y0 + y1))) << ")\">" << esc(spec.ylabel) << "</text>\n";
  if (spec.hline) {
    o << "<line x1=\"" << kL << "\" x2=\"" << kW - kR << "\" y1=\"" << num(py(*spec.hline))
      << "\" y2=\"" << num(py(*spec.hline)) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (size_t s = 0; s < spec.series.size(); ++s) {
    const Series& ser = spec.series[s];
    const char* col = colors[s % 6];
    if (ser.points) {
      for (size_t i = 0; i < ser.x.size(); ++i) {
        if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
        o << "<circle cx=\"" << num(px(ser.x[i])) << "\" cy=\"" << num(py(ser.y[i]))
          << "\" r=\"2.5\" fill=\"" << col << "\"/>\n";
      }
    } else {
      std::string pts;
      auto flush = [&]() {
        if (!pts.empty()) {
          o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\""
            << pts << "\"/>\n";
        }
        pts.clear();
      };
      for (size_t i = 0; i < ser.x.size(); ++i) {
        if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) {
          flush();
          continue;
        }
        pts += num(px(ser.x[i])) + "," + num(py(ser.y[i])) + " ";
      }
      flush();
    }
    const double ly = kT + 16 + 18 * s;
    o << "<rect x=\"" << kW - kR + 12 << "\" y=\"" << num(ly - 9) << "\" width=\"12\" height=\"10\" fill=\""
      << col << "\"/>\n";
    o << "<text x=\"" << kW - kR + 30 << "\" y=\"" << num(ly) << "\">" << esc(ser.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

PlotSpec plot_from_csv(const CsvData& csv, const std::string& kind, const std::string& x,
                       const std::string& y) {
  auto need = [&](const std::string& name) {
    const int c = csv.column(name);
    if (c < 0) throw Error(ErrorKind::kFormat, "CSV lacks column " + name);
    return c;
  };
  PlotSpec spec;
  if (kind == "sweep") {
    const int cn = need("n"), cr = need("ratio");
    spec.title = "oracle / prediction";
    spec.xlabel = "n";
    spec.ylabel = "ratio";
    Series s{"ratio", {}, {}, false};
    for (const auto& r : csv.rows) {
      s.x.push_back(r[cn]);
      s.y.push_back(r[cr]);
    }
    spec.series.push_back(s);
    spec.hline = 1.0;
  } else if (kind == "bifurcation") {
    const int cb = need("beta"), cbr = need("branch"), cr = need("rho_sq"), ct = need("rho_tilde_sq");
    spec.title = "branches: rho^2 / rho~^2";
    spec.xlabel = "beta";
    spec.ylabel = "rho^2 / rho~^2";
    std::map<int, Series> by_branch;
    for (const auto& r : csv.rows) {
      const int b = static_cast<int>(r[cbr]);
      if (b < 0) continue;
      Series& s = by_branch[b];
      s.label = "branch " + std::to_string(b);
      s.points = true;
      s.x.push_back(r[cb]);
      s.y.push_back(r[cr] / r[ct]);
    }
    for (auto& kv : by_branch) spec.series.push_back(kv.second);
    spec.hline = 1.0;
  } else if (kind == "xy") {
    const int cx = need(x), cy = need(y);
    spec.title = y + " against " + x;
    spec.xlabel = x;
    spec.ylabel = y;
    Series s{y, {}, {}, false};
    for (const auto& r : csv.rows) {
      s.x.push_back(r[cx]);
      s.y.push_back(r[cy]);
    }
    spec.series.push_back(s);
  } else {
    throw UsageError("plot kind must be sweep, bifurcation or xy");
  }
  return spec;
}

}  // namespace ahlfors::cli
