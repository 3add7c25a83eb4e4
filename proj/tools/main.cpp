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

// ahlfors: command-line front end. Every command reads a JSON instance,
// writes CSV, JSON or SVG to --out (standard output by default) and exits
// with 0 on success, 1 on a numerical failure and 2 on a usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ahlfors/abelian.hpp"
#include "ahlfors/error.hpp"
#include "ahlfors/extremal_poly.hpp"
#include "ahlfors/inversion.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/lp.hpp"
#include "ahlfors/oracle.hpp"
#include "ahlfors/potential.hpp"
#include "io.hpp"
#include "json.hpp"

namespace ahlfors::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string instance;
  std::string out;
  std::string diag = "ahlfors-diagnostic.txt";
  std::string z, z0, lambda, beta, n_list, source = "complex", csv, kind = "sweep", x, y;
  double pole = std::numeric_limits<double>::quiet_NaN();
  double rho = 0.0, contact_tol = 1e-6, lp_tol = 1e-7, tol = 1e-7;
  int n = 0, n_min = 0, n_max = 0, n_step = 1, facets = 64, grid = 0, betas = 101,
      scan_grid = 256, max_rounds = 50;
  unsigned seed = 1;
};

int thread_cap() {
  int cap = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("AHL_THREADS")) {
    const int v = std::atoi(env);
    if (v < 1) throw UsageError("AHL_THREADS must be a positive integer");
    cap = v;
  }
  return cap;
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    write_atomic(o.out, content);
  }
}

void emit_json(const Options& o, const ojson& j) { emit(o, j.dump(2) + "\n"); }

BandSystem bands_of(const Instance& inst) {
  if (!inst.bands) throw UsageError("this command needs a J or S instance");
  return *inst.bands;
}

cplx need_point(const std::string& s, const char* name) {
  if (s.empty()) throw UsageError(std::string("--") + name + " is required");
  return parse_complex(s);
}

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

CharacterVector beta_for(const Options& o, const BandSystem& e) {
  if (!o.beta.empty()) {
    CharacterVector b = parse_list(o.beta);
    if (static_cast<int>(b.size()) != e.genus()) {
      throw UsageError("--beta needs " + std::to_string(e.genus()) + " entries");
    }
    return reduce_mod1(b);
  }
  if (o.n > 0 && e.genus() > 0) {
    return limit_character(comb_data(e).base_angles, o.n,
                           e.kind() == Kind::J ? Problem::J : Problem::S);
  }
  if (e.genus() == 0) return {};
  throw UsageError("give --beta or --n");
}

int cmd_describe(const Options& o) {
  const Instance inst = load_instance(o.instance);
  ojson j;
  j["kind"] = inst.kind;
  j["endpoints"] = inst.endpoints;
  if (inst.arcs) {
    j["genus"] = inst.arcs->genus();
    ojson arcs = ojson::array();
    for (const Interval& a : inst.arcs->arcs()) arcs.push_back({a.lo, a.hi});
    j["arcs"] = arcs;
  } else {
    const BandSystem& e = *inst.bands;
    j["genus"] = e.genus();
    ojson bands = ojson::array(), gaps = ojson::array();
    for (const Interval& b : e.bands()) bands.push_back({b.lo, b.hi});
    for (int g = 1; g <= e.genus(); ++g) gaps.push_back({e.a(g), e.b(g)});
    j["bands"] = bands;
    j["inner_gaps"] = gaps;
    if (e.kind() == Kind::J) {
      const Capacity c = capacity_and_robin(e);
      j["capacity"] = c.cap;
      j["robin"] = c.robin;
    }
    if (e.genus() > 0) j["period_condition"] = DifferentialBasis(e).condition();
  }
  emit_json(o, j);
  return 0;
}

int cmd_comb(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  const CombData d = comb_data(e);
  CsvTable t({"j", "critical", "base_angle", "height"});
  for (size_t k = 0; k < d.critical.size(); ++k) {
    t.add_row({static_cast<double>(k + 1), d.critical[k], d.base_angles[k], d.heights[k]});
  }
  emit(o, t.render("comb"));
  return 0;
}

int cmd_green(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  const cplx z = need_point(o.z, "z");
  ojson j;
  j["z"] = complex_json(z);
  if (std::isnan(o.pole)) {
    j["pole"] = "infinity";
    j["value"] = green_at_infinity(e, z);
  } else {
    PoleGreen g(e, o.pole);
    j["pole"] = o.pole;
    j["value"] = g(z);
    j["robin"] = g.robin();
  }
  emit_json(o, j);
  return 0;
}

int cmd_capacity(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  if (e.kind() != Kind::J) throw UsageError("capacity needs a J instance");
  const Capacity c = capacity_and_robin(e);
  CombMap comb(e);
  CsvTable t({"capacity", "robin", "spread", "robin_integral"});
  t.add_row({c.cap, c.robin, c.spread, robin_by_integral(comb)});
  emit(o, t.render("capacity"));
  return 0;
}

int cmd_hm(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  const cplx z = need_point(o.z, "z");
  CsvTable t({"index", "kind", "measure"});
  if (e.genus() == 0) {
    t.add_row({"0", "band", format_number(1.0)});
  } else {
    DifferentialBasis basis(e);
    for (int k = 1; k <= e.genus(); ++k) {
      t.add_row({std::to_string(k), "E_k", format_number(basis.harmonic_measure(k, z))});
    }
    for (int b = 0; b <= e.genus(); ++b) {
      t.add_row({std::to_string(b), "band", format_number(basis.band_measure(b, z))});
    }
  }
  emit(o, t.render("hm"));
  return 0;
}

int cmd_invert(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  if (e.genus() == 0) throw UsageError("invert needs genus >= 1");
  const InversionSolution s = real_inversion(e, beta_for(o, e));
  CsvTable t({"gap", "t", "x", "residual"});
  for (size_t k = 0; k < s.points.size(); ++k) {
    t.add_row({static_cast<double>(s.points[k].gap), s.points[k].t, s.x[k], s.residual_cs1});
  }
  emit(o, t.render("invert"));
  return 0;
}

int cmd_gaji(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  const cplx z0 = need_point(o.z0, "z0");
  Inversion inv(e);
  const GajiResult res = inv.gaji_solve(beta_for(o, e), z0);
  std::vector<std::string> head{"branch"};
  for (int j = 0; j <= e.genus(); ++j) head.push_back("x" + std::to_string(j));
  for (const char* c : {"rho", "rho_tilde_sq", "in_region", "residual_cs1", "residual_cs2",
                        "realness_defect", "sigma_min"}) {
    head.push_back(c);
  }
  CsvTable t(head);
  for (size_t b = 0; b < res.branches.size(); ++b) {
    const InversionSolution& s = res.branches[b];
    std::vector<double> row{static_cast<double>(b)};
    for (double x : s.x) row.push_back(x);
    row.push_back(s.rho);
    row.push_back(s.rho_tilde_sq);
    row.push_back(s.in_region ? 1.0 : 0.0);
    row.push_back(s.residual_cs1);
    row.push_back(s.residual_cs2);
    row.push_back(s.realness_defect);
    row.push_back(inv.jacobian_check(s.points, z0).sigma_min);
    t.add_row(row);
  }
  emit(o, t.render("gaji"));
  return 0;
}

int cmd_bifurcation(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  if (e.genus() != 1) throw UsageError("bifurcation scans need genus 1");
  if (o.betas < 2) throw UsageError("--betas must be at least 2");
  const cplx z0 = need_point(o.z0, "z0");
  std::vector<double> betas;
  for (int k = 0; k < o.betas; ++k) betas.push_back(static_cast<double>(k) / o.betas);
  const std::vector<BifurcationRow> rows = Inversion(e).bifurcation_scan(betas, z0, o.scan_grid);
  CsvTable t({"beta", "branch", "branches", "x0", "x1", "rho_sq", "rho_tilde_sq", "valid",
              "angle_relation"});
  for (const BifurcationRow& r : rows) {
    t.add_row({r.beta, static_cast<double>(r.branch), static_cast<double>(r.branches), r.x0, r.x1,
               r.rho_sq, r.rho_tilde_sq, r.valid ? 1.0 : 0.0, r.angle_relation});
  }
  emit(o, t.render("bifurcation"));
  return 0;
}

int cmd_predict(const Options& o) {
  const BandSystem e = bands_of(load_instance(o.instance));
  cplx z0 = need_point(o.z0, "z0");
  const CharacterVector beta = beta_for(o, e);
  ojson j;
  j["z0"] = complex_json(z0);
  j["beta"] = beta;
  if (z0.imag() == 0.0) {
    const RealGapPrediction p = predict_real_gap(e, z0.real(), beta);
    j["value"] = p.value;
    j["robin"] = p.robin;
    j["points"] = p.points;
  } else {
    if (z0.imag() < 0.0) z0 = std::conj(z0);
    const ComplexPrediction p = predict_complex(e, z0, beta);
    j["value"] = p.value;
    ojson pts = ojson::array();
    for (double x : p.points) pts.push_back(std::isinf(x) ? ojson("inf") : ojson(x));
    j["points"] = pts;
    j["rho"] = p.rho;
    j["rho_tilde_sq"] = p.rho_tilde_sq;
    j["branches"] = p.branches;
    j["all_values"] = p.all_values;
  }
  emit_json(o, j);
  return 0;
}

int cmd_candidate(const Options& o) {
  const Instance inst = load_instance(o.instance);
  const BandSystem& e = bands_of(inst);
  if (!inst.preimage) throw UsageError("candidate needs a \"preimage\" block in the instance");
  const PellPair pair = pell_from_preimage(inst.preimage->u, inst.preimage->m);
  if (o.n > 0 && o.n != pair.n) {
    throw UsageError("--n differs from the preimage degree " + std::to_string(pair.n));
  }
  const CandidatePoly c = candidate_from_extension(e, pair, o.rho);
  KolmogorovOptions kopt;
  kopt.contact_tol = o.contact_tol;
  kopt.margin_tol = o.lp_tol;
  ojson j;
  j["n"] = pair.n;
  j["rho"] = c.rho;
  j["rho_tilde_sq"] = c.rho_tilde_sq;
  j["pell_residual"] = pell_residual(pair, 4 * pair.n);
  j["sup_norm"] = c.sup_norm;
  ojson zeros = ojson::array(), derivs = ojson::array(), kol = ojson::array();
  size_t k = 0;
  for (cplx z : c.zeros) {
    zeros.push_back(complex_json(z));
    if (z.imag() <= 1e-12) continue;
    derivs.push_back(c.derivs[k]);
    const KolmogorovResult r = kolmogorov_check(c.ahlfors[k], pieces_of(e), z, kopt);
    kol.push_back({{"passes", r.passes}, {"margin", r.margin}, {"contact", r.contact_count},
                   {"inconclusive", r.inconclusive}});
    ++k;
  }
  j["zeros"] = zeros;
  j["derivs"] = derivs;
  j["kolmogorov"] = kol;
  emit_json(o, j);
  return 0;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.facets = o.facets;
  opt.grid = o.grid;
  opt.max_rounds = o.max_rounds;
  opt.tol = o.tol;
  if (opt.facets < 3) throw UsageError("--K must be at least 3");
  return opt;
}

int cmd_oracle(const Options& o) {
  const Instance inst = load_instance(o.instance);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const cplx z0 = need_point(o.z0, "z0");
  const ExtremalResult r = inst.arcs ? extremal_deriv(*inst.arcs, o.n, z0, oracle_options(o))
                                     : extremal_deriv(bands_of(inst), o.n, z0, oracle_options(o));
  CsvTable t({"n", "lower", "upper", "contact_count", "iters", "rounds"});
  t.add_row({static_cast<double>(r.n), r.lower, r.upper, static_cast<double>(r.contact.size()),
             static_cast<double>(r.iterations), static_cast<double>(r.rounds)});
  emit(o, t.render("oracle"));
  return 0;
}

int cmd_sweep(const Options& o) {
  const Instance inst = load_instance(o.instance);
  SweepSpec spec;
  spec.set = bands_of(inst);
  if (o.source == "g0") {
    spec.source = SweepSource::kGenus0Lambda;
    spec.lambda = need_point(o.lambda, "lambda");
  } else if (o.source == "complex" || o.source == "real") {
    spec.source = o.source == "real" ? SweepSource::kRealGap : SweepSource::kComplex;
    spec.z0 = need_point(o.z0, "z0");
    if (spec.source == SweepSource::kComplex && spec.z0.imag() < 0.0) spec.z0 = std::conj(spec.z0);
  } else {
    throw UsageError("--source must be g0, complex or real");
  }
  if (!o.n_list.empty()) {
    spec.n_list = parse_int_list(o.n_list);
  } else {
    if (o.n_min < 1 || o.n_max < o.n_min || o.n_step < 1) throw UsageError("empty n range");
    for (int n = o.n_min; n <= o.n_max; n += o.n_step) spec.n_list.push_back(n);
  }
  if (spec.n_list.empty()) throw UsageError("empty n range");
  spec.oracle = oracle_options(o);
  spec.threads = thread_cap();
  const std::vector<SweepRow> rows = convergence_sweep(spec);
  std::vector<std::string> head{"n", "lower", "upper", "scaled", "predicted", "ratio"};
  for (int k = 1; k <= spec.set.genus(); ++k) head.push_back("beta" + std::to_string(k));
  head.push_back("contact");
  head.push_back("rounds");
  CsvTable t(head);
  for (const SweepRow& r : rows) {
    std::vector<double> row{static_cast<double>(r.n), r.lower, r.upper, r.scaled, r.predicted,
                            r.ratio};
    for (double b : r.beta) row.push_back(b);
    row.push_back(r.contact);
    row.push_back(r.rounds);
    t.add_row(row);
  }
  emit(o, t.render("sweep"));
  return 0;
}

int cmd_plot(const Options& o) {
  if (o.csv.empty()) throw UsageError("--csv is required");
  const CsvData data = parse_csv(read_file(o.csv));
  emit(o, render_svg(plot_from_csv(data, o.kind, o.x, o.y)));
  return 0;
}

int cmd_selftest(const Options& o) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, double detail) {
    std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), format_number(detail).c_str());
    if (!ok) ++failures;
  };
  const BandSystem seg = validate_system({-2.0, 2.0}, Kind::J);
  check("capacity of [-2,2] is 1", std::abs(capacity_and_robin(seg).cap - 1.0) < 1e-10,
        capacity_and_robin(seg).cap);
  const LPResult lp = lp_solve({2, {1.0, 1.0}, {{{1.0, 0.0}, 1.0}, {{0.0, 1.0}, 2.0}}});
  check("lp max x+y = 3", std::abs(lp.optimum - 3.0) < 1e-12 && lp.certified, lp.optimum);
  const PellPair pair = pell_from_preimage({-3.0, 0.0, 1.0}, 2);
  const double pell = pell_residual(pair, 50);
  check("pell identity", pell < 1e-10, pell);
  const ExtremalResult a1 = extremal_deriv(validate_system({-1.0, 1.0}, Kind::J), 1, 2.0);
  check("A_1(2; [-1,1]) = 1/3", std::abs(a1.value - 1.0 / 3.0) < 1e-9, a1.value);
  std::mt19937 rng(o.seed);
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  const BandSystem e = validate_system({-2.0, -1.0, 0.5, 2.0}, Kind::J);
  const CharacterVector beta{uni(rng)};
  const InversionSolution s = real_inversion(e, beta);
  DifferentialBasis basis(e);
  const double back = circle_distance(character_of_points(basis, s.points)[0], beta[0]);
  check("real inversion round trip", back < 1e-9, back);
  const HalfPeriodScan scan =
      half_period_scan(validate_system({1.0, 2.0, 3.0, 5.0}, Kind::S), cplx(0.7, 0.4));
  bool ones = true;
  for (int v : scan.argmin) ones = ones && v == 1;
  check("half-period argmin is all ones", ones, scan.values.empty() ? 0.0 : scan.values.front());
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ahlfors::cli

int main(int argc, char** argv) {
  using namespace ahlfors::cli;
  Options o;
  CLI::App app{"Extremal derivatives of polynomials on real sets and circular arcs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Output file (standard output when omitted)");
  app.add_option("--diag", o.diag, "Diagnostic file written on numerical failure");

  auto with_instance = [&](CLI::App* c) {
    c->add_option("--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  };
  auto with_oracle = [&](CLI::App* c) {
    c->add_option("--K", o.facets, "Polygon phases at the starting points");
    c->add_option("--grid", o.grid, "Scan points per piece (0: 30 n)");
    c->add_option("--max-rounds", o.max_rounds, "Exchange round limit");
    c->add_option("--tol", o.tol, "Stop when max |P| <= 1 + tol");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    commands.emplace_back(c, fn);
    return c;
  };

  with_instance(add("describe", "Summarize an instance", cmd_describe));
  with_instance(add("comb", "Critical points, base angles and slit heights", cmd_comb));
  CLI::App* green = add("green", "Green function at a point", cmd_green);
  with_instance(green);
  green->add_option("--z", o.z, "Evaluation point")->required();
  green->add_option("--pole", o.pole, "Real pole in a gap (infinity when omitted)");
  with_instance(add("capacity", "Capacity and Robin constant", cmd_capacity));
  CLI::App* hm = add("hm", "Harmonic measures at a point", cmd_hm);
  with_instance(hm);
  hm->add_option("--z", o.z, "Evaluation point")->required();
  CLI::App* inv = add("invert", "Real inversion for a character", cmd_invert);
  with_instance(inv);
  inv->add_option("--beta", o.beta, "Character, comma separated");
  inv->add_option("--n", o.n, "Use the limit character of degree n");
  CLI::App* gaji = add("gaji", "Generalized inversion at a complex point", cmd_gaji);
  with_instance(gaji);
  gaji->add_option("--z0", o.z0, "Point of the upper half-plane")->required();
  gaji->add_option("--beta", o.beta, "Character, comma separated");
  gaji->add_option("--n", o.n, "Use the limit character of degree n");
  CLI::App* bif = add("bifurcation", "Branch scan over beta for genus 1", cmd_bifurcation);
  with_instance(bif);
  bif->add_option("--z0", o.z0, "Point of the upper half-plane")->required();
  bif->add_option("--betas", o.betas, "Number of beta values in [0, 1)");
  bif->add_option("--scan-grid", o.scan_grid, "Balance curve grid");
  CLI::App* pred = add("predict", "Predicted limit of the scaled extremal derivative", cmd_predict);
  with_instance(pred);
  pred->add_option("--z0", o.z0, "Complex point or real gap point")->required();
  pred->add_option("--beta", o.beta, "Character, comma separated");
  pred->add_option("--n", o.n, "Use the limit character of degree n");
  CLI::App* cand = add("candidate", "Candidate extremal polynomials from a preimage", cmd_candidate);
  with_instance(cand);
  cand->add_option("--rho", o.rho, "Family parameter")->required();
  cand->add_option("--n", o.n, "Expected degree");
  cand->add_option("--contact-tol", o.contact_tol, "Contact tolerance relative to sup |P|");
  cand->add_option("--lp-tol", o.lp_tol, "Kolmogorov margin tolerance");
  CLI::App* orc = add("oracle", "Extremal derivative by linear programming", cmd_oracle);
  with_instance(orc);
  with_oracle(orc);
  orc->add_option("--n", o.n, "Degree")->required();
  orc->add_option("--z0", o.z0, "Evaluation point")->required();
  CLI::App* sw = add("sweep", "Oracle values against predictions over n", cmd_sweep);
  with_instance(sw);
  with_oracle(sw);
  sw->add_option("--source", o.source, "g0, complex or real");
  sw->add_option("--z0", o.z0, "Evaluation point");
  sw->add_option("--lambda", o.lambda, "Uniformizing parameter for the g0 source");
  sw->add_option("--n-list", o.n_list, "Degrees, comma separated");
  sw->add_option("--n-min", o.n_min, "First degree");
  sw->add_option("--n-max", o.n_max, "Last degree");
  sw->add_option("--n-step", o.n_step, "Degree step");
  CLI::App* self = add("selftest", "Run the invariant suite", cmd_selftest);
  self->add_option("--seed", o.seed, "Seed for random instances");
  CLI::App* plot = add("plot", "SVG plot of a CSV produced by this tool", cmd_plot);
  plot->add_option("--csv", o.csv, "Input CSV")->required();
  plot->add_option("--kind", o.kind, "sweep, bifurcation or xy");
  plot->add_option("--x", o.x, "Column for xy plots");
  plot->add_option("--y", o.y, "Column for xy plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(o);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ahlfors::Error& e) {
    if (e.kind() == ahlfors::ErrorKind::kValidation || e.kind() == ahlfors::ErrorKind::kFormat) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    std::cerr << e.what() << "\n";
    try {
      write_atomic(o.diag, std::string(e.what()) + "\n");
    } catch (const std::exception&) {
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    try {
      write_atomic(o.diag, std::string(e.what()) + "\n");
    } catch (const std::exception&) {
    }
    return 1;
  }
}
