// Copyright 2026 The repairman Authors
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

#ifndef REPAIRMAN_TOOLS_CLI_HPP_
#define REPAIRMAN_TOOLS_CLI_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "repairman/repairman.hpp"

namespace repairman::cli {

// Rows of strings; rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string csv() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }

  Json json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json o = Json::object();
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    return arr;
  }
};

struct Common {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";
  int jobs = 1;
};

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("-o", c.output, "output file (default stdout)");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

inline void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

inline void emit(const Common& c, const Table& t, std::ostream& out) {
  emit(c, c.format == "json" ? t.json().dump(2) + "\n" : t.csv(), out);
}

inline Instance read_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  Json j = Json::parse(f);
  return instance_from_json(j);
}

inline std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

inline std::string yes_no(bool b) { return b ? "PASS" : "FAIL"; }

// Reference optimum for the guarantee column: the certificate when it is a
// valid run serving everything, else the exact unit-speed optimum.
inline Rational unit_reference(const Instance& inst, int cap) {
  if (inst.certificate()) {
    RunVerdict v = validate_run(inst, *inst.certificate());
    if (v.ok() && v.profit == inst.total_profit()) return v.profit;
  }
  return validate_run(inst, optimal_unit_run(inst, cap)).profit;
}

inline int run_gen(const Common& c, int n, const std::string& metric, const std::string& spacing,
                   std::ostream& out) {
  MetricKind kind = metric == "tree" ? MetricKind::kTree : MetricKind::kGeneral;
  Instance inst = generate_planted_instance(n, kind, Rational::parse(spacing), c.seed);
  if (c.format == "json") {
    emit(c, to_json(inst).dump(2) + "\n", out);
    return 0;
  }
  Table t{{"id", "node", "release", "length", "profit"}, {}};
  for (const auto& r : inst.requests()) {
    t.add({std::to_string(r.id), std::to_string(r.node), r.window.release.str(),
           r.window.length.str(), r.profit.str()});
  }
  emit(c, t, out);
  return 0;
}

inline int run_solve(const Common& c, const std::string& input, const std::string& speed_text,
                     int cap, std::ostream& out) {
  Instance inst = read_instance(input);
  const Rational speed = Rational::parse(speed_text);
  SpeedupResult res = speedupw12(inst, speed, cap, c.jobs);
  std::string guarantee;
  bool pass = true;
  if (speed <= 6) {
    Rational g = unit_reference(inst, cap) * guarantee_fraction(speed);
    guarantee = g.str();
    pass = res.report.trimmed_profit >= g;
  }
  Table t{{"config", "alpha", "offset", "j", "k", "trimmed_profit", "original_profit",
           "guarantee", "pass"},
          {}};
  for (std::size_t i = 0; i < res.report.configs.size(); ++i) {
    const auto& o = res.report.configs[i];
    t.add({std::to_string(i), o.config.alpha.str(), o.config.offset.str(),
           std::to_string(o.config.j), std::to_string(o.config.k), o.trimmed_profit.str(),
           o.original_profit.str(), "", ""});
  }
  t.add({"best:" + std::to_string(res.report.chosen), "", "", "", "",
         res.report.trimmed_profit.str(), res.report.original_profit.str(), guarantee,
         guarantee.empty() ? "" : yes_no(pass)});
  if (c.format == "json") {
    Json j = {{"run", to_json(res.run)}, {"report", t.json()}};
    emit(c, j.dump(2) + "\n", out);
  } else {
    emit(c, t, out);
  }
  return pass ? 0 : 1;
}

inline int run_oracle(const Common& c, const std::string& input, const std::string& speed_text,
                      int cap, std::ostream& out) {
  Instance inst = read_instance(input);
  ServiceRun run = optimal_run_at_speed(inst, Rational::parse(speed_text), cap);
  RunVerdict v = validate_run(inst, run);
  if (c.format == "json") {
    emit(c, Json{{"profit", v.profit.str()}, {"run", to_json(run)}}.dump(2) + "\n", out);
  } else {
    Table t{{"node", "arrival", "departure"}, {}};
    for (const auto& e : run.events) t.add({std::to_string(e.node), e.arrival.str(), e.departure.str()});
    emit(c, t, out);
  }
  return v.ok() ? 0 : 1;
}

inline int run_verify_coverage(const Common& c, std::int64_t rmax, const std::string& which,
                               std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids = which.empty() ? coverage::table_ids() : split_ids(which);
  Table t{{"table", "cases", "checks", "mismatches"}, {}};
  std::size_t bad = 0;
  for (const auto& id : ids) {
    coverage::TableReport rep = coverage::verify_table(id, rmax, c.jobs);
    bad += rep.mismatches();
    for (const auto& row : rep.rows) {
      if (!row.ok()) {
        err << "mismatch " << row.id << " " << row.pair << " r=" << row.r << " k=" << row.k
            << " i=" << row.i << " expected " << row.expected << " got " << row.got << "\n";
      }
    }
    t.add({id, std::to_string(rep.cases), std::to_string(rep.rows.size()),
           std::to_string(rep.mismatches())});
  }
  emit(c, t, out);
  return bad == 0 ? 0 : 1;
}

inline int run_verify_lemmas(const Common& c, std::int64_t rmax, const std::string& which,
                             std::ostream& out) {
  std::vector<std::string> ids = which.empty() ? coverage::lemma_ids() : split_ids(which);
  Table t{{"lemma", "r", "k", "min_yield", "bound", "argmin", "tight", "ok"}, {}};
  bool ok = true;
  for (const auto& id : ids) {
    coverage::LemmaSpec spec =
        id == "LE.1-r-k+1" ? coverage::lemma_e1_literal_shift() : coverage::lemma_spec(id);
    coverage::LemmaReport rep = coverage::verify_lemma(spec, rmax, c.jobs);
    for (const auto& row : rep.rows) {
      std::string arg;
      for (std::size_t a = 0; a < row.argmin.size(); ++a) {
        arg += (a ? ";" : "") + std::to_string(row.argmin[a]);
      }
      t.add({row.id, std::to_string(row.r), std::to_string(row.k), row.min_yield.str(),
             row.bound.str(), arg, row.tight() ? "yes" : "no", yes_no(!row.violated())});
      ok = ok && !row.violated() && row.tight();
    }
  }
  emit(c, t, out);
  return ok ? 0 : 1;
}

inline Table bounds_checks(const Rational& grid, int jobs) {
  Table t{{"property", "subject", "detail", "result"}, {}};
  for (const auto& b : bounds::f_breakpoints()) {
    t.add({"f_continuity", "f" + std::to_string(b.ell) + "@" + b.s.str(),
           b.left_text + "=" + b.left.str() + " " + b.right_text + "=" + b.right.str(),
           yes_no(b.agree())});
  }
  for (int ell = 1; ell <= 3; ++ell) {
    const bounds::FBound& fb = bounds::fbound(ell);
    bool mono = true;
    std::string where;
    Rational prev = bounds::f(ell, fb.lo());
    for (Rational s = fb.lo() + grid; s <= fb.hi(); s += grid) {
      Rational v = bounds::f(ell, s);
      if (v < prev && mono) {
        mono = false;
        where = "decreases at " + s.str();
      }
      prev = v;
    }
    t.add({"f_monotone", "f" + std::to_string(ell), where, yes_no(mono)});
  }
  bounds::RatioReport rep = bounds::verify_theorem91(grid, jobs);
  auto first_fail = [&](auto pred) {
    for (const auto& r : rep.rows) {
      if (!pred(r)) return r.s.str();
    }
    return std::string();
  };
  struct Prop {
    const char* name;
    bool (*pred)(const bounds::RatioRow&);
  };
  const Prop props[] = {
      {"weights_feasible", [](const bounds::RatioRow& r) { return r.weights_feasible; }},
      {"weights_min_b_exact", [](const bounds::RatioRow& r) { return r.interior_exact; }},
      {"weights_min_b_ge_table1", [](const bounds::RatioRow& r) { return r.weights_ok(); }},
      {"lp_ge_table1", [](const bounds::RatioRow& r) { return r.lp_ok(); }},
      {"lp_ge_weights", [](const bounds::RatioRow& r) { return r.lp_dominates(); }},
  };
  for (const auto& p : props) {
    std::string bad = first_fail(p.pred);
    t.add({p.name, "grid " + grid.str(), bad.empty() ? "" : "fails at s=" + bad,
           yes_no(bad.empty())});
  }
  return t;
}

inline int run_verify_bounds(const Common& c, const std::string& grid_text, std::ostream& out) {
  Table t = bounds_checks(Rational::parse(grid_text), c.jobs);
  emit(c, t, out);
  for (const auto& r : t.rows) {
    if (r.back() != "PASS") return 1;
  }
  return 0;
}

inline int run_table1(const Common& c, const std::string& grid_text, std::ostream& out) {
  bounds::RatioReport rep = bounds::verify_theorem91(Rational::parse(grid_text), c.jobs);
  Table t{{"s", "table1_ratio", "lp_rho", "weights_min_b", "slack"}, {}};
  for (const auto& r : rep.rows) {
    t.add({r.s.str(), r.ratio.str(), r.lp.str(), r.weights_min_b.str(), r.slack().str()});
  }
  emit(c, t, out);
  return 0;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Speedup approximation for repairman routing with time windows"};
  app.require_subcommand(1);

  Common gen_c, solve_c, oracle_c, cov_c, lem_c, bnd_c, t1_c;
  int n = 6, cap = kDefaultCap, oracle_cap = kDefaultCap;
  std::string metric = "tree", spacing = "1", input, oracle_input;
  std::string speed = "1", oracle_speed = "1";
  std::int64_t cov_rmax = 12, lem_rmax = 12;
  std::string cov_which, lem_which, bnd_grid = "1/20", t1_grid = "1/20";

  auto* gen = app.add_subcommand("gen", "generate a planted instance");
  add_common(gen, gen_c);
  gen->add_option("--n", n, "number of requests")->check(CLI::PositiveNumber);
  gen->add_option("--metric", metric, "tree or general")->check(CLI::IsMember({"tree", "general"}));
  gen->add_option("--spacing", spacing, "edge weight scale q/r");

  auto* solve = app.add_subcommand("solve", "run the trimmed speedup algorithm");
  add_common(solve, solve_c);
  solve->add_option("-i", input, "instance JSON")->required();
  solve->add_option("--speed", speed, "speed q/r");
  solve->add_option("--cap", cap, "max requests per period");

  auto* oracle = app.add_subcommand("oracle", "exact optimum by search");
  add_common(oracle, oracle_c);
  oracle->add_option("-i", oracle_input, "instance JSON")->required();
  oracle->add_option("--speed", oracle_speed, "speed q/r");
  oracle->add_option("--cap", oracle_cap, "max requests");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* cov = verify->add_subcommand("coverage", "rebuild the coverage tables");
  add_common(cov, cov_c);
  cov->add_option("--rmax", cov_rmax, "largest r")->check(CLI::PositiveNumber);
  cov->add_option("--which", cov_which, "table ids, comma separated");
  auto* lem = verify->add_subcommand("lemmas", "minimum-yield lemmas");
  add_common(lem, lem_c);
  lem->add_option("--rmax", lem_rmax, "largest r")->check(CLI::PositiveNumber);
  lem->add_option("--which", lem_which, "lemma ids, comma separated");
  auto* bnd = verify->add_subcommand("bounds", "f bounds, weights and LP");
  add_common(bnd, bnd_c);
  bnd->add_option("--grid", bnd_grid, "grid step p/q");

  auto* t1 = app.add_subcommand("table1", "ratio curve over [1,6]");
  add_common(t1, t1_c);
  t1->add_option("--grid", t1_grid, "grid step p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return run_gen(gen_c, n, metric, spacing, out);
    if (*solve) return run_solve(solve_c, input, speed, cap, out);
    if (*oracle) return run_oracle(oracle_c, oracle_input, oracle_speed, oracle_cap, out);
    if (*cov) return run_verify_coverage(cov_c, cov_rmax, cov_which, out, err);
    if (*lem) return run_verify_lemmas(lem_c, lem_rmax, lem_which, out);
    if (*bnd) return run_verify_bounds(bnd_c, bnd_grid, out);
    if (*t1) return run_table1(t1_c, t1_grid, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace repairman::cli

#endif  // REPAIRMAN_TOOLS_CLI_HPP_
