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

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equalities or inequalities (tolerance 0).

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "repairman/repairman.hpp"
#include "test_util.hpp"

namespace {

using repairman::Rational;
using repairman::testing::profit_of;
using repairman::testing::R;
namespace cov = repairman::coverage;
namespace bnd = repairman::bounds;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
}

void tables() {
  std::size_t checks = 0, bad = 0;
  std::string where;
  for (const auto& id : cov::table_ids()) {
    cov::TableReport rep = cov::verify_table(id, 12, 2);
    checks += rep.rows.size();
    bad += rep.mismatches();
    if (rep.mismatches() && where.empty()) where = id;
  }
  std::ostringstream d;
  d << cov::table_ids().size() << " tables, " << checks << " values, " << bad << " mismatches";
  if (!where.empty()) d << ", first in " << where;
  report("1", bad == 0 && checks > 0, "coverage tables reproduced for r <= 12", d.str());
}

void lemmas() {
  std::size_t rows = 0, viol = 0, loose = 0;
  for (const auto& id : cov::lemma_ids()) {
    cov::LemmaReport rep = cov::verify_lemma(id, 12, 2);
    rows += rep.rows.size();
    viol += rep.violations();
    loose += rep.non_tight();
  }
  std::ostringstream d;
  d << cov::lemma_ids().size() << " lemmas, " << rows << " (r,k) cases, " << viol
    << " violations, " << loose << " without a tight i";
  report("2", viol == 0 && loose == 0 && rows > 0, "minimum-yield lemmas certified for r <= 12",
         d.str());
}

void bounds() {
  std::ostringstream d;
  bool cont = true;
  for (const auto& b : bnd::f_breakpoints()) {
    if (b.agree()) continue;
    cont = false;
    d << "f" << b.ell << "(" << b.s << "): " << b.left_text << " = " << b.left << " vs "
      << b.right_text << " = " << b.right << "; ";
  }
  bool spot = bnd::fbound(2).segments[1].eval(R(5, 2)) == R(1, 2) &&
              bnd::fbound(2).segments[2].eval(R(5, 2)) == R(1, 2) &&
              bnd::fbound(3).segments[2].eval(R(17, 7)) == R(39, 98) &&
              bnd::fbound(3).segments[3].eval(R(17, 7)) == R(39, 98);
  d << "f2(5/2) and f3(17/7) agree: " << (spot ? "yes" : "no");
  report("3a", cont && spot, "f branches agree at every breakpoint", d.str());

  bnd::RatioReport rep = bnd::verify_theorem91(R(1, 20), 2);
  std::string bad_lp, bad_exact;
  for (const auto& row : rep.rows) {
    if (!row.lp_ok() && bad_lp.empty()) bad_lp = row.s.str();
    if ((!row.interior_exact || !row.weights_feasible) && bad_exact.empty()) bad_exact = row.s.str();
  }
  report("3b", bad_lp.empty() && rep.rows.size() == 101,
         "lp_rho(s) >= 1/table1_ratio(s) on the 1/20 grid",
         std::to_string(rep.rows.size()) + " points" + (bad_lp.empty() ? "" : ", fails at " + bad_lp));
  report("3c", bad_exact.empty(), "range weights give min b equal to the closed form inside each range",
         bad_exact.empty() ? "" : "fails at " + bad_exact);
}

void spot_values() {
  const auto& rs = bnd::table1_ranges();
  bool ok = bnd::table1_ratio(R(1)) == R(219, 52) && bnd::table1_ratio(R(6)) == 1 &&
            bnd::table1_ratio(R(3)) == R(148, 81) && rs[4].ratio(R(3)) == R(148, 81) &&
            rs[5].ratio(R(3)) == R(148, 81) && bnd::table1_ratio(R(4)) == R(3, 2) &&
            rs[5].ratio(R(4)) == R(3, 2) && rs[6].ratio(R(4)) == R(3, 2);
  report("4", ok, "Table 1 spot values at s = 1, 3, 4, 6", "");
}

void oracle_equivalence() {
  const auto cfgs = repairman::enumerate_configs();
  const Rational speeds[] = {R(1), R(3, 2), R(2), R(3)};
  int agree = 0;
  std::string first_bad;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 6;
    auto kind = t % 2 ? repairman::MetricKind::kTree : repairman::MetricKind::kGeneral;
    repairman::Instance inst = repairman::testing::random_instance(n, kind, 1000 + t);
    repairman::TrimmedInstance tr = repairman::trim(inst, cfgs[t % cfgs.size()]);
    const Rational s = speeds[t % 4];
    repairman::Instance ti = tr.as_instance();
    Rational core = profit_of(ti, repairman::solve_trimmed(tr, s));
    Rational oracle = profit_of(ti, repairman::optimal_run_at_speed(tr, s));
    if (core == oracle) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = "case " + std::to_string(t) + ": core " + core.str() + " oracle " + oracle.str();
    }
  }
  report("5", agree == 50, "solve_trimmed equals the oracle on 50 random trimmed instances",
         std::to_string(agree) + "/50 agree" + (first_bad.empty() ? "" : "; " + first_bad));
}

void end_to_end() {
  const Rational ladder[] = {R(1), R(3, 2), R(2), R(5, 2), R(3), R(4), R(5), R(6)};
  bool guarantee = true, full_at_six = true, mono_alg = true, mono_oracle = true;
  std::string first_bad;
  int runs = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + i % 5;
    repairman::Instance inst =
        repairman::generate_planted_instance(n, repairman::MetricKind::kTree, R(1), 500 + i);
    Rational prev_alg(0), prev_orc(0);
    for (const Rational& s : ladder) {
      repairman::SpeedupResult res = repairman::speedupw12(inst, s, repairman::kDefaultCap, 2);
      ++runs;
      const Rational p = res.report.trimmed_profit;
      if (p < Rational(n) * repairman::guarantee_fraction(s) ||
          profit_of(inst, res.run) != res.report.original_profit) {
        guarantee = false;
        if (first_bad.empty()) first_bad = "instance " + std::to_string(i) + " s=" + s.str();
      }
      if (p < prev_alg) mono_alg = false;
      prev_alg = p;
      Rational o = profit_of(inst, repairman::optimal_run_at_speed(inst, s));
      if (o < prev_orc) mono_oracle = false;
      prev_orc = o;
    }
    if (prev_alg != n) full_at_six = false;
  }
  report("6", guarantee && full_at_six,
         "speedupw12 profit >= n * guarantee_fraction(s) on 20 planted trees, all served at s = 6",
         std::to_string(runs) + " solves" + (first_bad.empty() ? "" : "; first failure " + first_bad) +
             (full_at_six ? "" : "; some instance not fully served at s = 6"));
  report("7", mono_alg && mono_oracle, "profit non-decreasing along the speed ladder",
         std::string("speedupw12 ") + (mono_alg ? "ok" : "violated") + ", oracle " +
             (mono_oracle ? "ok" : "violated"));
}

void average_coverage_cases() {
  repairman::Rng rng(77);
  int ok = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    std::vector<Rational> w(n - 1, R(1));
    std::vector<repairman::TimeWindow> windows;
    for (int i = 0; i < n; ++i) windows.push_back({R(1, 45) + R(2 * i), R(3, 2)});
    repairman::TrimmedInstance tr = repairman::trim(repairman::testing::path_instance(w, windows),
                                                    repairman::enumerate_configs()[0]);
    std::vector<repairman::RequestId> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    const int parts = static_cast<int>(rng.uniform(1, n));
    std::vector<std::vector<repairman::RequestId>> subsets(parts);
    for (int i = 0; i < n; ++i) {
      subsets[i < parts ? i : static_cast<int>(rng.uniform(0, parts - 1))].push_back(ids[i]);
    }
    std::vector<repairman::ServiceRun> runs;
    for (int j = static_cast<int>(rng.uniform(1, 6)); j > 0; --j) {
      repairman::ServiceRun run;
      for (int id = 0; id < n; ++id) {
        if (!rng.coin()) continue;
        const auto* e = tr.find(id);
        run.events.push_back({id, e->window.release, e->window.release});
        run.serviced.push_back(id);
      }
      runs.push_back(run);
    }
    cov::AverageCoverage ac = cov::average_coverage(subsets, runs, tr);
    // Recount the witness independently.
    std::size_t hit = cov::covered_requests(runs[ac.witness], tr).size();
    if (Rational(static_cast<std::int64_t>(hit), n) >= ac.mu && ac.witness_fraction >= ac.mu) ++ok;
  }
  report("8", ok == 100, "average-coverage witness reaches mu", std::to_string(ok) + "/100 cases");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  tables();
  lemmas();
  bounds();
  spot_values();
  oracle_equivalence();
  end_to_end();
  average_coverage_cases();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << " in "
            << static_cast<int>(secs + 0.5) << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
