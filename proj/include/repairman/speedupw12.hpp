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

#ifndef REPAIRMAN_SPEEDUPW12_HPP_
#define REPAIRMAN_SPEEDUPW12_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "repairman/bounds.hpp"
#include "repairman/instance.hpp"
#include "repairman/parallel.hpp"
#include "repairman/rational.hpp"
#include "repairman/speedup_core.hpp"
#include "repairman/trimming.hpp"

namespace repairman {

// Guaranteed share of the unit-speed optimum at this speed.
inline Rational guarantee_fraction(const Rational& speed) {
  return Rational(1) / bounds::table1_ratio(speed);
}

struct ConfigOutcome {
  TrimConfig config;
  Rational trimmed_profit;
  Rational original_profit;
  ServiceRun run;
};

struct SpeedupReport {
  Rational speed;
  std::vector<ConfigOutcome> configs;  // enumerate_configs() order
  std::size_t chosen = 0;
  Rational trimmed_profit;
  Rational original_profit;
};

struct SpeedupResult {
  ServiceRun run;
  SpeedupReport report;
};

// Solves every trimming configuration and keeps the run with the highest
// trimmed profit (earliest configuration on ties). The run is re-scored on
// the original windows.
inline SpeedupResult speedupw12(const Instance& inst, const Rational& speed,
                                int cap = kDefaultCap, int jobs = 1) {
  if (speed < 1) throw std::invalid_argument("speed must be >= 1");
  auto problems = validate_instance(inst);
  if (!problems.empty()) throw std::invalid_argument("invalid instance: " + problems.front());

  const std::vector<TrimConfig> configs = enumerate_configs();
  SpeedupResult res;
  res.report.speed = speed;
  res.report.configs.resize(configs.size());
  parallel_for(configs.size(), jobs, [&](std::size_t c) {
    TrimmedInstance tr = trim(inst, configs[c]);
    ConfigOutcome& out = res.report.configs[c];
    out.config = configs[c];
    out.run = solve_trimmed(tr, speed, cap);
    RunVerdict trimmed = validate_run(tr.as_instance(), out.run);
    if (!trimmed.ok()) throw std::logic_error("core run infeasible: " + trimmed.violations.front());
    out.trimmed_profit = trimmed.profit;
    RunVerdict original = validate_run(inst, out.run);
    if (!original.ok()) throw std::logic_error("run infeasible on original windows");
    out.original_profit = original.profit;
  });

  for (std::size_t c = 1; c < configs.size(); ++c) {
    if (res.report.configs[c].trimmed_profit >
        res.report.configs[res.report.chosen].trimmed_profit) {
      res.report.chosen = c;
    }
  }
  const ConfigOutcome& best = res.report.configs[res.report.chosen];
  res.run = best.run;
  res.report.trimmed_profit = best.trimmed_profit;
  res.report.original_profit = best.original_profit;
  return res;
}

}  // namespace repairman

#endif  // REPAIRMAN_SPEEDUPW12_HPP_
