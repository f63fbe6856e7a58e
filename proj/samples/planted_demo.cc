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

// Generates a planted instance, solves it at a few speeds and compares the
// profit with the guaranteed share of the planted optimum.

#include <iostream>

#include "repairman/repairman.hpp"

int main() {
  using repairman::Rational;
  const int n = 6;
  repairman::Instance inst =
      repairman::generate_planted_instance(n, repairman::MetricKind::kTree, Rational(1), 7);
  for (const char* text : {"1", "3/2", "2", "3", "4", "6"}) {
    Rational s = Rational::parse(text);
    auto res = repairman::speedupw12(inst, s);
    Rational bound = Rational(n) * repairman::guarantee_fraction(s);
    std::cout << "s=" << s << " profit=" << res.report.trimmed_profit
              << " original=" << res.report.original_profit << " guarantee=" << bound
              << " config=" << res.report.chosen << "\n";
  }
  return 0;
}
