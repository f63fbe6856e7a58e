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

#ifndef REPAIRMAN_ORACLE_HPP_
#define REPAIRMAN_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "repairman/instance.hpp"
#include "repairman/rational.hpp"
#include "repairman/speedup_core.hpp"
#include "repairman/trimming.hpp"

namespace repairman {

enum class SearchMode { kPruned, kExhaustive };

namespace internal {

// Depth-first search over visit orders with earliest-schedule timing. The
// incumbent is the best (profit, then smallest key) run seen so far.
class OrderSearch {
 public:
  OrderSearch(const Instance& inst, const Rational& speed, SearchMode mode)
      : inst_(inst), speed_(speed), mode_(mode), reqs_(inst.requests()) {
    std::sort(reqs_.begin(), reqs_.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    const Metric& m = inst.metric();
    n_ = reqs_.size();
    travel_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        travel_[a * n_ + b] = m.distance(reqs_[a].node, reqs_[b].node) / speed;
      }
    }
  }

  ServiceRun run() {
    used_.assign(n_, 0);
    best_profit_ = Rational(0);
    best_times_.clear();
    best_seq_.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      seq_ = {i};
      times_ = {reqs_[i].window.release};
      used_[i] = 1;
      Visit(reqs_[i].profit);
      used_[i] = 0;
    }
    std::vector<PlannedService> plan;
    for (std::size_t p = 0; p < best_seq_.size(); ++p) {
      const auto& r = reqs_[best_seq_[p]];
      plan.push_back(PlannedService{r.id, r.node, best_times_[p]});
    }
    return build_run(inst_.metric(), speed_, plan);
  }

  std::uint64_t nodes_expanded() const { return expanded_; }

 private:
  // Order on candidate runs: first service time, then node sequence, then
  // request id sequence. With full = false only the part every extension
  // of the current prefix shares is compared (0 = undecided).
  int ComparePrefix(bool full) const {
    if (best_seq_.empty()) return -1;
    if (times_[0] != best_times_[0]) return times_[0] < best_times_[0] ? -1 : 1;
    std::size_t common = std::min(seq_.size(), best_seq_.size());
    for (std::size_t p = 0; p < common; ++p) {
      NodeId a = reqs_[seq_[p]].node, b = reqs_[best_seq_[p]].node;
      if (a != b) return a < b ? -1 : 1;
    }
    if (!full) return 0;
    if (seq_.size() != best_seq_.size()) {
      return seq_.size() < best_seq_.size() ? -1 : 1;
    }
    for (std::size_t p = 0; p < common; ++p) {
      RequestId a = reqs_[seq_[p]].id, b = reqs_[best_seq_[p]].id;
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void Visit(const Rational& profit) {
    ++expanded_;
    if (profit > best_profit_ || (profit == best_profit_ && ComparePrefix(true) < 0)) {
      best_profit_ = profit;
      best_seq_ = seq_;
      best_times_ = times_;
    }
    const std::size_t last = seq_.back();
    const Rational now = times_.back();
    if (mode_ == SearchMode::kPruned) {
      Rational bound = profit;
      for (std::size_t j = 0; j < n_; ++j) {
        if (used_[j]) continue;
        if (now + travel_[last * n_ + j] < reqs_[j].window.end()) bound += reqs_[j].profit;
      }
      if (bound < best_profit_) return;
      if (bound == best_profit_ && ComparePrefix(false) > 0) return;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (used_[j]) continue;
      Rational t = max(reqs_[j].window.release, now + travel_[last * n_ + j]);
      if (t >= reqs_[j].window.end()) continue;
      used_[j] = 1;
      seq_.push_back(j);
      times_.push_back(t);
      Visit(profit + reqs_[j].profit);
      times_.pop_back();
      seq_.pop_back();
      used_[j] = 0;
    }
  }

  const Instance& inst_;
  Rational speed_;
  SearchMode mode_;
  std::vector<ServiceRequest> reqs_;
  std::size_t n_ = 0;
  std::vector<Rational> travel_;
  std::vector<char> used_;
  std::vector<std::size_t> seq_;
  std::vector<Rational> times_;
  Rational best_profit_;
  std::vector<std::size_t> best_seq_;
  std::vector<Rational> best_times_;
  std::uint64_t expanded_ = 0;
};

}  // namespace internal

inline ServiceRun optimal_run_at_speed(const Instance& inst, const Rational& speed,
                                       int cap = kDefaultCap,
                                       SearchMode mode = SearchMode::kPruned) {
  if (speed <= 0) throw std::invalid_argument("speed must be positive");
  if (inst.requests().size() > static_cast<std::size_t>(cap)) {
    throw CapExceeded(std::to_string(inst.requests().size()) +
                      " requests (cap " + std::to_string(cap) + ")");
  }
  return internal::OrderSearch(inst, speed, mode).run();
}

inline ServiceRun optimal_run_at_speed(const TrimmedInstance& tr, const Rational& speed,
                                       int cap = kDefaultCap,
                                       SearchMode mode = SearchMode::kPruned) {
  return optimal_run_at_speed(tr.as_instance(), speed, cap, mode);
}

inline ServiceRun optimal_unit_run(const Instance& inst, int cap = kDefaultCap,
                                   SearchMode mode = SearchMode::kPruned) {
  return optimal_run_at_speed(inst, Rational(1), cap, mode);
}

}  // namespace repairman

#endif  // REPAIRMAN_ORACLE_HPP_
