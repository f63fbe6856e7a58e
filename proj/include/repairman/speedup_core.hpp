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

#ifndef REPAIRMAN_SPEEDUP_CORE_HPP_
#define REPAIRMAN_SPEEDUP_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "repairman/instance.hpp"
#include "repairman/rational.hpp"
#include "repairman/trimming.hpp"

namespace repairman {

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what)
      : std::runtime_error("instance too large for exact mode: " + what) {}
};

inline constexpr int kDefaultCap = 10;
// The subset DP is exponential in memory; no cap may exceed this.
inline constexpr int kHardCap = 14;

// A walk inside one period that serves `serviced` in order, starting with
// its first service at `earliest_start` at the soonest and spending
// `travel` time between the first and the last service.
struct PeriodPathOption {
  std::int64_t period = 0;
  NodeId start_node = 0;
  NodeId end_node = 0;
  Rational earliest_start;
  Rational travel;
  Rational profit;
  std::vector<RequestId> serviced;
};

namespace internal {

struct PathKey {
  std::size_t first = 0;
  std::size_t last = 0;
  std::uint32_t mask = 0;
};

}  // namespace internal

// Pareto-optimal (profit up, travel down) options for every pair of first
// and last served node. Exact: a subset DP over visit orders.
inline std::vector<PeriodPathOption> best_period_paths(
    const TrimmedInstance& tr, std::int64_t period, const Rational& speed,
    int cap = kDefaultCap) {
  if (speed <= 0) throw std::invalid_argument("speed must be positive");
  std::vector<ServiceRequest> reqs = tr.requests_in(period);
  std::sort(reqs.begin(), reqs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  const std::size_t m = reqs.size();
  if (m > static_cast<std::size_t>(std::min(cap, kHardCap))) {
    throw CapExceeded(std::to_string(m) + " requests in period " +
                      std::to_string(period) + " (cap " + std::to_string(cap) + ")");
  }
  const Rational start = tr.scheme().start(period);
  std::vector<PeriodPathOption> out;
  if (m == 0) {
    for (NodeId u : tr.base().nodes()) {
      out.push_back(PeriodPathOption{period, u, u, start, Rational(0), Rational(0), {}});
    }
    return out;
  }

  const Metric& metric = tr.base().metric();
  // A path of length L fits iff L / speed < alpha.
  const Rational budget = tr.scheme().alpha * speed;
  std::vector<std::size_t> node_idx(m);
  for (std::size_t a = 0; a < m; ++a) node_idx[a] = metric.index_of(reqs[a].node);
  auto d = [&](std::size_t a, std::size_t b) -> const Rational& {
    return metric.distance_at(node_idx[a], node_idx[b]);
  };

  const std::uint32_t full = 1u << m;
  const std::size_t stride = static_cast<std::size_t>(full) * m;
  std::vector<std::optional<Rational>> len(m * stride);
  std::vector<std::int8_t> pred(m * stride, -1);
  auto at = [&](std::size_t f, std::uint32_t mask, std::size_t l) {
    return f * stride + static_cast<std::size_t>(mask) * m + l;
  };
  for (std::size_t f = 0; f < m; ++f) len[at(f, 1u << f, f)] = Rational(0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (std::size_t f = 0; f < m; ++f) {
      if (!(mask >> f & 1u)) continue;
      for (std::size_t l = 0; l < m; ++l) {
        const auto& cur = len[at(f, mask, l)];
        if (!cur) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (mask >> j & 1u) continue;
          Rational next = *cur + d(l, j);
          if (next >= budget) continue;
          auto& slot = len[at(f, mask | 1u << j, j)];
          if (!slot || next < *slot) {
            slot = next;
            pred[at(f, mask | 1u << j, j)] = static_cast<std::int8_t>(l);
          }
        }
      }
    }
  }

  std::vector<Rational> mask_profit(full, Rational(0));
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctz(mask));
    mask_profit[mask] = mask_profit[mask & (mask - 1)] + reqs[low].profit;
  }

  // Best (shortest) path per (start node, end node, profit).
  std::map<std::tuple<NodeId, NodeId, Rational>, std::pair<Rational, internal::PathKey>> best;
  for (std::size_t f = 0; f < m; ++f) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (!(mask >> f & 1u)) continue;
      for (std::size_t l = 0; l < m; ++l) {
        const auto& cur = len[at(f, mask, l)];
        if (!cur) continue;
        auto key = std::make_tuple(reqs[f].node, reqs[l].node, mask_profit[mask]);
        auto it = best.find(key);
        if (it == best.end() || *cur < it->second.first) {
          best[key] = {*cur, internal::PathKey{f, l, mask}};
        }
      }
    }
  }

  auto order_of = [&](const internal::PathKey& k) {
    std::vector<RequestId> seq;
    std::uint32_t mask = k.mask;
    std::size_t l = k.last;
    while (true) {
      seq.push_back(reqs[l].id);
      std::int8_t p = pred[at(k.first, mask, l)];
      if (p < 0) break;
      mask &= ~(1u << l);
      l = static_cast<std::size_t>(p);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };

  // Map iteration is (start, end, profit ascending); walk each group from
  // the highest profit down and keep strictly shorter paths only.
  for (auto it = best.begin(); it != best.end();) {
    auto group_end = it;
    while (group_end != best.end() &&
           std::get<0>(group_end->first) == std::get<0>(it->first) &&
           std::get<1>(group_end->first) == std::get<1>(it->first)) {
      ++group_end;
    }
    std::optional<Rational> shortest;
    for (auto g = group_end; g != it;) {
      --g;
      const Rational& L = g->second.first;
      if (shortest && L >= *shortest) continue;
      shortest = L;
      out.push_back(PeriodPathOption{period, std::get<0>(g->first),
                                     std::get<1>(g->first), start,
                                     L / speed, std::get<2>(g->first),
                                     order_of(g->second.second)});
    }
    it = group_end;
  }
  return out;
}

namespace internal {

struct StitchState {
  bool root = false;
  NodeId end = 0;
  Rational time;        // time of the last service
  Rational profit;
  Rational first_time;  // time of the first service
  int parent = -1;
  std::size_t period_pos = 0;
  std::size_t option = 0;
  Rational entry;       // first service time inside this state's period
};

}  // namespace internal

// Maximum-profit run at `speed` over the trimmed windows. Periods are
// processed in time order; per end node only Pareto states (earlier last
// service, higher profit) survive.
inline ServiceRun solve_trimmed(const TrimmedInstance& tr, const Rational& speed,
                                int cap = kDefaultCap) {
  if (speed <= 0) throw std::invalid_argument("speed must be positive");
  const Metric& metric = tr.base().metric();
  const std::vector<std::int64_t> periods = tr.periods();
  std::vector<std::vector<PeriodPathOption>> options(periods.size());
  for (std::size_t p = 0; p < periods.size(); ++p) {
    options[p] = best_period_paths(tr, periods[p], speed, cap);
    std::erase_if(options[p], [](const auto& o) { return o.serviced.empty(); });
  }

  using internal::StitchState;
  std::vector<StitchState> arena;
  StitchState root;
  root.root = true;
  arena.push_back(root);

  auto node_seq = [&](int s) {
    std::vector<NodeId> seq;
    for (; s > 0; s = arena[s].parent) {
      const auto& o = options[arena[s].period_pos][arena[s].option];
      for (auto it = o.serviced.rbegin(); it != o.serviced.rend(); ++it) {
        seq.push_back(tr.base().find(*it)->node);
      }
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };
  // Strict "a is a better tie-break than b" on (first time, node sequence).
  auto key_less = [&](int a, int b) {
    if (arena[a].first_time != arena[b].first_time) {
      return arena[a].first_time < arena[b].first_time;
    }
    return node_seq(a) < node_seq(b);
  };

  std::vector<int> frontier{0};
  for (std::size_t p = 0; p < periods.size(); ++p) {
    const TimeWindow win = tr.scheme().period(periods[p]);
    std::vector<int> grown = frontier;
    for (int s : frontier) {
      for (std::size_t o = 0; o < options[p].size(); ++o) {
        const PeriodPathOption& opt = options[p][o];
        Rational entry = win.release;
        if (!arena[s].root) {
          entry = max(entry, arena[s].time + metric.distance(arena[s].end, opt.start_node) / speed);
        }
        Rational finish = entry + opt.travel;
        if (finish >= win.end()) continue;
        StitchState next;
        next.end = opt.end_node;
        next.time = finish;
        next.profit = arena[s].profit + opt.profit;
        next.first_time = arena[s].root ? entry : arena[s].first_time;
        next.parent = s;
        next.period_pos = p;
        next.option = o;
        next.entry = entry;
        arena.push_back(std::move(next));
        grown.push_back(static_cast<int>(arena.size() - 1));
      }
    }
    // Pareto filter per end node; the root always stays.
    std::stable_sort(grown.begin(), grown.end(), [&](int a, int b) {
      const auto& x = arena[a];
      const auto& y = arena[b];
      if (x.root != y.root) return x.root;
      if (x.end != y.end) return x.end < y.end;
      if (x.time != y.time) return x.time < y.time;
      if (x.profit != y.profit) return x.profit > y.profit;
      return key_less(a, b);
    });
    frontier.clear();
    std::optional<Rational> best_profit;
    for (std::size_t i = 0; i < grown.size(); ++i) {
      const auto& x = arena[grown[i]];
      if (x.root) {
        frontier.push_back(grown[i]);
        continue;
      }
      if (i == 0 || arena[grown[i - 1]].root || arena[grown[i - 1]].end != x.end) {
        best_profit.reset();
      }
      if (best_profit && x.profit <= *best_profit) continue;
      best_profit = x.profit;
      frontier.push_back(grown[i]);
    }
  }

  int winner = 0;
  for (int s : frontier) {
    if (arena[s].root) continue;
    if (arena[winner].root || arena[s].profit > arena[winner].profit ||
        (arena[s].profit == arena[winner].profit && key_less(s, winner))) {
      winner = s;
    }
  }

  std::vector<int> chain;
  for (int s = winner; s > 0; s = arena[s].parent) chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  std::vector<PlannedService> plan;
  for (int s : chain) {
    const auto& o = options[arena[s].period_pos][arena[s].option];
    Rational t = arena[s].entry;
    for (std::size_t i = 0; i < o.serviced.size(); ++i) {
      const ServiceRequest* r = tr.base().find(o.serviced[i]);
      if (i > 0) {
        t += metric.distance(tr.base().find(o.serviced[i - 1])->node, r->node) / speed;
      }
      plan.push_back(PlannedService{r->id, r->node, t});
    }
  }
  return build_run(metric, speed, plan);
}

}  // namespace repairman

#endif  // REPAIRMAN_SPEEDUP_CORE_HPP_
