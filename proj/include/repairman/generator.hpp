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

#ifndef REPAIRMAN_GENERATOR_HPP_
#define REPAIRMAN_GENERATOR_HPP_

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "repairman/instance.hpp"
#include "repairman/rational.hpp"

namespace repairman {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so draws are mapped to ranges by hand to keep output platform-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  bool coin() { return (eng_() & 1u) != 0; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Window starts live on this odd-denominator grid and are never integers,
// so none is a multiple of 1/4.
inline constexpr std::int64_t kStartGrid = 45;

inline Instance generate_planted_instance(int n, MetricKind kind,
                                          const Rational& spacing,
                                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (spacing <= 0) throw std::invalid_argument("spacing must be positive");
  Rng rng(seed);
  const std::int64_t G = kStartGrid;

  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  auto edge_weight = [&] { return spacing * Rational(rng.uniform(2, 6), 4); };

  std::vector<Edge> edges;
  if (kind == MetricKind::kTree) {
    for (int i = 1; i < n; ++i) {
      edges.push_back(Edge{rng.uniform(0, i - 1), i, edge_weight()});
    }
  } else {
    // Random complete graph, then shortest-path closure gives a metric.
    std::vector<Rational> d(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        d[i * n + j] = d[j * n + i] = edge_weight();
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Rational via = d[i * n + k] + d[k * n + j];
          if (via < d[i * n + j]) d[i * n + j] = via;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j, d[i * n + j]});
    }
  }
  Metric metric(kind, nodes, edges);

  std::vector<NodeId> order = nodes;
  rng.shuffle(order);
  std::vector<ServiceRequest> requests;
  std::vector<PlannedService> plan;
  Rational t(rng.uniform(1, G - 1), G);
  for (int i = 0; i < n; ++i) {
    NodeId v = order[i];
    if (i > 0) {
      t += metric.distance(order[i - 1], v) + Rational(rng.uniform(0, G / 4), G);
    }
    std::int64_t a = rng.uniform(0, G - 1);  // length = 1 + a/G
    std::int64_t b = rng.uniform(0, G + a - 2);
    Rational shifted = t - Rational(b, G);
    Rational release(Rational(shifted.num() * G, shifted.den()).floor(), G);
    if (release.is_integer()) release -= Rational(1, G);
    requests.push_back(ServiceRequest{v, v, TimeWindow{release, Rational(G + a, G)}, Rational(1)});
    plan.push_back(PlannedService{v, v, t});
  }
  ServiceRun cert = build_run(metric, Rational(1), plan);
  return Instance(kind, nodes, edges, std::move(requests), std::move(cert));
}

}  // namespace repairman

#endif  // REPAIRMAN_GENERATOR_HPP_
