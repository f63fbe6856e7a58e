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

#ifndef REPAIRMAN_INSTANCE_HPP_
#define REPAIRMAN_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repairman/rational.hpp"

namespace repairman {

using NodeId = std::int64_t;
using RequestId = std::int64_t;

enum class MetricKind { kTree, kGeneral };

inline const char* to_string(MetricKind kind) {
  return kind == MetricKind::kTree ? "tree" : "general";
}

// Half-open interval [release, release + length).
struct TimeWindow {
  Rational release;
  Rational length;

  Rational end() const { return release + length; }
  bool contains(const Rational& t) const {
    return release <= t && t < end();
  }
  bool contains(const TimeWindow& other) const {
    return release <= other.release && other.end() <= end();
  }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct ServiceRequest {
  RequestId id = 0;
  NodeId node = 0;
  TimeWindow window;
  Rational profit{1};
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Rational w;
};

struct Visit {
  NodeId node = 0;
  Rational arrival;
  Rational departure;
  friend bool operator==(const Visit&, const Visit&) = default;
};

// A timed walk. Service is instantaneous and happens at an event's arrival
// time; waiting is expressed as departure > arrival.
struct ServiceRun {
  Rational speed{1};
  std::vector<Visit> events;
  std::vector<RequestId> serviced;  // sorted, unique
};

// Shortest-path-closed distance table. Malformed input is recorded as
// issues rather than rejected, so validate_instance can report it.
class Metric {
 public:
  Metric(MetricKind kind, std::vector<NodeId> nodes, std::vector<Edge> edges)
      : kind_(kind), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    Build();
  }

  MetricKind kind() const { return kind_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& issues() const { return issues_; }

  bool has_node(NodeId u) const { return index_.count(u) != 0; }
  std::size_t index_of(NodeId u) const {
    auto it = index_.find(u);
    if (it == index_.end()) {
      throw std::out_of_range("unknown node " + std::to_string(u));
    }
    return it->second;
  }

  bool has_distance(NodeId u, NodeId v) const {
    if (!has_node(u) || !has_node(v)) return false;
    return dist_[index_of(u) * n() + index_of(v)].has_value();
  }
  const Rational& distance(NodeId u, NodeId v) const {
    const auto& d = dist_[index_of(u) * n() + index_of(v)];
    if (!d) {
      throw std::out_of_range("no distance between " + std::to_string(u) +
                              " and " + std::to_string(v));
    }
    return *d;
  }
  // Index-based access for inner loops; caller guarantees definedness.
  const Rational& distance_at(std::size_t i, std::size_t j) const {
    return *dist_[i * n() + j];
  }
  std::size_t n() const { return nodes_.size(); }

  Metric scaled(const Rational& c) const {
    std::vector<Edge> e = edges_;
    for (auto& x : e) x.w *= c;
    return Metric(kind_, nodes_, std::move(e));
  }

 private:
  void Issue(std::string s) { issues_.push_back(std::move(s)); }

  void Build() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!index_.emplace(nodes_[i], i).second) {
        Issue("duplicate node id " + std::to_string(nodes_[i]));
      }
    }
    const std::size_t m = n();
    dist_.assign(m * m, std::nullopt);
    for (std::size_t i = 0; i < m; ++i) dist_[i * m + i] = Rational(0);

    std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(m);
    for (const Edge& e : edges_) {
      if (!has_node(e.u) || !has_node(e.v)) {
        Issue("edge references unknown node (" + std::to_string(e.u) + "," +
              std::to_string(e.v) + ")");
        continue;
      }
      if (e.w < 0) {
        Issue("negative distance on (" + std::to_string(e.u) + "," +
              std::to_string(e.v) + ")");
      }
      std::size_t a = index_of(e.u), b = index_of(e.v);
      if (kind_ == MetricKind::kGeneral) {
        if (a == b) {
          if (e.w != 0) {
            Issue("identity violated: d(" + std::to_string(e.u) + "," +
                  std::to_string(e.u) + ") != 0");
          }
          continue;
        }
        auto& slot = dist_[a * m + b];
        if (slot && *slot != e.w) {
          Issue("symmetry violated: conflicting distances for (" +
                std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        slot = e.w;
        dist_[b * m + a] = e.w;
      } else {
        if (a == b) {
          Issue("tree edge is a self-loop at " + std::to_string(e.u));
          continue;
        }
        adj[a].emplace_back(b, e.w);
        adj[b].emplace_back(a, e.w);
      }
    }
    if (kind_ == MetricKind::kGeneral) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (!dist_[a * m + b]) {
            Issue("missing distance for (" + std::to_string(nodes_[a]) + "," +
                  std::to_string(nodes_[b]) + ")");
          }
        }
      }
      return;
    }
    // Tree: path lengths from every root by DFS.
    if (m > 0 && edges_.size() + 1 != m) {
      Issue("tree must have exactly n-1 edges");
    }
    for (std::size_t root = 0; root < m; ++root) {
      std::vector<std::size_t> stack{root};
      std::vector<char> seen(m, 0);
      seen[root] = 1;
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[u]) {
          if (seen[v]) continue;
          seen[v] = 1;
          dist_[root * m + v] = *dist_[root * m + u] + w;
          stack.push_back(v);
        }
      }
      if (root == 0 && std::count(seen.begin(), seen.end(), 1) !=
                           static_cast<std::ptrdiff_t>(m)) {
        Issue("tree is not connected");
      }
    }
  }

  MetricKind kind_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<NodeId, std::size_t> index_;
  std::vector<std::optional<Rational>> dist_;
  std::vector<std::string> issues_;
};

class Instance {
 public:
  Instance(MetricKind kind, std::vector<NodeId> nodes, std::vector<Edge> edges,
           std::vector<ServiceRequest> requests,
           std::optional<ServiceRun> certificate = std::nullopt)
      : metric_(std::make_shared<const Metric>(kind, std::move(nodes),
                                               std::move(edges))),
        requests_(std::move(requests)),
        certificate_(std::move(certificate)) {}

  Instance(std::shared_ptr<const Metric> metric,
           std::vector<ServiceRequest> requests,
           std::optional<ServiceRun> certificate = std::nullopt)
      : metric_(std::move(metric)),
        requests_(std::move(requests)),
        certificate_(std::move(certificate)) {}

  const Metric& metric() const { return *metric_; }
  const std::shared_ptr<const Metric>& shared_metric() const { return metric_; }
  MetricKind metric_kind() const { return metric_->kind(); }
  const std::vector<NodeId>& nodes() const { return metric_->nodes(); }
  const std::vector<ServiceRequest>& requests() const { return requests_; }
  const std::optional<ServiceRun>& certificate() const { return certificate_; }
  const Rational& distance(NodeId u, NodeId v) const {
    return metric_->distance(u, v);
  }

  const ServiceRequest* find(RequestId id) const {
    for (const auto& r : requests_) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  // Same metric, different request list (used for trimmed views).
  Instance with_requests(std::vector<ServiceRequest> requests) const {
    return Instance(metric_, std::move(requests));
  }

  Rational total_profit() const {
    Rational t(0);
    for (const auto& r : requests_) t += r.profit;
    return t;
  }

 private:
  std::shared_ptr<const Metric> metric_;
  std::vector<ServiceRequest> requests_;
  std::optional<ServiceRun> certificate_;
};

inline std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out = inst.metric().issues();
  const Metric& m = inst.metric();
  const std::size_t n = m.n();
  bool complete = true;
  for (std::size_t a = 0; a < n && complete; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!m.has_distance(m.nodes()[a], m.nodes()[b])) {
        complete = false;
        break;
      }
    }
  }
  if (complete) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (m.distance_at(a, c) > m.distance_at(a, b) + m.distance_at(b, c)) {
            out.push_back("triangle inequality violated: d(" +
                          std::to_string(m.nodes()[a]) + "," +
                          std::to_string(m.nodes()[c]) + ") > d(" +
                          std::to_string(m.nodes()[a]) + "," +
                          std::to_string(m.nodes()[b]) + ") + d(" +
                          std::to_string(m.nodes()[b]) + "," +
                          std::to_string(m.nodes()[c]) + ")");
          }
        }
      }
    }
  }
  std::set<RequestId> ids;
  for (const auto& r : inst.requests()) {
    std::string who = "request " + std::to_string(r.id) + ": ";
    if (!ids.insert(r.id).second) out.push_back(who + "duplicate id");
    if (!m.has_node(r.node)) out.push_back(who + "unknown node");
    if (r.window.length < 1) out.push_back(who + "length must be >= 1");
    if (r.window.length >= 2) out.push_back(who + "length must be < 2");
    if (r.profit < 0) out.push_back(who + "profit must be nonnegative");
  }
  return out;
}

// Outcome of validate_run: profit is meaningful only when ok().
struct RunVerdict {
  Rational profit;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline RunVerdict validate_run(const Instance& inst, const ServiceRun& run) {
  RunVerdict v;
  const Metric& m = inst.metric();
  if (run.speed <= 0) {
    v.violations.push_back("speed must be positive");
    return v;
  }
  for (std::size_t e = 0; e < run.events.size(); ++e) {
    const Visit& cur = run.events[e];
    std::string at = "event " + std::to_string(e) + ": ";
    if (!m.has_node(cur.node)) {
      v.violations.push_back(at + "unknown node " + std::to_string(cur.node));
      continue;
    }
    if (cur.departure < cur.arrival) {
      v.violations.push_back(at + "departure before arrival");
    }
    if (e == 0) continue;
    const Visit& prev = run.events[e - 1];
    if (!m.has_node(prev.node) || !m.has_distance(prev.node, cur.node)) {
      v.violations.push_back(at + "no distance from previous node");
      continue;
    }
    Rational expected = prev.departure + m.distance(prev.node, cur.node) / run.speed;
    if (cur.arrival != expected) {
      v.violations.push_back(at + "arrival " + cur.arrival.str() +
                             " but kinematics give " + expected.str());
    }
  }
  std::set<RequestId> seen;
  for (RequestId id : run.serviced) {
    std::string who = "serviced " + std::to_string(id) + ": ";
    if (!seen.insert(id).second) {
      v.violations.push_back(who + "listed twice");
      continue;
    }
    const ServiceRequest* r = inst.find(id);
    if (r == nullptr) {
      v.violations.push_back(who + "unknown request");
      continue;
    }
    bool hit = std::any_of(run.events.begin(), run.events.end(),
                           [&](const Visit& e) {
                             return e.node == r->node &&
                                    r->window.contains(e.arrival);
                           });
    if (!hit) {
      v.violations.push_back(who + "no visit inside window [" +
                             r->window.release.str() + ", " +
                             r->window.end().str() + ")");
      continue;
    }
    v.profit += r->profit;
  }
  if (!v.ok()) v.profit = Rational(0);
  return v;
}

// One planned service: request `id` at `node`, served at `time`.
struct PlannedService {
  RequestId id = 0;
  NodeId node = 0;
  Rational time;
};

// Turns a time-ordered service plan into a run whose arrivals are the
// service times. Waiting happens at the previous node.
inline ServiceRun build_run(const Metric& metric, const Rational& speed,
                            const std::vector<PlannedService>& plan) {
  ServiceRun run;
  run.speed = speed;
  for (const auto& p : plan) {
    if (!run.events.empty() && run.events.back().node == p.node &&
        run.events.back().arrival == p.time) {
      run.serviced.push_back(p.id);
      continue;
    }
    if (!run.events.empty()) {
      Visit& prev = run.events.back();
      prev.departure = p.time - metric.distance(prev.node, p.node) / speed;
      if (prev.departure < prev.arrival) {
        throw std::logic_error("service plan is not kinematically feasible");
      }
    }
    run.events.push_back(Visit{p.node, p.time, p.time});
    run.serviced.push_back(p.id);
  }
  std::sort(run.serviced.begin(), run.serviced.end());
  return run;
}

}  // namespace repairman

#endif  // REPAIRMAN_INSTANCE_HPP_
