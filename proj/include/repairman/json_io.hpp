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

#ifndef REPAIRMAN_JSON_IO_HPP_
#define REPAIRMAN_JSON_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "repairman/instance.hpp"
#include "repairman/rational.hpp"

namespace repairman {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw std::invalid_argument("expected \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

inline Json to_json(const ServiceRun& run) {
  Json events = Json::array();
  for (const auto& e : run.events) {
    events.push_back({{"node", e.node},
                      {"arrival", e.arrival.str()},
                      {"departure", e.departure.str()}});
  }
  return {{"speed", run.speed.str()},
          {"events", events},
          {"serviced", run.serviced}};
}

inline ServiceRun run_from_json(const Json& j) {
  ServiceRun run;
  run.speed = rational_from_json(j.at("speed"));
  for (const auto& e : j.at("events")) {
    run.events.push_back(Visit{e.at("node").get<NodeId>(),
                               rational_from_json(e.at("arrival")),
                               rational_from_json(e.at("departure"))});
  }
  run.serviced = j.at("serviced").get<std::vector<RequestId>>();
  return run;
}

inline Json to_json(const Instance& inst) {
  Json edges = Json::array();
  for (const auto& e : inst.metric().edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w.str()}});
  }
  Json requests = Json::array();
  for (const auto& r : inst.requests()) {
    requests.push_back({{"id", r.id},
                        {"node", r.node},
                        {"release", r.window.release.str()},
                        {"length", r.window.length.str()},
                        {"profit", r.profit.str()}});
  }
  Json j = {{"metric_kind", to_string(inst.metric_kind())},
            {"nodes", inst.nodes()},
            {"edges", edges},
            {"requests", requests}};
  if (inst.certificate()) j["certificate"] = to_json(*inst.certificate());
  return j;
}

inline Instance instance_from_json(const Json& j) {
  std::string kind_text = j.at("metric_kind").get<std::string>();
  MetricKind kind;
  if (kind_text == "tree") {
    kind = MetricKind::kTree;
  } else if (kind_text == "general") {
    kind = MetricKind::kGeneral;
  } else {
    throw std::invalid_argument("metric_kind must be tree or general");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back(Edge{e.at("u").get<NodeId>(), e.at("v").get<NodeId>(),
                         rational_from_json(e.at("w"))});
  }
  std::vector<ServiceRequest> requests;
  for (const auto& r : j.at("requests")) {
    ServiceRequest req;
    req.id = r.at("id").get<RequestId>();
    req.node = r.at("node").get<NodeId>();
    req.window = TimeWindow{rational_from_json(r.at("release")),
                            rational_from_json(r.at("length"))};
    req.profit = r.contains("profit") ? rational_from_json(r.at("profit"))
                                      : Rational(1);
    requests.push_back(req);
  }
  std::optional<ServiceRun> cert;
  if (j.contains("certificate") && !j.at("certificate").is_null()) {
    cert = run_from_json(j.at("certificate"));
  }
  return Instance(kind, j.at("nodes").get<std::vector<NodeId>>(),
                  std::move(edges), std::move(requests), std::move(cert));
}

}  // namespace repairman

#endif  // REPAIRMAN_JSON_IO_HPP_
