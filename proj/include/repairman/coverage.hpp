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

#ifndef REPAIRMAN_COVERAGE_HPP_
#define REPAIRMAN_COVERAGE_HPP_

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "repairman/instance.hpp"
#include "repairman/rational.hpp"
#include "repairman/trimming.hpp"

namespace repairman::coverage {

enum class RunType { kA, kB, kC };

inline const char* to_string(RunType t) {
  switch (t) {
    case RunType::kA: return "A";
    case RunType::kB: return "B";
    case RunType::kC: return "C";
  }
  return "?";
}

// s = q/r. For 1 <= s <= 2 the natural parameter is k = q - r, for
// s >= 2 it is k = q - 2r.
struct SpeedForm {
  std::int64_t q = 1;
  std::int64_t r = 1;

  static SpeedForm low(std::int64_t r, std::int64_t k) { return {r + k, r}; }
  static SpeedForm high(std::int64_t r, std::int64_t k) { return {2 * r + k, r}; }

  Rational speed() const { return Rational(q, r); }
  bool even() const { return (q + r) % 2 == 0; }
  SpeedForm doubled() const { return {2 * q, 2 * r}; }
  // Smallest form with q + r even.
  SpeedForm even_form() const { return even() ? *this : doubled(); }
};

using CoveragePattern = std::vector<Rational>;

inline CoveragePattern pattern(RunType type, const SpeedForm& sf) {
  const std::int64_t q = sf.q, r = sf.r;
  if (r < 1 || q < 1) throw std::invalid_argument("q and r must be positive");
  CoveragePattern p;
  auto rep = [&](std::int64_t n, Rational v) {
    if (n < 0) throw std::invalid_argument("negative repetition count");
    p.insert(p.end(), static_cast<std::size_t>(n), v);
  };
  const Rational s = sf.speed();
  switch (type) {
    case RunType::kA:
      if (s < 1 || s > 6) throw std::invalid_argument("A pattern needs 1 <= s <= 6");
      if (q < 2 * r) {
        rep(r, 1);
        rep(q - r, Rational(1, 2));
      } else {
        rep(q - r, 1);
        rep(r, Rational(1, 2));
      }
      break;
    case RunType::kB:
      if (s < Rational(17, 7) || s > 3) throw std::invalid_argument("B pattern needs 17/7 <= s <= 3");
      if (!sf.even()) throw std::invalid_argument("B pattern needs q + r even");
      rep((q - r) / 2, Rational(1, 3));
      rep((q - r) / 2, Rational(2, 3));
      rep(r, 1);
      rep(q - 2 * r, Rational(2, 3));
      rep(r, Rational(1, 3));
      break;
    case RunType::kC:
      if (s < 2 || s > Rational(17, 7)) throw std::invalid_argument("C pattern needs 2 <= s <= 17/7");
      if (!sf.even()) throw std::invalid_argument("C pattern needs q + r even");
      rep(r, Rational(1, 4));
      rep(q - 2 * r, Rational(1, 2));
      rep(r, Rational(3, 4));
      rep(q - 2 * r, Rational(1, 2));
      rep(3 * r - q, Rational(3, 4));
      rep(q - 2 * r, Rational(1, 2));
      rep(r, Rational(1, 4));
      break;
  }
  return p;
}

// F, its mirror and their sum over subintervals i = 0 .. r(lambda+1).
struct CoverageTable {
  int lambda = 2;
  std::int64_t r = 1;
  std::vector<Rational> forward;
  std::vector<Rational> reverse;
  std::vector<Rational> combined;

  std::int64_t last() const { return r * (lambda + 1); }
};

// F(i) = sum_{j<r} C(i + j - delta), F^R(i) = F(r(lambda+1) - i), where C
// is the pattern value and 0 outside it.
inline CoverageTable create_table(const CoveragePattern& p, std::int64_t delta,
                                  const SpeedForm& sf, int lambda) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  if (lambda < 1 || lambda > 3) throw std::invalid_argument("lambda must be 1, 2 or 3");
  CoverageTable t;
  t.lambda = lambda;
  t.r = sf.r;
  const std::int64_t n = t.last();
  const auto len = static_cast<std::int64_t>(p.size());
  auto C = [&](std::int64_t i) { return i >= 0 && i < len ? p[i] : Rational(0); };
  t.forward.resize(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    Rational sum(0);
    for (std::int64_t j = 0; j < sf.r; ++j) sum += C(i + j - delta);
    t.forward[i] = sum;
  }
  t.reverse.resize(n + 1);
  t.combined.resize(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    t.reverse[i] = t.forward[n - i];
    t.combined[i] = t.forward[i] + t.reverse[i];
  }
  return t;
}

// Requests of `run` that it serves inside the period they were trimmed to.
inline std::set<RequestId> covered_requests(const ServiceRun& run,
                                            const TrimmedInstance& tr) {
  std::set<RequestId> out;
  for (RequestId id : run.serviced) {
    const TrimmedRequest* e = tr.find(id);
    if (e == nullptr || e->dropped) continue;
    NodeId node = tr.base().find(id)->node;
    for (const auto& v : run.events) {
      if (v.node == node && e->window.contains(v.arrival)) {
        out.insert(id);
        break;
      }
    }
  }
  return out;
}

struct AverageCoverage {
  Rational mu;
  std::size_t witness = 0;
  Rational witness_fraction;           // covered share of the union
  std::vector<Rational> subset_cover;  // averaged over runs, per subset
};

// Subsets must be nonempty and pairwise disjoint; the witness guarantee
// fails for overlapping subsets.
inline AverageCoverage average_coverage(
    const std::vector<std::vector<RequestId>>& subsets,
    const std::vector<ServiceRun>& runs, const TrimmedInstance& tr) {
  if (runs.empty()) throw std::invalid_argument("need at least one run");
  if (subsets.empty()) throw std::invalid_argument("need at least one subset");
  std::set<RequestId> all;
  std::size_t total = 0;
  for (const auto& s : subsets) {
    if (s.empty()) throw std::invalid_argument("empty subset");
    for (RequestId id : s) {
      ++total;
      all.insert(id);
    }
  }
  if (all.size() != total) throw std::invalid_argument("subsets must be disjoint");

  std::vector<std::set<RequestId>> cov;
  for (const auto& run : runs) cov.push_back(covered_requests(run, tr));
  const Rational nruns(static_cast<std::int64_t>(runs.size()));

  AverageCoverage out;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Rational acc(0);
    for (const auto& c : cov) {
      std::int64_t hit = 0;
      for (RequestId id : subsets[i]) hit += c.count(id);
      acc += Rational(hit, static_cast<std::int64_t>(subsets[i].size()));
    }
    Rational avg = acc / nruns;
    out.subset_cover.push_back(avg);
    if (i == 0 || avg < out.mu) out.mu = avg;
  }
  for (std::size_t j = 0; j < cov.size(); ++j) {
    std::int64_t hit = 0;
    for (RequestId id : all) hit += cov[j].count(id);
    Rational frac(hit, static_cast<std::int64_t>(all.size()));
    if (j == 0 || frac > out.witness_fraction) {
      out.witness = j;
      out.witness_fraction = frac;
    }
  }
  return out;
}

}  // namespace repairman::coverage

#endif  // REPAIRMAN_COVERAGE_HPP_
