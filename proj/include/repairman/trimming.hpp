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

#ifndef REPAIRMAN_TRIMMING_HPP_
#define REPAIRMAN_TRIMMING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repairman/instance.hpp"
#include "repairman/rational.hpp"

namespace repairman {

class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Periods are [base + t*alpha, base + (t+1)*alpha) with base = offset - shift.
struct PeriodScheme {
  Rational alpha{1, 2};
  Rational offset{0};
  Rational shift{0};

  Rational base() const { return offset - shift; }
  Rational start(std::int64_t t) const { return base() + alpha * Rational(t); }
  TimeWindow period(std::int64_t t) const { return TimeWindow{start(t), alpha}; }

  // Position of x inside its period, in [0, alpha).
  Rational residue(const Rational& x) const {
    Rational q = (x - base()) / alpha;
    return (q - Rational(q.floor())) * alpha;
  }
};

inline bool is_valid_alpha(const Rational& alpha) {
  return alpha == Rational(1, 2) || alpha == Rational(3, 4) || alpha == Rational(1);
}

// offset = i/4 with i < 4*alpha.
inline bool is_valid_offset(const Rational& alpha, const Rational& offset) {
  Rational four = offset * Rational(4);
  return four.is_integer() && offset >= 0 && four < alpha * Rational(4);
}

// Throws BoundaryError if some window start sits on a period boundary.
inline void check_scheme(const Instance& inst, const PeriodScheme& scheme) {
  for (const auto& r : inst.requests()) {
    if (scheme.residue(r.window.release) == 0) {
      throw BoundaryError("window start of request " + std::to_string(r.id) +
                          " lies on a period boundary");
    }
  }
}

// Builds the scheme for (alpha, offset), nudging the grid backwards only if
// some start lies exactly on it.
inline PeriodScheme make_scheme(const Instance& inst, const Rational& alpha,
                                const Rational& offset) {
  if (!is_valid_alpha(alpha)) throw std::invalid_argument("alpha must be 1/2, 3/4 or 1");
  if (!is_valid_offset(alpha, offset)) throw std::invalid_argument("invalid offset for alpha");
  PeriodScheme s{alpha, offset, Rational(0)};
  bool on_grid = false;
  std::optional<Rational> gap;
  for (const auto& r : inst.requests()) {
    Rational rho = s.residue(r.window.release);
    if (rho == 0) {
      on_grid = true;
      continue;
    }
    Rational room = min(rho, alpha - rho);
    if (!gap || room < *gap) gap = room;
  }
  if (!on_grid) return s;
  s.shift = gap ? *gap / Rational(2) : alpha / Rational(100);
  return s;
}

struct WindowClassEntry {
  RequestId id = 0;
  int count = 0;                 // full periods inside the window
  std::int64_t first_period = 0;  // index of the first one (if count > 0)
};

using WindowClass = std::vector<WindowClassEntry>;

inline WindowClassEntry classify_window(const TimeWindow& w,
                                        const PeriodScheme& scheme) {
  Rational lo = (w.release - scheme.base()) / scheme.alpha;
  Rational hi = (w.end() - scheme.base()) / scheme.alpha;
  std::int64_t first = lo.ceil();
  std::int64_t last = hi.floor() - 1;
  WindowClassEntry e;
  e.first_period = first;
  e.count = static_cast<int>(std::max<std::int64_t>(0, last - first + 1));
  return e;
}

inline WindowClass classify_windows(const Instance& inst,
                                    const PeriodScheme& scheme) {
  check_scheme(inst, scheme);
  WindowClass out;
  for (const auto& r : inst.requests()) {
    WindowClassEntry e = classify_window(r.window, scheme);
    e.id = r.id;
    out.push_back(e);
  }
  return out;
}

// Counts of full quarter periods [t/4, (t+1)/4), keyed by request id.
inline std::map<RequestId, int> classify_quarters(const Instance& inst) {
  PeriodScheme quarters{Rational(1, 4), Rational(0), Rational(0)};
  check_scheme(inst, quarters);
  std::map<RequestId, int> out;
  for (const auto& r : inst.requests()) {
    out[r.id] = classify_window(r.window, quarters).count;
  }
  return out;
}

struct TrimConfig {
  Rational alpha{1, 2};
  Rational offset{0};
  int j = 1;  // subinterval kept for two-period windows
  int k = 1;  // subinterval kept for three-period windows

  // 1, 2, 3 for alpha = 1/2, 3/4, 1.
  int phase() const {
    if (alpha == Rational(1, 2)) return 1;
    if (alpha == Rational(3, 4)) return 2;
    return 3;
  }
  friend bool operator==(const TrimConfig&, const TrimConfig&) = default;
};

// All 22 configurations in phase, offset, j, k order.
inline std::vector<TrimConfig> enumerate_configs() {
  std::vector<TrimConfig> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 3; ++k) {
        out.push_back(TrimConfig{Rational(1, 2), Rational(i, 4), j, k});
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      out.push_back(TrimConfig{Rational(3, 4), Rational(i, 4), j, 1});
    }
  }
  for (int i = 0; i < 4; ++i) {
    out.push_back(TrimConfig{Rational(1), Rational(i, 4), 1, 1});
  }
  return out;
}

struct TrimmedRequest {
  RequestId id = 0;
  int window_class = 0;
  bool dropped = false;
  std::int64_t period = 0;
  TimeWindow window;  // the kept period; meaningless when dropped
};

class TrimmedInstance {
 public:
  TrimmedInstance(Instance base, PeriodScheme scheme, TrimConfig config,
                  std::vector<TrimmedRequest> entries)
      : base_(std::move(base)),
        scheme_(scheme),
        config_(config),
        entries_(std::move(entries)) {}

  const Instance& base() const { return base_; }
  const PeriodScheme& scheme() const { return scheme_; }
  const TrimConfig& config() const { return config_; }
  const std::vector<TrimmedRequest>& entries() const { return entries_; }

  const TrimmedRequest* find(RequestId id) const {
    for (const auto& e : entries_) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  // The surviving requests with their trimmed windows, on the base metric.
  Instance as_instance() const {
    std::vector<ServiceRequest> reqs;
    for (const auto& e : entries_) {
      if (e.dropped) continue;
      ServiceRequest r = *base_.find(e.id);
      r.window = e.window;
      reqs.push_back(r);
    }
    return base_.with_requests(std::move(reqs));
  }

  // Sorted indices of periods that hold at least one surviving request.
  std::vector<std::int64_t> periods() const {
    std::vector<std::int64_t> out;
    for (const auto& e : entries_) {
      if (!e.dropped) out.push_back(e.period);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<ServiceRequest> requests_in(std::int64_t period) const {
    std::vector<ServiceRequest> out;
    for (const auto& e : entries_) {
      if (e.dropped || e.period != period) continue;
      ServiceRequest r = *base_.find(e.id);
      r.window = e.window;
      out.push_back(r);
    }
    return out;
  }

 private:
  Instance base_;
  PeriodScheme scheme_;
  TrimConfig config_;
  std::vector<TrimmedRequest> entries_;
};

inline TrimmedInstance trim(const Instance& inst, const TrimConfig& cfg) {
  if (cfg.j < 1 || cfg.j > 2 || cfg.k < 1 || cfg.k > 3) {
    throw std::invalid_argument("trim choice out of range");
  }
  PeriodScheme scheme = make_scheme(inst, cfg.alpha, cfg.offset);
  WindowClass classes = classify_windows(inst, scheme);
  std::vector<TrimmedRequest> entries;
  for (const auto& c : classes) {
    TrimmedRequest t;
    t.id = c.id;
    t.window_class = c.count;
    int pick = 0;
    switch (c.count) {
      case 0: t.dropped = true; break;
      case 1: pick = 1; break;
      case 2: pick = cfg.j; break;
      case 3: pick = cfg.k; break;
      default: throw std::logic_error("window spans more than three periods");
    }
    if (!t.dropped) {
      t.period = c.first_period + (pick - 1);
      t.window = scheme.period(t.period);
    }
    entries.push_back(t);
  }
  return TrimmedInstance(inst, scheme, cfg, std::move(entries));
}

}  // namespace repairman

#endif  // REPAIRMAN_TRIMMING_HPP_
