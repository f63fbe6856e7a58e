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

// Closed-form coverage tables and minimum-yield ensembles, checked against
// create_table over every admissible (r, k).

#ifndef REPAIRMAN_COVERAGE_TABLES_HPP_
#define REPAIRMAN_COVERAGE_TABLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "repairman/coverage.hpp"
#include "repairman/parallel.hpp"
#include "repairman/rational.hpp"

namespace repairman::coverage {

// a*r + b*k + c*i + d.
struct Affine {
  Rational r;
  Rational k;
  Rational i;
  Rational c;

  Rational at(std::int64_t rv, std::int64_t kv, std::int64_t iv = 0) const {
    return r * Rational(rv) + k * Rational(kv) + i * Rational(iv) + c;
  }
};

// rr*r^2 + rk*r*k + kk*k^2 + lin.
struct Quadratic {
  Rational rr;
  Rational rk;
  Rational kk;
  Affine lin;

  Rational at(std::int64_t r, std::int64_t k) const {
    Rational R(r), K(k);
    return rr * R * R + rk * R * K + kk * K * K + lin.at(r, k);
  }
};

// Which speed parametrization a table or ensemble uses.
enum class Form { kLow, kHigh };

inline SpeedForm form_of(Form f, std::int64_t r, std::int64_t k) {
  return f == Form::kLow ? SpeedForm::low(r, k) : SpeedForm::high(r, k);
}

// Every constraint is read as expr(r, k) >= 0.
inline bool admits(const std::vector<Affine>& when, std::int64_t r, std::int64_t k) {
  return std::all_of(when.begin(), when.end(),
                     [&](const Affine& a) { return a.at(r, k) >= 0; });
}

enum class Component { kCombined, kForward, kReverse };

struct Branch {
  Affine lo;
  Affine hi;
  Affine value;
};

// One run pair (a run and its reverse) with its piecewise closed form.
struct PairForm {
  std::string label;
  RunType type = RunType::kA;
  Affine delta;
  std::vector<Affine> when;
  std::vector<Branch> branches;
  Component component = Component::kCombined;
};

struct TableSpec {
  std::string id;
  int lambda = 2;
  Form form = Form::kLow;
  std::vector<Affine> when;
  std::vector<PairForm> pairs;
};

namespace internal {

inline Rational Q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Shorthand for affine forms in r, k and i.
inline Affine L(Rational r, Rational k, Rational i = 0, Rational c = 0) {
  return Affine{r, k, i, c};
}

inline const std::vector<Affine>& k_in_range() {
  static const std::vector<Affine> v{L(0, 1), L(1, -1)};  // 0 <= k <= r
  return v;
}

}  // namespace internal

inline const std::vector<TableSpec>& table_specs() {
  using internal::L;
  using internal::Q;
  static const std::vector<TableSpec> specs = [] {
    std::vector<TableSpec> t;
    const Affine top2 = L(Q(3, 2), 0);
    const Affine top3 = L(2, 0);
    const Affine zero = L(0, 0);
    const auto& base = internal::k_in_range();
    auto with = [&](std::vector<Affine> extra) {
      std::vector<Affine> w = base;
      w.insert(w.end(), extra.begin(), extra.end());
      return w;
    };

    t.push_back(TableSpec{
        "T4", 2, Form::kLow, base,
        {PairForm{"A_{r-k} F", RunType::kA, L(1, -1), {},
                  {{zero, L(1, -1), L(0, 1, 1)},
                   {L(1, -1), L(1, 0), L(Q(3, 2), Q(-1, 2), Q(-1, 2))},
                   {L(1, 0), L(2, -1), L(2, Q(-1, 2), -1)},
                   {L(2, -1), L(2, 0), L(1, 0, Q(-1, 2))}},
                  Component::kForward},
         PairForm{"A_{r-k} F^R", RunType::kA, L(1, -1), {},
                  {{L(1, 0), L(1, 1), L(Q(-1, 2), 0, Q(1, 2))},
                   {L(1, 1), L(2, 0), L(-1, Q(-1, 2), 1)},
                   {L(2, 0), L(2, 1), L(0, Q(-1, 2), Q(1, 2))},
                   {L(2, 1), L(3, 0), L(3, 1, -1)}},
                  Component::kReverse}}});

    t.push_back(TableSpec{
        "T5", 2, Form::kLow, with({L(1, -2)}),
        {PairForm{"A", RunType::kA, zero, {},
                  {{zero, L(0, 1), L(1, 0, Q(-1, 2))},
                   {L(0, 1), L(1, 0), L(1, Q(1, 2), -1)},
                   {L(1, 0), L(1, 1), L(Q(1, 2), Q(1, 2), Q(-1, 2))},
                   {L(1, 1), top2, zero}}},
         PairForm{"A_{r-k}", RunType::kA, L(1, -1), {},
                  {{zero, L(1, -1), L(0, 1, 1)},
                   {L(1, -1), L(1, 1), L(Q(3, 2), Q(-1, 2), Q(-1, 2))},
                   {L(1, 1), top2, L(1, -1)}}},
         PairForm{"A_{2r-k}", RunType::kA, L(2, -1), {},
                  {{zero, L(0, 1), L(0, 0, Q(1, 2))},
                   {L(0, 1), L(1, -1), L(0, Q(-1, 2), 1)},
                   {L(1, -1), L(1, 0), L(-1, Q(1, 2), 2)},
                   {L(1, 0), L(1, 1), L(Q(-1, 2), Q(1, 2), Q(3, 2))},
                   {L(1, 1), top2, L(1, 2)}}}}});

    t.push_back(TableSpec{
        "T6", 2, Form::kLow, with({L(-1, 2)}),
        {PairForm{"A", RunType::kA, zero, {},
                  {{zero, L(0, 1), L(1, 0, Q(-1, 2))},
                   {L(0, 1), L(1, 0), L(1, Q(1, 2), -1)},
                   {L(1, 0), L(2, -1), L(Q(1, 2), Q(1, 2), Q(-1, 2))},
                   {L(2, -1), top2, L(Q(-1, 2), 1)}}},
         PairForm{"A_{r-k}", RunType::kA, L(1, -1), {},
                  {{zero, L(1, -1), L(0, 1, 1)},
                   {L(1, -1), L(2, -1), L(Q(3, 2), Q(-1, 2), Q(-1, 2))},
                   {L(2, -1), top2, L(Q(1, 2), 0)}}},
         PairForm{"A_{2r-k}", RunType::kA, L(2, -1), {},
                  {{zero, L(1, -1), L(0, 0, Q(1, 2))},
                   {L(1, -1), L(0, 1), L(-1, 1, Q(3, 2))},
                   {L(0, 1), L(1, 0), L(-1, Q(1, 2), 2)},
                   {L(1, 0), L(2, -1), L(Q(-1, 2), Q(1, 2), Q(3, 2))},
                   {L(2, -1), top2, L(Q(5, 2), -1)}}}}});

    t.push_back(TableSpec{
        "T8", 2, Form::kHigh, with({L(1, -2)}),
        {PairForm{"A", RunType::kA, zero, {},
                  {{zero, L(0, 1), L(1, 0)},
                   {L(0, 1), L(1, -1), L(1, Q(1, 2), Q(-1, 2))},
                   {L(1, -1), top2, L(Q(1, 2), 1)}}},
         PairForm{"A_{r-2k}", RunType::kA, L(1, -2), {L(1, -3)},
                  {{zero, L(0, 1), L(0, 2, 1)},
                   {L(0, 1), L(1, -2), L(0, Q(3, 2), Q(3, 2))},
                   {L(1, -2), L(1, -1), L(1, Q(-1, 2), Q(1, 2))},
                   {L(1, -1), top2, L(Q(3, 2), -1)}}}}});

    t.push_back(TableSpec{
        "T9", 2, Form::kHigh, with({L(1, -2), L(-1, 3)}),
        {PairForm{"A_{r-2k}", RunType::kA, L(1, -2), {},
                  {{zero, L(1, -2), L(0, 2, 1)},
                   {L(1, -2), L(0, 1), L(1, 0)},
                   {L(0, 1), L(1, -1), L(1, Q(-1, 2), Q(1, 2))},
                   {L(1, -1), top2, L(Q(3, 2), -1)}}}}});

    const PairForm w3_a{"A", RunType::kA, zero, {},
                        {{zero, L(0, 1), L(1, 0, Q(-1, 2))},
                         {L(0, 1), L(1, 0), L(1, Q(1, 2), -1)},
                         {L(1, 0), L(1, 1), L(Q(1, 2), Q(1, 2), Q(-1, 2))},
                         {L(1, 1), top3, zero}}};
    const PairForm w3_a1{"A_{r-k}", RunType::kA, L(1, -1), {},
                         {{zero, L(1, -1), L(0, 1, 1)},
                          {L(1, -1), L(1, 0), L(Q(3, 2), Q(-1, 2), Q(-1, 2))},
                          {L(1, 0), L(2, -1), L(2, Q(-1, 2), -1)},
                          {L(2, -1), top3, L(1, 0, Q(-1, 2))}}};
    t.push_back(TableSpec{
        "T10", 3, Form::kLow, base,
        {w3_a, w3_a1,
         PairForm{"A_{2r-k}", RunType::kA, L(2, -1), {L(1, -2)},
                  {{zero, L(1, -1), zero},
                   {L(1, -1), L(1, 0), L(-1, 1, 1)},
                   {L(1, 0), L(1, 1), L(Q(-3, 2), 1, Q(3, 2))},
                   {L(1, 1), L(2, -1), L(-2, Q(1, 2), 2)},
                   {L(2, -1), top3, L(1, -1, Q(1, 2))}}},
         PairForm{"A_{3r-k}", RunType::kA, L(3, -1), {L(1, -2)},
                  {{zero, L(0, 1), L(0, 0, Q(1, 2))},
                   {L(0, 1), L(1, 0), L(0, Q(-1, 2), 1)},
                   {L(1, 0), L(1, 1), L(Q(1, 2), Q(-1, 2), Q(1, 2))},
                   {L(1, 1), L(2, -1), L(2, 1, -1)},
                   {L(2, -1), top3, L(0, 2)}}}}});

    t.push_back(TableSpec{
        "T11", 3, Form::kLow, with({L(-1, 2)}),
        {PairForm{"A_{2r-k}", RunType::kA, L(2, -1), {},
                  {{zero, L(1, -1), zero},
                   {L(1, -1), L(1, 0), L(-1, 1, 1)},
                   {L(1, 0), L(2, -1), L(Q(-3, 2), 1, Q(3, 2))},
                   {L(2, -1), L(1, 1), L(Q(3, 2), Q(-1, 2))},
                   {L(1, 1), top3, L(1, -1, Q(1, 2))}}},
         PairForm{"A_{3r-k}", RunType::kA, L(3, -1), {},
                  {{zero, L(0, 1), L(0, 0, Q(1, 2))},
                   {L(0, 1), L(1, 0), L(0, Q(-1, 2), 1)},
                   {L(1, 0), L(2, -1), L(Q(1, 2), Q(-1, 2), Q(1, 2))},
                   {L(2, -1), L(1, 1), L(Q(-3, 2), Q(1, 2), Q(3, 2))},
                   {L(1, 1), top3, L(0, 2)}}}}});

    // The A pair of this table is reused for all 2 <= s <= 3.
    t.push_back(TableSpec{
        "T12", 3, Form::kHigh, base,
        {PairForm{"A", RunType::kA, zero, {},
                  {{zero, L(0, 1), L(1, 0)},
                   {L(0, 1), L(2, -1), L(1, Q(1, 2), Q(-1, 2))},
                   {L(2, -1), top3, L(0, 1)}}},
         PairForm{"C_{(3r-k)/2}", RunType::kC, L(Q(3, 2), Q(-1, 2)), {L(1, -3)},
                  {{zero, L(Q(1, 2), Q(-3, 2)), L(Q(1, 2), Q(1, 2), Q(1, 2))},
                   {L(Q(1, 2), Q(-3, 2)), L(Q(1, 2), Q(-1, 2)), L(Q(3, 4), Q(-1, 4))},
                   {L(Q(1, 2), Q(-1, 2)), L(Q(3, 2), Q(-3, 2)), L(Q(5, 8), Q(-1, 8), Q(1, 4))},
                   {L(Q(3, 2), Q(-3, 2)), L(Q(3, 2), Q(-1, 2)), L(Q(1, 4), Q(1, 4), Q(1, 2))},
                   {L(Q(3, 2), Q(-1, 2)), top3, L(1, 0)}}}}});

    t.push_back(TableSpec{
        "T13", 3, Form::kHigh, with({L(-1, 3), L(3, -7)}),
        {PairForm{"C_{2r-2k}", RunType::kC, L(2, -2), {},
                  {{zero, L(1, -2), L(Q(3, 4), Q(-1, 4))},
                   {L(1, -2), L(1, 0), L(Q(1, 2), Q(1, 4), Q(1, 4))},
                   {L(1, 0), L(1, 1), L(Q(1, 4), Q(1, 4), Q(1, 2))},
                   {L(1, 1), L(2, -1), L(Q(3, 4), Q(3, 4))},
                   {L(2, -1), L(1, 2), L(Q(1, 4), 1, Q(1, 4))},
                   {L(1, 2), top3, L(Q(1, 2), Q(3, 2))}}}}});

    // B runs shifted by 3(r-k)/2 hops reproduce the printed values.
    const Affine b_shift = L(Q(3, 2), Q(-3, 2));
    t.push_back(TableSpec{
        "T14", 3, Form::kHigh, with({L(-3, 7), L(1, -2)}),
        {PairForm{"B", RunType::kB, b_shift, {},
                  {{zero, L(1, -1), L(0, Q(2, 3), Q(2, 3))},
                   {L(1, -1), L(Q(1, 2), Q(1, 2)), L(Q(-1, 3), 1, 1)},
                   {L(Q(1, 2), Q(1, 2)), L(Q(3, 2), Q(-3, 2)), L(Q(-1, 2), Q(5, 6), Q(4, 3))},
                   {L(Q(3, 2), Q(-3, 2)), L(2, -1), L(0, Q(1, 3), 1)},
                   {L(2, -1), L(Q(3, 2), Q(1, 2)), L(Q(2, 3), 0, Q(2, 3))},
                   {L(Q(3, 2), Q(1, 2)), top3, L(Q(5, 3), Q(1, 3))}}}}});

    t.push_back(TableSpec{
        "T15", 3, Form::kHigh, with({L(-1, 2)}),
        {PairForm{"B", RunType::kB, b_shift, {},
                  {{zero, L(1, -1), L(0, Q(2, 3), Q(2, 3))},
                   {L(1, -1), L(Q(3, 2), Q(-3, 2)), L(Q(-1, 3), 1, 1)},
                   {L(Q(3, 2), Q(-3, 2)), L(Q(1, 2), Q(1, 2)), L(Q(1, 6), Q(1, 2), Q(2, 3))},
                   {L(Q(1, 2), Q(1, 2)), L(2, -1), L(0, Q(1, 3), 1)},
                   {L(2, -1), L(Q(3, 2), Q(1, 2)), L(Q(2, 3), 0, Q(2, 3))},
                   {L(Q(3, 2), Q(1, 2)), top3, L(Q(5, 3), Q(1, 3))}}}}});
    return t;
  }();
  return specs;
}

inline const TableSpec& table_spec(const std::string& id) {
  for (const auto& t : table_specs()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown table id: " + id);
}

inline std::vector<std::string> table_ids() {
  std::vector<std::string> out;
  for (const auto& t : table_specs()) out.push_back(t.id);
  return out;
}

struct CheckRow {
  std::string id;
  std::string pair;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t i = 0;
  Rational expected;
  Rational got;
  bool ok() const { return expected == got; }
};

struct TableReport {
  std::string id;
  std::size_t cases = 0;  // (r, k) combinations visited
  std::vector<CheckRow> rows;
  std::size_t mismatches() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const CheckRow& c) { return !c.ok(); }));
  }
};

inline bool needs_even(RunType t) { return t != RunType::kA; }

// Every (r, k) with r <= r_max and 0 <= k <= r admitted by the table, every
// branch, every integer i in the branch's closed range.
inline TableReport verify_table(const std::string& id, std::int64_t r_max, int jobs = 1) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  const TableSpec& spec = table_spec(id);
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t k = 0; k <= r; ++k) {
      if (admits(spec.when, r, k)) grid.emplace_back(r, k);
    }
  }
  std::vector<std::vector<CheckRow>> parts(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t g) {
    auto [r, k] = grid[g];
    const SpeedForm sf = form_of(spec.form, r, k);
    const std::int64_t full = r * (spec.lambda + 1);
    for (const auto& pair : spec.pairs) {
      if (!admits(pair.when, r, k)) continue;
      if (needs_even(pair.type) && !sf.even()) continue;
      CoverageTable tab = create_table(pattern(pair.type, sf), pair.delta.at(r, k).floor(),
                                       sf, spec.lambda);
      const std::vector<Rational>& got =
          pair.component == Component::kForward ? tab.forward
          : pair.component == Component::kReverse ? tab.reverse
                                                  : tab.combined;
      const std::int64_t last = pair.component == Component::kCombined ? full / 2 : full;
      for (const auto& b : pair.branches) {
        Rational lo = b.lo.at(r, k), hi = b.hi.at(r, k);
        for (std::int64_t i = std::max<std::int64_t>(0, lo.ceil());
             i <= std::min(last, hi.floor()); ++i) {
          parts[g].push_back(CheckRow{spec.id, pair.label, r, k, i, b.value.at(r, k, i), got[i]});
        }
      }
    }
  });
  TableReport rep;
  rep.id = spec.id;
  rep.cases = grid.size();
  for (auto& p : parts) rep.rows.insert(rep.rows.end(), p.begin(), p.end());
  return rep;
}

// A run pair weighted in a yield sum; the pair's combined value counts the
// run and its reverse.
struct EnsembleTerm {
  RunType type = RunType::kA;
  Affine delta;
  Affine weight;
};

struct LemmaSpec {
  std::string id;
  int lambda = 2;
  Form form = Form::kLow;
  std::vector<Affine> when;  // over (r, k), k ranging up to 4r
  std::vector<EnsembleTerm> terms;
  Quadratic bound;
};

inline const std::vector<LemmaSpec>& lemma_specs() {
  using internal::L;
  using internal::Q;
  static const std::vector<LemmaSpec> specs = [] {
    const Affine zero = L(0, 0);
    const auto& base = internal::k_in_range();
    auto with = [&](std::vector<Affine> extra) {
      std::vector<Affine> w = base;
      w.insert(w.end(), extra.begin(), extra.end());
      return w;
    };
    auto lin = [](Affine a) { return Quadratic{0, 0, 0, a}; };
    const auto A = RunType::kA;
    std::vector<LemmaSpec> v;
    v.push_back({"L5.1", 2, Form::kLow, base,
                 {{A, zero, L(0, 0, 0, 2)}, {A, L(1, -1), L(0, 0, 0, 1)}, {A, L(2, -1), L(0, 0, 0, 1)}},
                 lin(L(2, 1))});
    v.push_back({"LA.1", 2, Form::kHigh, with({L(1, -2)}),
                 {{A, zero, L(0, 0, 0, 3)}, {A, L(1, -2), L(0, 0, 0, 1)}},
                 lin(L(3, 2))});
    v.push_back({"T5.5", 2, Form::kHigh, {L(-1, 1), L(3, -1)},
                 {{A, zero, L(0, 0, 0, 1)}},
                 lin(L(Q(1, 2), Q(1, 2)))});
    v.push_back({"LB.1", 3, Form::kLow, base,
                 {{A, zero, L(0, 0, 0, 2)}, {A, L(1, -1), L(0, 0, 0, 1)},
                  {A, L(2, -1), L(0, 0, 0, 1)}, {A, L(3, -1), L(0, 0, 0, 1)}},
                 lin(L(2, 1))});
    v.push_back({"LC.1", 3, Form::kHigh, with({L(1, -3)}),
                 {{A, zero, L(0, 0, 0, 1)}, {RunType::kC, L(Q(3, 2), Q(-1, 2)), L(0, 0, 0, 2)}},
                 lin(L(2, 1))});
    v.push_back({"LD.1", 3, Form::kHigh, with({L(-1, 3), L(3, -7)}),
                 {{A, zero, L(0, 1)}, {RunType::kC, L(2, -2), L(1, -1)}},
                 Quadratic{Q(3, 4), 0, Q(1, 4), zero}});
    v.push_back({"LE.1", 3, Form::kHigh, with({L(-3, 7)}),
                 {{A, zero, L(6, -4)}, {RunType::kB, L(Q(3, 2), Q(-3, 2)), L(3, -3)}},
                 Quadratic{6, -2, -2, zero}});
    v.push_back({"T7.7", 3, Form::kHigh, {L(-2, 1), L(4, -1)},
                 {{A, zero, L(0, 0, 0, 1)}},
                 lin(L(0, Q(1, 2)))});
    return v;
  }();
  return specs;
}

inline const LemmaSpec& lemma_spec(const std::string& id) {
  for (const auto& l : lemma_specs()) {
    if (l.id == id) return l;
  }
  throw std::invalid_argument("unknown lemma id: " + id);
}

// The B ensemble with the shift exactly as named in the text (r - k + 1
// hops). Its yield bound holds too, but it does not reproduce the tables.
inline LemmaSpec lemma_e1_literal_shift() {
  using internal::L;
  LemmaSpec s = lemma_spec("LE.1");
  s.id = "LE.1-r-k+1";
  s.terms[1].delta = L(1, -1, 0, 1);
  return s;
}

inline std::vector<std::string> lemma_ids() {
  std::vector<std::string> out;
  for (const auto& l : lemma_specs()) out.push_back(l.id);
  return out;
}

struct YieldRow {
  std::string id;
  std::int64_t r = 0;
  std::int64_t k = 0;
  Rational min_yield;
  Rational bound;
  std::vector<std::int64_t> argmin;
  bool violated() const { return min_yield < bound; }
  bool tight() const { return min_yield == bound; }
};

struct LemmaReport {
  std::string id;
  std::vector<YieldRow> rows;
  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const YieldRow& y) { return y.violated(); }));
  }
  std::size_t non_tight() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const YieldRow& y) { return !y.tight(); }));
  }
};

// Weighted yield sum(w * combined(i)) at each i in [0, r(lambda+1)].
inline std::vector<Rational> ensemble_yield(const LemmaSpec& spec, std::int64_t r,
                                            std::int64_t k) {
  const SpeedForm sf = form_of(spec.form, r, k);
  std::vector<Rational> y(static_cast<std::size_t>(r * (spec.lambda + 1) + 1), Rational(0));
  for (const auto& t : spec.terms) {
    CoverageTable tab = create_table(pattern(t.type, sf), t.delta.at(r, k).floor(), sf,
                                     spec.lambda);
    Rational w = t.weight.at(r, k);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += w * tab.combined[i];
  }
  return y;
}

inline LemmaReport verify_lemma(const LemmaSpec& spec, std::int64_t r_max, int jobs = 1) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  const bool even = std::any_of(spec.terms.begin(), spec.terms.end(),
                                [](const EnsembleTerm& t) { return needs_even(t.type); });
  // Odd q + r is handled by doubling (r, k), which keeps the speed.
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t k = 0; k <= 4 * r; ++k) {
      if (!admits(spec.when, r, k)) continue;
      std::int64_t rr = r, kk = k;
      if (even && !form_of(spec.form, r, k).even()) {
        rr *= 2;
        kk *= 2;
      }
      if (seen.insert({rr, kk}).second) grid.emplace_back(rr, kk);
    }
  }
  std::sort(grid.begin(), grid.end());
  LemmaReport rep;
  rep.id = spec.id;
  rep.rows.resize(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t g) {
    auto [r, k] = grid[g];
    std::vector<Rational> y = ensemble_yield(spec, r, k);
    YieldRow row;
    row.id = spec.id;
    row.r = r;
    row.k = k;
    row.bound = spec.bound.at(r, k);
    row.min_yield = *std::min_element(y.begin(), y.end());
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == row.min_yield) row.argmin.push_back(static_cast<std::int64_t>(i));
    }
    rep.rows[g] = std::move(row);
  });
  return rep;
}

inline LemmaReport verify_lemma(const std::string& id, std::int64_t r_max, int jobs = 1) {
  return verify_lemma(lemma_spec(id), r_max, jobs);
}

}  // namespace repairman::coverage

#endif  // REPAIRMAN_COVERAGE_TABLES_HPP_
