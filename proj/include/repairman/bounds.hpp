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

#ifndef REPAIRMAN_BOUNDS_HPP_
#define REPAIRMAN_BOUNDS_HPP_

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repairman/parallel.hpp"
#include "repairman/rational.hpp"
#include "repairman/small_lp.hpp"

namespace repairman::bounds {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Horner evaluation, coefficients from the highest degree down.
inline Rational poly(const Rational& s, std::initializer_list<std::int64_t> coeffs) {
  Rational acc(0);
  for (std::int64_t c : coeffs) acc = acc * s + Rational(c);
  return acc;
}

using Formula = Rational (*)(const Rational&);

struct Segment {
  Rational lo;
  Rational hi;
  const char* text;
  Formula eval;
  bool contains(const Rational& s) const { return lo <= s && s <= hi; }
};

// Piecewise lower bound on the retained profit fraction for windows that
// fully contain ell periods.
struct FBound {
  int ell = 1;
  std::vector<Segment> segments;
  Rational lo() const { return segments.front().lo; }
  Rational hi() const { return segments.back().hi; }
};

inline const FBound& fbound(int ell) {
  static const std::array<FBound, 3> table = {
      FBound{1,
             {{1, 2, "(s+1)/6", [](const Rational& s) { return (s + 1) / 6; }},
              {2, 4, "s/4", [](const Rational& s) { return s / 4; }}}},
      FBound{2,
             {{1, 2, "(s+1)/8", [](const Rational& s) { return (s + 1) / 8; }},
              {2, Rational(5, 2), "(2s-1)/8", [](const Rational& s) { return (2 * s - 1) / 8; }},
              {Rational(5, 2), 3, "1/2", [](const Rational&) { return Rational(1, 2); }},
              {3, 5, "(s-1)/4", [](const Rational& s) { return (s - 1) / 4; }}}},
      FBound{3,
             {{1, 2, "(s+1)/10", [](const Rational& s) { return (s + 1) / 10; }},
              {2, Rational(7, 3), "s/6", [](const Rational& s) { return s / 6; }},
              {Rational(7, 3), Rational(17, 7), "(s^2-4s+7)/8",
               [](const Rational& s) { return poly(s, {1, -4, 7}) / 8; }},
              {Rational(17, 7), 3, "(1+3s-s^2)/(23-7s)",
               [](const Rational& s) { return poly(s, {-1, 3, 1}) / poly(s, {-7, 23}); }},
              {3, 4, "1/2", [](const Rational&) { return Rational(1, 2); }},
              {4, 6, "(s-2)/4", [](const Rational& s) { return (s - 2) / 4; }}}}};
  if (ell < 1 || ell > 3) throw std::invalid_argument("ell must be 1, 2 or 3");
  return table[ell - 1];
}

// Each branch is a valid lower bound on its closed range, so at a shared
// endpoint the larger value is used.
inline Rational f(int ell, const Rational& s) {
  const FBound& fb = fbound(ell);
  std::optional<Rational> best;
  for (const auto& seg : fb.segments) {
    if (!seg.contains(s)) continue;
    Rational v = seg.eval(s);
    if (!best || v > *best) best = v;
  }
  if (!best) {
    throw DomainError("f" + std::to_string(ell) + " undefined at s = " + s.str());
  }
  return *best;
}

struct FValue {
  Rational value;
  bool extended = false;
};

// Beyond the domain end the bound is held at its end value (which is 1
// for f1 and f2); such evaluations are flagged.
inline FValue f_extended(int ell, const Rational& s) {
  const FBound& fb = fbound(ell);
  if (s > fb.hi()) return {min(Rational(1), f(ell, fb.hi())), true};
  return {f(ell, s), false};
}

struct BreakpointCheck {
  int ell = 1;
  Rational s;
  Rational left;
  Rational right;
  std::string left_text;
  std::string right_text;
  bool agree() const { return left == right; }
};

inline std::vector<BreakpointCheck> f_breakpoints() {
  std::vector<BreakpointCheck> out;
  for (int ell = 1; ell <= 3; ++ell) {
    const auto& segs = fbound(ell).segments;
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      const Rational s = segs[i].hi;
      out.push_back({ell, s, segs[i].eval(s), segs[i + 1].eval(s), segs[i].text,
                     segs[i + 1].text});
    }
  }
  return out;
}

struct WeightTriple {
  Rational x;
  Rational y;
  Rational z;
  bool feasible() const { return x >= 0 && y >= 0 && z >= 0 && x + y + z <= 1; }
};

enum class FPolicy { kStrict, kExtended };

struct BValues {
  std::array<Rational, 5> b;  // b3 .. b7
  bool extended = false;
  Rational min() const { return *std::min_element(b.begin(), b.end()); }
};

// Coefficients of x, y, z in b3 .. b7.
inline std::array<std::array<Rational, 3>, 5> b_coefficients(const Rational& s, FPolicy policy,
                                                               bool* extended = nullptr) {
  auto get = [&](int ell) {
    if (policy == FPolicy::kStrict) return f(ell, s);
    FValue v = f_extended(ell, s);
    if (v.extended && extended) *extended = true;
    return v.value;
  };
  const Rational f1 = get(1), f2 = get(2), f3 = get(3);
  const Rational h(1, 2), t(1, 3), q(1, 4);
  return {{{f1, t * f1, 0},
           {h * f1 + h * f2, 2 * t * f1, q * f1},
           {f2, f1, h * f1},
           {h * f2 + h * f3, 2 * t * f1 + t * f2, 3 * q * f1},
           {f3, t * f1 + 2 * t * f2, f1}}};
}

inline BValues b_values(const Rational& s, const WeightTriple& w,
                        FPolicy policy = FPolicy::kStrict) {
  BValues out;
  auto c = b_coefficients(s, policy, &out.extended);
  for (int i = 0; i < 5; ++i) out.b[i] = c[i][0] * w.x + c[i][1] * w.y + c[i][2] * w.z;
  return out;
}

struct LpRho {
  Rational rho;
  WeightTriple w;
  bool extended = false;
};

// max rho s.t. rho <= b_l for every l, x + y + z <= 1, x, y, z >= 0.
inline LpRho lp_rho(const Rational& s) {
  if (s < 1 || s > 6) throw DomainError("lp_rho needs 1 <= s <= 6");
  bool extended = false;
  auto c = b_coefficients(s, FPolicy::kExtended, &extended);
  // Variables (rho, x, y, z); rows are A v <= b.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (const auto& row : c) {
    A.push_back({1, -row[0], -row[1], -row[2]});
    rhs.push_back(0);
  }
  A.push_back({0, 1, 1, 1});
  rhs.push_back(1);
  for (int j = 1; j <= 3; ++j) {
    std::vector<Rational> row(4, Rational(0));
    row[j] = -1;
    A.push_back(row);
    rhs.push_back(0);
  }
  auto sol = maximize_by_vertices<Rational>({1, 0, 0, 0}, A, rhs);
  if (!sol) throw std::logic_error("LP has no vertex");
  return {sol->value, {sol->x[1], sol->x[2], sol->x[3]}, extended};
}

struct RatioRange {
  Rational lo;
  Rational hi;
  const char* text;
  Formula ratio;
  bool contains(const Rational& s) const { return lo <= s && s <= hi; }
  bool interior(const Rational& s) const { return lo < s && s < hi; }
};

inline const std::vector<RatioRange>& table1_ranges() {
  static const std::vector<RatioRange> r = {
      {1, 2, "219/(26s+26)", [](const Rational& s) { return Rational(219) / poly(s, {26, 26}); }},
      {2, Rational(7, 3), "(28s^2+24s+12)/(5s^3+6s^2)",
       [](const Rational& s) { return poly(s, {28, 24, 12}) / poly(s, {5, 6, 0, 0}); }},
      {Rational(7, 3), Rational(17, 7), "(-4s^3+40s^2-12s+8)/(s^4-2s^3+11s^2)",
       [](const Rational& s) { return poly(s, {-4, 40, -12, 8}) / poly(s, {1, -2, 11, 0, 0}); }},
      {Rational(17, 7), Rational(5, 2), "(68s^3-172s^2-140s-92)/(11s^4-21s^3-50s^2)",
       [](const Rational& s) {
         return poly(s, {68, -172, -140, -92}) / poly(s, {11, -21, -50, 0, 0});
       }},
      {Rational(5, 2), 3, "(292s^3-1636s^2+2672s-1472)/(39s^4-183s^3+180s^2)",
       [](const Rational& s) {
         return poly(s, {292, -1636, 2672, -1472}) / poly(s, {39, -183, 180, 0, 0});
       }},
      {3, 4, "(12s^2+8s+16)/(s^3+6s^2)",
       [](const Rational& s) { return poly(s, {12, 8, 16}) / poly(s, {1, 6, 0, 0}); }},
      {4, 5, "(-s+16)/(s+4)", [](const Rational& s) { return poly(s, {-1, 16}) / poly(s, {1, 4}); }},
      {5, 6, "(3s-26)/(s-14)", [](const Rational& s) { return poly(s, {3, -26}) / poly(s, {1, -14}); }},
  };
  return r;
}

// Approximation ratio at gamma = 1; the better (smaller) one at a joint.
inline Rational table1_ratio(const Rational& s) {
  if (s < 1 || s > 6) throw DomainError("table1_ratio needs 1 <= s <= 6");
  std::optional<Rational> best;
  for (const auto& rg : table1_ranges()) {
    if (!rg.contains(s)) continue;
    Rational v = rg.ratio(s);
    if (!best || v < *best) best = v;
  }
  return *best;
}

using WeightFormula = WeightTriple (*)(const Rational&);

// Weight triples per range, with three printing slips corrected: the
// second range's z reads 4s^2 (printed "4s^s"), the third range's z
// numerator is -4s^3+24s^2-32s+2 (printed with the opposite sign) and the
// sixth range's x numerator is 2s^2+2s (printed 2s^2+2).
inline const std::vector<WeightFormula>& weight_formulas() {
  static const std::vector<WeightFormula> w = {
      [](const Rational&) { return WeightTriple{Rational(50, 73), Rational(6, 73), Rational(17, 73)}; },
      [](const Rational& s) {
        Rational d = poly(s, {7, 6, 3});
        return WeightTriple{poly(s, {6, 3, 0}) / d, poly(s, {-3, 9, 0}) / d, poly(s, {4, -6, 3}) / d};
      },
      [](const Rational& s) {
        Rational d = poly(s, {-1, 10, -3, 2});
        return WeightTriple{poly(s, {4, 2, 0}) / d, poly(s, {3, -18, 27, 0}) / d,
                            poly(s, {-4, 24, -32, 2}) / d};
      },
      [](const Rational& s) {
        Rational d = poly(s, {17, -43, -35, -23});
        return WeightTriple{poly(s, {14, -39, -23, 0}) / d, poly(s, {-9, 54, -81, 0}) / d,
                            poly(s, {12, -58, 69, -23}) / d};
      },
      [](const Rational& s) {
        Rational d = poly(s, {73, -409, 668, -368});
        return WeightTriple{poly(s, {28, -120, 92, 0}) / d, poly(s, {33, -189, 264, 0}) / d,
                            poly(s, {12, -100, 312, -368}) / d};
      },
      [](const Rational& s) {
        Rational d = poly(s, {3, 2, 4});
        return WeightTriple{poly(s, {2, 2, 0}) / d, poly(s, {-3, 12, 0}) / d, poly(s, {4, -12, 4}) / d};
      },
      [](const Rational& s) {
        Rational d = poly(s, {-1, 16});
        return WeightTriple{poly(s, {2, -2}) / d, poly(s, {-3, 18}) / d, Rational(0)};
      },
      [](const Rational& s) {
        Rational d = poly(s, {-3, 26});
        return WeightTriple{Rational(8) / d, poly(s, {-3, 18}) / d, Rational(0)};
      },
  };
  return w;
}

// The two slips that change values, exactly as printed (kept for tests).
inline WeightTriple printed_third_range_weights(const Rational& s) {
  WeightTriple w = weight_formulas()[2](s);
  w.z = poly(s, {4, -24, 32, -2}) / poly(s, {-1, 10, -3, 2});
  return w;
}
inline WeightTriple printed_sixth_range_weights(const Rational& s) {
  WeightTriple w = weight_formulas()[5](s);
  w.x = poly(s, {2, 0, 2}) / poly(s, {3, 2, 4});
  return w;
}

struct RatioRow {
  Rational s;
  Rational ratio;        // table1_ratio(s)
  Rational fraction;     // 1 / ratio
  Rational lp;           // lp_rho(s)
  Rational weights_min_b;  // best min(b) over the ranges containing s
  bool weights_feasible = true;  // on every range whose interior holds s
  bool interior_exact = true;    // min(b) equals that range's fraction
  bool extended = false;         // some f was evaluated past its domain
  bool weights_ok() const { return weights_min_b >= fraction; }
  bool lp_ok() const { return lp >= fraction; }
  bool lp_dominates() const { return lp >= weights_min_b; }
  bool ok() const {
    return weights_feasible && interior_exact && weights_ok() && lp_ok() && lp_dominates();
  }
  Rational slack() const { return lp - fraction; }
};

struct RatioReport {
  std::vector<RatioRow> rows;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
  }
};

inline RatioRow ratio_row(const Rational& s) {
  RatioRow row;
  row.s = s;
  row.ratio = table1_ratio(s);
  row.fraction = Rational(1) / row.ratio;
  LpRho lp = lp_rho(s);
  row.lp = lp.rho;
  row.extended = lp.extended;
  const auto& ranges = table1_ranges();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (!ranges[i].contains(s)) continue;
    WeightTriple w = weight_formulas()[i](s);
    BValues b = b_values(s, w, FPolicy::kExtended);
    row.extended = row.extended || b.extended;
    Rational m = b.min();
    if (!best || m > *best) best = m;
    if (ranges[i].interior(s)) {
      if (!w.feasible()) row.weights_feasible = false;
      if (m != Rational(1) / ranges[i].ratio(s)) row.interior_exact = false;
    }
  }
  row.weights_min_b = *best;
  return row;
}

inline RatioReport verify_theorem91(const Rational& grid_step, int jobs = 1) {
  if (grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<Rational> grid;
  for (Rational s(1); s <= 6; s += grid_step) grid.push_back(s);
  RatioReport rep;
  rep.rows.resize(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) { rep.rows[i] = ratio_row(grid[i]); });
  return rep;
}

}  // namespace repairman::bounds

#endif  // REPAIRMAN_BOUNDS_HPP_
