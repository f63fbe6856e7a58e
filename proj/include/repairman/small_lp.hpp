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

#ifndef REPAIRMAN_SMALL_LP_HPP_
#define REPAIRMAN_SMALL_LP_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "repairman/rational.hpp"

namespace repairman {

// Solves A x = b exactly; nullopt when A is singular.
template <typename T>
std::optional<std::vector<T>> solve_square(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == T(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == T(0)) continue;
      T f = a[row][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[row][c] -= f * a[col][c];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

template <typename T>
struct LpSolution {
  T value;
  std::vector<T> x;
  std::vector<std::size_t> basis;  // rows tight at the returned vertex
};

// max c.x subject to A x <= b by enumerating every vertex (n tight rows
// out of m). Exponential, meant for a handful of variables. Assumes the
// optimum is attained at a vertex; ties keep the first vertex in
// lexicographic row order. nullopt if no vertex is feasible.
template <typename T>
std::optional<LpSolution<T>> maximize_by_vertices(const std::vector<T>& c,
                                                  const std::vector<std::vector<T>>& A,
                                                  const std::vector<T>& b) {
  const std::size_t m = A.size(), n = c.size();
  if (b.size() != m) throw std::invalid_argument("row count mismatch");
  if (n == 0 || n > m) throw std::invalid_argument("need 1 <= n <= m");
  std::optional<LpSolution<T>> best;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<T>> sub;
    std::vector<T> rhs;
    for (std::size_t i : pick) {
      sub.push_back(A[i]);
      rhs.push_back(b[i]);
    }
    if (auto x = solve_square(std::move(sub), std::move(rhs))) {
      bool feasible = true;
      for (std::size_t row = 0; row < m && feasible; ++row) {
        T lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += A[row][j] * (*x)[j];
        feasible = lhs <= b[row];
      }
      if (feasible) {
        T val(0);
        for (std::size_t j = 0; j < n; ++j) val += c[j] * (*x)[j];
        if (!best || val > best->value) best = LpSolution<T>{val, *x, pick};
      }
    }
    // Next combination.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace repairman

#endif  // REPAIRMAN_SMALL_LP_HPP_
