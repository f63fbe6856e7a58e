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

#include <limits>
#include <unordered_set>

#include <gtest/gtest.h>

#include "repairman/generator.hpp"
#include "repairman/rational.hpp"

namespace repairman {
namespace {

TEST(Rational, LowestTermsPositiveDenominator) {
  Rational a(6, -8);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 4);
  EXPECT_EQ(Rational(0, -5).den(), 1);
  EXPECT_ANY_THROW(Rational(1, 0));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_ANY_THROW(Rational(1) / Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(34, 100));
  EXPECT_GT(Rational(-1, 3), Rational(-34, 100));
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(-4).floor(), -4);
  EXPECT_EQ(Rational(-4).ceil(), -4);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational(3, 2).str(), "3/2");
  EXPECT_EQ(Rational(4).str(), "4/1");
  EXPECT_ANY_THROW(Rational::parse("1.5"));
  EXPECT_ANY_THROW(Rational::parse("1/"));
  EXPECT_ANY_THROW(Rational::parse(""));
  EXPECT_ANY_THROW(Rational::parse("1/0"));
  EXPECT_ANY_THROW(Rational::parse("2e3"));
}

TEST(Rational, RoundTripsRandomValues) {
  Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    Rational x(rng.uniform(-1000000, 1000000), rng.uniform(1, 100000));
    EXPECT_EQ(Rational::parse(x.str()), x);
  }
}

TEST(Rational, OverflowThrows) {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  EXPECT_THROW(Rational(big) * Rational(4), std::overflow_error);
  EXPECT_THROW(Rational(1, big) + Rational(1, big - 2), std::overflow_error);
  EXPECT_EQ(Rational(big) * Rational(2, 4), Rational(big, 2));
}

TEST(Rational, HashAndMinMax) {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3, 4)};
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(min(Rational(1, 2), Rational(1, 3)), Rational(1, 3));
  EXPECT_EQ(max(Rational(1, 2), Rational(1, 3)), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-2, 7)), Rational(2, 7));
}

}  // namespace
}  // namespace repairman
