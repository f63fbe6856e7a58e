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

#ifndef REPAIRMAN_RATIONAL_HPP_
#define REPAIRMAN_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repairman {

// Exact fraction over int64 with 128-bit intermediates. Every operation
// reduces and range-checks its result; overflow throws instead of wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(int_type n) : num_(n) {}  // NOLINT: implicit by design
  Rational(int_type n, int_type d) { Assign(n, d); }

  int_type num() const { return num_; }
  int_type den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // Largest integer <= *this.
  int_type floor() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  int_type ceil() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  // Display only; never used on a verification path.
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Canonical "p/q" text (denominator always written).
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or an integer "p", optional leading sign. Decimals are
  // rejected on purpose.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> int_type {
      if (s.empty()) throw std::invalid_argument("bad rational: " + std::string(text));
      std::size_t pos = 0;
      bool neg = false;
      if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
      }
      if (pos == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
      __int128 v = 0;
      for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') {
          throw std::invalid_argument("bad rational: " + std::string(text));
        }
        v = v * 10 + (c - '0');
        if (v > std::numeric_limits<int_type>::max()) {
          throw std::overflow_error("rational literal out of range: " + std::string(text));
        }
      }
      return static_cast<int_type>(neg ? -v : v);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

  Rational operator-() const { return FromWide(-static_cast<__int128>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
      return FromWide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    return FromWide(static_cast<__int128>(a.num_) * b.den_ +
                        static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    int_type g1 = std::gcd(a.num_, b.den_);
    int_type g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return FromWide(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                    static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=>
           static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
  }

 private:
  void Assign(int_type n, int_type d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = FromWide(n, d);
  }

  static __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational FromWide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = Gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = std::numeric_limits<int_type>::max();
    if (n > kMax || n < -kMax || d > kMax) {
      throw std::overflow_error("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace repairman

template <>
struct std::hash<repairman::Rational> {
  std::size_t operator()(const repairman::Rational& x) const noexcept {
    return std::hash<std::int64_t>()(x.num()) * 1000003u ^
           std::hash<std::int64_t>()(x.den());
  }
};

#endif  // REPAIRMAN_RATIONAL_HPP_
