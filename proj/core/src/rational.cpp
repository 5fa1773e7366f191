// Copyright 2026 The Authors.
//
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

#include "polylat/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "polylat/error.hpp"

namespace polylat {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("rational multiplication overflows int64");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("rational addition overflows int64");
  }
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == kMin) throw OverflowError("rational negation overflows int64");
  return -a;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("rational component out of int64 range: " +
                        std::string(whole));
  }
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvariantError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvariantError("rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  // std::gcd on kMin is undefined; reduce by two first when needed.
  while (num == kMin && den % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  if (num == kMin) {
    num_ = num;
    den_ = den;
    return;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t left = checked_mul(num_, o.den_ / g);
  std::int64_t right = checked_mul(o.num_, den_ / g);
  *this = Rational(checked_add(left, right), checked_mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first so that products of reduced fractions stay small.
  std::int64_t g1 = std::gcd(num_ == kMin ? 2 : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ == kMin ? 2 : o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(checked_mul(num_ / g1, o.num_ / g2),
                   checked_mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvariantError("rational division by zero");
  Rational inverse;
  inverse.num_ = o.num_ < 0 ? checked_neg(o.den_) : o.den_;
  inverse.den_ = o.num_ < 0 ? checked_neg(o.num_) : o.num_;
  return *this *= inverse;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // 128-bit cross products cannot overflow for int64 inputs.
  __extension__ using Wide = __int128;
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvariantError("not a rational number: '" + std::string(text) + "'");
  }
  std::int64_t den = parse_int(den_text, text);
  if (den == 0) {
    throw InvariantError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace polylat
