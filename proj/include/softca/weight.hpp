// Copyright 2026 The softca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTCA_WEIGHT_HPP
#define SOFTCA_WEIGHT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace softca {

/// Exact nonnegative decimal or infinity, stored as a count of millionths.
///
/// Equality is exact. Negative finite values can be represented so that
/// carrier checks have something to reject; the weighted semiring refuses
/// them.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Weight() = default;
  constexpr Weight(int units) : micros_(std::int64_t{units} * kScale) {}  // NOLINT
  Weight(double) = delete;

  static constexpr Weight from_micros(std::int64_t micros) {
    Weight w;
    w.micros_ = micros;
    return w;
  }
  static constexpr Weight infinity() {
    Weight w;
    w.infinite_ = true;
    return w;
  }

  /// Parses `inf` or a decimal with at most six fractional digits.
  static Weight parse(std::string_view text) {
    if (text == "inf" || text == "Infinity" || text == "infinity") return infinity();
    bool negative = false;
    std::string_view rest = text;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
      negative = rest.front() == '-';
      rest.remove_prefix(1);
    }
    auto dot = rest.find('.');
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
    if (frac.size() > 6) throw std::invalid_argument("weight '" + std::string(text) + "' has more than six fractional digits");
    std::int64_t units = 0;
    if (!whole.empty()) {
      auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
      if (ec != std::errc{} || p != whole.data() + whole.size())
        throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
    }
    std::int64_t fraction = 0;
    if (!frac.empty()) {
      auto [p, ec] = std::from_chars(frac.data(), frac.data() + frac.size(), fraction);
      if (ec != std::errc{} || p != frac.data() + frac.size())
        throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
      for (std::size_t i = frac.size(); i < 6; ++i) fraction *= 10;
    }
    if (units > std::numeric_limits<std::int64_t>::max() / kScale - 1)
      throw std::out_of_range("weight '" + std::string(text) + "' too large");
    std::int64_t micros = units * kScale + fraction;
    return from_micros(negative ? -micros : micros);
  }

  /// Converts a double that must be an exact multiple of 1e-6.
  static Weight from_double(double value) {
    if (value == std::numeric_limits<double>::infinity()) return infinity();
    double scaled = value * static_cast<double>(kScale);
    if (!(scaled > -9e15 && scaled < 9e15)) throw std::out_of_range("weight out of range");
    auto micros = static_cast<std::int64_t>(scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
    double back = static_cast<double>(micros) / static_cast<double>(kScale);
    if (back != value && std::abs(back - value) > 1e-9 * std::max(1.0, std::abs(value)))
      throw std::invalid_argument("weight has more than six fractional digits");
    return from_micros(micros);
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr std::int64_t micros() const { return micros_; }
  constexpr bool is_negative() const { return !infinite_ && micros_ < 0; }

  /// Extended addition; infinity absorbs.
  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.infinite_ || b.infinite_) return infinity();
    std::int64_t out = 0;
    if (__builtin_add_overflow(a.micros_, b.micros_, &out)) throw std::overflow_error("weight overflow");
    return from_micros(out);
  }

  friend constexpr bool operator==(const Weight& a, const Weight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.micros_ == b.micros_);
  }
  /// Numeric order (not the semiring order).
  friend constexpr std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.micros_ <=> b.micros_;
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    std::int64_t m = micros_ < 0 ? -micros_ : micros_;
    std::string out = std::to_string(m / kScale);
    if (std::int64_t frac = m % kScale; frac != 0) {
      std::string digits = std::to_string(frac);
      digits.insert(0, 6 - digits.size(), '0');
      while (digits.back() == '0') digits.pop_back();
      out += "." + digits;
    }
    return micros_ < 0 ? "-" + out : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

 private:
  std::int64_t micros_ = 0;
  bool infinite_ = false;
};

}  // namespace softca

#endif  // SOFTCA_WEIGHT_HPP
