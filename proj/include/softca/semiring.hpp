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

#ifndef SOFTCA_SEMIRING_HPP
#define SOFTCA_SEMIRING_HPP

#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "softca/weight.hpp"

namespace softca {

// A c-semiring descriptor. Members implement the binary forms of the
// operations and do no carrier checks; the free functions below are the
// checked interface.
//
//   plus(a, b)  = bigSum({a, b})
//   meet(a, b)  = greatest lower bound in the derived order
template <class S>
concept CSemiring = std::copy_constructible<S> && requires(const S& s, const typename S::value_type& v) {
  typename S::value_type;
  { s.zero() } -> std::same_as<typename S::value_type>;
  { s.one() } -> std::same_as<typename S::value_type>;
  { s.contains(v) } -> std::convertible_to<bool>;
  { s.plus(v, v) } -> std::same_as<typename S::value_type>;
  { s.times(v, v) } -> std::same_as<typename S::value_type>;
  { s.meet(v, v) } -> std::same_as<typename S::value_type>;
  { s.format(v) } -> std::same_as<std::string>;
  { v == v } -> std::convertible_to<bool>;
};

template <CSemiring S>
using ValueOf = typename S::value_type;

template <CSemiring S>
void require_carrier(const S& s, const ValueOf<S>& v) {
  if (!s.contains(v)) throw std::domain_error("value " + s.format(v) + " is outside the semiring carrier");
}

template <CSemiring S>
ValueOf<S> times(const S& s, const ValueOf<S>& a, const ValueOf<S>& b) {
  require_carrier(s, a);
  require_carrier(s, b);
  return s.times(a, b);
}

/// Sum over a finite set; the empty sum is zero.
template <CSemiring S>
ValueOf<S> big_sum(const S& s, std::span<const ValueOf<S>> values) {
  ValueOf<S> acc = s.zero();
  for (const auto& v : values) {
    require_carrier(s, v);
    acc = s.plus(acc, v);
  }
  return acc;
}

/// Derived order: a <= b iff a + b = b.
template <CSemiring S>
bool leq(const S& s, const ValueOf<S>& a, const ValueOf<S>& b) {
  require_carrier(s, a);
  require_carrier(s, b);
  return s.plus(a, b) == b;
}

template <CSemiring S>
bool lt(const S& s, const ValueOf<S>& a, const ValueOf<S>& b) {
  return leq(s, a, b) && !(a == b);
}

/// Greatest lower bound of a finite nonempty set.
template <CSemiring S>
ValueOf<S> glb(const S& s, std::span<const ValueOf<S>> values) {
  if (values.empty()) throw std::domain_error("glb of an empty set");
  ValueOf<S> acc = values.front();
  require_carrier(s, acc);
  for (const auto& v : values.subspan(1)) {
    require_carrier(s, v);
    acc = s.meet(acc, v);
  }
  return acc;
}

/// Nonnegative extended reals; sum is infimum, product is addition,
/// zero is infinity and one is 0. Lower weight means higher preference.
struct WeightedSemiring {
  using value_type = Weight;

  Weight zero() const { return Weight::infinity(); }
  Weight one() const { return Weight{0}; }
  bool contains(const Weight& w) const { return !w.is_negative(); }
  Weight plus(const Weight& a, const Weight& b) const { return a < b ? a : b; }
  Weight times(const Weight& a, const Weight& b) const { return a + b; }
  // times is not idempotent here, so the meet is the numeric maximum
  Weight meet(const Weight& a, const Weight& b) const { return a < b ? b : a; }
  std::string format(const Weight& w) const { return w.to_string(); }

  friend bool operator==(const WeightedSemiring&, const WeightedSemiring&) = default;
};

/// Componentwise product of two c-semirings.
template <CSemiring A, CSemiring B>
struct ProductSemiring {
  using value_type = std::pair<ValueOf<A>, ValueOf<B>>;

  A first{};
  B second{};

  value_type zero() const { return {first.zero(), second.zero()}; }
  value_type one() const { return {first.one(), second.one()}; }
  bool contains(const value_type& v) const { return first.contains(v.first) && second.contains(v.second); }
  value_type plus(const value_type& a, const value_type& b) const {
    return {first.plus(a.first, b.first), second.plus(a.second, b.second)};
  }
  value_type times(const value_type& a, const value_type& b) const {
    return {first.times(a.first, b.first), second.times(a.second, b.second)};
  }
  value_type meet(const value_type& a, const value_type& b) const {
    return {first.meet(a.first, b.first), second.meet(a.second, b.second)};
  }
  std::string format(const value_type& v) const {
    return "<" + first.format(v.first) + "," + second.format(v.second) + ">";
  }

  friend bool operator==(const ProductSemiring&, const ProductSemiring&) = default;
};

using WeightedPair = ProductSemiring<WeightedSemiring, WeightedSemiring>;

}  // namespace softca

#endif  // SOFTCA_SEMIRING_HPP
