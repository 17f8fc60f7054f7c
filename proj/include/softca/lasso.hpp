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

#ifndef SOFTCA_LASSO_HPP
#define SOFTCA_LASSO_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace softca {

/// An eventually periodic stream prefix . cycle^omega.
///
/// Kept in canonical form: the prefix is as short as possible and the cycle
/// is primitive (not a power of a shorter word). Two lassos are equal iff they
/// denote the same stream.
template <class T>
class Lasso {
 public:
  Lasso(std::vector<T> prefix, std::vector<T> cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
    canonicalize();
  }

  static Lasso periodic(std::vector<T> cycle) { return Lasso({}, std::move(cycle)); }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& cycle() const { return cycle_; }

  /// Number of distinct positions in the lasso shape.
  std::size_t positions() const { return prefix_.size() + cycle_.size(); }
  /// Successor of a lasso position; the last cycle position wraps.
  std::size_t next_position(std::size_t pos) const { return pos + 1 < positions() ? pos + 1 : prefix_.size(); }
  /// Letter at a lasso position (not a stream index).
  const T& letter(std::size_t pos) const { return pos < prefix_.size() ? prefix_[pos] : cycle_[pos - prefix_.size()]; }
  /// Lasso position holding stream index n.
  std::size_t position_of(std::size_t n) const {
    return n < prefix_.size() ? n : prefix_.size() + (n - prefix_.size()) % cycle_.size();
  }

  /// sigma(n)
  const T& operator[](std::size_t n) const { return letter(position_of(n)); }

  /// The k-th derivative: n |-> sigma(k + n).
  Lasso shift(std::size_t k) const {
    std::vector<T> prefix;
    std::vector<T> cycle;
    std::size_t start = position_of(k);
    if (start < prefix_.size()) {
      prefix.assign(prefix_.begin() + static_cast<std::ptrdiff_t>(start), prefix_.end());
      cycle = cycle_;
    } else {
      std::size_t offset = start - prefix_.size();
      cycle.assign(cycle_.begin() + static_cast<std::ptrdiff_t>(offset), cycle_.end());
      cycle.insert(cycle.end(), cycle_.begin(), cycle_.begin() + static_cast<std::ptrdiff_t>(offset));
    }
    return Lasso(std::move(prefix), std::move(cycle));
  }

  template <class F>
  auto map(F&& f) const -> Lasso<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    std::vector<U> p, c;
    for (const auto& x : prefix_) p.push_back(f(x));
    for (const auto& x : cycle_) c.push_back(f(x));
    return Lasso<U>(std::move(p), std::move(c));
  }

  friend bool operator==(const Lasso&, const Lasso&) = default;
  friend auto operator<=>(const Lasso& a, const Lasso& b) {
    if (auto c = a.prefix_.size() <=> b.prefix_.size(); c != 0) return c;
    if (auto c = a.cycle_.size() <=> b.cycle_.size(); c != 0) return c;
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return a.cycle_ <=> b.cycle_;
  }

 private:
  void canonicalize() {
    // primitive root of the cycle
    const std::size_t n = cycle_.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - d];
      if (periodic) {
        cycle_.resize(d);
        break;
      }
    }
    // fold the prefix into the cycle
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      prefix_.pop_back();
      std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
    }
  }

  std::vector<T> prefix_;
  std::vector<T> cycle_;
};

/// Renders `<a, b> . <c>^w` using a letter formatter.
template <class T, class F>
std::string format_lasso(const Lasso<T>& lasso, F&& fmt) {
  std::ostringstream os;
  auto word = [&](const std::vector<T>& w) {
    os << '<';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << fmt(w[i]);
    os << '>';
  };
  if (!lasso.prefix().empty()) {
    word(lasso.prefix());
    os << " . ";
  }
  word(lasso.cycle());
  os << "^w";
  return os.str();
}

}  // namespace softca

#endif  // SOFTCA_LASSO_HPP
