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

#ifndef SOFTCA_FORMULA_HPP
#define SOFTCA_FORMULA_HPP

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "softca/cas.hpp"

namespace softca {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Core syntax of the temporal logic. Derived connectives are expanded by
/// the constructors below.
struct Formula {
  enum class Kind { Top, Atom, And, Until, Next, Not, Captures, Composable };

  Kind kind;
  Action atom = 0;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

inline FormulaPtr make(Formula::Kind k, FormulaPtr l = nullptr, FormulaPtr r = nullptr) {
  return std::make_shared<const Formula>(Formula{k, 0, std::move(l), std::move(r)});
}

inline FormulaPtr top() { return make(Formula::Kind::Top); }
inline FormulaPtr atom(Action a) { return std::make_shared<const Formula>(Formula{Formula::Kind::Atom, a, nullptr, nullptr}); }
inline FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return make(Formula::Kind::And, std::move(l), std::move(r)); }
inline FormulaPtr until(FormulaPtr l, FormulaPtr r) { return make(Formula::Kind::Until, std::move(l), std::move(r)); }
inline FormulaPtr next(FormulaPtr f) { return make(Formula::Kind::Next, std::move(f)); }
inline FormulaPtr neg(FormulaPtr f) { return make(Formula::Kind::Not, std::move(f)); }
inline FormulaPtr cap(FormulaPtr f) { return make(Formula::Kind::Captures, std::move(f)); }
inline FormulaPtr cmp(FormulaPtr f) { return make(Formula::Kind::Composable, std::move(f)); }

inline FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return neg(conj(neg(std::move(l)), neg(std::move(r)))); }
inline FormulaPtr implies(FormulaPtr l, FormulaPtr r) { return disj(neg(std::move(l)), std::move(r)); }
inline FormulaPtr eventually(FormulaPtr f) { return until(top(), std::move(f)); }
inline FormulaPtr always(FormulaPtr f) { return neg(eventually(neg(std::move(f)))); }
inline FormulaPtr next_n(std::size_t n, FormulaPtr f) {
  while (n-- > 0) f = next(std::move(f));
  return f;
}

inline bool unary(Formula::Kind k) {
  using K = Formula::Kind;
  return k == K::Next || k == K::Not || k == K::Captures || k == K::Composable;
}

inline bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Formula::Kind::Atom) return a.atom == b.atom;
  if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
  return true;
}
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

inline std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.lhs) d = std::max(d, depth(*f.lhs));
  if (f.rhs) d = std::max(d, depth(*f.rhs));
  return f.kind == Formula::Kind::Top || f.kind == Formula::Kind::Atom ? 0 : d + 1;
}

/// Whether the formula uses the captures or composable connectives.
inline bool has_lift(const Formula& f) {
  if (f.kind == Formula::Kind::Captures || f.kind == Formula::Kind::Composable) return true;
  return (f.lhs && has_lift(*f.lhs)) || (f.rhs && has_lift(*f.rhs));
}

/// Prints in the concrete syntax; the output parses back to the same tree.
inline std::string to_string(const Formula& f, const Cas& cas) {
  using K = Formula::Kind;
  auto operand = [&](const FormulaPtr& g) {
    auto s = to_string(*g, cas);
    return unary(g->kind) || g->kind == K::Top || g->kind == K::Atom ? s : "(" + s + ")";
  };
  switch (f.kind) {
    case K::Top: return "T";
    case K::Atom: return cas.name(f.atom);
    case K::And: return operand(f.lhs) + " & " + operand(f.rhs);
    case K::Until: return operand(f.lhs) + " U " + operand(f.rhs);
    case K::Next: return "X " + operand(f.lhs);
    case K::Not: return "!" + operand(f.lhs);
    case K::Captures: return "cap " + operand(f.lhs);
    case K::Composable: return "cmp " + operand(f.lhs);
  }
  return {};
}
inline std::string to_string(const FormulaPtr& f, const Cas& cas) { return to_string(*f, cas); }

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Cas& cas) : text_(text), cas_(cas) {}

  FormulaPtr parse() {
    auto f = parse_until();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(peek_token()) + "'");
    return f;
  }

 private:
  // U binds weakest; U and -> associate to the right.
  FormulaPtr parse_until() {
    auto l = parse_implies();
    if (accept_word("U")) return until(l, parse_until());
    return l;
  }
  FormulaPtr parse_implies() {
    auto l = parse_or();
    if (accept("->")) return implies(l, parse_implies());
    return l;
  }
  FormulaPtr parse_or() {
    auto l = parse_and();
    while (accept("|")) l = disj(l, parse_and());
    return l;
  }
  FormulaPtr parse_and() {
    auto l = parse_unary();
    while (accept("&")) l = conj(l, parse_unary());
    return l;
  }
  FormulaPtr parse_unary() {
    skip();
    if (accept("!")) return neg(parse_unary());
    if (accept("[]")) return always(parse_unary());
    if (accept("<>")) return eventually(parse_unary());
    if (accept_word("X")) return next(parse_unary());
    if (accept_word("cap")) return cap(parse_unary());
    if (accept_word("cmp")) return cmp(parse_unary());
    if (accept("(")) {
      auto f = parse_until();
      if (!accept(")")) throw ParseError(pos_, at_end() ? "expected ')' at end of input" : "expected ')'");
      return f;
    }
    if (accept_word("T")) return top();
    std::size_t start = pos_;
    std::string_view word = identifier();
    if (word.empty()) {
      if (at_end()) throw ParseError(pos_, "unexpected end of input");
      throw ParseError(pos_, "unexpected '" + std::string(peek_token()) + "'");
    }
    if (word == "U") throw ParseError(start, "unexpected 'U'");
    auto a = cas_.find(word);
    if (!a) throw ParseError(start, "unknown action '" + std::string(word) + "'");
    pos_ = start + word.size();
    return atom(*a);
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ == text_.size();
  }
  std::string_view identifier() {
    skip();
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }
  std::string_view peek_token() {
    auto w = identifier();
    return w.empty() ? text_.substr(pos_, 1) : w;
  }
  bool accept(std::string_view sym) {
    skip();
    if (text_.substr(pos_, sym.size()) != sym) return false;
    pos_ += sym.size();
    return true;
  }
  bool accept_word(std::string_view word) {
    if (identifier() != word) return false;
    pos_ += word.size();
    return true;
  }

  std::string_view text_;
  const Cas& cas_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the concrete syntax:
///   atoms are action names, T is true;
///   prefix  ! X [] <> cap cmp;
///   infix   & | -> U, from tightest to loosest.
inline FormulaPtr parse_formula(std::string_view text, const Cas& cas) {
  return detail::FormulaParser(text, cas).parse();
}

}  // namespace softca

#endif  // SOFTCA_FORMULA_HPP
