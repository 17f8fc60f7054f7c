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

#ifndef SOFTCA_SYSTEM_HPP
#define SOFTCA_SYSTEM_HPP

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "softca/cas.hpp"
#include "softca/formula.hpp"
#include "softca/lasso.hpp"
#include "softca/sca.hpp"
#include "softca/semiring.hpp"

namespace softca {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent system file. `where` is a JSON pointer.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// The action system in a file violates its axioms.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(ValidationReport report, const std::string& message)
      : std::runtime_error(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

namespace io {

inline Weight weight_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Weight::parse(j.get<std::string>());
    if (j.is_number()) return Weight::parse(j.dump());
  } catch (const std::exception& e) {
    throw LoadError(where, e.what());
  }
  throw LoadError(where, "expected a number or \"inf\"");
}

inline json weight_to_json(const Weight& w) {
  if (w.is_infinite()) return "inf";
  if (w.micros() % Weight::kScale == 0) return w.micros() / Weight::kScale;
  return json::parse(w.to_string());
}

template <CSemiring S>
struct Codec;

template <>
struct Codec<WeightedSemiring> {
  static Weight read(const WeightedSemiring& s, const json& j, const std::string& where) {
    Weight w = weight_from_json(j, where);
    if (!s.contains(w)) throw LoadError(where, "value outside the semiring carrier");
    return w;
  }
  static json write(const Weight& w) { return weight_to_json(w); }
  static json spec() { return "weighted"; }
};

template <CSemiring A, CSemiring B>
struct Codec<ProductSemiring<A, B>> {
  static ValueOf<ProductSemiring<A, B>> read(const ProductSemiring<A, B>& s, const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw LoadError(where, "expected a pair");
    return {Codec<A>::read(s.first, j[0], where + "/0"), Codec<B>::read(s.second, j[1], where + "/1")};
  }
  static json write(const ValueOf<ProductSemiring<A, B>>& v) {
    return json::array({Codec<A>::write(v.first), Codec<B>::write(v.second)});
  }
  static json spec() { return json{{"product", json::array({Codec<A>::spec(), Codec<B>::spec()})}}; }
};

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw LoadError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw LoadError(where, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw LoadError(where, "expected a string");
  return j.get<std::string>();
}

inline const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where, "expected an array");
  return j;
}

inline Action action_at(const Cas& cas, const json& j, const std::string& where) {
  auto name = string_at(j, where);
  auto a = cas.find(name);
  if (!a) throw LoadError(where, "unknown action '" + name + "'");
  return *a;
}

}  // namespace io

/// Everything declared in one system file, over semiring S.
template <CSemiring S>
struct SystemOver {
  using Value = ValueOf<S>;

  S semiring;
  std::shared_ptr<const Cas> cas;
  bool closure = false;
  std::vector<Cas::Composition> generators;
  ValidationReport report;
  std::map<std::string, Sca<S>> scas;
  std::map<std::string, std::vector<std::string>> compositions;
  std::map<std::string, std::string> formula_texts;
  std::map<std::string, FormulaPtr> formulas;
  std::map<std::string, Lasso<Action>> lassos;

  bool has_automaton(const std::string& name) const { return scas.count(name) || compositions.count(name); }

  /// A named SCA, or the composition of a named list of SCAs.
  Sca<S> automaton(const std::string& name) const {
    if (auto it = scas.find(name); it != scas.end()) return it->second;
    auto it = compositions.find(name);
    if (it == compositions.end()) throw std::invalid_argument("no automaton or composition named '" + name + "'");
    return compose_all(it->second);
  }

  Sca<S> compose_all(const std::vector<std::string>& names) const {
    if (names.empty()) throw std::invalid_argument("empty composition");
    auto get = [&](const std::string& n) {
      auto it = scas.find(n);
      if (it == scas.end()) throw std::invalid_argument("no automaton named '" + n + "'");
      return it->second;
    };
    Sca<S> acc = get(names[0]);
    for (std::size_t i = 1; i < names.size(); ++i) acc = compose(acc, get(names[i]));
    return acc;
  }

  const FormulaPtr& formula(const std::string& name) const {
    auto it = formulas.find(name);
    if (it == formulas.end()) throw std::invalid_argument("no formula named '" + name + "'");
    return it->second;
  }
  const Lasso<Action>& lasso(const std::string& name) const {
    auto it = lassos.find(name);
    if (it == lassos.end()) throw std::invalid_argument("no lasso named '" + name + "'");
    return it->second;
  }

  Value parse_value(const std::string& text) const {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      j = text;
    }
    return io::Codec<S>::read(semiring, j, "value");
  }
  std::string format_value(const Value& v) const { return semiring.format(v); }
  json value_json(const Value& v) const { return io::Codec<S>::write(v); }

  std::string format(const Lasso<Action>& l) const {
    return format_lasso(l, [&](Action a) { return cas->name(a); });
  }
  json lasso_json(const Lasso<Action>& l) const {
    json p = json::array(), c = json::array();
    for (auto a : l.prefix()) p.push_back(cas->name(a));
    for (auto a : l.cycle()) c.push_back(cas->name(a));
    return json{{"prefix", p}, {"cycle", c}};
  }
  Lasso<Action> lasso_from_json(const json& j, const std::string& where) const {
    std::vector<Action> p, c;
    const auto& jp = io::array_at(io::field(j, "prefix", where), where + "/prefix");
    const auto& jc = io::array_at(io::field(j, "cycle", where), where + "/cycle");
    for (std::size_t i = 0; i < jp.size(); ++i) p.push_back(io::action_at(*cas, jp[i], where + "/prefix/" + std::to_string(i)));
    for (std::size_t i = 0; i < jc.size(); ++i) c.push_back(io::action_at(*cas, jc[i], where + "/cycle/" + std::to_string(i)));
    if (c.empty()) throw LoadError(where + "/cycle", "cycle must be nonempty");
    return Lasso<Action>(std::move(p), std::move(c));
  }

  json sca_json(const Sca<S>& a) const {
    json ts = json::array();
    for (const auto& t : a.transitions())
      ts.push_back({{"from", a.state_name(t.from)},
                    {"action", cas->name(t.action)},
                    {"pref", value_json(t.pref)},
                    {"to", a.state_name(t.to)}});
    return json{{"states", a.states()},
                {"initial", a.state_name(a.initial())},
                {"threshold", value_json(a.threshold())},
                {"transitions", ts}};
  }

  json to_json() const {
    json composable = json::array();
    for (const auto& c : (closure ? generators : cas->compositions()))
      composable.push_back({{"pair", {cas->name(c.a), cas->name(c.b)}}, {"result", cas->name(c.result)}});
    json j;
    j["semiring"] = io::Codec<S>::spec();
    j["cas"] = {{"actions", cas->names()}, {"composable", composable}, {"closure", closure}};
    j["scas"] = json::object();
    for (const auto& [name, a] : scas) j["scas"][name] = sca_json(a);
    j["compositions"] = compositions;
    j["formulas"] = formula_texts;
    j["lassos"] = json::object();
    for (const auto& [name, l] : lassos) j["lassos"][name] = lasso_json(l);
    return j;
  }
};

using System = std::variant<SystemOver<WeightedSemiring>, SystemOver<WeightedPair>>;

struct LoadOptions {
  /// Reject files whose action system violates an axiom.
  bool require_valid = true;
};

namespace io {

template <CSemiring S>
Sca<S> sca_from_json(const SystemOver<S>& sys, const std::string& label, const json& j, const std::string& where) {
  std::vector<std::string> states;
  const auto& js = array_at(field(j, "states", where), where + "/states");
  for (std::size_t i = 0; i < js.size(); ++i) {
    auto name = string_at(js[i], where + "/states/" + std::to_string(i));
    if (std::find(states.begin(), states.end(), name) != states.end())
      throw LoadError(where + "/states/" + std::to_string(i), "duplicate state '" + name + "'");
    states.push_back(std::move(name));
  }
  if (states.empty()) throw LoadError(where + "/states", "no states");
  auto state_at = [&](const json& x, const std::string& w) {
    auto name = string_at(x, w);
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) throw LoadError(w, "unknown state '" + name + "'");
    return static_cast<State>(it - states.begin());
  };
  State initial = state_at(field(j, "initial", where), where + "/initial");
  auto threshold = Codec<S>::read(sys.semiring, field(j, "threshold", where), where + "/threshold");
  std::vector<typename Sca<S>::Transition> ts;
  const auto& jt = array_at(field(j, "transitions", where), where + "/transitions");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    auto w = where + "/transitions/" + std::to_string(i);
    ts.push_back({state_at(field(jt[i], "from", w), w + "/from"), action_at(*sys.cas, field(jt[i], "action", w), w + "/action"),
                  Codec<S>::read(sys.semiring, field(jt[i], "pref", w), w + "/pref"),
                  state_at(field(jt[i], "to", w), w + "/to")});
  }
  return Sca<S>(sys.semiring, sys.cas, std::move(states), initial, threshold, std::move(ts), label);
}

template <CSemiring S>
SystemOver<S> load_over(S semiring, const json& j, const LoadOptions& options) {
  SystemOver<S> sys{std::move(semiring), nullptr, false, {}, {}, {}, {}, {}, {}, {}};
  const auto& jc = field(j, "cas", "");
  std::vector<std::string> names;
  const auto& ja = array_at(field(jc, "actions", "/cas"), "/cas/actions");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    auto name = string_at(ja[i], "/cas/actions/" + std::to_string(i));
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw LoadError("/cas/actions/" + std::to_string(i), "duplicate action '" + name + "'");
    names.push_back(std::move(name));
  }
  auto find = [&](const json& x, const std::string& w) {
    auto name = string_at(x, w);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw LoadError(w, "unknown action '" + name + "'");
    return static_cast<Action>(it - names.begin());
  };
  if (auto it = jc.find("closure"); it != jc.end()) {
    if (!it->is_boolean()) throw LoadError("/cas/closure", "expected a boolean");
    sys.closure = it->get<bool>();
  }
  const auto& jp = array_at(field(jc, "composable", "/cas"), "/cas/composable");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    auto w = "/cas/composable/" + std::to_string(i);
    const auto& pair = array_at(field(jp[i], "pair", w), w + "/pair");
    if (pair.size() != 2) throw LoadError(w + "/pair", "expected two actions");
    sys.generators.push_back({find(pair[0], w + "/pair/0"), find(pair[1], w + "/pair/1"), find(field(jp[i], "result", w), w + "/result")});
  }
  if (sys.closure) {
    try {
      auto closed = close_cas(names, sys.generators, true);
      sys.cas = std::make_shared<const Cas>(std::move(closed.cas));
      sys.report = std::move(closed.report);
    } catch (const UnderSpecifiedError& e) {
      throw LoadError("/cas", e.what());
    }
  } else {
    // generator pairs are taken as given: the relation is their reflexive,
    // symmetric closure
    std::vector<Cas::Entry> entries;
    for (Action a = 0; a < names.size(); ++a) entries.push_back({a, a, a});
    for (const auto& g : sys.generators) {
      entries.push_back({g.a, g.b, g.result});
      if (g.a != g.b) entries.push_back({g.b, g.a, g.result});
    }
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    // a later entry for the same ordered pair would silently win; reject it
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].a == entries[i - 1].a && entries[i].b == entries[i - 1].b && entries[i].result != entries[i - 1].result)
        throw LoadError("/cas/composable", "conflicting results for " + names[entries[i].a] + " and " + names[entries[i].b]);
    sys.cas = std::make_shared<const Cas>(names, entries);
    sys.report = sys.cas->validate();
  }
  if (options.require_valid && !sys.report.ok()) {
    std::string msg = "action system violates its axioms:";
    for (const auto& line : sys.report.describe(*sys.cas)) msg += "\n  " + line;
    throw AxiomError(sys.report, msg);
  }
  if (auto it = j.find("scas"); it != j.end()) {
    if (!it->is_object()) throw LoadError("/scas", "expected an object");
    for (const auto& [name, body] : it->items()) sys.scas.emplace(name, sca_from_json(sys, name, body, "/scas/" + name));
  }
  if (auto it = j.find("compositions"); it != j.end()) {
    if (!it->is_object()) throw LoadError("/compositions", "expected an object");
    for (const auto& [name, body] : it->items()) {
      auto w = "/compositions/" + name;
      if (sys.scas.count(name)) throw LoadError(w, "name clashes with an automaton");
      std::vector<std::string> parts;
      const auto& arr = array_at(body, w);
      if (arr.empty()) throw LoadError(w, "empty composition");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto part = string_at(arr[i], w + "/" + std::to_string(i));
        if (!sys.scas.count(part)) throw LoadError(w + "/" + std::to_string(i), "unknown automaton '" + part + "'");
        parts.push_back(std::move(part));
      }
      sys.compositions.emplace(name, std::move(parts));
    }
  }
  if (auto it = j.find("formulas"); it != j.end()) {
    if (!it->is_object()) throw LoadError("/formulas", "expected an object");
    for (const auto& [name, body] : it->items()) {
      auto w = "/formulas/" + name;
      auto text = string_at(body, w);
      try {
        sys.formulas.emplace(name, parse_formula(text, *sys.cas));
      } catch (const ParseError& e) {
        throw LoadError(w, e.what());
      }
      sys.formula_texts.emplace(name, std::move(text));
    }
  }
  if (auto it = j.find("lassos"); it != j.end()) {
    if (!it->is_object()) throw LoadError("/lassos", "expected an object");
    for (const auto& [name, body] : it->items()) sys.lassos.emplace(name, sys.lasso_from_json(body, "/lassos/" + name));
  }
  return sys;
}

}  // namespace io

/// Builds a system from parsed JSON.
inline System load_system(const json& j, const LoadOptions& options = {}) {
  const auto& spec = io::field(j, "semiring", "");
  if (spec == "weighted") return io::load_over(WeightedSemiring{}, j, options);
  if (spec == json{{"product", {"weighted", "weighted"}}}) return io::load_over(WeightedPair{}, j, options);
  throw LoadError("/semiring", "unsupported semiring " + spec.dump());
}

/// Reads and builds a system file.
inline System load_system_file(const std::string& path, const LoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw LoadError(path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LoadError(path, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return load_system(j, options);
  } catch (const LoadError& e) {
    throw LoadError(path + "#" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

inline json to_json(const System& s) {
  return std::visit([](const auto& sys) { return sys.to_json(); }, s);
}

}  // namespace softca

#endif  // SOFTCA_SYSTEM_HPP
