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


#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "softca.hpp"

namespace {

using namespace softca;

enum Exit { kTrue = 0, kFalse = 1, kError = 2 };

struct Options {
  std::string file;
  bool json_output = false;
  std::size_t max_states = Limits{}.max_states;
  std::string dump_dir;
  bool timing = false;

  std::string automaton;
  std::string formula;
  std::string formula_text;
  std::string lasso;
  std::string threshold;
  std::string thresholds;
  std::string scas;
  std::string out;
  bool interface = false;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_output) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

template <CSemiring S>
Sca<S> apply_thresholds(const SystemOver<S>& sys, Sca<S> a, const Options& o) {
  if (!o.thresholds.empty()) {
    std::vector<ValueOf<S>> ts;
    if (o.thresholds.front() == '[') {
      for (const auto& v : json::parse(o.thresholds)) ts.push_back(io::Codec<S>::read(sys.semiring, v, "--thresholds"));
    } else {
      for (const auto& part : split(o.thresholds, ',')) ts.push_back(sys.parse_value(part));
    }
    a = a.with_factor_thresholds(ts);
  }
  if (!o.threshold.empty()) a = a.with_threshold(sys.parse_value(o.threshold));
  return a;
}

template <CSemiring S>
std::string describe_sca(const SystemOver<S>& sys, const Sca<S>& a, const std::string& name) {
  std::ostringstream os;
  os << name << ": " << a.size() << " states, " << a.transitions().size() << " transitions, initial "
     << a.state_name(a.initial()) << ", threshold " << sys.format_value(a.threshold()) << "\n";
  for (const auto& t : a.transitions())
    os << "  " << a.state_name(t.from) << " --" << sys.cas->name(t.action) << ", " << sys.format_value(t.pref) << "--> "
       << a.state_name(t.to) << "\n";
  return os.str();
}

void dump(const Options& o, const std::string& stem, const Ba& a, const Cas& cas) {
  if (o.dump_dir.empty()) return;
  std::filesystem::create_directories(o.dump_dir);
  std::ofstream out(std::filesystem::path(o.dump_dir) / (stem + ".hoa"));
  write_hoa(out, a, cas.names(), stem);
}

int run_validate(const Options& o) {
  auto sys = load_system_file(o.file, LoadOptions{false});
  return std::visit(
      [&](const auto& s) {
        json j{{"file", o.file},
               {"actions", s.cas->names()},
               {"automata", json::array()},
               {"valid", s.report.ok()},
               {"violations", s.report.describe(*s.cas)},
               {"incomposability_violations", s.cas->incomposability_violations().size()},
               {"preorder_violations", s.cas->preorder_violations().size()}};
        for (const auto& [name, a] : s.scas) j["automata"].push_back(name);
        std::ostringstream os;
        os << o.file << ": " << s.cas->size() << " actions, " << s.scas.size() << " automata, " << s.compositions.size()
           << " compositions, " << s.formulas.size() << " formulas, " << s.lassos.size() << " lassos\n";
        if (s.report.ok()) os << "action system: ok\n";
        for (const auto& line : s.report.describe(*s.cas)) os << "violation: " << line << "\n";
        emit(o, j, os.str());
        return s.report.ok() ? kTrue : kFalse;
      },
      sys);
}

int run_compose(const Options& o) {
  auto sys = load_system_file(o.file);
  return std::visit(
      [&](const auto& s) {
        auto names = split(o.scas, ',');
        auto a = apply_thresholds(s, s.compose_all(names), o);
        std::string name = o.out.empty() ? o.scas : o.out;
        json j{{"name", name}, {"automaton", s.sca_json(a)}};
        emit(o, j, describe_sca(s, a, name));
        return kTrue;
      },
      sys);
}

int run_check(const Options& o) {
  auto sys = load_system_file(o.file);
  return std::visit(
      [&](const auto& s) {
        auto a = apply_thresholds(s, s.automaton(o.automaton), o);
        FormulaPtr f = o.formula_text.empty() ? s.formula(o.formula) : parse_formula(o.formula_text, *s.cas);
        std::string fname = o.formula_text.empty() ? o.formula : o.formula_text;
        Limits limits{o.max_states};
        Verdict v = o.interface ? check_interface(a, f, limits) : check(a, f, limits);
        if (!o.dump_dir.empty()) {
          FormulaPtr checked = o.interface ? neg(cmp(neg(f))) : f;
          Ba system = to_ba(a);
          Ba negation = compile(*neg(checked), *s.cas, limits);
          dump(o, "system", system, *s.cas);
          dump(o, "negation", negation, *s.cas);
          dump(o, "product", intersect(system, negation, limits), *s.cas);
        }
        std::ostringstream os;
        os << o.automaton << " at threshold " << s.format_value(a.threshold()) << (o.interface ? " |= !cmp !" : " |= ")
           << fname << ": " << (v.holds() ? "holds" : "fails") << "\n";
        if (v.counterexample) os << "counterexample: " << s.format(*v.counterexample) << "\n";
        os << "largest intermediate automaton: " << v.log.max_states() << " states\n";
        emit(o, verdict_report(s, a, o.automaton, f, fname, v, o.timing), os.str());
        return v.holds() ? kTrue : kFalse;
      },
      sys);
}

int run_member(const Options& o) {
  auto sys = load_system_file(o.file);
  return std::visit(
      [&](const auto& s) {
        auto a = apply_thresholds(s, s.automaton(o.automaton), o);
        const auto& sigma = s.lasso(o.lasso);
        bool ok = accepts(a, sigma);
        json j{{"automaton", o.automaton}, {"lasso", s.lasso_json(sigma)}, {"thresholds", thresholds_json(s, a)},
               {"member", ok}};
        emit(o, j, s.format(sigma) + (ok ? " is" : " is not") + " a behaviour of " + o.automaton + " at threshold " +
                       s.format_value(a.threshold()) + "\n");
        return ok ? kTrue : kFalse;
      },
      sys);
}

int run_diagnose(const Options& o) {
  auto sys = load_system_file(o.file);
  return std::visit(
      [&](const auto& s) {
        auto a = apply_thresholds(s, s.automaton(o.automaton), o);
        const auto& sigma = s.lasso(o.lasso);
        auto tr = diagnostic_preference(a, sigma);
        std::ostringstream os;
        os << "d(" << s.format(sigma) << ") = " << s.format_value(tr.value) << "\n";
        for (std::size_t n = 0; n < tr.sums.size(); ++n) {
          os << "  n=" << n << " " << s.cas->name(sigma[n]) << " Q={";
          for (std::size_t i = 0; i < tr.state_sets[n].size(); ++i) os << (i ? "," : "") << a.state_name(tr.state_sets[n][i]);
          os << "} xi=" << s.format_value(tr.sums[n]) << "\n";
        }
        if (tr.loop_start) os << "  repeats from n=" << *tr.loop_start << "\n";
        if (tr.exhausted) os << "  note: the stream leaves the automaton; xi is zero from there on\n";
        emit(o, diagnostic_report(s, a, sigma, tr), os.str());
        return kTrue;
      },
      sys);
}

int run_suspects(const Options& o) {
  auto sys = load_system_file(o.file);
  return std::visit(
      [&](const auto& s) {
        auto a = apply_thresholds(s, s.automaton(o.automaton), o);
        const auto& sigma = s.lasso(o.lasso);
        auto r = diagnose_suspects(a, sigma);
        auto set = [&](Subset m) {
          std::string out = "{";
          auto names = r.names(m);
          for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
          return out + "}";
        };
        std::ostringstream os;
        os << "d = " << s.format_value(r.d) << "\nminimal suspect subsets: {";
        for (std::size_t i = 0; i < r.minimal.size(); ++i) os << (i ? "," : "") << set(r.minimal[i]);
        os << "}\ninnocent:";
        for (std::size_t i = 0; i < r.labels.size(); ++i)
          if (r.innocent(Subset{1} << i)) os << " " << r.labels[i];
        os << "\n";
        emit(o, suspect_report(s, r), os.str());
        return kTrue;
      },
      sys);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft component automata: composition, model checking and diagnosis"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable output");
  app.add_option("--max-states", o.max_states, "State ceiling for automata constructions")->check(CLI::PositiveNumber);
  app.add_option("--dump-automata", o.dump_dir, "Write intermediate automata (HOA) into this directory");

  auto file = [&](CLI::App* sub) { sub->add_option("file", o.file, "System file")->required(); };
  auto thresholds = [&](CLI::App* sub) {
    sub->add_option("--threshold", o.threshold, "Override the overall threshold");
    sub->add_option("--thresholds", o.thresholds, "Override component thresholds, e.g. 10,1");
  };

  auto* validate = app.add_subcommand("validate", "Load a system file and check the action system axioms");
  file(validate);

  auto* compose_cmd = app.add_subcommand("compose", "Compose automata and print the result");
  file(compose_cmd);
  compose_cmd->add_option("--scas", o.scas, "Comma-separated automaton names")->required();
  compose_cmd->add_option("--out", o.out, "Name of the composed automaton");
  thresholds(compose_cmd);

  auto* check_cmd = app.add_subcommand("check", "Decide whether every behaviour satisfies a formula");
  file(check_cmd);
  check_cmd->add_option("--sca", o.automaton, "Automaton or composition name")->required();
  auto* fopt = check_cmd->add_option("--formula", o.formula, "Formula name");
  auto* topt = check_cmd->add_option("--formula-text", o.formula_text, "Formula in concrete syntax");
  fopt->excludes(topt);
  check_cmd->add_flag("--interface", o.interface, "Check !cmp !phi instead of phi");
  check_cmd->add_flag("--timing", o.timing, "Include wall time in the report");
  thresholds(check_cmd);

  auto* member_cmd = app.add_subcommand("member", "Decide whether a lasso is a behaviour");
  file(member_cmd);
  member_cmd->add_option("--sca", o.automaton, "Automaton or composition name")->required();
  member_cmd->add_option("--lasso", o.lasso, "Lasso name")->required();
  thresholds(member_cmd);

  auto* diagnose_cmd = app.add_subcommand("diagnose", "Compute the diagnostic preference of a lasso");
  file(diagnose_cmd);
  diagnose_cmd->add_option("--sca", o.automaton, "Automaton or composition name")->required();
  diagnose_cmd->add_option("--lasso", o.lasso, "Lasso name")->required();
  thresholds(diagnose_cmd);

  auto* suspects_cmd = app.add_subcommand("suspects", "Find minimal suspect and innocent components");
  file(suspects_cmd);
  suspects_cmd->add_option("--composition", o.automaton, "Composition name")->required();
  suspects_cmd->add_option("--lasso", o.lasso, "Lasso name")->required();
  thresholds(suspects_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kTrue : kError;
  }
  if (check_cmd->parsed() && o.formula.empty() && o.formula_text.empty()) {
    std::cerr << "check: one of --formula or --formula-text is required\n";
    return kError;
  }
  try {
    if (validate->parsed()) return run_validate(o);
    if (compose_cmd->parsed()) return run_compose(o);
    if (check_cmd->parsed()) return run_check(o);
    if (member_cmd->parsed()) return run_member(o);
    if (diagnose_cmd->parsed()) return run_diagnose(o);
    if (suspects_cmd->parsed()) return run_suspects(o);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (o.json_output) std::cout << json{{"error", "capacity"}, {"stage", e.stage()}, {"message", e.what()}}.dump(2) << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
