// Copyright 2026 The coh Authors. All Rights Reserved.
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "coh/diamond.hpp"
#include "coh/error.hpp"
#include "coh/eval.hpp"
#include "coh/normalize.hpp"
#include "coh/parser.hpp"
#include "coh/resolver.hpp"
#include "report.hpp"

namespace coh::cli {

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

Registry loadRegistry(const RunConfig& config) {
  Registry reg = loadCorpus(config.corpus);
  auto diags = reg.validate();
  if (!diags.empty()) {
    std::string msg = "corpus does not validate:";
    for (const auto& d : diags) msg += "\n  " + d.str();
    throw ConfigError(msg);
  }
  return reg;
}

CarrierPtr carrierFromSpec(const std::string& name, const std::string& source) {
  if (source.rfind("fin:", 0) == 0) {
    std::size_t n = 0;
    const char* first = source.data() + 4;
    const char* last = source.data() + source.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n == 0)
      throw ConfigError("bad index set size in --carrier " + name + "=" + source);
    return makeIndexSet("fin" + std::to_string(n), n);
  }
  return loadCarrier(source);
}

Bindings loadBindings(const RunConfig& config) {
  Bindings out;
  for (const auto& spec : config.carriers) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
      throw ConfigError("--carrier expects name=path or name=fin:N, got '" + spec + "'");
    std::string name = spec.substr(0, eq);
    if (out.count(name)) throw ConfigError("carrier '" + name + "' bound twice");
    out[name] = carrierFromSpec(name, spec.substr(eq + 1));
  }
  return out;
}

void checkConfig(const RunConfig& config) {
  if (config.depth == 0) throw ConfigError("--depth must be positive");
  if (config.fuel == 0) throw ConfigError("--fuel must be positive");
  if (config.scalarRange == 0) throw ConfigError("--scalar-range must be positive");
}

void collectAtoms(const TypeExpr& t, std::set<std::string>& out) {
  if (t.isVar()) return;
  if (t.args().empty()) {
    if (t.name() != kNatType) out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collectAtoms(a, out);
}

void requireBound(const Constraint& goal, const Bindings& bindings) {
  std::set<std::string> atoms;
  for (const auto& a : goal.args) collectAtoms(a, atoms);
  for (const auto& a : atoms)
    if (!bindings.count(a)) throw ConfigError("no carrier bound for '" + a + "'; pass --carrier " + a + "=PATH");
}

struct Query {
  Registry reg;
  Goal goal;
};

Query prepare(const std::string& goalText, const RunConfig& config) {
  checkConfig(config);
  Registry base = loadRegistry(config);
  Goal goal = parseGoal(goalText);
  Registry reg = goal.assumptions.empty() ? std::move(base) : base.withAssumptions(goal.assumptions);
  return {std::move(reg), std::move(goal)};
}

template <typename F>
int guarded(std::ostream& out, std::ostream& err, bool json, const char* command, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d.str() << "\n";
    if (json) out << errorJson(command, e.what()) << "\n";
  } catch (const KernelInconsistency& e) {
    err << "kernel inconsistency: " << e.what() << "\n";
    if (json) out << errorJson(command, e.what()) << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << errorJson(command, e.what()) << "\n";
  }
  return kError;
}

}  // namespace

int cmdResolve(const std::string& goalText, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(out, err, config.json, "resolve", [&]() -> int {
    Query q = prepare(goalText, config);
    try {
      DerivationPtr d = resolve(q.goal.target, q.reg, ResolveOptions{config.depth});
      if (config.json)
        out << resolveJson(q.goal.target, d) << "\n";
      else
        out << explainPath(d);
      return kOk;
    } catch (const NoInstance& e) {
      if (config.json) out << resolveFailureJson(q.goal.target, "noInstance", e.what()) << "\n";
      else out << "no instance: " << e.what() << "\n";
    } catch (const DepthExceeded& e) {
      if (config.json) out << resolveFailureJson(q.goal.target, "depthExceeded", e.what()) << "\n";
      else out << "depth exceeded: " << e.what() << "\n";
    }
    return kNegative;
  });
}

int cmdDiamonds(const std::string& goalText, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(out, err, config.json, "diamonds", [&]() -> int {
    Query q = prepare(goalText, config);
    DiamondOptions opts;
    opts.search.depth = config.depth;
    opts.normalize.fuel = config.fuel;
    opts.eval.scalarRange = config.scalarRange;
    Bindings bindings = loadBindings(config);
    if (!bindings.empty()) opts.carrierSets.push_back(std::move(bindings));
    DiamondReport report = findDiamonds(q.goal.target, q.reg, opts);
    if (config.json)
      out << diamondJson(report) << "\n";
    else
      out << diamondText(report);
    if (report.derivations.empty()) return kNegative;
    return report.coherent() ? kOk : kNegative;
  });
}

int cmdCheckAxioms(const std::string& goalText, const std::string& instance, const RunConfig& config,
                   std::ostream& out, std::ostream& err) {
  return guarded(out, err, config.json, "check-axioms", [&]() -> int {
    Query q = prepare(goalText, config);
    Bindings bindings = loadBindings(config);
    requireBound(q.goal.target, bindings);
    DerivationPtr d;
    ResolveOptions search{config.depth};
    if (instance.empty()) {
      d = resolve(q.goal.target, q.reg, search);
    } else {
      if (!q.reg.findInstance(instance)) throw ConfigError("unknown instance '" + instance + "'");
      searchDerivations(q.goal.target, q.reg, search, [&](const DerivationPtr& cand) {
        if (cand->instanceName() != instance) return true;
        d = cand;
        return false;
      });
      if (!d) throw ConfigError("instance '" + instance + "' does not prove " + q.goal.target.str());
    }
    EvalOptions evalOpts;
    evalOpts.scalarRange = config.scalarRange;
    auto reports = checkAxioms(d, bindings, q.reg, evalOpts, search);
    if (config.json)
      out << axiomsJson(q.goal.target, d, bindings, reports) << "\n";
    else
      out << axiomsText(q.goal.target, d, bindings, reports);
    const bool allHold = std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) {
      return r.status == AxiomReport::Status::Holds;
    });
    return allHold ? kOk : kNegative;
  });
}

int cmdDefeq(const std::string& goalText, std::size_t first, std::size_t second, const RunConfig& config,
             std::ostream& out, std::ostream& err) {
  return guarded(out, err, config.json, "defeq", [&]() -> int {
    Query q = prepare(goalText, config);
    Resolution all = resolveAll(q.goal.target, q.reg, ResolveOptions{config.depth});
    const std::size_t n = all.derivations.size();
    if (first >= n || second >= n)
      throw ConfigError("path index out of range: goal has " + std::to_string(n) + " derivation(s)");
    NormalizeOptions norm{config.fuel};
    const auto& a = all.derivations[first];
    const auto& b = all.derivations[second];
    std::vector<FieldComparison> fields;
    for (const auto& f : q.reg.classInfo(q.goal.target.className).fields) {
      FieldComparison fc;
      fc.field = f.name;
      Term ta = derivationTerm(a, f.name, q.reg);
      Term tb = derivationTerm(b, f.name, q.reg);
      fc.lhs = render(normalize(ta, norm).term);
      fc.rhs = render(normalize(tb, norm).term);
      fc.defeq = defeq(ta, tb, norm);
      fields.push_back(std::move(fc));
    }
    const bool same = std::all_of(fields.begin(), fields.end(), [](const FieldComparison& f) { return f.defeq; });
    if (config.json)
      out << defeqJson(q.goal.target, first, second, fields, same) << "\n";
    else
      out << defeqText(q.goal.target, first, second, fields, same);
    return same ? kOk : kNegative;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Typeclass coherence checker", "coh"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--corpus", config.corpus, "Declaration file (.tc), repeatable")->check(CLI::ExistingFile);
  app.add_option("--carrier", config.carriers, "Carrier binding name=path or name=fin:N, repeatable");
  app.add_option("--depth", config.depth, "Derivation height bound")->capture_default_str();
  app.add_option("--fuel", config.fuel, "Normalization step budget")->capture_default_str();
  app.add_option("--scalar-range", config.scalarRange, "Nat scalars range over [0, N]")->capture_default_str();
  app.add_flag("--json", config.json, "Emit JSON");

  std::string goal;
  std::string instance;
  std::size_t first = 0;
  std::size_t second = 0;

  auto* resolveCmd = app.add_subcommand("resolve", "Print the first derivation of GOAL");
  resolveCmd->add_option("goal", goal, "Goal constraint")->required();
  auto* diamondsCmd = app.add_subcommand("diamonds", "Classify every pair of derivations of GOAL");
  diamondsCmd->add_option("goal", goal, "Goal constraint")->required();
  auto* axiomsCmd = app.add_subcommand("check-axioms", "Check the axioms of an instance over carriers");
  axiomsCmd->add_option("goal", goal, "Goal constraint")->required();
  axiomsCmd->add_option("--instance", instance, "Use the first derivation rooted at this instance");
  auto* defeqCmd = app.add_subcommand("defeq", "Compare two derivations of GOAL definitionally");
  defeqCmd->add_option("goal", goal, "Goal constraint")->required();
  defeqCmd->add_option("first", first, "Path index in resolution order")->required();
  defeqCmd->add_option("second", second, "Path index in resolution order")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  if (resolveCmd->parsed()) return cmdResolve(goal, config, out, err);
  if (diamondsCmd->parsed()) return cmdDiamonds(goal, config, out, err);
  if (axiomsCmd->parsed()) return cmdCheckAxioms(goal, instance, config, out, err);
  return cmdDefeq(goal, first, second, config, out, err);
}

}  // namespace coh::cli
