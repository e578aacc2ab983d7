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

#include "report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace coh::cli {

namespace {

using Json = nlohmann::ordered_json;

Json treeJson(const DerivationPtr& d) {
  Json children = Json::array();
  for (const auto& c : d->children) children.push_back(treeJson(c));
  return Json{{"instance", d->instanceName()}, {"goal", d->goal.str()}, {"children", std::move(children)}};
}

Json assignmentJson(const Assignment& a) {
  Json values = Json::object();
  for (const auto& [name, v] : a.values) values[name] = v;
  return Json{{"values", std::move(values)}, {"lhs", a.lhs}, {"rhs", a.rhs}};
}

Json bindingsJson(const Bindings& b) {
  Json out = Json::object();
  for (const auto& [name, c] : b) out[name] = c ? c->name() : "";
  return out;
}

std::string renderAssignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, v] : a.values) {
    if (!out.empty()) out += ", ";
    out += name + " = " + v;
  }
  return out + ": " + a.lhs + " vs " + a.rhs;
}

}  // namespace

std::string errorJson(const std::string& command, const std::string& message) {
  return Json{{"command", command}, {"status", "error"}, {"message", message}}.dump(2);
}

std::string resolveJson(const Constraint& goal, const DerivationPtr& d) {
  Json j{{"command", "resolve"},
         {"goal", goal.str()},
         {"status", "ok"},
         {"nodes", d->nodeCount()},
         {"height", d->height()},
         {"derivation", treeJson(d)}};
  return j.dump(2);
}

std::string resolveFailureJson(const Constraint& goal, const std::string& status, const std::string& message) {
  Json j{{"command", "resolve"}, {"goal", goal.str()}, {"status", status}, {"message", message}};
  return j.dump(2);
}

std::string diamondText(const DiamondReport& report) {
  std::ostringstream os;
  os << "goal: " << report.goal.str() << "\n";
  os << "derivations: " << report.derivations.size() << (report.truncated ? " (search truncated)" : "") << "\n";
  for (std::size_t i = 0; i < report.derivations.size(); ++i) {
    os << "path " << i << ":\n";
    std::istringstream lines(explainPath(report.derivations[i]));
    for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
  }
  if (report.derivations.size() < 2) {
    os << (report.derivations.empty() ? "no instance\n" : "no diamond\n");
    return os.str();
  }
  for (const auto& p : report.pairs) {
    os << "pair " << p.first << "-" << p.second << ": " << toString(p.verdict) << "\n";
    for (const auto& f : p.fields) {
      os << "  " << f.field << ": " << toString(f.verdict);
      if (f.fuelExhausted) os << " (fuel exhausted)";
      os << "\n";
      for (const auto& e : f.evidence) {
        os << "    [" << e.bindings << "] ";
        if (!e.error.empty())
          os << "unusable: " << e.error;
        else
          os << e.assignments << " assignments, " << (e.agree ? "agree" : "differ");
        os << "\n";
      }
      if (f.counterexample) os << "    counterexample: " << renderAssignment(*f.counterexample) << "\n";
    }
  }
  os << (report.coherent() ? "coherent\n" : "not coherent\n");
  return os.str();
}

std::string diamondJson(const DiamondReport& report) {
  Json derivations = Json::array();
  for (const auto& d : report.derivations) derivations.push_back(treeJson(d));
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    Json fields = Json::array();
    for (const auto& f : p.fields) {
      Json evidence = Json::array();
      for (const auto& e : f.evidence)
        evidence.push_back(Json{{"bindings", e.bindings},
                                {"assignments", e.assignments},
                                {"agree", e.agree},
                                {"error", e.error}});
      fields.push_back(Json{{"field", f.field},
                            {"verdict", toString(f.verdict)},
                            {"fuelExhausted", f.fuelExhausted},
                            {"evidence", std::move(evidence)},
                            {"counterexample", f.counterexample ? assignmentJson(*f.counterexample) : Json()}});
    }
    pairs.push_back(Json{{"first", p.first},
                         {"second", p.second},
                         {"verdict", toString(p.verdict)},
                         {"fields", std::move(fields)}});
  }
  Json j{{"command", "diamonds"},
         {"goal", report.goal.str()},
         {"truncated", report.truncated},
         {"derivations", std::move(derivations)},
         {"pairs", std::move(pairs)},
         {"coherent", report.coherent()}};
  return j.dump(2);
}

std::string axiomsText(const Constraint& goal, const DerivationPtr& d, const Bindings& bindings,
                       const std::vector<AxiomReport>& reports) {
  std::ostringstream os;
  os << "goal: " << goal.str() << "\n";
  os << "instance: " << d->instanceName() << "\n";
  os << "carriers: " << (bindings.empty() ? "(none)" : describeBindings(bindings)) << "\n";
  std::size_t failing = 0;
  for (const auto& r : reports) {
    os << r.className << "." << r.axiomName << ": " << toString(r.status) << " (" << r.assignments
       << " assignments, " << r.failures << " failures)";
    if (!r.message.empty()) os << " " << r.message;
    os << "\n";
    if (r.counterexample) os << "  counterexample: " << renderAssignment(*r.counterexample) << "\n";
    if (r.status != AxiomReport::Status::Holds) ++failing;
  }
  os << reports.size() << " axiom(s), " << failing << " not holding\n";
  return os.str();
}

std::string axiomsJson(const Constraint& goal, const DerivationPtr& d, const Bindings& bindings,
                       const std::vector<AxiomReport>& reports) {
  Json rs = Json::array();
  for (const auto& r : reports)
    rs.push_back(Json{{"class", r.className},
                      {"axiom", r.axiomName},
                      {"status", toString(r.status)},
                      {"assignments", r.assignments},
                      {"failures", r.failures},
                      {"counterexample", r.counterexample ? assignmentJson(*r.counterexample) : Json()},
                      {"message", r.message}});
  Json j{{"command", "check-axioms"},
         {"goal", goal.str()},
         {"instance", d->instanceName()},
         {"carriers", bindingsJson(bindings)},
         {"reports", std::move(rs)}};
  return j.dump(2);
}

std::string defeqText(const Constraint& goal, std::size_t first, std::size_t second,
                      const std::vector<FieldComparison>& fields, bool same) {
  std::ostringstream os;
  os << "goal: " << goal.str() << "\n";
  os << "paths " << first << " and " << second << "\n";
  for (const auto& f : fields) {
    os << "  " << f.field << ": " << (f.defeq ? "defeq" : "not defeq") << "\n";
    os << "    " << f.lhs << "\n";
    if (!f.defeq) os << "    " << f.rhs << "\n";
  }
  os << (same ? "defeq\n" : "not defeq\n");
  return os.str();
}

std::string defeqJson(const Constraint& goal, std::size_t first, std::size_t second,
                      const std::vector<FieldComparison>& fields, bool same) {
  Json fs = Json::array();
  for (const auto& f : fields)
    fs.push_back(Json{{"field", f.field}, {"defeq", f.defeq}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  Json j{{"command", "defeq"},
         {"goal", goal.str()},
         {"first", first},
         {"second", second},
         {"fields", std::move(fs)},
         {"defeq", same}};
  return j.dump(2);
}

}  // namespace coh::cli
