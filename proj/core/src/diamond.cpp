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

#include "coh/diamond.hpp"

#include <algorithm>

#include "coh/error.hpp"

namespace coh {

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Defeq: return "defeq";
    case Verdict::PropEqOnly: return "propEqOnly";
    case Verdict::Divergent: return "divergent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool DiamondReport::coherent() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairVerdict& p) { return p.verdict == Verdict::Defeq; });
}

std::string describeBindings(const Bindings& b) {
  std::string out;
  for (const auto& [name, c] : b) {
    if (!out.empty()) out += ", ";
    out += name + "=" + (c ? c->name() : "?");
  }
  return out;
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::Defeq: return 0;
    case Verdict::PropEqOnly: return 1;
    case Verdict::Inconclusive: return 2;
    case Verdict::Divergent: return 3;
  }
  return 3;
}

// Compares two field values on every argument tuple. Returns the first
// disagreement in enumeration order.
std::optional<Assignment> compareField(Evaluator& ev, const OpField& sig, const Value& a,
                                       const Value& b, std::uint64_t& count) {
  std::vector<std::vector<Value>> domains;
  for (const auto& t : sig.args) domains.push_back(ev.enumerate(t));
  std::uint64_t total = 1;
  for (const auto& d : domains) total *= d.size();
  count = total;
  std::vector<std::size_t> pos(domains.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Value> args;
    for (std::size_t i = 0; i < domains.size(); ++i) args.push_back(domains[i][pos[i]]);
    Value va = ev.applyAll(a, args);
    Value vb = ev.applyAll(b, args);
    if (!ev.equalAt(sig.result, va, vb)) {
      Assignment out;
      for (std::size_t i = 0; i < args.size(); ++i)
        out.values.emplace_back("arg" + std::to_string(i), ev.show(sig.args[i], args[i]));
      out.lhs = ev.show(sig.result, va);
      out.rhs = ev.show(sig.result, vb);
      return out;
    }
    for (std::size_t i = domains.size(); i-- > 0;) {
      if (++pos[i] < domains[i].size()) break;
      pos[i] = 0;
    }
  }
  return std::nullopt;
}

FieldVerdict compareOneField(const DerivationPtr& a, const DerivationPtr& b, const std::string& field,
                             const Registry& reg, const DiamondOptions& options) {
  FieldVerdict fv;
  fv.field = field;
  const Term ta = derivationTerm(a, field, reg);
  const Term tb = derivationTerm(b, field, reg);
  bool same = false;
  try {
    same = defeq(ta, tb, options.normalize);
  } catch (const FuelExhausted&) {
    fv.fuelExhausted = true;
  }

  const OpField sig = reg.fieldSignature(a->goal, field);
  std::size_t usable = 0;
  for (const auto& bindings : options.carrierSets) {
    CarrierEvidence ev{describeBindings(bindings), 0, true, {}};
    try {
      Evaluator e(reg, bindings, options.eval);
      Value va = e.evalTerm(ta);
      Value vb = e.evalTerm(tb);
      auto cx = compareField(e, sig, va, vb, ev.assignments);
      if (cx) {
        ev.agree = false;
        if (!fv.counterexample) fv.counterexample = std::move(cx);
      }
      ++usable;
    } catch (const Error& err) {
      ev.error = err.what();
    }
    fv.evidence.push_back(std::move(ev));
  }

  const bool distinguished =
      std::any_of(fv.evidence.begin(), fv.evidence.end(),
                  [](const CarrierEvidence& e) { return e.error.empty() && !e.agree; });
  if (same) {
    if (distinguished)
      throw KernelInconsistency("definitionally equal terms for " + field + " of " +
                                a->goal.str() + " disagree on carriers " +
                                fv.evidence.front().bindings);
    fv.verdict = Verdict::Defeq;
  } else if (distinguished) {
    fv.verdict = Verdict::Divergent;
  } else if (fv.fuelExhausted || usable == 0) {
    fv.verdict = Verdict::Inconclusive;
  } else {
    fv.verdict = Verdict::PropEqOnly;
  }
  return fv;
}

void explainInto(const DerivationPtr& d, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += d->instanceName() + " : " + d->goal.str() + "\n";
  for (const auto& c : d->children) explainInto(c, indent + 1, out);
}

}  // namespace

PairVerdict compareDerivations(const DerivationPtr& a, const DerivationPtr& b, const Registry& reg,
                               const DiamondOptions& options) {
  PairVerdict pv;
  for (const auto& f : reg.classInfo(a->goal.className).fields) {
    pv.fields.push_back(compareOneField(a, b, f.name, reg, options));
    if (severity(pv.fields.back().verdict) > severity(pv.verdict)) pv.verdict = pv.fields.back().verdict;
  }
  return pv;
}

DiamondReport findDiamonds(const Constraint& goal, const Registry& reg, const DiamondOptions& options) {
  DiamondReport report;
  report.goal = goal;
  Resolution all = resolveAll(goal, reg, options.search);
  report.derivations = std::move(all.derivations);
  report.truncated = all.truncated;
  for (std::size_t i = 0; i < report.derivations.size(); ++i)
    for (std::size_t j = i + 1; j < report.derivations.size(); ++j) {
      PairVerdict pv = compareDerivations(report.derivations[i], report.derivations[j], reg, options);
      pv.first = i;
      pv.second = j;
      report.pairs.push_back(std::move(pv));
    }
  return report;
}

std::string explainPath(const DerivationPtr& d) {
  std::string out;
  explainInto(d, 0, out);
  return out;
}

}  // namespace coh
