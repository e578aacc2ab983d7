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

#include "coh/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "coh/error.hpp"

namespace coh {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

[[noreturn]] void fail(DiagCode code, const SourceSpan& span, const std::string& msg) {
  throw ParseError({Diagnostic{code, span, msg}});
}

std::vector<Token> lex(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::size_t i = 0;
  auto span = [&](std::uint32_t len) { return SourceSpan{file, line, col, len}; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    Tok kind;
    if (identStart(c)) {
      while (i < text.size() && identChar(text[i])) ++i;
      kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      kind = Tok::Number;
    } else {
      static const char* two[] = {"=>", "->", ":="};
      kind = Tok::Symbol;
      bool matched = false;
      for (const char* s : two)
        if (text.substr(i, 2) == s) {
          i += 2;
          matched = true;
          break;
        }
      if (!matched) {
        if (std::string_view("()[]{}:,=").find(c) == std::string_view::npos)
          fail(DiagCode::Syntax, span(1), std::string("unexpected character '") + c + "'");
        ++i;
      }
    }
    auto len = static_cast<std::uint32_t>(i - start);
    out.push_back({kind, std::string(text.substr(start, len)), span(len)});
    col += len;
  }
  out.push_back({Tok::End, "", SourceSpan{file, line, col, 0}});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"version", "class", "instance", "requires", "extends",
                                          "op",      "axiom", "forall",   "fun",      "natrec",
                                          "priority"};
  return k;
}

class DeclParser {
 public:
  explicit DeclParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Declaration> file() {
    std::vector<Declaration> out;
    if (peek().kind == Tok::End) return out;
    header();
    while (peek().kind != Tok::End) {
      if (isKw("class")) {
        out.emplace_back(classDecl());
      } else if (isKw("instance")) {
        out.emplace_back(instanceDecl());
      } else if (isKw("requires")) {
        out.emplace_back(requiresDecl());
      } else {
        error("expected class, instance or requires");
      }
    }
    return out;
  }

  Goal goal() {
    Goal g;
    while (isSym("[")) g.assumptions.push_back(premise({}));
    g.target = constraint({});
    expectEnd();
    return g;
  }

  void expectEnd() {
    if (peek().kind != Tok::End) error("unexpected trailing input");
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool isSym(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool isKw(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool isName(std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && !keywords().count(peek(ahead).text);
  }

  [[noreturn]] void error(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    fail(DiagCode::Syntax, t.span, msg + ", found " + found);
  }

  void expectSym(const char* s) {
    if (!isSym(s)) error(std::string("expected '") + s + "'");
    next();
  }
  void expectKw(const char* s) {
    if (!isKw(s)) error(std::string("expected '") + s + "'");
    next();
  }
  std::string name(const char* what) {
    if (!isName()) error(std::string("expected ") + what);
    return next().text;
  }

  void header() {
    expectKw("version");
    if (peek().kind != Tok::Number) error("expected a format version");
    Token v = next();
    if (v.text != "1") fail(DiagCode::Syntax, v.span, "unsupported format version " + v.text);
  }

  // `(A B : Type)` or `(A B)`.
  void binders(std::vector<std::string>& out) {
    while (isSym("(")) {
      next();
      do out.push_back(name("a type variable"));
      while (isName());
      if (isSym(":")) {
        next();
        if (!(peek().kind == Tok::Ident && peek().text == "Type")) error("expected 'Type'");
        next();
      }
      expectSym(")");
    }
  }

  TypeExpr typeAtom(const std::set<std::string>& vars) {
    if (isSym("(")) {
      next();
      TypeExpr t = typeApp(vars);
      expectSym(")");
      return t;
    }
    std::string n = name("a type");
    return vars.count(n) ? TypeExpr::var(n) : TypeExpr::app(n);
  }

  TypeExpr typeApp(const std::set<std::string>& vars) {
    if (isSym("(")) return typeAtom(vars);
    std::string head = name("a type");
    std::vector<TypeExpr> args;
    while (isName() || isSym("(")) args.push_back(typeAtom(vars));
    if (args.empty() && vars.count(head)) return TypeExpr::var(head);
    return TypeExpr::app(head, std::move(args));
  }

  Constraint constraint(const std::set<std::string>& vars) {
    Constraint c;
    c.className = name("a class name");
    while (isName() || isSym("(")) c.args.push_back(typeAtom(vars));
    return c;
  }

  Premise premise(const std::set<std::string>& vars) {
    Premise p;
    p.span = peek().span;
    expectSym("[");
    if (isName() && isSym(":", 1)) {
      p.name = next().text;
      next();
    }
    p.constraint = constraint(vars);
    expectSym("]");
    return p;
  }

  // Application stops before keywords, closers and `name :=`.
  bool atomStart() const {
    if (isSym("(") || peek().kind == Tok::Number) return true;
    if (isKw("natrec")) return true;
    return isName() && !isSym(":=", 1);
  }

  Term atom() {
    if (isSym("(")) {
      next();
      Term t = term();
      expectSym(")");
      return t;
    }
    if (peek().kind == Tok::Number) {
      Token t = next();
      try {
        return Term::nat(std::stoull(t.text));
      } catch (const std::out_of_range&) {
        fail(DiagCode::Syntax, t.span, "numeral too large");
      }
    }
    if (isKw("natrec")) {
      next();
      Term z = atom();
      Term s = atom();
      Term n = atom();
      return Term::natRec(std::move(z), std::move(s), std::move(n));
    }
    return Term::var(name("a term"));
  }

  Term term() {
    if (isKw("fun")) {
      next();
      std::vector<std::string> binders;
      do binders.push_back(name("a binder"));
      while (isName());
      expectSym("=>");
      return Term::lams(binders, term());
    }
    if (!atomStart()) error("expected a term");
    Term t = atom();
    while (atomStart()) t = Term::app(std::move(t), atom());
    if (isKw("fun")) t = Term::app(std::move(t), term());
    return t;
  }

  ClassDecl classDecl() {
    ClassDecl d;
    d.span = peek().span;
    expectKw("class");
    d.name = name("a class name");
    binders(d.params);
    const std::set<std::string> vars(d.params.begin(), d.params.end());
    while (isSym("[")) d.premises.push_back(premise(vars));
    if (isKw("extends")) {
      next();
      d.extendsList.push_back(constraint(vars));
      while (isSym(",")) {
        next();
        d.extendsList.push_back(constraint(vars));
      }
    }
    if (!isSym("{")) return d;
    next();
    while (!isSym("}")) {
      if (isKw("op")) {
        OpField f;
        f.span = peek().span;
        next();
        f.name = name("an operation name");
        expectSym(":");
        std::vector<TypeExpr> parts{typeApp(vars)};
        while (isSym("->")) {
          next();
          parts.push_back(typeApp(vars));
        }
        f.result = parts.back();
        parts.pop_back();
        f.args = std::move(parts);
        d.opFields.push_back(std::move(f));
      } else if (isKw("axiom")) {
        d.axiomFields.push_back(axiom(vars));
      } else {
        error("expected 'op', 'axiom' or '}'");
      }
    }
    next();
    return d;
  }

  AxiomStmt axiom(const std::set<std::string>& vars) {
    AxiomStmt ax;
    ax.span = peek().span;
    expectKw("axiom");
    ax.name = name("an axiom name");
    expectSym(":");
    if (isKw("forall")) {
      next();
      auto group = [&] {
        std::vector<std::string> names;
        do names.push_back(name("a bound variable"));
        while (isName());
        expectSym(":");
        TypeExpr t = typeApp(vars);
        for (auto& n : names) ax.bound.push_back({std::move(n), t});
      };
      if (isSym("(")) {
        while (isSym("(")) {
          next();
          group();
          expectSym(")");
        }
      } else {
        group();
      }
      expectSym(",");
    }
    ax.lhs = term();
    expectSym("=");
    ax.rhs = term();
    return ax;
  }

  InstanceDecl instanceDecl() {
    InstanceDecl d;
    d.span = peek().span;
    expectKw("instance");
    d.name = name("an instance name");
    if (isKw("priority")) {
      next();
      if (peek().kind != Tok::Number) error("expected a priority");
      d.priority = std::stol(next().text);
    }
    binders(d.typeVars);
    const std::set<std::string> vars(d.typeVars.begin(), d.typeVars.end());
    while (isSym("[")) d.premises.push_back(premise(vars));
    expectSym(":");
    d.head = constraint(vars);
    if (!isSym("{")) return d;
    next();
    while (!isSym("}")) {
      std::string field = name("an operation name");
      expectSym(":=");
      d.opDefs.emplace_back(std::move(field), term());
      if (isSym(",")) next();
    }
    next();
    return d;
  }

  InstanceDecl requiresDecl() {
    InstanceDecl d;
    d.span = peek().span;
    expectKw("requires");
    d.name = name("an assumption name");
    expectSym(":");
    d.head = constraint({});
    d.opaque = true;
    return d;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string printTerm(const Term& t) { return render(t); }

void printPremises(std::ostringstream& out, const std::vector<Premise>& ps) {
  for (const auto& p : ps) {
    out << " [";
    if (!p.name.empty()) out << p.name << " : ";
    out << p.constraint.str() << ']';
  }
}

std::string constraintText(const Constraint& c) {
  std::string out = c.className;
  for (const auto& a : c.args) {
    std::string s = a.str();
    out += ' ' + (a.args().empty() ? s : "(" + s + ")");
  }
  return out;
}

}  // namespace

std::vector<Declaration> parseFile(std::string_view text, const std::string& file) {
  DeclParser p(lex(text, file));
  return p.file();
}

Goal parseGoal(std::string_view text) {
  DeclParser p(lex(text, "<goal>"));
  return p.goal();
}

CarrierPtr parseCarrier(std::string_view text, const std::string& file) {
  struct Line {
    std::uint32_t number;
    std::vector<std::pair<std::string, std::uint32_t>> words;  // text, column
  };
  std::vector<Line> lines;
  {
    std::uint32_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      ++number;
      if (auto c = raw.find("--"); c != std::string_view::npos) raw = raw.substr(0, c);
      Line l{number, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
          continue;
        }
        std::size_t s = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        l.words.emplace_back(std::string(raw.substr(s, i - s)), static_cast<std::uint32_t>(s + 1));
      }
      if (!l.words.empty()) lines.push_back(std::move(l));
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  auto spanOf = [&](const Line& l, std::size_t w) {
    const auto& [word, col] = l.words[w];
    return SourceSpan{file, l.number, col, static_cast<std::uint32_t>(word.size())};
  };
  auto lineSpan = [&](const Line& l) { return spanOf(l, 0); };
  const SourceSpan eof{file, lines.empty() ? 1 : lines.back().number + 1, 1, 0};

  std::size_t li = 0;
  auto expectLine = [&](const char* keyword) -> const Line& {
    if (li >= lines.size()) fail(DiagCode::Syntax, eof, std::string("expected '") + keyword + "'");
    const Line& l = lines[li];
    if (l.words[0].first != keyword)
      fail(DiagCode::Syntax, lineSpan(l), std::string("expected '") + keyword + "'");
    ++li;
    return l;
  };

  const Line& ver = expectLine("version");
  if (ver.words.size() != 2 || ver.words[1].first != "1")
    fail(DiagCode::Syntax, lineSpan(ver), "expected 'version 1'");
  const Line& car = expectLine("carrier");
  if (car.words.size() != 2) fail(DiagCode::Syntax, lineSpan(car), "expected 'carrier NAME'");
  const Line& el = expectLine("elems");
  std::vector<std::string> elems;
  for (std::size_t w = 1; w < el.words.size(); ++w) {
    for (const auto& e : elems)
      if (e == el.words[w].first)
        fail(DiagCode::Syntax, spanOf(el, w), "duplicate element " + e);
    elems.push_back(el.words[w].first);
  }
  auto out = std::make_shared<FiniteCarrier>(car.words[1].first, elems);
  const std::size_t n = elems.size();

  SourceSpan declSpan = lineSpan(el);
  if (li < lines.size() && lines[li].words[0].first == "declares") {
    declSpan = lineSpan(lines[li]);
    for (std::size_t w = 1; w < lines[li].words.size(); ++w)
      out->declares.push_back(lines[li].words[w].first);
    ++li;
  }

  while (li < lines.size()) {
    const Line& head = expectLine("op");
    if (head.words.size() != 3) fail(DiagCode::Syntax, lineSpan(head), "expected 'op NAME ARITY'");
    const std::string& opName = head.words[1].first;
    std::size_t arity = 0;
    try {
      arity = std::stoul(head.words[2].first);
    } catch (const std::exception&) {
      fail(DiagCode::Syntax, spanOf(head, 2), "arity must be a number");
    }
    if (out->hasOp(opName)) fail(DiagCode::Syntax, spanOf(head, 1), "operation " + opName + " repeated");
    std::size_t rows = 1;
    for (std::size_t k = 1; k < arity; ++k) rows *= n;
    const std::size_t width = arity == 0 ? 1 : n;
    OpTable table{arity, {}};
    for (std::size_t r = 0; r < rows; ++r) {
      if (li >= lines.size() || lines[li].words[0].first == "op")
        fail(DiagCode::PartialTable, lineSpan(head),
             "table for " + opName + " has " + std::to_string(r) + " rows, expected " +
                 std::to_string(rows));
      const Line& row = lines[li++];
      if (row.words.size() != width)
        fail(DiagCode::PartialTable, lineSpan(row),
             "row of " + opName + " has " + std::to_string(row.words.size()) +
                 " entries, expected " + std::to_string(width));
      for (std::size_t w = 0; w < row.words.size(); ++w) {
        auto idx = out->indexOf(row.words[w].first);
        if (!idx) fail(DiagCode::UnknownElement, spanOf(row, w), "unknown element " + row.words[w].first);
        table.entries.push_back(*idx);
      }
    }
    if (arity == 0 && n == 0) fail(DiagCode::PartialTable, lineSpan(head), "constant in an empty carrier");
    out->setOp(opName, std::move(table));
  }

  if (auto problem = out->validateDeclared()) fail(DiagCode::InvalidStructure, declSpan, *problem);
  return out;
}

std::string printDeclarations(const std::vector<Declaration>& decls) {
  std::ostringstream out;
  out << "version 1\n";
  for (const auto& decl : decls) {
    out << '\n';
    if (const auto* c = std::get_if<ClassDecl>(&decl)) {
      out << "class " << c->name;
      for (const auto& p : c->params) out << " (" << p << " : Type)";
      printPremises(out, c->premises);
      for (std::size_t i = 0; i < c->extendsList.size(); ++i)
        out << (i ? ", " : " extends ") << constraintText(c->extendsList[i]);
      if (c->opFields.empty() && c->axiomFields.empty()) {
        out << '\n';
        continue;
      }
      out << " {\n";
      for (const auto& f : c->opFields) out << "  op " << f.name << " : " << f.signature() << '\n';
      for (const auto& ax : c->axiomFields) {
        out << "  axiom " << ax.name << " :";
        if (!ax.bound.empty()) {
          out << " forall";
          for (const auto& b : ax.bound) out << " (" << b.name << " : " << b.type.str() << ')';
          out << ',';
        }
        out << ' ' << printTerm(ax.lhs) << " = " << printTerm(ax.rhs) << '\n';
      }
      out << "}\n";
      continue;
    }
    const auto& d = std::get<InstanceDecl>(decl);
    if (d.opaque) {
      out << "requires " << d.name << " : " << constraintText(d.head) << '\n';
      continue;
    }
    out << "instance " << d.name;
    if (d.priority) out << " priority " << *d.priority;
    if (!d.typeVars.empty()) {
      out << " (";
      for (std::size_t i = 0; i < d.typeVars.size(); ++i) out << (i ? " " : "") << d.typeVars[i];
      out << ')';
    }
    printPremises(out, d.premises);
    out << " : " << constraintText(d.head);
    if (d.opDefs.empty()) {
      out << '\n';
      continue;
    }
    out << " {\n";
    for (std::size_t i = 0; i < d.opDefs.size(); ++i)
      out << "  " << d.opDefs[i].first << " := " << printTerm(d.opDefs[i].second)
          << (i + 1 < d.opDefs.size() ? "," : "") << '\n';
    out << "}\n";
  }
  return out.str();
}

void loadInto(Registry& reg, const std::vector<Declaration>& decls) {
  for (const auto& decl : decls) {
    if (const auto* c = std::get_if<ClassDecl>(&decl))
      reg.addClass(*c);
    else
      reg.addInstance(std::get<InstanceDecl>(decl));
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Registry loadCorpus(const std::vector<std::string>& paths) {
  Registry reg;
  for (const auto& p : paths) loadInto(reg, parseFile(readFile(p), p));
  return reg;
}

CarrierPtr loadCarrier(const std::string& path) { return parseCarrier(readFile(path), path); }

}  // namespace coh
