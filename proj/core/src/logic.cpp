/*
 * Copyright 2026 The prefsynt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prefsynt/logic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace prefsynt {

FormulaError::FormulaError(const std::string& msg, int line_, int column_)
    : std::runtime_error(line_ > 0 ? msg + " (line " + std::to_string(line_) +
                                         ", column " + std::to_string(column_) + ")"
                                   : msg),
      line(line_), column(column_) {}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

enum class Tok {
  Ident, LParen, RParen, Dot, Eq, Tilde, Amp, Pipe, Bang, Arrow, DArrow, Less,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') { ++line_; col_ = 1; ++pos_; }
      else if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; }
      else if (c == '#') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else break;
    }
    int l = line_, co = col_;
    if (pos_ >= src_.size()) { tok_ = {Tok::End, "", l, co}; return; }
    char c = src_[pos_];
    auto one = [&](Tok k) { tok_ = {k, std::string(1, c), l, co}; ++pos_; ++col_; };
    switch (c) {
      case '(': one(Tok::LParen); return;
      case ')': one(Tok::RParen); return;
      case '.': one(Tok::Dot); return;
      case '=': one(Tok::Eq); return;
      case '~': one(Tok::Tilde); return;
      case '&': one(Tok::Amp); return;
      case '|': one(Tok::Pipe); return;
      case '!': one(Tok::Bang); return;
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          tok_ = {Tok::Arrow, "->", l, co};
          pos_ += 2; col_ += 2;
          return;
        }
        throw FormulaError("syntax error: stray '-'", l, co);
      case '<':
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == '-' && src_[pos_ + 2] == '>') {
          tok_ = {Tok::DArrow, "<->", l, co};
          pos_ += 3; col_ += 3;
          return;
        }
        one(Tok::Less);
        return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_' || src_[pos_] == '\'')) {
        ++pos_; ++col_;
      }
      tok_ = {Tok::Ident, std::string(src_.substr(start, pos_ - start)), l, co};
      return;
    }
    throw FormulaError(std::string("syntax error: unexpected character '") + c + "'",
                       l, co);
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

// ---------------------------------------------------------------------------
// Parser. Scopes map surface names to variable ids; binders alpha-rename so
// that variable names are globally unique in the resulting AST.

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : lex_(text), alphabet_(alphabet) {}

  Formula run() {
    int root = parse_iff();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw FormulaError("syntax error: trailing input '" + t.text + "'", t.line,
                         t.column);
    return builder_.finish(root, alphabet_, /*validate=*/true);
  }

 private:
  struct Binding { std::string name; int id; };

  int parse_iff() {
    int lhs = parse_implies();
    if (lex_.peek().kind == Tok::DArrow) {
      lex_.take();
      return builder_.iff(lhs, parse_iff());
    }
    return lhs;
  }

  int parse_implies() {
    int lhs = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return builder_.implies(lhs, parse_implies());
    }
    return lhs;
  }

  int parse_or() {
    int lhs = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      lhs = builder_.logic_or(lhs, parse_and());
    }
    return lhs;
  }

  int parse_and() {
    int lhs = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      lhs = builder_.logic_and(lhs, parse_unary());
    }
    return lhs;
  }

  int parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.take();
      return builder_.logic_not(parse_unary());
    }
    if (t.kind == Tok::Ident && is_quantifier(t.text)) return parse_quantifier();
    return parse_atom_or_paren();
  }

  static bool is_quantifier(const std::string& s) {
    return s == "Ep" || s == "Ap" || s == "Eb" || s == "Ab" || s == "Ex" || s == "Ax";
  }

  int parse_quantifier() {
    Token q = lex_.take();
    Token name = expect(Tok::Ident, "variable name");
    bool universal = q.text[0] == 'A';
    if (q.text == "Ep" || q.text == "Ap") {
      int var = bind(name, VarKind::Process);
      expect(Tok::Dot, "'.'");
      int body = parse_iff();
      unbind();
      int ex = builder_.exists_proc(var, universal ? builder_.logic_not(body) : body);
      return universal ? builder_.logic_not(ex) : ex;
    }
    if (q.text == "Eb" || q.text == "Ab") {
      // Materialize the grammar's side condition: the quantifier already
      // excludes process elements and any class holding an in-scope bounding
      // variable.
      std::vector<int> guards;
      for (const Binding& b : scope_)
        if (builder_var_kind(b.id) == VarKind::Bounding) guards.push_back(b.id);
      int var = bind(name, VarKind::Bounding);
      expect(Tok::Dot, "'.'");
      int body = parse_iff();
      unbind();
      int ex = builder_.exists_bound(var, guards,
                                     universal ? builder_.logic_not(body) : body);
      return universal ? builder_.logic_not(ex) : ex;
    }
    // Ex / Ax ident "<" ident "." expr
    expect(Tok::Less, "'<'");
    Token under_name = expect(Tok::Ident, "bounding variable");
    int under = lookup(under_name);
    if (builder_var_kind(under) != VarKind::Bounding)
      throw FormulaError("kind violation: prefix quantifier must be bounded by a "
                         "bounding variable, got '" + under_name.text + "'",
                         under_name.line, under_name.column);
    int var = bind(name, VarKind::Prefix, under);
    expect(Tok::Dot, "'.'");
    int body = parse_iff();
    unbind();
    int ex = builder_.exists_pref(var, universal ? builder_.logic_not(body) : body);
    return universal ? builder_.logic_not(ex) : ex;
  }

  int parse_atom_or_paren() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      int inner = parse_iff();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident)
      throw FormulaError("syntax error: expected atom, got '" + t.text + "'", t.line,
                         t.column);
    Token head = lex_.take();
    const Token& next = lex_.peek();
    if (next.kind == Tok::LParen) {  // letter(x), ProcS(x), ProcE(x)
      lex_.take();
      Token arg = expect(Tok::Ident, "variable name");
      expect(Tok::RParen, "')'");
      int var = lookup(arg);
      if (head.text == "ProcS" || head.text == "ProcE") {
        if (builder_var_kind(var) != VarKind::Process)
          throw FormulaError("kind violation: " + head.text +
                             " applies to process variables only", arg.line, arg.column);
        return head.text == "ProcS" ? builder_.proc_s(var) : builder_.proc_e(var);
      }
      if (!alphabet_.contains(head.text))
        throw FormulaError("unknown letter '" + head.text + "'", head.line, head.column);
      VarKind k = builder_var_kind(var);
      if (k != VarKind::Bounding && k != VarKind::Prefix)
        throw FormulaError("kind violation: letter atom on process variable '" +
                           arg.text + "'", arg.line, arg.column);
      return builder_.letter(head.text, var);
    }
    int x = lookup(head);
    if (next.kind == Tok::Eq) {
      lex_.take();
      Token rhs = expect(Tok::Ident, "variable name");
      return builder_.equal(x, lookup(rhs));
    }
    if (next.kind == Tok::Tilde) {
      lex_.take();
      Token rhs = expect(Tok::Ident, "variable name");
      int y = lookup(rhs);
      if (builder_var_kind(x) != VarKind::Process &&
          builder_var_kind(y) != VarKind::Process)
        throw FormulaError("kind violation: '~' needs a process variable operand",
                           head.line, head.column);
      return builder_.same_class(x, y);
    }
    if (next.kind == Tok::Less) {
      lex_.take();
      Token rhs = expect(Tok::Ident, "variable name");
      int y = lookup(rhs);
      VarKind kx = builder_var_kind(x), ky = builder_var_kind(y);
      bool ok = (kx == VarKind::Prefix && ky == VarKind::Prefix) ||
                (kx == VarKind::Prefix && ky == VarKind::Bounding &&
                 builder_var_under(x) == y);
      if (!ok)
        throw FormulaError("kind violation: '<' compares prefix variables (or a "
                           "prefix variable with its bounding variable)",
                           head.line, head.column);
      return builder_.pref_less(x, y);
    }
    throw FormulaError("syntax error: expected atom after '" + head.text + "'",
                       next.line, next.column);
  }

  Token expect(Tok kind, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != kind)
      throw FormulaError(std::string("syntax error: expected ") + what + ", got '" +
                         (t.kind == Tok::End ? "end of input" : t.text) + "'",
                         t.line, t.column);
    return lex_.take();
  }

  int bind(const Token& name, VarKind kind, int under = -1) {
    std::string unique = name.text;
    int suffix = 2;
    while (used_names_.count(unique)) unique = name.text + "_" + std::to_string(suffix++);
    used_names_.insert(unique);
    var_kinds_.push_back(kind);
    var_unders_.push_back(under);
    int id = builder_.add_var(unique, kind, under);
    scope_.push_back({name.text, id});
    return id;
  }

  void unbind() { scope_.pop_back(); }

  int lookup(const Token& name) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name.text) return it->id;
    throw FormulaError("free variable '" + name.text + "'", name.line, name.column);
  }

  VarKind builder_var_kind(int id) const { return var_kinds_[id]; }
  int builder_var_under(int id) const { return var_unders_[id]; }

  FormulaBuilder builder_;
  std::vector<VarKind> var_kinds_;  // parser-side mirror of builder variables
  std::vector<int> var_unders_;
  std::vector<Binding> scope_;
  std::set<std::string> used_names_;
  Lexer lex_;
  const Alphabet& alphabet_;
};

}  // namespace

// ---------------------------------------------------------------------------
// FormulaBuilder

int FormulaBuilder::add_var(std::string name, VarKind kind, int under) {
  vars_.push_back({std::move(name), kind, under});
  return static_cast<int>(vars_.size()) - 1;
}

int FormulaBuilder::push(FormulaNode n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

static FormulaNode make_node(NodeKind kind, int lhs = -1, int rhs = -1) {
  FormulaNode n;
  n.kind = kind;
  n.lhs = lhs;
  n.rhs = rhs;
  return n;
}

int FormulaBuilder::equal(int x, int y) { return push(make_node(NodeKind::Equal, x, y)); }
int FormulaBuilder::proc_s(int x) {
  FormulaNode n = make_node(NodeKind::ProcS);
  n.var = x;
  return push(n);
}
int FormulaBuilder::proc_e(int x) {
  FormulaNode n = make_node(NodeKind::ProcE);
  n.var = x;
  return push(n);
}
int FormulaBuilder::letter(std::string a, int x) {
  FormulaNode n = make_node(NodeKind::Letter);
  n.var = x;
  n.letter = std::move(a);
  return push(n);
}
int FormulaBuilder::pref_less(int x, int y) { return push(make_node(NodeKind::PrefLess, x, y)); }
int FormulaBuilder::same_class(int x, int y) { return push(make_node(NodeKind::SameClass, x, y)); }
int FormulaBuilder::logic_not(int f) { return push(make_node(NodeKind::Not, f)); }
int FormulaBuilder::logic_and(int f, int g) { return push(make_node(NodeKind::And, f, g)); }
int FormulaBuilder::logic_or(int f, int g) { return push(make_node(NodeKind::Or, f, g)); }
int FormulaBuilder::implies(int f, int g) { return push(make_node(NodeKind::Implies, f, g)); }
int FormulaBuilder::iff(int f, int g) { return push(make_node(NodeKind::Iff, f, g)); }
int FormulaBuilder::exists_proc(int var, int body) {
  FormulaNode n = make_node(NodeKind::ExistsProc, body);
  n.var = var;
  return push(n);
}
int FormulaBuilder::exists_bound(int var, std::vector<int> guards, int body) {
  FormulaNode n = make_node(NodeKind::ExistsBound, body);
  n.var = var;
  n.guards = std::move(guards);
  return push(n);
}
int FormulaBuilder::exists_pref(int var, int body) {
  FormulaNode n = make_node(NodeKind::ExistsPref, body);
  n.var = var;
  return push(n);
}

Formula FormulaBuilder::finish(int root, Alphabet alphabet, bool validate) {
  Formula f(std::move(alphabet), std::move(nodes_), std::move(vars_), root);
  if (validate) validate_formula(f);
  return f;
}

// ---------------------------------------------------------------------------
// Validation (kind rules, scoping, letters)

void validate_formula(const Formula& f) {
  auto kind_of = [&](int v) { return f.variable(v).kind; };
  std::vector<bool> in_scope(f.num_variables(), false);

  std::function<void(int)> walk = [&](int id) {
    const FormulaNode& n = f.node(id);
    auto need_scope = [&](int v) {
      if (v < 0 || v >= f.num_variables() || !in_scope[v])
        throw FormulaError("free variable in AST: node " + std::to_string(id));
    };
    switch (n.kind) {
      case NodeKind::Equal:
        need_scope(n.lhs); need_scope(n.rhs);
        return;
      case NodeKind::ProcS:
      case NodeKind::ProcE:
        need_scope(n.var);
        if (kind_of(n.var) != VarKind::Process)
          throw FormulaError("kind violation: ProcS/ProcE on non-process variable");
        return;
      case NodeKind::Letter:
        need_scope(n.var);
        if (kind_of(n.var) == VarKind::Process)
          throw FormulaError("kind violation: letter atom on process variable");
        if (!f.alphabet().contains(n.letter))
          throw FormulaError("unknown letter '" + n.letter + "'");
        return;
      case NodeKind::PrefLess: {
        need_scope(n.lhs); need_scope(n.rhs);
        VarKind kx = kind_of(n.lhs), ky = kind_of(n.rhs);
        bool ok = (kx == VarKind::Prefix && ky == VarKind::Prefix) ||
                  (kx == VarKind::Prefix && ky == VarKind::Bounding &&
                   f.variable(n.lhs).under == n.rhs);
        if (!ok) throw FormulaError("kind violation: ill-kinded '<' atom");
        return;
      }
      case NodeKind::SameClass:
        need_scope(n.lhs); need_scope(n.rhs);
        if (kind_of(n.lhs) != VarKind::Process && kind_of(n.rhs) != VarKind::Process)
          throw FormulaError("kind violation: '~' needs a process variable operand");
        return;
      case NodeKind::Not:
        walk(n.lhs);
        return;
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Implies:
      case NodeKind::Iff:
        walk(n.lhs); walk(n.rhs);
        return;
      case NodeKind::ExistsProc:
        if (kind_of(n.var) != VarKind::Process)
          throw FormulaError("kind violation: Ep binds a process variable");
        in_scope[n.var] = true;
        walk(n.lhs);
        in_scope[n.var] = false;
        return;
      case NodeKind::ExistsBound:
        if (kind_of(n.var) != VarKind::Bounding)
          throw FormulaError("kind violation: Eb binds a bounding variable");
        for (int g : n.guards) {
          if (g < 0 || g >= f.num_variables() || !in_scope[g] ||
              kind_of(g) != VarKind::Bounding)
            throw FormulaError("invalid bounding guard in Eb node");
        }
        in_scope[n.var] = true;
        walk(n.lhs);
        in_scope[n.var] = false;
        return;
      case NodeKind::ExistsPref: {
        if (kind_of(n.var) != VarKind::Prefix)
          throw FormulaError("kind violation: Ex binds a prefix variable");
        int under = f.variable(n.var).under;
        if (under < 0 || under >= f.num_variables() || !in_scope[under] ||
            kind_of(under) != VarKind::Bounding)
          throw FormulaError("prefix quantifier must name an in-scope bounding "
                             "variable");
        in_scope[n.var] = true;
        walk(n.lhs);
        in_scope[n.var] = false;
        return;
      }
    }
  };
  walk(f.root());
}

// ---------------------------------------------------------------------------
// Depth and printing

int Formula::depth() const {
  std::function<int(int)> d = [&](int id) -> int {
    const FormulaNode& n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Equal:
      case NodeKind::ProcS:
      case NodeKind::ProcE:
      case NodeKind::Letter:
      case NodeKind::PrefLess:
      case NodeKind::SameClass:
        return 0;
      case NodeKind::Not:
        return d(n.lhs);
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Implies:
      case NodeKind::Iff:
        return std::max(d(n.lhs), d(n.rhs));
      case NodeKind::ExistsProc:
      case NodeKind::ExistsBound:
      case NodeKind::ExistsPref:
        return 1 + d(n.lhs);
    }
    return 0;
  };
  return d(root_);
}

namespace {
// Precedence levels for printing: higher binds tighter.
constexpr int PREC_TOP = 0, PREC_IFF = 1, PREC_IMPLIES = 2, PREC_OR = 3,
              PREC_AND = 4, PREC_NOT = 5;
}

std::string Formula::to_string() const {
  std::function<std::string(int, int)> pr = [&](int id, int parent) -> std::string {
    const FormulaNode& n = nodes_[id];
    auto wrap = [&](const std::string& s, int mine) {
      return parent > mine ? "(" + s + ")" : s;
    };
    switch (n.kind) {
      case NodeKind::Equal:
        return vars_[n.lhs].name + " = " + vars_[n.rhs].name;
      case NodeKind::ProcS:
        return "ProcS(" + vars_[n.var].name + ")";
      case NodeKind::ProcE:
        return "ProcE(" + vars_[n.var].name + ")";
      case NodeKind::Letter:
        return n.letter + "(" + vars_[n.var].name + ")";
      case NodeKind::PrefLess:
        return vars_[n.lhs].name + " < " + vars_[n.rhs].name;
      case NodeKind::SameClass:
        return vars_[n.lhs].name + " ~ " + vars_[n.rhs].name;
      case NodeKind::Not:
        return "!" + pr(n.lhs, PREC_NOT);
      case NodeKind::And:
        return wrap(pr(n.lhs, PREC_AND) + " & " + pr(n.rhs, PREC_AND), PREC_AND);
      case NodeKind::Or:
        return wrap(pr(n.lhs, PREC_OR) + " | " + pr(n.rhs, PREC_OR), PREC_OR);
      case NodeKind::Implies:
        return wrap(pr(n.lhs, PREC_IMPLIES + 1) + " -> " + pr(n.rhs, PREC_IMPLIES),
                    PREC_IMPLIES);
      case NodeKind::Iff:
        return wrap(pr(n.lhs, PREC_IFF + 1) + " <-> " + pr(n.rhs, PREC_IFF), PREC_IFF);
      case NodeKind::ExistsProc:
      case NodeKind::ExistsBound:
      case NodeKind::ExistsPref: {
        std::string head;
        if (n.kind == NodeKind::ExistsProc) head = "Ep " + vars_[n.var].name;
        else if (n.kind == NodeKind::ExistsBound) head = "Eb " + vars_[n.var].name;
        else head = "Ex " + vars_[n.var].name + " < " +
                    vars_[vars_[n.var].under].name;
        std::string s = head + ". " + pr(n.lhs, PREC_TOP);
        // A quantifier body extends maximally right, so parenthesize whenever
        // we are not already at the right edge of the enclosing expression.
        return parent > PREC_TOP ? "(" + s + ")" : s;
      }
    }
    return "";
  };
  return pr(root_, PREC_TOP);
}

// ---------------------------------------------------------------------------
// Parsing entry point. The Parser above routes add_var through
// builder_add_var so kinds are known while parsing; wire that up here.

Formula parse_formula(std::string_view text, const Alphabet& alphabet) {
  Parser p(text, alphabet);
  return p.run();
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

std::string one_exact_letter(const std::string& a) {
  // "some process has exactly one <a>": a class contains an <a> with no
  // earlier <a>, and no <a> with an earlier <a>.
  return "Ep x. (Eb y. y ~ x & " + a + "(y)) & !(Eb y. y ~ x & " + a +
         "(y) & Ex z < y. " + a + "(z))";
}

std::vector<CorpusEntry> make_corpus() {
  Alphabet es({"s"}, {"e"});
  Alphabet ab_st({"s", "t"}, {"a", "b"});
  Alphabet oc({"o", "c"}, {"e"});
  std::vector<CorpusEntry> v;
  v.push_back({"phi_ex",
               "a process with exactly one e iff a process with exactly one s",
               es, "(" + one_exact_letter("e") + ") <-> (" + one_exact_letter("s") + ")",
               3});
  v.push_back({"one_e", "some process has exactly one e", es, one_exact_letter("e"),
               3});
  v.push_back({"some_e", "some e occurs", es, "Eb x. e(x)", 1});
  v.push_back({"some_env_proc", "an Environment process exists", es,
               "Ep x. ProcE(x)", 1});
  v.push_back({"truth", "valid sentence", es, "Ap x. x = x", 1});
  v.push_back({"no_e", "no e occurs", es, "!(Eb x. e(x))", 1});
  v.push_back({"sys_matches_env", "if any e occurred then some s occurred", es,
               "(Eb x. e(x)) -> (Eb x. s(x))", 1});
  v.push_back({"ee_class", "some process played e at least twice", es,
               "Ep p. Eb x. x ~ p & e(x) & Ex y < x. e(y)", 3});
  v.push_back({"b_after_a", "every b is preceded by an a in its class prefix",
               ab_st, "Ab x. b(x) -> (Ex y < x. a(y))", 2});
  v.push_back({"paired_t", "every t has an earlier s in its class", ab_st,
               "Ab x. t(x) -> (Ex y < x. s(y))", 2});
  v.push_back({"close_needs_open", "every c is preceded by an o in its class",
               oc, "Ab x. c(x) -> (Ex y < x. o(y))", 2});
  return v;
}

}  // namespace

const std::vector<CorpusEntry>& formula_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : formula_corpus())
    if (e.name == name) return e;
  throw FormulaError("unknown corpus formula '" + name + "'");
}

Formula corpus_formula(const std::string& name) {
  const CorpusEntry& e = corpus_entry(name);
  return parse_formula(e.text, e.alphabet);
}

}  // namespace prefsynt
