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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefsynt/alphabet.hpp"

namespace prefsynt {

// Variables come in three kinds. A bounding variable pins down a position of
// some class; prefix variables of that class may only range strictly left of
// it. Process variables range over process elements.
enum class VarKind { Process, Bounding, Prefix };

struct Variable {
  std::string name;  // globally unique after parsing (alpha-renamed)
  VarKind kind;
  int under = -1;  // for prefix variables: id of the governing bounding var
};

enum class NodeKind {
  Equal,      // lhs = rhs          (variable ids)
  ProcS,      // ProcS(var)
  ProcE,      // ProcE(var)
  Letter,     // letter(var)
  PrefLess,   // lhs < rhs, i.e. same class and strictly earlier
  SameClass,  // lhs ~ rhs
  Not,        // child lhs
  And,        // lhs, rhs
  Or,
  Implies,
  Iff,
  ExistsProc,   // var, body=lhs
  ExistsBound,  // var, body=lhs, guards = bounding vars in scope at the binder
  ExistsPref,   // var (whose .under names the bounding var), body=lhs
};

struct FormulaNode {
  NodeKind kind;
  int lhs = -1;              // child node or variable id, depending on kind
  int rhs = -1;              // second child node or variable id
  int var = -1;              // bound/tested variable id for quantifiers & unary atoms
  std::string letter;        // Letter only
  std::vector<int> guards;   // ExistsBound only: materialized "x !~ y" guards
};

/// An immutable, validated sentence. Universal quantifiers are parsed as
/// duals of existentials, and the grammar's implicit quantifier guards are
/// materialized, so evaluation is plain first-order recursion over the AST.
class Formula {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  int root() const { return root_; }
  const FormulaNode& node(int id) const { return nodes_[id]; }
  const Variable& variable(int id) const { return vars_[id]; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_variables() const { return static_cast<int>(vars_.size()); }

  /// Quantifier depth: maximal number of nested quantifiers of any kind.
  int depth() const;

  /// Precedence-aware printer. parse(to_string()) reproduces this formula,
  /// and printing is a fixed point from then on.
  std::string to_string() const;

 private:
  friend class FormulaBuilder;
  Formula(Alphabet a, std::vector<FormulaNode> nodes, std::vector<Variable> vars,
          int root)
      : alphabet_(std::move(a)), nodes_(std::move(nodes)), vars_(std::move(vars)),
        root_(root) {}

  Alphabet alphabet_;
  std::vector<FormulaNode> nodes_;
  std::vector<Variable> vars_;
  int root_;
};

/// Parse/validation failure. line/column are 1-based; 0 means "no position".
struct FormulaError : std::runtime_error {
  FormulaError(const std::string& msg, int line = 0, int column = 0);
  int line;
  int column;
};

/// Parses the concrete grammar:
///   expr  := expr "<->" expr | expr "->" expr | expr "|" expr | expr "&" expr
///          | "!" expr | "(" expr ")" | quant | atom
///   quant := ("Ep"|"Ap") ident "." expr | ("Eb"|"Ab") ident "." expr
///          | ("Ex"|"Ax") ident "<" ident "." expr
///   atom  := ident "=" ident | ident "~" ident | letter "(" ident ")"
///          | "ProcS(" ident ")" | "ProcE(" ident ")"
/// Precedence ! > & > | > -> > <->, quantifier bodies extend maximally right.
Formula parse_formula(std::string_view text, const Alphabet& alphabet);

/// Low-level construction for programmatic formulas (used by tests to build
/// guard-expanded variants the surface grammar cannot express). Node methods
/// return node ids; finish() wires the root and optionally validates kinds
/// and scoping.
class FormulaBuilder {
 public:
  int add_var(std::string name, VarKind kind, int under = -1);

  int equal(int x, int y);
  int proc_s(int x);
  int proc_e(int x);
  int letter(std::string a, int x);
  int pref_less(int x, int y);
  int same_class(int x, int y);
  int logic_not(int f);
  int logic_and(int f, int g);
  int logic_or(int f, int g);
  int implies(int f, int g);
  int iff(int f, int g);
  int exists_proc(int var, int body);
  int exists_bound(int var, std::vector<int> guards, int body);
  int exists_pref(int var, int body);

  Formula finish(int root, Alphabet alphabet, bool validate = true);

 private:
  int push(FormulaNode n);
  std::vector<FormulaNode> nodes_;
  std::vector<Variable> vars_;
};

/// Checks kind rules, binding discipline and letter membership; throws
/// FormulaError on violation. parse_formula output always passes.
void validate_formula(const Formula& f);

/// Built-in formulas used by tests and available to the CLI as corpus:NAME.
struct CorpusEntry {
  std::string name;
  std::string description;
  Alphabet alphabet;
  std::string text;
  int depth;  // expected quantifier depth
};

const std::vector<CorpusEntry>& formula_corpus();
const CorpusEntry& corpus_entry(const std::string& name);  // throws if unknown
Formula corpus_formula(const std::string& name);

}  // namespace prefsynt
