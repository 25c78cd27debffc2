#include "doctest.h"

#include "prefsynt/logic.hpp"

using namespace prefsynt;

namespace {
const Alphabet kEs({"s"}, {"e"});
}

TEST_CASE("quantifier depths of the running examples") {
  CHECK(corpus_formula("phi_ex").depth() == 3);
  CHECK(corpus_formula("one_e").depth() == 3);
  CHECK(parse_formula("Eb x. e(x)", kEs).depth() == 1);
}

TEST_CASE("corpus entries parse at their declared depth") {
  for (const CorpusEntry& e : formula_corpus()) {
    CAPTURE(e.name);
    Formula f = parse_formula(e.text, e.alphabet);
    CHECK(f.depth() == e.depth);
  }
}

TEST_CASE("depth ignores connectives and counts all quantifier kinds") {
  CHECK(parse_formula("!(Eb x. e(x))", kEs).depth() == 1);
  CHECK(parse_formula("(Eb x. e(x)) & (Eb x. s(x))", kEs).depth() == 1);
  CHECK(parse_formula("Ep p. Eb x. x ~ p & Ex y < x. e(y)", kEs).depth() == 3);
  CHECK(parse_formula("Ap p. Ab x. x ~ p", kEs).depth() == 2);
}

TEST_CASE("pretty-printing reaches a fixed point") {
  for (const CorpusEntry& e : formula_corpus()) {
    CAPTURE(e.name);
    std::string once = parse_formula(e.text, e.alphabet).to_string();
    std::string twice = parse_formula(once, e.alphabet).to_string();
    CHECK(once == twice);
  }
}

TEST_CASE("free variables are rejected") {
  CHECK_THROWS_WITH_AS(parse_formula("Ex z < y. e(z)", kEs),
                       doctest::Contains("free variable"), FormulaError);
  CHECK_THROWS_AS(parse_formula("e(x)", kEs), FormulaError);
}

TEST_CASE("kind violations are rejected") {
  // letter on a process variable
  CHECK_THROWS_WITH_AS(parse_formula("Ep x. e(x)", kEs),
                       doctest::Contains("kind violation"), FormulaError);
  // ProcS on a bounding variable
  CHECK_THROWS_AS(parse_formula("Eb x. ProcS(x)", kEs), FormulaError);
  // ~ without a process operand
  CHECK_THROWS_AS(parse_formula("Eb x. Eb y. x ~ y", kEs), FormulaError);
  // < on a bounding pair
  CHECK_THROWS_AS(parse_formula("Eb x. Eb y. Ex z < x. y < x", kEs), FormulaError);
  // prefix quantifier bounded by a process variable
  CHECK_THROWS_AS(parse_formula("Ep x. Ex z < x. e(z)", kEs), FormulaError);
}

TEST_CASE("unknown letters are rejected with the letter named") {
  CHECK_THROWS_WITH_AS(parse_formula("Eb x. q(x)", kEs),
                       doctest::Contains("unknown letter 'q'"), FormulaError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("Eb x. e(x) &", kEs);
    FAIL("expected a syntax error");
  } catch (const FormulaError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 0);
  }
}

TEST_CASE("universal quantifiers parse as negated existentials") {
  Formula f = parse_formula("Ab x. e(x)", kEs);
  CHECK(f.node(f.root()).kind == NodeKind::Not);
  const FormulaNode& ex = f.node(f.node(f.root()).lhs);
  CHECK(ex.kind == NodeKind::ExistsBound);
  CHECK(f.node(ex.lhs).kind == NodeKind::Not);
}

TEST_CASE("bounding guards reference exactly the bounding variables in scope") {
  Formula f = parse_formula("Ep p. Eb x. Eb y. e(y)", kEs);
  // walk to the two Eb nodes
  const FormulaNode* ep = &f.node(f.root());
  REQUIRE(ep->kind == NodeKind::ExistsProc);
  const FormulaNode* outer = &f.node(ep->lhs);
  REQUIRE(outer->kind == NodeKind::ExistsBound);
  CHECK(outer->guards.empty());
  const FormulaNode* inner = &f.node(outer->lhs);
  REQUIRE(inner->kind == NodeKind::ExistsBound);
  REQUIRE(inner->guards.size() == 1);
  CHECK(inner->guards[0] == outer->var);
}

TEST_CASE("variables are alpha-renamed to unique names") {
  Formula f = corpus_formula("phi_ex");
  std::vector<std::string> names;
  for (int i = 0; i < f.num_variables(); ++i) names.push_back(f.variable(i).name);
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("equality between any variable kinds parses") {
  // cross-kind equality is grammatical (and vacuous on disjoint universes)
  CHECK_NOTHROW(parse_formula("Ep p. Eb x. p = x", kEs));
}
