#include "doctest.h"

#include <nlohmann/json.hpp>

#include "prefsynt/dataword.hpp"
#include "support/generators.hpp"
#include "support/naive_eval.hpp"

using namespace prefsynt;
using namespace prefsynt::testsupport;

namespace {

const Alphabet kEs({"s"}, {"e"});

DataWord make_word(std::vector<ProcessDecl> procs, std::vector<Event> events,
                   const Alphabet& a = kEs) {
  return DataWord(a, std::move(procs), std::move(events));
}

}  // namespace

TEST_CASE("classes extracts per-process subsequences") {
  DataWord w = make_word({{"p", Player::Environment}, {"q", Player::System}},
                         {{"e", "p"}, {"s", "q"}, {"e", "p"}});
  auto c = classes(w);
  CHECK(c.at("p") == Word{"e", "e"});
  CHECK(c.at("q") == Word{"s"});

  DataWord none = make_word({{"p", Player::Environment}, {"q", Player::System}}, {});
  auto c2 = classes(none);
  CHECK(c2.at("p").empty());
  CHECK(c2.at("q").empty());

  DataWord one = make_word({{"p", Player::Environment}, {"q", Player::System}},
                           {{"e", "p"}});
  auto c3 = classes(one);
  CHECK(c3.at("p") == Word{"e"});
  CHECK(c3.at("q").empty());
}

TEST_CASE("reorder equivalence") {
  auto decls = std::vector<ProcessDecl>{{"p", Player::Environment},
                                        {"q", Player::System}};
  DataWord w1 = make_word(decls, {{"e", "p"}, {"s", "q"}});
  DataWord w2 = make_word(decls, {{"s", "q"}, {"e", "p"}});
  CHECK(reorder_equivalent(w1, w2));  // cross-class swap
  CHECK(reorder_equivalent(w1, w1));

  Alphabet two_env({"s"}, {"e", "f"});
  DataWord u1 = DataWord(two_env, {{"p", Player::Environment}},
                         {{"e", "p"}, {"f", "p"}});
  DataWord u2 = DataWord(two_env, {{"p", Player::Environment}},
                         {{"f", "p"}, {"e", "p"}});
  CHECK_FALSE(reorder_equivalent(u1, u2));  // same-class order changed
}

TEST_CASE("phi_ex on small words") {
  Formula phi = corpus_formula("phi_ex");
  // both sides hold
  CHECK(evaluate(phi, make_word({{"p", Player::Environment}, {"q", Player::System}},
                                {{"e", "p"}, {"s", "q"}})));
  // no events: false <-> false
  CHECK(evaluate(phi, make_word({{"p", Player::Environment}, {"q", Player::System}},
                                {})));
  // lhs true, rhs false
  DataWord lopsided = make_word(
      {{"p", Player::Environment}, {"q", Player::System}}, {{"e", "p"}});
  CHECK_FALSE(evaluate(phi, lopsided));
  CHECK_FALSE(naive_evaluate(phi, lopsided));
}

TEST_CASE("main evaluator agrees with the naive brute-force oracle") {
  Rng rng(20260810);
  for (const CorpusEntry& entry : formula_corpus()) {
    Formula f = parse_formula(entry.text, entry.alphabet);
    for (int trial = 0; trial < 80; ++trial) {
      DataWord w = random_dataword(rng, entry.alphabet, 4, 8);
      CAPTURE(entry.name);
      CAPTURE(w.to_text());
      CHECK(evaluate(f, w) == naive_evaluate(f, w));
    }
  }
}

TEST_CASE("reorder invariance on corpus formulas") {
  Rng rng(7);
  for (const CorpusEntry& entry : formula_corpus()) {
    Formula f = parse_formula(entry.text, entry.alphabet);
    for (int trial = 0; trial < 40; ++trial) {
      DataWord w = random_dataword(rng, entry.alphabet, 4, 8);
      DataWord shuffled = shuffle_preserving_classes(rng, w);
      REQUIRE(reorder_equivalent(w, shuffled));
      CAPTURE(entry.name);
      CHECK(evaluate(f, w) == evaluate(f, shuffled));
    }
  }
}

TEST_CASE("bounding guards evaluate like their hand-expanded form") {
  // Eb x. Eb y. e(y)  ==  Eb x. Eb' y (no guard). !(y ~ x) & e(y)
  Formula guarded = parse_formula("Eb x. Eb y. e(y)", kEs);

  FormulaBuilder b;
  int x = b.add_var("x", VarKind::Bounding);
  int y = b.add_var("y", VarKind::Bounding);
  int body = b.logic_and(b.logic_not(b.same_class(y, x)), b.letter("e", y));
  int root = b.exists_bound(x, {}, b.exists_bound(y, {}, body));
  Formula expanded = b.finish(root, kEs, /*validate=*/false);

  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    DataWord w = random_dataword(rng, kEs, 4, 8);
    CHECK(evaluate(guarded, w) == evaluate(expanded, w));
  }
}

TEST_CASE("the bounding quantifier skips process elements") {
  Formula some_position = parse_formula("Eb x. x = x", kEs);
  CHECK_FALSE(evaluate(some_position,
                       make_word({{"p", Player::Environment}}, {})));
  CHECK(evaluate(some_position,
                 make_word({{"p", Player::Environment}}, {{"e", "p"}})));
}

TEST_CASE("data word validation") {
  CHECK_THROWS(make_word({{"p", Player::Environment}}, {{"e", "nope"}}));
  // System letter on an Environment process
  CHECK_THROWS(make_word({{"p", Player::Environment}}, {{"s", "p"}}));
  // duplicate ids
  CHECK_THROWS(make_word({{"p", Player::Environment}, {"p", Player::System}}, {}));
  // alphabet mismatch in evaluate
  Alphabet other({"t"}, {"e"});
  DataWord w(other, {{"p", Player::Environment}}, {});
  CHECK_THROWS(evaluate(corpus_formula("phi_ex"), w));
}

TEST_CASE("text and json round trips") {
  DataWord w = make_word({{"p1", Player::Environment}, {"q1", Player::System}},
                         {{"e", "p1"}, {"s", "q1"}, {"e", "p1"}});
  DataWord w2 = DataWord::from_text(w.to_text(), kEs);
  CHECK(w == w2);
  DataWord w3 = DataWord::from_json(w.to_json(), kEs);
  CHECK(w == w3);

  CHECK_NOTHROW(DataWord::from_text("# comment\nproc p E\ne p\n", kEs));
  CHECK_THROWS(DataWord::from_text("proc p X\n", kEs));
}
