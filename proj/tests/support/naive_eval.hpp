// Test-only oracle: a deliberately naive evaluator. Every quantifier ranges
// over the whole universe and the grammar's guards are applied as semantic
// side conditions, with no pre-materialized iteration tricks. Kept separate
// from the library so the production evaluator is checked against an
// independent path.
#pragma once

#include <vector>

#include "prefsynt/dataword.hpp"
#include "prefsynt/logic.hpp"

namespace prefsynt::testsupport {

inline bool naive_eval_node(const Formula& f, const DataWord& w, int id,
                            std::vector<int>& env) {
  const FormulaNode& n = f.node(id);
  auto is_proc = [&](int e) { return w.is_process_element(e); };
  auto same_class = [&](int a, int b) { return w.class_of(a) == w.class_of(b); };
  auto pref_less = [&](int a, int b) {
    return !is_proc(a) && !is_proc(b) && same_class(a, b) &&
           w.position_of(a) < w.position_of(b);
  };
  switch (n.kind) {
    case NodeKind::Equal:
      return env[n.lhs] == env[n.rhs];
    case NodeKind::ProcS:
      return is_proc(env[n.var]) &&
             w.player_of_element(env[n.var]) == Player::System;
    case NodeKind::ProcE:
      return is_proc(env[n.var]) &&
             w.player_of_element(env[n.var]) == Player::Environment;
    case NodeKind::Letter:
      return !is_proc(env[n.var]) && w.letter_of(env[n.var]) == n.letter;
    case NodeKind::PrefLess:
      return pref_less(env[n.lhs], env[n.rhs]);
    case NodeKind::SameClass:
      return same_class(env[n.lhs], env[n.rhs]);
    case NodeKind::Not:
      return !naive_eval_node(f, w, n.lhs, env);
    case NodeKind::And:
      return naive_eval_node(f, w, n.lhs, env) && naive_eval_node(f, w, n.rhs, env);
    case NodeKind::Or:
      return naive_eval_node(f, w, n.lhs, env) || naive_eval_node(f, w, n.rhs, env);
    case NodeKind::Implies:
      return !naive_eval_node(f, w, n.lhs, env) ||
             naive_eval_node(f, w, n.rhs, env);
    case NodeKind::Iff:
      return naive_eval_node(f, w, n.lhs, env) ==
             naive_eval_node(f, w, n.rhs, env);
    case NodeKind::ExistsProc:
      for (int e = 0; e < w.universe_size(); ++e) {
        if (!is_proc(e)) continue;
        env[n.var] = e;
        bool ok = naive_eval_node(f, w, n.lhs, env);
        env[n.var] = -1;
        if (ok) return true;
      }
      return false;
    case NodeKind::ExistsBound:
      for (int e = 0; e < w.universe_size(); ++e) {
        if (is_proc(e)) continue;
        bool guarded = false;
        for (int g : n.guards) guarded = guarded || same_class(e, env[g]);
        if (guarded) continue;
        env[n.var] = e;
        bool ok = naive_eval_node(f, w, n.lhs, env);
        env[n.var] = -1;
        if (ok) return true;
      }
      return false;
    case NodeKind::ExistsPref:
      for (int e = 0; e < w.universe_size(); ++e) {
        if (!pref_less(e, env[f.variable(n.var).under])) continue;
        env[n.var] = e;
        bool ok = naive_eval_node(f, w, n.lhs, env);
        env[n.var] = -1;
        if (ok) return true;
      }
      return false;
  }
  return false;
}

inline bool naive_evaluate(const Formula& f, const DataWord& w) {
  std::vector<int> env(f.num_variables(), -1);
  return naive_eval_node(f, w, f.root(), env);
}

}  // namespace prefsynt::testsupport
