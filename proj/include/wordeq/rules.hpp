#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordeq/branch.hpp"
#include "wordeq/parikh.hpp"
#include "wordeq/powers.hpp"
#include "wordeq/print.hpp"
#include "wordeq/rewrite.hpp"

namespace wordeq {

// Priority classes, best first: conflicts close the node, deterministic
// rewrites are free, eliminating substitutions (ground images) beat other
// forced single branches, power handling beats generic branching.
enum class RuleClass : uint8_t {
  Conflict = 0,
  Rewrite = 1,
  Eliminating = 2,
  Forced = 3,
  Power = 4,
  Generic = 5
};

inline bool subst_eliminating(const Substitution& s) {
  if (s.identity()) return false;
  for (auto& [x, u] : s.var_map())
    if (!is_ground(u)) return false;
  return true;
}

struct RuleApplication {
  RuleClass cls = RuleClass::Generic;
  int rule = 0;  // table row
  size_t eq_index = 0;
  Orient orient = Orient::AsIs;
  bool conflict = false;
  std::vector<Branch> branches;
};

inline bool app_better(const RuleApplication& a, const RuleApplication& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  if (a.branches.size() != b.branches.size()) return a.branches.size() < b.branches.size();
  if (a.eq_index != b.eq_index) return a.eq_index < b.eq_index;
  return a.orient < b.orient;
}

inline const RuleApplication& rule_priority(const std::vector<RuleApplication>& apps) {
  assert(!apps.empty());
  const RuleApplication* best = &apps[0];
  for (auto& a : apps)
    if (app_better(a, *best)) best = &a;
  return *best;
}

namespace detail {

inline Branch unorient_branch(Branch b, Orient o) {
  if (orient_reversed(o)) {
    Substitution s;
    for (auto& [x, u] : b.subst.var_map()) s.map_var(x, reverse(u));
    for (auto& [sym, t] : b.subst.sym_map()) s.map_sym(sym, t);
    b.subst = std::move(s);
    for (auto& e : b.add_eqs) e = {reverse(e.lhs), reverse(e.rhs)};
  }
  if (b.replace_eq)
    for (auto& e : *b.replace_eq) {
      auto [l, r] = std::pair<StringTerm, StringTerm>{e.lhs, e.rhs};
      e = unorient(l, r, o);
    }
  if (orient_swapped(o) && b.add_eqs.empty() && !b.replace_eq) {
    // nothing positional left to adjust
  }
  return b;
}

inline StringTerm drop_front(const StringTerm& t) { return t.sub(1, t.size() - 1); }

}  // namespace detail

// Matches the equation rewriting/generating table against one orientation.
// Assumes the equation is fully simplified (no deterministic row applies).
inline std::optional<RuleApplication> match_orient(size_t eq_index, const Equation& eq, Orient o,
                                                   const IntStore& store, SymbolPool& pool,
                                                   bool power_intro_applicable,
                                                   const Printer* pr = nullptr) {
  auto [l, r] = oriented(eq, o);
  auto name = [&](auto v) { return pool.name(v); };
  auto mk = [&](RuleClass cls, int rule, std::vector<Branch> bs) {
    RuleApplication app;
    app.cls = cls;
    app.rule = rule;
    app.eq_index = eq_index;
    app.orient = o;
    for (auto& b : bs) {
      Branch ub = detail::unorient_branch(std::move(b), o);
      if (pr && !ub.subst.identity()) ub.label = pr->substitution(ub.subst);
      app.branches.push_back(std::move(ub));
    }
    return app;
  };
  auto conflict = [&](int rule) {
    RuleApplication app;
    app.cls = RuleClass::Conflict;
    app.rule = rule;
    app.eq_index = eq_index;
    app.orient = o;
    app.conflict = true;
    return app;
  };

  if (l.empty() && r.empty()) return std::nullopt;
  if (l.empty()) {
    const Token& t = r[0];
    if (t.is_char_like()) return conflict(t.is_chr() ? 2 : 3);
    if (t.is_var()) {
      Branch b;
      b.subst.map_var(t.var_id(), StringTerm{});
      b.label = name(t.var_id()) + "/\"\"";
      return mk(RuleClass::Eliminating, 4, {std::move(b)});
    }
    // eps vs power: base empties or exponent is zero
    Branch b1, b2;
    b1.add_eqs.push_back({t.base(), StringTerm{}});
    b1.label = pr ? pr->term(t.base()) + "/\"\"" : "base-empty";
    b2.add_ints.push_back(IntConstraint::eq(t.exp(), IntPoly::constant(0)));
    b2.label = pr ? pr->poly(t.exp()) + "=0" : "exp-zero";
    return mk(RuleClass::Power, 5, {std::move(b1), std::move(b2)});
  }
  if (r.empty()) return std::nullopt;  // handled by the swapped orientation

  const Token& a = l[0];
  const Token& b0 = r[0];
  if (a == b0) return std::nullopt;  // deterministic row, removed by simpl

  if (a.is_chr() && b0.is_chr()) return conflict(6);

  if (a.is_sym() && b0.is_char_like()) {
    Branch b;
    b.subst.map_sym(a.sym_id(), b0);
    b.label = name(a.sym_id()) + "/" + (pr ? pr->token(b0) : "@");
    return mk(RuleClass::Eliminating, 7, {std::move(b)});
  }
  if (b0.is_sym() && a.is_char_like()) return std::nullopt;  // swapped orientation covers it

  if (a.is_char_like() && b0.is_var()) {
    if (power_intro_applicable) return std::nullopt;
    VarId x = b0.var_id();
    Branch b1;
    b1.subst.map_var(x, StringTerm{});
    b1.label = name(x) + "/\"\"";
    Branch b2;
    VarId xp = pool.fresh_var(name(x));
    b2.subst.map_var(x, StringTerm{a, Token::var(xp)});
    b2.label = name(x) + "/" + (pr ? pr->token(a) : "@") + name(xp);
    return mk(RuleClass::Generic, 8, {std::move(b1), std::move(b2)});
  }
  if (a.is_var() && b0.is_char_like()) return std::nullopt;

  if (a.is_char_like() && b0.is_pow()) {
    const StringTerm& w = b0.base();
    const IntPoly& m = b0.exp();
    // entailed positive exponent with a symbolic character leading the base
    // forces that character
    if (!w.empty() && w[0].is_sym() && !(w[0] == a) &&
        store.entails(IntConstraint::gt(m, IntPoly::constant(0)))) {
      Branch b;
      b.subst.map_sym(w[0].sym_id(), a);
      b.add_ints.push_back(IntConstraint::gt(m, IntPoly::constant(0)));
      b.label = name(w[0].sym_id()) + "/" + (pr ? pr->token(a) : "@");
      return mk(RuleClass::Eliminating, 9, {std::move(b)});
    }
    Branch b1;
    b1.replace_eq = {Equation{l, detail::drop_front(r)}};
    b1.add_ints.push_back(IntConstraint::eq(m, IntPoly::constant(0)));
    b1.label = (pr ? pr->poly(m) : "m") + "=0";
    Branch b2;
    StringTerm unwound = w;
    unwound.push_back(Token::pow(w, m - IntPoly::constant(1)));
    unwound.append(detail::drop_front(r));
    b2.replace_eq = {Equation{l, unwound}};
    b2.add_ints.push_back(IntConstraint::gt(m, IntPoly::constant(0)));
    b2.label = (pr ? pr->poly(m) : "m") + ">0";
    return mk(RuleClass::Power, 9, {std::move(b1), std::move(b2)});
  }
  if (a.is_pow() && b0.is_char_like()) return std::nullopt;

  if (a.is_var() && b0.is_var()) {
    VarId x = a.var_id(), y = b0.var_id();
    if (x == y) return std::nullopt;
    Branch b1;
    b1.subst.map_var(x, StringTerm{});
    b1.label = name(x) + "/\"\"";
    Branch b2;
    b2.subst.map_var(y, StringTerm{});
    b2.add_ints.push_back(IntConstraint::gt(IntPoly::len(x), IntPoly::constant(0)));
    b2.label = name(y) + "/\"\"";
    Branch b3;
    VarId yp = pool.fresh_var(name(y));
    b3.subst.map_var(y, StringTerm{Token::var(x), Token::var(yp)});
    b3.add_ints.push_back(IntConstraint::gt(IntPoly::len(x), IntPoly::constant(0)));
    b3.label = name(y) + "/" + name(x) + name(yp);
    Branch b4;
    VarId xp = pool.fresh_var(name(x));
    b4.subst.map_var(x, StringTerm{Token::var(y), Token::var(xp)});
    b4.add_ints.push_back(IntConstraint::gt(IntPoly::len(y), IntPoly::constant(0)));
    b4.add_ints.push_back(IntConstraint::gt(IntPoly::len(xp), IntPoly::constant(0)));
    b4.label = name(x) + "/" + name(y) + name(xp);
    return mk(RuleClass::Generic, 10,
              {std::move(b1), std::move(b2), std::move(b3), std::move(b4)});
  }

  if (a.is_var() && b0.is_pow()) {
    if (power_intro_applicable) return std::nullopt;
    VarId x = a.var_id();
    const StringTerm& w = b0.base();
    const IntPoly& m = b0.exp();
    std::vector<Branch> bs;
    Branch whole;
    VarId xp = pool.fresh_var(name(x));
    whole.subst.map_var(x, StringTerm{b0, Token::var(xp)});
    whole.label = name(x) + "/" + (pr ? pr->token(b0) : "w^m") + name(xp);
    bs.push_back(std::move(whole));
    for (auto& cas : sdec(w, pool)) {
      Branch b;
      IntVarId mp = pool.fresh_ivar("m");
      StringTerm image{Token::pow(w, IntPoly::var(mp))};
      image.append(cas.prefix);
      b.subst.map_var(x, image);
      b.add_ints = cas.side;
      b.add_ints.push_back(IntConstraint::ge(IntPoly::var(mp), IntPoly::constant(0)));
      b.add_ints.push_back(IntConstraint::lt(IntPoly::var(mp), m));
      b.label = name(x) + "/" + (pr ? pr->term(image) : "w^m'p");
      bs.push_back(std::move(b));
    }
    return mk(RuleClass::Power, 11, std::move(bs));
  }
  if (a.is_pow() && b0.is_var()) return std::nullopt;

  if (a.is_pow() && b0.is_pow()) {
    const IntPoly &m1 = a.exp(), &m2 = b0.exp();
    if (a.base() == b0.base()) {
      Branch b1;
      StringTerm nl{Token::pow(a.base(), m1 - m2)};
      nl.append(detail::drop_front(l));
      b1.replace_eq = {Equation{nl, detail::drop_front(r)}};
      b1.add_ints.push_back(IntConstraint::ge(m1, m2));
      b1.label = "m1>=m2";
      Branch b2;
      StringTerm nr{Token::pow(a.base(), m2 - m1)};
      nr.append(detail::drop_front(r));
      b2.replace_eq = {Equation{detail::drop_front(l), nr}};
      b2.add_ints.push_back(IntConstraint::lt(m1, m2));
      b2.label = "m1<m2";
      return mk(RuleClass::Power, 12, {std::move(b1), std::move(b2)});
    }
    Branch b1;
    b1.replace_eq = {Equation{l, detail::drop_front(r)}};
    b1.add_ints.push_back(IntConstraint::eq(m2, IntPoly::constant(0)));
    b1.label = "m2=0";
    Branch b2;
    StringTerm unwound = b0.base();
    unwound.push_back(Token::pow(b0.base(), m2 - IntPoly::constant(1)));
    unwound.append(detail::drop_front(r));
    b2.replace_eq = {Equation{l, unwound}};
    b2.add_ints.push_back(IntConstraint::gt(m2, IntPoly::constant(0)));
    b2.label = "m2>0";
    return mk(RuleClass::Power, 13, {std::move(b1), std::move(b2)});
  }

  return std::nullopt;
}

// Highest-priority applicable rule over the four orientations.
inline std::optional<RuleApplication> match_rule(size_t eq_index, const Equation& eq,
                                                 const IntStore& store, SymbolPool& pool,
                                                 bool power_intro_applicable,
                                                 const Printer* pr = nullptr) {
  std::vector<RuleApplication> found;
  for (Orient o : {Orient::AsIs, Orient::Swapped, Orient::Rev, Orient::SwappedRev}) {
    auto app = match_orient(eq_index, eq, o, store, pool, power_intro_applicable, pr);
    if (app) found.push_back(std::move(*app));
  }
  if (found.empty()) return std::nullopt;
  return rule_priority(found);
}

// --- Look-ahead heuristics ----------------------------------------------------

namespace detail {

// Quick conflict test for one branch against one equation: apply the
// substitution (or replacement), simplify deterministically, and check the
// added constraints against the store.
inline bool branch_conflicts(const Branch& b, const Equation& eq, const IntStore& store) {
  for (auto& c : b.add_ints) {
    if (c.trivially_false()) return true;
    // A single Ge0 constraint is refuted when its negation is entailed.
    if (c.form() == IntConstraint::Form::Ge0) {
      IntConstraint neg =
          IntConstraint::make(IntConstraint::Form::Ge0, -c.poly() - IntPoly::constant(1));
      if (store.entails(neg)) return true;
    } else {
      for (auto& d : c.negation())
        if (store.entails(d)) return true;
    }
  }
  std::vector<Equation> eqs;
  if (b.replace_eq)
    eqs = *b.replace_eq;
  else
    eqs.push_back(eq);
  for (auto& e : b.add_eqs) eqs.push_back(e);
  IntStore tmp = store;
  for (auto& c : b.add_ints)
    if (!tmp.add(c)) return true;
  for (auto e : eqs) {
    e = b.subst.apply(e);
    std::vector<IntConstraint> added;
    if (det_simplify(e, tmp, added) == DetResult::Conflict) return true;
    if (!e.trivial() && unsat_filter(e).has_value()) return true;
  }
  return false;
}

// Longest forced prefix extension: while the empty branch conflicts and the
// character branch is the only survivor, keep consuming characters from the
// opposite side.
inline std::optional<Branch> forced_prefix(const Equation& eq, Orient o, const IntStore& store,
                                           SymbolPool& pool, const Printer* pr) {
  auto [l, r] = oriented(eq, o);
  if (l.empty() || r.empty() || !l[0].is_var() || !r[0].is_char_like()) return std::nullopt;
  VarId x0 = l[0].var_id();
  StringTerm prefix;
  Equation cur = {l, r};
  VarId xc = x0;
  for (int step = 0; step < 64; step++) {
    auto [cl, cr] = std::pair<StringTerm, StringTerm>{cur.lhs, cur.rhs};
    if (cl.empty() || cr.empty() || !cl[0].is_var() || cl[0].var_id() != xc ||
        !cr[0].is_char_like())
      break;
    Token at = cr[0];
    // the eps branch must die
    Branch be;
    be.subst.map_var(xc, StringTerm{});
    if (!branch_conflicts(be, cur, store)) break;
    // the character branch must survive
    VarId xn = pool.fresh_var(pool.name(x0));
    Branch bc;
    bc.subst.map_var(xc, StringTerm{at, Token::var(xn)});
    if (branch_conflicts(bc, cur, store)) break;
    prefix.push_back(at);
    Equation next = bc.subst.apply(cur);
    std::vector<IntConstraint> added;
    IntStore tmp = store;
    if (det_simplify(next, tmp, added) == DetResult::Conflict) break;
    cur = next;
    xc = xn;
  }
  if (prefix.empty()) return std::nullopt;
  Branch b;
  StringTerm image = prefix;
  image.push_back(Token::var(xc));
  b.subst.map_var(x0, image);
  b = detail::unorient_branch(std::move(b), o);
  if (pr) b.label = pr->substitution(b.subst);
  return b;
}

// Can `run` (characters and symbolic characters) be read as a prefix of some
// unwinding of the ground term w repeated at least once? Symbolic characters
// match anything; inner powers may repeat any number of times. Conservative
// towards "yes".
inline bool run_matches_power_prefix(const std::vector<Token>& run, const StringTerm& w,
                                     int depth = 0) {
  if (depth > 24) return true;  // give up conservatively
  struct State {
    size_t i;  // run position
    size_t j;  // token position in w
  };
  std::vector<State> stack{{0, 0}};
  std::vector<std::pair<size_t, size_t>> seen;
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (i >= run.size()) return true;  // run covered
    if (j >= w.size()) {
      // one full copy consumed; the unwinding may stop here (rest of the
      // equation side continues) or wrap around
      return true;
    }
    bool dup = false;
    for (auto& s : seen)
      if (s.first == i && s.second == j) dup = true;
    if (dup) continue;
    seen.push_back({i, j});
    const Token& t = w[j];
    if (t.is_chr()) {
      if (run[i].is_sym() || (run[i].is_chr() && run[i] == t)) stack.push_back({i + 1, j + 1});
    } else if (t.is_sym()) {
      stack.push_back({i + 1, j + 1});  // wildcard
    } else if (t.is_pow()) {
      stack.push_back({i, j + 1});  // zero repetitions
      // one or more repetitions: match the base against the remaining run
      const StringTerm& base = t.base();
      for (size_t take = 0; take <= run.size() - i; take++) {
        std::vector<Token> sub(run.begin() + i, run.begin() + i + take);
        if (run_matches_power_prefix(sub, base, depth + 1)) {
          if (take == run.size() - i) return true;  // run exhausted inside the power
          if (take > 0) stack.push_back({i + take, j});  // same power again or move on
        }
      }
    }
  }
  return false;
}

}  // namespace detail

// Stopping rule for unwinding: if the other side starts with characters
// that no unwinding of the base can begin with (in this orientation), the
// exponent must be zero.
inline std::optional<RuleApplication> lookahead_power_zero(const std::vector<Equation>& eqs,
                                                           const IntStore& store,
                                                           const Printer* pr = nullptr) {
  for (size_t i = 0; i < eqs.size(); i++) {
    for (Orient o : {Orient::AsIs, Orient::Swapped, Orient::Rev, Orient::SwappedRev}) {
      auto [l, r] = oriented(eqs[i], o);
      if (l.empty() || !l[0].is_pow() || r.empty() || !r[0].is_char_like()) continue;
      const IntPoly& m = l[0].exp();
      if (store.entails(IntConstraint::eq(m, IntPoly::constant(0)))) continue;
      std::vector<Token> run;
      for (auto& t : r)
        if (t.is_char_like())
          run.push_back(t);
        else
          break;
      if (run.empty()) continue;
      if (!detail::run_matches_power_prefix(run, l[0].base())) {
        RuleApplication app;
        app.cls = RuleClass::Rewrite;
        app.rule = 9;
        app.eq_index = i;
        app.orient = o;
        Branch b;
        b.add_ints.push_back(IntConstraint::eq(m, IntPoly::constant(0)));
        b.label = (pr ? pr->poly(m) : "m") + "=0";
        app.branches.push_back(std::move(b));
        return app;
      }
    }
  }
  return std::nullopt;
}

// Look-ahead strengthening of one application: entailed length orderings
// force a single branch of the variable-variable rule; branches whose
// immediate simplification conflicts are pruned; a collapsed character
// branch is extended to the longest forced prefix.
inline RuleApplication look_ahead(const RuleApplication& app, const std::vector<Equation>& eqs,
                                  const IntStore& store, SymbolPool& pool,
                                  const Printer* pr = nullptr) {
  const Equation& eq = eqs[app.eq_index];

  // length-based forcing for the variable-variable rule
  if (app.rule == 10) {
    auto [l, r] = oriented(eq, app.orient);
    if (!l.empty() && !r.empty() && l[0].is_var() && r[0].is_var()) {
      VarId x = l[0].var_id(), y = r[0].var_id();
      IntPoly lx = IntPoly::len(x), ly = IntPoly::len(y);
      RuleApplication out = app;
      out.branches.clear();
      if (store.entails(IntConstraint::eq(lx, ly))) {
        Branch b;
        b.subst.map_var(x, StringTerm{Token::var(y)});
        Branch ub = detail::unorient_branch(std::move(b), app.orient);
        if (pr) ub.label = pr->substitution(ub.subst);
        out.branches.push_back(std::move(ub));
        out.cls = RuleClass::Forced;
        return out;
      }
      if (store.entails(IntConstraint::gt(lx, ly))) {
        Branch b;
        VarId xp = pool.fresh_var(pool.name(x));
        b.subst.map_var(x, StringTerm{Token::var(y), Token::var(xp)});
        b.add_ints.push_back(IntConstraint::gt(IntPoly::len(xp), IntPoly::constant(0)));
        Branch ub = detail::unorient_branch(std::move(b), app.orient);
        if (pr) ub.label = pr->substitution(ub.subst);
        out.branches.push_back(std::move(ub));
        out.cls = RuleClass::Forced;
        return out;
      }
      if (store.entails(IntConstraint::gt(ly, lx))) {
        Branch b;
        VarId yp = pool.fresh_var(pool.name(y));
        b.subst.map_var(y, StringTerm{Token::var(x), Token::var(yp)});
        b.add_ints.push_back(IntConstraint::gt(IntPoly::len(yp), IntPoly::constant(0)));
        Branch ub = detail::unorient_branch(std::move(b), app.orient);
        if (pr) ub.label = pr->substitution(ub.subst);
        out.branches.push_back(std::move(ub));
        out.cls = RuleClass::Forced;
        return out;
      }
    }
  }

  // prune branches that conflict immediately
  RuleApplication out = app;
  std::vector<Branch> live;
  for (auto& b : out.branches)
    if (!detail::branch_conflicts(b, eq, store)) live.push_back(b);
  if (live.size() != out.branches.size()) out.branches = std::move(live);
  if (out.branches.empty()) {
    out.cls = RuleClass::Conflict;
    out.conflict = true;
    return out;
  }
  if (out.branches.size() == 1) {
    // a surviving character branch extends to the longest forced prefix
    if (app.rule == 8) {
      Orient vo = app.orient;
      // rule 8 matched char-vs-var; the variable side is the right one
      Orient var_first = orient_swapped(vo)
                             ? (orient_reversed(vo) ? Orient::Rev : Orient::AsIs)
                             : (orient_reversed(vo) ? Orient::SwappedRev : Orient::Swapped);
      if (auto fp = detail::forced_prefix(eq, var_first, store, pool, pr)) {
        out.branches = {std::move(*fp)};
      }
    }
    out.cls = subst_eliminating(out.branches[0].subst) ? RuleClass::Eliminating
                                                       : RuleClass::Forced;
  }
  return out;
}

}  // namespace wordeq
