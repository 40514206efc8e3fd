#pragma once

#include <optional>
#include <vector>

#include "wordeq/int_solver.hpp"
#include "wordeq/term.hpp"

namespace wordeq {

// Result of rewriting one term to its normal form. `used` records the
// entailments behind conditional rule firings (exponent = 0 / = 1).
struct RewriteOutcome {
  StringTerm term;
  bool changed = false;
  std::vector<IntConstraint> used;
};

namespace detail {

// (power tokens at any depth, tokens at any depth): every rewrite rule
// strictly decreases this pair lexicographically, which bounds the loop.
inline std::pair<size_t, size_t> term_measure(const StringTerm& u) {
  size_t pows = 0, toks = 0;
  for (auto& t : u) {
    toks++;
    if (t.is_pow()) {
      auto [p, k] = term_measure(t.base());
      pows += 1 + p;
      toks += k;
    }
  }
  return {pows, toks};
}

inline bool measure_less(std::pair<size_t, size_t> a, std::pair<size_t, size_t> b) {
  return a.first != b.first ? a.first < b.first : a.second < b.second;
}

inline bool run_equals(const std::vector<Token>& ts, size_t pos, const StringTerm& b) {
  if (pos + b.size() > ts.size()) return false;
  for (size_t i = 0; i < b.size(); i++)
    if (!(ts[pos + i] == b[i])) return false;
  return true;
}

}  // namespace detail

// Controls whether a ground run at the very front of a term may be absorbed
// into the power following it. The equation simplifier restricts this to the
// base the opposite side starts with, so that deliberately unwound copies
// stay in place.
struct FrontGuard {
  bool restricted = false;
  StringTerm base;

  static FrontGuard open() { return {}; }
  static FrontGuard closed() { return {true, {}}; }
  static FrontGuard only(StringTerm b) { return {true, std::move(b)}; }
  bool allows(const StringTerm& b) const { return !restricted || b == base; }
};

// Exhaustively applies the power normalization rules: empty bases vanish,
// nested powers flatten, adjacent equal-base powers merge, entailed-zero or
// entailed-one exponents collapse, and a full base run next to its power is
// absorbed into the exponent.
inline RewriteOutcome rewrite_term(const StringTerm& u, const IntStore& store,
                                   FrontGuard front = FrontGuard::open()) {
  RewriteOutcome out;
  std::vector<Token> ts = u.tokens();
  bool changed_any = false;

#ifndef NDEBUG
  auto before = detail::term_measure(u);
#endif

  bool changed = true;
  while (changed) {
    changed = false;
    // Per-token normalization.
    for (size_t i = 0; i < ts.size() && !changed; i++) {
      if (!ts[i].is_pow()) continue;
      const StringTerm& base = ts[i].base();
      const IntPoly& e = ts[i].exp();
      auto inner = rewrite_term(base, store);
      for (auto& c : inner.used) out.used.push_back(c);
      if (inner.term.empty()) {
        ts.erase(ts.begin() + i);
        changed = true;
      } else if (inner.term.size() == 1 && inner.term[0].is_pow()) {
        const Token& p = inner.term[0];
        ts[i] = Token::pow(p.base(), p.exp() * e);
        changed = true;
      } else if (e.is_constant() && e.constant_value() == 0) {
        ts.erase(ts.begin() + i);
        changed = true;
      } else if (e.is_constant() && e.constant_value() == 1) {
        ts.erase(ts.begin() + i);
        ts.insert(ts.begin() + i, inner.term.begin(), inner.term.end());
        changed = true;
      } else if (store.entails(IntConstraint::eq(e, IntPoly::constant(0)))) {
        out.used.push_back(IntConstraint::eq(e, IntPoly::constant(0)));
        ts.erase(ts.begin() + i);
        changed = true;
      } else if (store.entails(IntConstraint::eq(e, IntPoly::constant(1)))) {
        out.used.push_back(IntConstraint::eq(e, IntPoly::constant(1)));
        ts.erase(ts.begin() + i);
        ts.insert(ts.begin() + i, inner.term.begin(), inner.term.end());
        changed = true;
      } else if (inner.changed) {
        ts[i] = Token::pow(inner.term, e);
        changed = true;
      }
    }
    if (changed) {
      changed_any = true;
      continue;
    }
    // Adjacent powers with the same base merge.
    for (size_t i = 0; i + 1 < ts.size() && !changed; i++) {
      if (ts[i].is_pow() && ts[i + 1].is_pow() && ts[i].base() == ts[i + 1].base()) {
        Token merged = Token::pow(ts[i].base(), ts[i].exp() + ts[i + 1].exp());
        ts[i] = merged;
        ts.erase(ts.begin() + i + 1);
        changed = true;
      }
    }
    if (changed) {
      changed_any = true;
      continue;
    }
    // Absorption of a full base run into the neighbouring power.
    for (size_t i = 0; i < ts.size() && !changed; i++) {
      if (!ts[i].is_pow()) continue;
      const StringTerm& b = ts[i].base();
      size_t L = b.size();
      if (L == 0) continue;
      if (i >= L && detail::run_equals(ts, i - L, b) && (i - L > 0 || front.allows(b))) {
        Token merged = Token::pow(b, ts[i].exp() + IntPoly::constant(1));
        ts.erase(ts.begin() + (i - L), ts.begin() + (i + 1));
        ts.insert(ts.begin() + (i - L), merged);
        changed = true;
      } else if (detail::run_equals(ts, i + 1, b)) {
        Token merged = Token::pow(b, ts[i].exp() + IntPoly::constant(1));
        ts.erase(ts.begin() + i, ts.begin() + (i + 1 + L));
        ts.insert(ts.begin() + i, merged);
        changed = true;
      }
    }
    if (changed) changed_any = true;
  }

  out.term = StringTerm(std::move(ts));
  out.changed = changed_any;
#ifndef NDEBUG
  if (changed_any) assert(detail::measure_less(detail::term_measure(out.term), before));
#endif
  return out;
}

// Lemma constraints of a node: exponents are non-negative, both sides of an
// equation have equal length, variable lengths are non-negative.
inline void add_exponent_lemmas(const StringTerm& u, std::vector<IntConstraint>& out) {
  for (auto& t : u)
    if (t.is_pow()) {
      out.push_back(IntConstraint::ge(t.exp(), IntPoly::constant(0)));
      add_exponent_lemmas(t.base(), out);
    }
}

inline std::vector<IntConstraint> lemma_constraints(const std::vector<Equation>& eqs) {
  std::vector<IntConstraint> out;
  for (auto& e : eqs) {
    out.push_back(IntConstraint::eq(length_poly(e.lhs), length_poly(e.rhs)));
    add_exponent_lemmas(e.lhs, out);
    add_exponent_lemmas(e.rhs, out);
    for (auto* side : {&e.lhs, &e.rhs})
      for (auto& t : *side)
        if (t.is_var())
          out.push_back(IntConstraint::ge(IntPoly::len(t.var_id()), IntPoly::constant(0)));
  }
  return out;
}

// Normal form of an (in)equation plus triviality flags.
struct IntRewriteOutcome {
  IntConstraint constraint;
  bool trivially_true;
  bool trivially_false;
};

inline IntRewriteOutcome rewrite_int_constraint(const IntConstraint& c) {
  // Canonicalization happens in the constructor; report the flags.
  return {c, c.trivially_true(), c.trivially_false()};
}

// --- Equation-level power alignment -----------------------------------------
//
// When one side of an equation starts with a power w^m, a ground run in
// front of a power on the other side can often be rotated into the power so
// that both sides start with the same base and cancellation applies:
//   w2 (w1 w2)^m ~> (w2 w1)^m w2      (w1 w2)^m w1 ~> w1 (w2 w1)^m
// plus doubling a(: w w ~> w^2) when it directly enables a power-vs-power
// step. Applications are gated on enabling a front match to keep the
// rewrite system terminating.

namespace detail {

// Rotate the run in front of the power at position p so the power reaches
// the front of the term; only done when the rotated base equals `want`.
inline bool rotate_to_front(std::vector<Token>& ts, const StringTerm& want) {
  for (size_t p = 1; p < ts.size(); p++) {
    if (!ts[p].is_pow()) {
      if (ts[p].is_var()) return false;  // run must be ground up to the power
      continue;
    }
    const StringTerm& base = ts[p].base();
    size_t k = p;  // tokens to move
    if (k >= base.size()) return false;
    // run ts[0..k) must equal the base suffix of length k
    bool match = true;
    for (size_t i = 0; i < k && match; i++)
      if (!(ts[i] == base[base.size() - k + i])) match = false;
    if (!match) return false;
    StringTerm rotated;
    for (size_t i = base.size() - k; i < base.size(); i++) rotated.push_back(base[i]);
    for (size_t i = 0; i < base.size() - k; i++) rotated.push_back(base[i]);
    if (!(rotated == want)) return false;
    std::vector<Token> nt;
    nt.push_back(Token::pow(rotated, ts[p].exp()));
    for (size_t i = 0; i < k; i++) nt.push_back(ts[i]);
    for (size_t i = p + 1; i < ts.size(); i++) nt.push_back(ts[i]);
    ts = std::move(nt);
    return true;
  }
  return false;
}

// w w ~> w^2 at the front when the other side starts with a power of base w.
inline bool double_to_power(std::vector<Token>& ts, const StringTerm& want) {
  size_t L = want.size();
  if (L == 0 || ts.size() < 2 * L) return false;
  if (!run_equals(ts, 0, want) || !run_equals(ts, L, want)) return false;
  std::vector<Token> nt;
  nt.push_back(Token::pow(want, IntPoly::constant(2)));
  for (size_t i = 2 * L; i < ts.size(); i++) nt.push_back(ts[i]);
  ts = std::move(nt);
  return true;
}

inline bool align_side(StringTerm& side, const StringTerm& other_front_base) {
  if (side.empty()) return false;
  if (side[0].is_pow() && side[0].base() == other_front_base) return false;  // already aligned
  std::vector<Token> ts = side.tokens();
  if (rotate_to_front(ts, other_front_base) || double_to_power(ts, other_front_base)) {
    side = StringTerm(std::move(ts));
    return true;
  }
  return false;
}

}  // namespace detail

// Tries to rewrite the equation ends so that both start (or end) with powers
// over the same base. Returns true if anything changed.
inline bool align_powers(Equation& e) {
  bool changed = false;
  for (int end = 0; end < 2; end++) {
    StringTerm l = end == 0 ? e.lhs : reverse(e.lhs);
    StringTerm r = end == 0 ? e.rhs : reverse(e.rhs);
    bool c = false;
    if (!l.empty() && l[0].is_pow()) c |= detail::align_side(r, l[0].base());
    if (!c && !r.empty() && r[0].is_pow()) c |= detail::align_side(l, r[0].base());
    if (c) {
      e.lhs = end == 0 ? l : reverse(l);
      e.rhs = end == 0 ? r : reverse(r);
      changed = true;
    }
  }
  return changed;
}

// --- Deterministic equation simplification ----------------------------------

enum class DetResult { NoChange, Changed, Conflict };

namespace detail {

// One front-resolution step on oriented sides (a, b). Implements the
// deterministic rewriting rows: common token, empty-vs-character conflict,
// distinct characters conflict, and the entailed power rows.
inline DetResult det_front(StringTerm& a, StringTerm& b, const IntStore& store,
                           std::vector<IntConstraint>& added) {
  if (a.empty() && b.empty()) return DetResult::NoChange;
  // common prefix tokens
  size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) common++;
  if (common > 0) {
    a = a.sub(common, a.size() - common);
    b = b.sub(common, b.size() - common);
    return DetResult::Changed;
  }
  // empty vs character
  if (a.empty() && !b.empty() && b[0].is_char_like()) return DetResult::Conflict;
  if (b.empty() && !a.empty() && a[0].is_char_like()) return DetResult::Conflict;
  if (a.empty() || b.empty()) return DetResult::NoChange;

  const Token& ta = a[0];
  const Token& tb = b[0];
  // distinct concrete characters
  if (ta.is_chr() && tb.is_chr() && !(ta == tb)) return DetResult::Conflict;

  // power vs power, same base, entailed exponent order
  if (ta.is_pow() && tb.is_pow() && ta.base() == tb.base()) {
    const IntPoly &m1 = ta.exp(), &m2 = tb.exp();
    IntConstraint ge = IntConstraint::ge(m1, m2);
    IntConstraint lt = IntConstraint::lt(m1, m2);
    if (store.entails(ge)) {
      StringTerm na;
      na.push_back(Token::pow(ta.base(), m1 - m2));
      na.append(a.sub(1, a.size() - 1));
      a = na;
      b = b.sub(1, b.size() - 1);
      added.push_back(ge);
      return DetResult::Changed;
    }
    if (store.entails(lt)) {
      StringTerm nb;
      nb.push_back(Token::pow(tb.base(), m2 - m1));
      nb.append(b.sub(1, b.size() - 1));
      b = nb;
      a = a.sub(1, a.size() - 1);
      added.push_back(lt);
      return DetResult::Changed;
    }
    return DetResult::NoChange;
  }

  // power vs power with different bases: entailed conditions on either
  // exponent drop or unwind one copy
  if (ta.is_pow() && tb.is_pow()) {
    auto unwind_or_drop = [&](StringTerm& ps) -> DetResult {
      const Token& pw = ps[0];
      const IntPoly& m = pw.exp();
      IntConstraint z = IntConstraint::eq(m, IntPoly::constant(0));
      IntConstraint pos = IntConstraint::gt(m, IntPoly::constant(0));
      if (store.entails(z)) {
        ps = ps.sub(1, ps.size() - 1);
        added.push_back(z);
        return DetResult::Changed;
      }
      if (store.entails(pos)) {
        StringTerm np;
        np.append(pw.base());
        np.push_back(Token::pow(pw.base(), m - IntPoly::constant(1)));
        np.append(ps.sub(1, ps.size() - 1));
        ps = np;
        added.push_back(pos);
        return DetResult::Changed;
      }
      return DetResult::NoChange;
    };
    auto r = unwind_or_drop(b);
    if (r != DetResult::NoChange) return r;
    return unwind_or_drop(a);
  }

  // character vs power with an entailed exponent
  auto char_vs_pow = [&](StringTerm& cs, StringTerm& ps) -> DetResult {
    const Token& at = cs[0];
    const Token& pw = ps[0];
    const StringTerm& w = pw.base();
    const IntPoly& m = pw.exp();
    IntConstraint z = IntConstraint::eq(m, IntPoly::constant(0));
    IntConstraint pos = IntConstraint::gt(m, IntPoly::constant(0));
    if (store.entails(z)) {
      ps = ps.sub(1, ps.size() - 1);
      added.push_back(z);
      return DetResult::Changed;
    }
    if (store.entails(pos) && !w.empty()) {
      const Token& w0 = w[0];
      if (w0.is_chr() && at.is_chr() && !(w0 == at)) return DetResult::Conflict;
      if (w0 == at) {
        // unwind one copy and cancel the matching front character
        StringTerm np;
        for (size_t i = 1; i < w.size(); i++) np.push_back(w[i]);
        np.push_back(Token::pow(w, m - IntPoly::constant(1)));
        np.append(ps.sub(1, ps.size() - 1));
        ps = np;
        cs = cs.sub(1, cs.size() - 1);
        added.push_back(pos);
        return DetResult::Changed;
      }
      if (w0.is_pow()) {
        // materialize one copy; the nested power is handled next round
        StringTerm np;
        np.append(w);
        np.push_back(Token::pow(w, m - IntPoly::constant(1)));
        np.append(ps.sub(1, ps.size() - 1));
        ps = np;
        added.push_back(pos);
        return DetResult::Changed;
      }
    }
    return DetResult::NoChange;
  };
  if (ta.is_char_like() && tb.is_pow()) return char_vs_pow(a, b);
  if (tb.is_char_like() && ta.is_pow()) return char_vs_pow(b, a);

  return DetResult::NoChange;
}

}  // namespace detail

// Deterministic simplification of one equation to a local fixpoint: term
// rewriting with front guards, power alignment, prefix/suffix cancellation
// and the entailed table rows. Conflict means the equation is unsatisfiable
// in this node.
inline DetResult det_simplify(Equation& e, const IntStore& store,
                              std::vector<IntConstraint>& added) {
  bool changed = false;
  for (int guard = 0; guard < 256; guard++) {
    bool pass_changed = false;

    // Term rewriting; absorbing at the very front is only allowed when the
    // other side starts with a power of the same base.
    for (int side = 0; side < 2; side++) {
      StringTerm& self = side == 0 ? e.lhs : e.rhs;
      StringTerm& other = side == 0 ? e.rhs : e.lhs;
      FrontGuard guard = FrontGuard::open();
      if (!self.empty() && !self[0].is_pow()) {
        // absorbing would promote a power to the front; only allow it when
        // that power cancels against the other side
        guard = (!other.empty() && other[0].is_pow()) ? FrontGuard::only(other[0].base())
                                                      : FrontGuard::closed();
      }
      auto r = rewrite_term(self, store, guard);
      if (r.changed) {
        self = r.term;
        pass_changed = true;
      }
      for (auto& c : r.used) added.push_back(c);
    }

    if (align_powers(e)) pass_changed = true;

    // Front and back resolution.
    auto fr = detail::det_front(e.lhs, e.rhs, store, added);
    if (fr == DetResult::Conflict) return DetResult::Conflict;
    if (fr == DetResult::Changed) pass_changed = true;

    StringTerm rl = reverse(e.lhs), rr = reverse(e.rhs);
    auto bk = detail::det_front(rl, rr, store, added);
    if (bk == DetResult::Conflict) return DetResult::Conflict;
    if (bk == DetResult::Changed) {
      e.lhs = reverse(rl);
      e.rhs = reverse(rr);
      pass_changed = true;
    }

    if (!pass_changed) break;
    changed = true;
  }
  return changed ? DetResult::Changed : DetResult::NoChange;
}

}  // namespace wordeq
