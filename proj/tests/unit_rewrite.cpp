#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wordeq/parikh.hpp"
#include "wordeq/rewrite.hpp"

using namespace wordeq;
using namespace wordeq::test;

TEST_CASE("lemma constraints") {
  Ctx c;
  auto x3 = c.var("x3"), x4 = c.var("x4"), x5 = c.var("x5");
  // x3x3x4bx5b == x5x5x5x5x4bb rewrites to 2|x3| = 3|x5|
  Equation e1{StringTerm{x3, x3, x4, ch('b'), x5, ch('b')},
              StringTerm{x5, x5, x5, x5, x4, ch('b'), ch('b')}};
  auto ls = lemma_constraints({e1});
  auto expect = IntConstraint::eq(IntPoly::len(x3.var_id()).scaled(2),
                                  IntPoly::len(x5.var_id()).scaled(3));
  CHECK(std::count(ls.begin(), ls.end(), expect) == 1);
  for (auto v : {x3, x4, x5})
    CHECK(std::count(ls.begin(), ls.end(),
                     IntConstraint::ge(IntPoly::len(v.var_id()), IntPoly::constant(0))) >= 1);

  CHECK(lemma_constraints({}).empty());

  auto m = c.ivar("m");
  Equation pe{StringTerm{Token::pow(lit("a"), m)}, StringTerm{c.var("x")}};
  auto ls2 = lemma_constraints({pe});
  CHECK(std::count(ls2.begin(), ls2.end(), IntConstraint::ge(m, IntPoly::constant(0))) == 1);
}

TEST_CASE("term rewriting examples") {
  Ctx c;
  IntStore st;
  auto m1 = c.ivar("m1"), m2 = c.ivar("m2"), m3 = c.ivar("m3");
  auto o = c.sym("o");

  // o o^{m1} absorbs into o^{m1+1}
  StringTerm t1{o, Token::pow(StringTerm{o}, m1)};
  auto r1 = rewrite_term(t1, st);
  CHECK(r1.term == StringTerm{Token::pow(StringTerm{o}, m1 + IntPoly::constant(1))});

  // b^{m3} (b^{m1})^{m2} flattens and merges to b^{m1 m2 + m3}
  StringTerm t2{Token::pow(lit("b"), m3),
                Token::pow(StringTerm{Token::pow(lit("b"), m1)}, m2)};
  auto r2 = rewrite_term(t2, st);
  CHECK(r2.term == StringTerm{Token::pow(lit("b"), m1 * m2 + m3)});

  // entailed zero exponent erases the power
  IntStore st0;
  st0.add(IntConstraint::ge(m1, IntPoly::constant(0)));
  st0.add(IntConstraint::le(m1, IntPoly::constant(0)));
  auto r3 = rewrite_term(StringTerm{Token::pow(lit("a"), m1)}, st0);
  CHECK(r3.term.empty());
  CHECK(!r3.used.empty());

  // empty base vanishes; exponent one splices
  auto r4 = rewrite_term(StringTerm{Token::pow(StringTerm{}, m1)}, st);
  CHECK(r4.term.empty());
  auto r5 = rewrite_term(StringTerm{Token::pow(lit("ab"), IntPoly::constant(1))}, st);
  CHECK(r5.term == lit("ab"));
}

TEST_CASE("rewriting is idempotent") {
  Ctx c;
  IntStore st;
  EqGen gen(c.pool, 3);
  auto m = c.ivar("m");
  std::mt19937 rng(17);
  for (int i = 0; i < 150; i++) {
    StringTerm t = gen.term(5, 3);
    if (rng() % 2) {
      StringTerm base = gen.term(2, 2);
      // bases must stay ground
      StringTerm gb;
      for (auto& tok : base)
        if (!tok.is_var()) gb.push_back(tok);
      if (!gb.empty()) t.push_back(Token::pow(gb, m));
      if (rng() % 2) t.append(gb);
    }
    auto once = rewrite_term(t, st);
    auto twice = rewrite_term(once.term, st);
    CHECK_FALSE(twice.changed);
    CHECK(twice.term == once.term);
  }
}

TEST_CASE("rewriting preserves unwound words") {
  Ctx c;
  IntStore st;
  auto m = c.ivar("m");
  std::mt19937 rng(29);
  for (int i = 0; i < 120; i++) {
    // random ground term over {a, b} with powers of small bases
    StringTerm t;
    int n = 1 + rng() % 5;
    for (int j = 0; j < n; j++) {
      switch (rng() % 3) {
        case 0: t.push_back(ch(rng() % 2 ? 'a' : 'b')); break;
        case 1: t.append(lit(rng() % 2 ? "ab" : "ba")); break;
        default:
          t.push_back(Token::pow(rng() % 2 ? lit("ab") : lit("a"),
                                 rng() % 2 ? m : IntPoly::constant(rng() % 3)));
      }
    }
    auto r = rewrite_term(t, st);
    for (int64_t mv = 0; mv <= 3; mv++) {
      Model mod;
      mod.ints[IntPoly::atom_key(IntAtom::ivar(IntVarId{0}))] = mv;
      std::vector<Chr> w1, w2;
      REQUIRE(unwind(t, mod, w1));
      REQUIRE(unwind(r.term, mod, w2));
      CHECK(w1 == w2);
    }
  }
}

TEST_CASE("integer constraint rewriting flags") {
  auto t = rewrite_int_constraint(IntConstraint::le(IntPoly::constant(0), IntPoly::constant(1)));
  CHECK(t.trivially_true);
  auto f = rewrite_int_constraint(IntConstraint::le(IntPoly::constant(1), IntPoly::constant(0)));
  CHECK(f.trivially_false);
  Ctx c;
  auto m = c.ivar("m");
  auto n = rewrite_int_constraint(
      IntConstraint::eq(m * length_poly(lit("ab")), IntPoly::constant(4)));
  CHECK_FALSE(n.trivially_true);
  CHECK(n.constraint == IntConstraint::eq(m.scaled(2), IntPoly::constant(4)));
}

TEST_CASE("power alignment rotates shared bases") {
  Ctx c;
  auto m = c.ivar("m");
  auto u = c.var("u"), v = c.var("v");
  // a (ba)^m u == (ab)^m v aligns the left side to (ab)^m a u
  Equation e{StringTerm{ch('a'), Token::pow(lit("ba"), m), u},
             StringTerm{Token::pow(lit("ab"), m), v}};
  CHECK(align_powers(e));
  CHECK(e.lhs == StringTerm{Token::pow(lit("ab"), m), ch('a'), u});
}

TEST_CASE("deterministic simplification conflicts") {
  Ctx c;
  auto m = c.ivar("m");
  IntStore st;
  st.add(IntConstraint::ge(m, IntPoly::constant(0)));
  Token am = Token::pow(lit("a"), m);
  // a^m b a^m a == a a^m b a^m  (the substituted form of xbxa == axbx)
  Equation e{StringTerm{am, ch('b'), am, ch('a')}, StringTerm{ch('a'), am, ch('b'), am}};
  std::vector<IntConstraint> added;
  CHECK(det_simplify(e, st, added) == DetResult::Conflict);

  // distinct concrete characters up front
  Equation e2{lit("au"), lit("bv")};
  added.clear();
  CHECK(det_simplify(e2, st, added) == DetResult::Conflict);

  // common affixes cancel
  Equation e3{lit("abc"), lit("abc")};
  added.clear();
  CHECK(det_simplify(e3, st, added) == DetResult::Changed);
  CHECK(e3.trivial());
}

// --- Parikh ------------------------------------------------------------------

TEST_CASE("unbordered words") {
  CHECK(is_unbordered(word_of("ab")));
  CHECK_FALSE(is_unbordered(word_of("aba")));
  CHECK_FALSE(is_unbordered(word_of("aa")));
  CHECK(is_unbordered(word_of("aabbb")));
  CHECK_FALSE(is_unbordered(word_of("abab")));
}

TEST_CASE("gaps and crossings") {
  Ctx c;
  auto x = c.var("x"), y = c.var("y");
  // gap shapes: x v y with ground middle, sized by symbolic length
  CHECK(is_gap(StringTerm{x, ch('a'), y}, 3));
  CHECK_FALSE(is_gap(StringTerm{x, ch('a'), y}, 2));
  CHECK(is_gap(StringTerm{x, y}, 2));
  CHECK_FALSE(is_gap(StringTerm{}, 2));
  CHECK_FALSE(is_gap(lit("abc"), 4));
  CHECK(is_gap(StringTerm{x, ch('a')}, 2));
  CHECK(is_gap(StringTerm{ch('a'), y}, 2));
  CHECK_FALSE(is_gap(StringTerm{x}, 2));

  CHECK(crossing(word_of("ab"), StringTerm{x, ch('b'), y}));
  CHECK_FALSE(crossing(word_of("ab"), StringTerm{x, ch('c'), y}));
  CHECK(crossing(word_of("ab"), StringTerm{ch('a'), y}));
  CHECK_FALSE(crossing(word_of("ab"), StringTerm{ch('b'), y}));
  CHECK(crossing(word_of("ab"), StringTerm{x, ch('b')}));
  CHECK(crossing(word_of("ab"), StringTerm{x, y}));
}

TEST_CASE("parikh rewriting matches the worked sums") {
  Ctx c;
  auto x = c.var("x"), y = c.var("y");
  // max over x a x a a b b b y with pattern ab: 2 + 2 P(x) + P(y)
  StringTerm u{x, ch('a'), x, ch('a'), ch('a'), ch('b'), ch('b'), ch('b'), y};
  auto mx = parikh_rewrite(PMode::Max, word_of("ab"), u);
  REQUIRE(mx.has_value());
  CHECK(mx->k == 2);
  REQUIRE(mx->coeff.size() == 2);
  CHECK(mx->coeff.at(x) == 2);
  CHECK(mx->coeff.at(y) == 1);

  // min over x y a b a b a b x: 3 + 2 P(x) + P(y)
  StringTerm v{x, y, ch('a'), ch('b'), ch('a'), ch('b'), ch('a'), ch('b'), x};
  auto mn = parikh_rewrite(PMode::Min, word_of("ab"), v);
  REQUIRE(mn.has_value());
  CHECK(mn->k == 3);
  CHECK(mn->coeff.at(x) == 2);
  CHECK(mn->coeff.at(y) == 1);

  // ground terms: both modes count occurrences exactly
  auto g = parikh_rewrite(PMode::Max, word_of("ab"), lit("abcabab"));
  CHECK(g->k == 3);
  CHECK(g->coeff.empty());
}

TEST_CASE("pattern enumeration") {
  Ctx c;
  auto x1 = c.var("x1"), x2 = c.var("x2");
  StringTerm l{x1, x1};
  l.append(lit("ac"));
  l.push_back(x2);
  l.push_back(x2);
  l.append(lit("b"));
  StringTerm r{x2, x2};
  r.append(lit("abc"));
  r.push_back(x1);
  r.push_back(x1);
  auto pats = enumerate_patterns({l, r});
  CHECK(std::count(pats.begin(), pats.end(), word_of("abc")) == 1);

  auto x = c.var("x"), y = c.var("y");
  StringTerm l2{x};
  l2.append(lit("abc"));
  l2.push_back(y);
  StringTerm r2{y};
  r2.append(lit("bac"));
  r2.push_back(x);
  auto pats2 = enumerate_patterns({l2, r2});
  CHECK(std::count(pats2.begin(), pats2.end(), word_of("bc")) == 1);

  CHECK(enumerate_patterns({StringTerm{x, y}, StringTerm{y, x}}).empty());
}

TEST_CASE("unsat filter examples") {
  Ctx c;
  auto x = c.var("x"), y = c.var("y");
  // single-character counts refute xay == ybx
  auto r1 = unsat_filter({StringTerm{x, ch('a'), y}, StringTerm{y, ch('b'), x}});
  REQUIRE(r1.has_value());
  CHECK(r1->single_char);
  CHECK(r1->pattern == word_of("a"));

  // pattern ab with difference -1
  StringTerm u{x, ch('a'), x, ch('a'), ch('a'), ch('b'), ch('b'), ch('b'), y};
  StringTerm v{x, y, ch('a'), ch('b'), ch('a'), ch('b'), ch('a'), ch('b'), x};
  auto r2 = unsat_filter({u, v});
  REQUIRE(r2.has_value());
  CHECK_FALSE(r2->single_char);
  CHECK(r2->pattern == word_of("ab"));
  CHECK(r2->difference == -1);

  // the running example's residual equation refutes via abc
  auto x1 = c.var("x1"), x2 = c.var("x2");
  StringTerm l{x1, x1};
  l.append(lit("ac"));
  l.push_back(x2);
  l.push_back(x2);
  l.append(lit("b"));
  StringTerm rr{x2, x2};
  rr.append(lit("abc"));
  rr.push_back(x1);
  rr.push_back(x1);
  auto r3 = unsat_filter({l, rr});
  REQUIRE(r3.has_value());
  CHECK(r3->pattern == word_of("abc"));
  CHECK(r3->difference == -1);

  // satisfiable equations pass
  CHECK_FALSE(unsat_filter({StringTerm{x, ch('a')}, StringTerm{ch('a'), x}}).has_value());
}

TEST_CASE("parikh counts are exact on ground instances") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 300; iter++) {
    // random ground word and random unbordered pattern
    Word s;
    size_t n = rng() % 12;
    for (size_t i = 0; i < n; i++) s.push_back(rng() % 2 ? 'a' : 'b');
    Word w;
    do {
      w.clear();
      size_t k = 2 + rng() % 3;
      for (size_t i = 0; i < k; i++) w.push_back(rng() % 2 ? 'a' : 'b');
    } while (!is_unbordered(w));
    StringTerm t;
    for (Chr ch1 : s) t.push_back(Token::chr(ch1));
    auto mx = parikh_rewrite(PMode::Max, w, t);
    auto mn = parikh_rewrite(PMode::Min, w, t);
    REQUIRE(mx.has_value());
    REQUIRE(mn.has_value());
    size_t truth = count_occurrences(w, s);
    CHECK(mx->k == static_cast<int64_t>(truth));
    CHECK(mn->k == static_cast<int64_t>(truth));
    CHECK(mx->coeff.empty());
    CHECK(mn->coeff.empty());
  }
}

TEST_CASE("parikh bounds are sound under substitution") {
  Ctx c;
  EqGen gen(c.pool, 53);
  std::mt19937 rng(53);
  auto rand_word = [&](size_t maxlen) {
    Word w;
    size_t n = rng() % (maxlen + 1);
    for (size_t i = 0; i < n; i++) w.push_back(rng() % 2 ? 'a' : 'b');
    return w;
  };
  for (int iter = 0; iter < 300; iter++) {
    StringTerm u = gen.term(6, 4);
    Word w;
    do {
      w = rand_word(4);
    } while (w.size() < 2 || !is_unbordered(w));
    auto mx = parikh_rewrite(PMode::Max, w, u);
    auto mn = parikh_rewrite(PMode::Min, w, u);
    REQUIRE(mx.has_value());
    REQUIRE(mn.has_value());
    for (int s = 0; s < 10; s++) {
      Model m;
      for (VarId v : gen.vars) m.vars[v] = rand_word(5);
      std::vector<Chr> inst;
      REQUIRE(unwind(u, m, inst));
      int64_t truth = static_cast<int64_t>(count_occurrences(w, inst));
      int64_t hi = mx->k, lo = mn->k;
      for (auto& [tok, coeff] : mx->coeff)
        hi += coeff * static_cast<int64_t>(count_occurrences(w, m.vars[tok.var_id()]));
      for (auto& [tok, coeff] : mn->coeff)
        lo += coeff * static_cast<int64_t>(count_occurrences(w, m.vars[tok.var_id()]));
      CHECK(truth <= hi);
      CHECK(truth >= lo);
    }
  }
}

TEST_CASE("the filter never refutes a bounded-satisfiable equation") {
  Ctx c;
  EqGen gen(c.pool, 71);
  BruteForce oracle({'a', 'b'}, 3);
  int refuted = 0;
  for (int iter = 0; iter < 400; iter++) {
    Equation e = gen.equation(5, 3);
    if (unsat_filter(e).has_value()) {
      refuted++;
      CHECK_FALSE(oracle.solve({e}).has_value());
    }
  }
  CHECK(refuted > 20);
}
