#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wordeq/int_solver.hpp"
#include "wordeq/subst.hpp"
#include "wordeq/term.hpp"

using namespace wordeq;
using namespace wordeq::test;

TEST_CASE("length of terms") {
  Ctx c;
  auto x = c.var("x");
  auto m = c.ivar("m");

  CHECK(length_poly(StringTerm{}).is_zero());

  // (abc)^m x b  ->  3m + |x| + 1
  StringTerm u{Token::pow(lit("abc"), m), x, ch('b')};
  IntPoly expect = m.scaled(3) + IntPoly::len(x.var_id()) + IntPoly::constant(1);
  CHECK(length_poly(u) == expect);

  // a x (ab)^m  ->  1 + |x| + 2m
  StringTerm v{ch('a'), x, Token::pow(lit("ab"), m)};
  CHECK(length_poly(v) == IntPoly::constant(1) + IntPoly::len(x.var_id()) + m.scaled(2));
}

TEST_CASE("symbolic length") {
  Ctx c;
  auto x = c.var("x");
  auto m = c.ivar("m");
  CHECK(symbolic_length(StringTerm{Token::pow(lit("abc"), m), x, ch('b')}) == 3);
  CHECK(symbolic_length(StringTerm{}) == 0);
  CHECK(symbolic_length(lit("abba")) == 4);
}

TEST_CASE("consecutive token windows") {
  Ctx c;
  auto x = c.var("x");
  auto m = c.ivar("m");
  Token p = Token::pow(lit("abc"), m);
  StringTerm u{p, x, ch('b')};
  auto subs = sub_terms(u);
  CHECK(subs.size() == 12);
  CHECK(subs.count(StringTerm{}) == 1);
  CHECK(subs.count(lit("a")) == 1);
  CHECK(subs.count(lit("b")) == 1);
  CHECK(subs.count(lit("c")) == 1);
  CHECK(subs.count(lit("ab")) == 1);
  CHECK(subs.count(lit("bc")) == 1);
  CHECK(subs.count(lit("abc")) == 1);
  CHECK(subs.count(StringTerm{p}) == 1);
  CHECK(subs.count(StringTerm{x}) == 1);
  CHECK(subs.count(StringTerm{p, x}) == 1);
  CHECK(subs.count(StringTerm{x, ch('b')}) == 1);
  CHECK(subs.count(u) == 1);

  CHECK(sub_terms(StringTerm{}).size() == 1);

  auto y = c.var("y");
  auto xy = sub_terms(StringTerm{x, y});
  CHECK(xy.size() == 4);
}

TEST_CASE("reverse") {
  Ctx c;
  auto x = c.var("x");
  auto m = c.ivar("m");
  // (a x (ab)^m)^R = (ba)^m x a
  StringTerm u{ch('a'), x, Token::pow(lit("ab"), m)};
  StringTerm expect{Token::pow(lit("ba"), m), x, ch('a')};
  CHECK(reverse(u) == expect);
  CHECK(reverse(StringTerm{}) == StringTerm{});

  // involution on random terms
  EqGen gen(c.pool, 11);
  for (int i = 0; i < 200; i++) {
    StringTerm t = gen.term(6, 3);
    if (i % 3 == 0) t.push_back(Token::pow(lit("ab"), m));
    CHECK(reverse(reverse(t)) == t);
  }
}

TEST_CASE("substitution application") {
  Ctx c;
  auto x = c.var("x");
  auto m = c.ivar("m");
  // (xbxa)[x/a^m] = a^m b a^m a, not further rewritten
  Token am = Token::pow(lit("a"), m);
  Substitution s = Substitution::of_var(x.var_id(), StringTerm{am});
  StringTerm u{x, ch('b'), x, ch('a')};
  CHECK(s.apply(u) == StringTerm{am, ch('b'), am, ch('a')});

  // identity
  Substitution id;
  CHECK(id.apply(u) == u);

  // |x| under x/ab becomes 2
  Substitution s2 = Substitution::of_var(x.var_id(), lit("ab"));
  CHECK(s2.apply(IntPoly::len(x.var_id())) == IntPoly::constant(2));
}

TEST_CASE("substitution distributes over concatenation") {
  Ctx c;
  EqGen gen(c.pool, 23);
  auto y = c.var("y");
  for (int i = 0; i < 100; i++) {
    StringTerm a = gen.term(5, 3), b = gen.term(5, 3);
    Substitution s = Substitution::of_var(gen.vars[0], StringTerm{y, ch('a')});
    CHECK(s.apply(a + b) == s.apply(a) + s.apply(b));
  }
}

TEST_CASE("length is additive and matches unwound words") {
  Ctx c;
  EqGen gen(c.pool, 37);
  auto m = c.ivar("m");
  for (int i = 0; i < 100; i++) {
    StringTerm a = gen.term(5, 3), b = gen.term(5, 3);
    CHECK(length_poly(a + b) == length_poly(a) + length_poly(b));
  }
  // concrete exponents: |unwind(u)| == eval(length(u))
  std::mt19937 rng(5);
  for (int i = 0; i < 60; i++) {
    int64_t mv = rng() % 4;
    StringTerm u{Token::pow(lit("ab"), m), ch('c'),
                 Token::pow(StringTerm{Token::pow(lit("a"), m)}, IntPoly::constant(2))};
    Model mod;
    mod.ints[IntPoly::atom_key(IntAtom::ivar(IntVarId{0}))] = mv;
    std::vector<Chr> w;
    REQUIRE(unwind(u, mod, w));
    CHECK(static_cast<int64_t>(w.size()) == length_poly(u).eval(mod.ints));
  }
}

TEST_CASE("integer constraints: canonical forms and triviality") {
  CHECK(IntConstraint::le(IntPoly::constant(0), IntPoly::constant(1)).trivially_true());
  CHECK(IntConstraint::le(IntPoly::constant(1), IntPoly::constant(0)).trivially_false());
  Ctx c;
  auto m = c.ivar("m");
  // 2m = 1 has no integer solution
  CHECK(IntConstraint::eq(m.scaled(2), IntPoly::constant(1)).trivially_false());
  // gcd tightening: 2m >= 1 becomes m >= 1
  auto t = IntConstraint::ge(m.scaled(2), IntPoly::constant(1));
  CHECK(t == IntConstraint::ge(m, IntPoly::constant(1)));
}

TEST_CASE("entailment examples") {
  Ctx c;
  auto m = c.ivar("m");
  {
    IntStore st;
    st.add(IntConstraint::ge(m, IntPoly::constant(0)));
    st.add(IntConstraint::le(m, IntPoly::constant(0)));
    CHECK(st.entails(IntConstraint::eq(m, IntPoly::constant(0))));
  }
  {
    auto m1 = c.ivar("m1"), m3 = c.ivar("m3");
    IntStore st;
    st.add(IntConstraint::ge(m3, IntPoly::constant(0)));
    st.add(IntConstraint::lt(m3, m1));
    CHECK(st.entails(IntConstraint::gt(m1, IntPoly::constant(0))));
  }
  {
    // the length facts entail the boundary difference of the running example
    auto x1 = c.pool.var("x1"), x2 = c.pool.var("x2"), x3 = c.pool.var("x3"),
         x4 = c.pool.var("x4"), x5 = c.pool.var("x5");
    IntStore st;
    auto L = [](VarId v) { return IntPoly::len(v); };
    st.add(IntConstraint::eq(L(x3).scaled(2), L(x5).scaled(3)));
    st.add(IntConstraint::eq(L(x5).scaled(2), L(x4)));
    for (VarId v : {x1, x2, x3, x4, x5})
      st.add(IntConstraint::ge(L(v), IntPoly::constant(0)));
    // |x1x1acx2x4x2x5| - |x2x2abcx1x1x3x3| = -1
    IntPoly u1 = L(x1).scaled(2) + IntPoly::constant(2) + L(x2).scaled(2) + L(x4) + L(x5);
    IntPoly v1 = L(x2).scaled(2) + IntPoly::constant(3) + L(x1).scaled(2) + L(x3).scaled(2);
    CHECK(st.entailed_constant(u1 - v1) == -1);
  }
}

TEST_CASE("satisfiability examples") {
  Ctx c;
  auto m = c.ivar("m");
  {
    IntStore st;
    st.add(IntConstraint::ge(m, IntPoly::constant(0)));
    st.add(IntConstraint::lt(m, IntPoly::constant(0)));
    CHECK(st.satisfiable() == SatAnswer::Unsat);
  }
  {
    auto m1 = c.ivar("m1"), m2 = c.ivar("m2"), m3 = c.ivar("m3");
    IntStore st;
    st.add(IntConstraint::eq(m1 * m2 + m3, IntPoly::constant(0)));
    st.add(IntConstraint::ge(m1, IntPoly::constant(0)));
    st.add(IntConstraint::ge(m2, IntPoly::constant(0)));
    st.add(IntConstraint::ge(m3, IntPoly::constant(0)));
    Model mod;
    CHECK(st.satisfiable(&mod) == SatAnswer::Sat);
    CHECK(mod.int_value(IntVarId{1}) == 0);
  }
  {
    // store implying m = 0 still has a witness with that value
    auto m1 = c.ivar("k1");
    IntStore st;
    st.add(IntConstraint::ge(m1, IntPoly::constant(0)));
    st.add(IntConstraint::le(m1.scaled(3), IntPoly::constant(0)));
    Model mod;
    CHECK(st.satisfiable(&mod) == SatAnswer::Sat);
    CHECK(m1.eval(mod.ints) == 0);
  }
}

// Exhaustive evaluation over small assignments as the reference semantics.
namespace {
bool exhaustive_sat(const std::vector<IntConstraint>& cs, const std::vector<IntAtom>& atoms,
                    int bound, std::unordered_map<uint64_t, int64_t>& a, size_t i) {
  if (i == atoms.size()) {
    for (auto& c : cs)
      if (!c.holds(a)) return false;
    return true;
  }
  for (int v = 0; v <= bound; v++) {
    a[IntPoly::atom_key(atoms[i])] = v;
    if (exhaustive_sat(cs, atoms, bound, a, i + 1)) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("differential soundness against exhaustive evaluation") {
  Ctx c;
  std::mt19937 rng(99);
  std::vector<IntAtom> atoms;
  for (int i = 0; i < 3; i++) atoms.push_back(IntAtom::ivar(c.pool.ivar("d" + std::to_string(i))));

  auto rand_poly = [&]() {
    IntPoly p = IntPoly::constant(static_cast<int64_t>(rng() % 7) - 3);
    for (auto& a : atoms)
      if (rng() % 2) p = p + IntPoly::atom(a, static_cast<int64_t>(rng() % 5) - 2);
    if (rng() % 4 == 0) p = p + IntPoly::atom(atoms[0]) * IntPoly::atom(atoms[1]);
    return p;
  };

  const int B = 6;
  int entail_checked = 0;
  for (int iter = 0; iter < 300; iter++) {
    IntStore st;
    std::vector<IntConstraint> cs;
    int n = 1 + rng() % 3;
    for (int i = 0; i < n; i++) {
      IntConstraint c1 = rng() % 2 ? IntConstraint::ge(rand_poly(), IntPoly::constant(0))
                                   : IntConstraint::eq(rand_poly(), IntPoly::constant(0));
      cs.push_back(c1);
      st.add(c1);
    }
    for (auto& a : atoms) {
      auto c1 = IntConstraint::le(IntPoly::atom(a), IntPoly::constant(B));
      auto c0 = IntConstraint::ge(IntPoly::atom(a), IntPoly::constant(0));
      cs.push_back(c1);
      cs.push_back(c0);
      st.add(c1);
      st.add(c0);
    }
    std::unordered_map<uint64_t, int64_t> a;
    bool truth = exhaustive_sat(cs, atoms, B, a, 0);
    auto ans = st.satisfiable();
    if (ans == SatAnswer::Sat) CHECK(truth);
    if (ans == SatAnswer::Unsat) CHECK_FALSE(truth);

    // entailment: "entailed" answers agree with exhaustive evaluation
    IntConstraint q = IntConstraint::ge(rand_poly(), IntPoly::constant(0));
    if (st.entails(q)) {
      entail_checked++;
      std::vector<IntConstraint> with_neg = cs;
      for (auto& d : q.negation()) {
        with_neg.push_back(d);
        std::unordered_map<uint64_t, int64_t> b;
        CHECK_FALSE(exhaustive_sat(with_neg, atoms, B, b, 0));
        with_neg.pop_back();
      }
    }
  }
  CHECK(entail_checked > 10);
}

TEST_CASE("sat models satisfy every constraint") {
  Ctx c;
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; iter++) {
    IntStore st;
    auto a = c.pool.ivar("a" + std::to_string(iter));
    auto b = c.pool.ivar("b" + std::to_string(iter));
    st.add(IntConstraint::ge(IntPoly::var(a), IntPoly::constant(0)));
    st.add(IntConstraint::ge(IntPoly::var(b), IntPoly::constant(0)));
    st.add(IntConstraint::eq(IntPoly::var(a).scaled(2), IntPoly::var(b).scaled(3)));
    if (iter % 2) st.add(IntConstraint::ge(IntPoly::var(a), IntPoly::constant(3)));
    Model m;
    auto ans = st.satisfiable(&m);
    REQUIRE(ans == SatAnswer::Sat);
    for (auto& cst : st.constraints()) CHECK(cst.holds(m.ints));
  }
}

TEST_CASE("adding constraints keeps previous entailments") {
  Ctx c;
  auto m = c.ivar("m");
  auto k = c.ivar("k");
  IntStore st;
  st.add(IntConstraint::ge(m, IntPoly::constant(2)));
  CHECK(st.entails(IntConstraint::gt(m, IntPoly::constant(0))));
  st.add(IntConstraint::le(m, k));
  st.add(IntConstraint::ge(k, IntPoly::constant(0)));
  CHECK(st.entails(IntConstraint::gt(m, IntPoly::constant(0))));
  CHECK(st.entails(IntConstraint::gt(k, IntPoly::constant(1))));
}

TEST_CASE("brute force oracle basics") {
  Ctx c;
  auto x = c.var("x"), y = c.var("y");
  BruteForce oracle({'a', 'b'}, 2);
  // xx == yb has the model x=b, y=b
  auto m = oracle.solve({Equation{StringTerm{x, x}, StringTerm{y, ch('b')}}});
  REQUIRE(m.has_value());
  CHECK(word_str(m->vars[x.var_id()]) == "b");
  CHECK(word_str(m->vars[y.var_id()]) == "b");

  // x == x is satisfied by the empty word first
  auto m2 = oracle.solve({Equation{StringTerm{x}, StringTerm{x}}});
  REQUIRE(m2.has_value());
  CHECK(m2->vars[x.var_id()].empty());

  BruteForce oracle3({'a', 'b'}, 3);
  auto m3 = oracle3.solve({Equation{StringTerm{x, ch('a'), y}, StringTerm{y, ch('b'), x}}});
  CHECK_FALSE(m3.has_value());
}

TEST_CASE("occurrence counting") {
  CHECK(count_occurrences(word_of("ab"), word_of("abababab")) == 4);
  CHECK(count_occurrences(word_of("ab"), {}) == 0);
  CHECK(count_occurrences(word_of("aa"), word_of("aaa")) == 2);
}
