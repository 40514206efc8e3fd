#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wordeq/arith.hpp"
#include "wordeq/subst.hpp"

namespace wordeq {

// Exact rational with overflow-checked int64 components.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}
  Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (den == 0) throw ArithOverflow();
  }

  static Rat from128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > std::numeric_limits<int64_t>::max() || n < std::numeric_limits<int64_t>::min() ||
        d > std::numeric_limits<int64_t>::max() || d <= 0)
      throw ArithOverflow();
    Rat r;
    r.num = static_cast<int64_t>(n);
    r.den = static_cast<int64_t>(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw ArithOverflow();
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  bool is_int() const { return den == 1; }
  int64_t floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
};

// One linear row: sum(a[j] * x[j]) (= | >=) b over variables x >= 0.
struct LinRow {
  std::vector<int64_t> a;
  int64_t b = 0;
  bool eq = false;
};

enum class SatAnswer : uint8_t { Sat, Unsat, Unknown };

struct IntSolverLimits {
  int64_t probe_bound = 16;
  int pivot_budget = 20000;
  int bb_budget = 600;
  int probe_leaves = 6000;
};

namespace detail {

// Phase-1 simplex feasibility check over the rationals, Bland's rule.
// Returns nullopt when the pivot budget runs out.
inline std::optional<bool> lp_feasible(const std::vector<LinRow>& rows, size_t n,
                                       std::vector<Rat>* solution, int& pivots) {
  size_t m = rows.size();
  size_t n_slack = 0;
  for (auto& r : rows)
    if (!r.eq) n_slack++;
  size_t cols = n + n_slack + m;  // structural, slack, artificial
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1));
  std::vector<size_t> basis(m);

  size_t slack_at = n;
  for (size_t i = 0; i < m; i++) {
    // Normalize rhs >= 0 so artificials start feasible.
    int64_t sign = rows[i].b < 0 ? -1 : 1;
    for (size_t j = 0; j < n && j < rows[i].a.size(); j++)
      T[i][j] = Rat(sign * rows[i].a[j]);
    if (!rows[i].eq) T[i][slack_at++] = Rat(-sign);
    T[i][n + n_slack + i] = Rat(1);
    T[i][cols] = Rat(sign * rows[i].b);
    basis[i] = n + n_slack + i;
  }

  auto reduced_costs = [&](std::vector<Rat>& r, Rat& obj) {
    r.assign(cols, Rat(0));
    obj = Rat(0);
    // cost 1 on artificials; subtract basic rows with artificial basis.
    for (size_t j = n + n_slack; j < cols; j++) r[j] = Rat(1);
    for (size_t i = 0; i < m; i++) {
      if (basis[i] >= n + n_slack) {
        for (size_t j = 0; j < cols; j++) r[j] = r[j] - T[i][j];
        obj = obj + T[i][cols];
      }
    }
  };

  std::vector<Rat> r;
  Rat obj;
  for (;;) {
    if (pivots-- <= 0) return std::nullopt;
    reduced_costs(r, obj);
    size_t enter = cols;
    for (size_t j = 0; j < cols; j++)
      if (r[j] < Rat(0)) {
        enter = j;
        break;
      }
    if (enter == cols) break;  // optimal
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; i++) {
      if (Rat(0) < T[i][enter]) {
        Rat ratio = T[i][cols] / T[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase 1
    // Pivot.
    Rat piv = T[leave][enter];
    for (size_t j = 0; j <= cols; j++) T[leave][j] = T[leave][j] / piv;
    for (size_t i = 0; i < m; i++) {
      if (i == leave) continue;
      Rat f = T[i][enter];
      if (f == Rat(0)) continue;
      for (size_t j = 0; j <= cols; j++) T[i][j] = T[i][j] - f * T[leave][j];
    }
    basis[leave] = enter;
  }
  reduced_costs(r, obj);
  if (Rat(0) < obj) return false;
  if (solution) {
    solution->assign(n, Rat(0));
    for (size_t i = 0; i < m; i++)
      if (basis[i] < n) (*solution)[basis[i]] = T[i][cols];
  }
  return true;
}

// Branch and bound over the integers. Sound answers only; Unknown when a
// budget is exhausted.
inline SatAnswer int_lin_solve(std::vector<LinRow> rows, size_t n, std::vector<int64_t>* model,
                               int& pivots, int& nodes) {
  if (nodes-- <= 0) return SatAnswer::Unknown;
  std::vector<Rat> sol;
  std::optional<bool> feas;
  try {
    feas = lp_feasible(rows, n, &sol, pivots);
  } catch (const ArithOverflow&) {
    return SatAnswer::Unknown;
  }
  if (!feas.has_value()) return SatAnswer::Unknown;
  if (!*feas) return SatAnswer::Unsat;
  size_t frac = n;
  for (size_t j = 0; j < n; j++)
    if (!sol[j].is_int()) {
      frac = j;
      break;
    }
  if (frac == n) {
    if (model) {
      model->assign(n, 0);
      for (size_t j = 0; j < n; j++) (*model)[j] = sol[j].num;
    }
    return SatAnswer::Sat;
  }
  int64_t f = sol[frac].floor();
  // x <= f  as  -x >= -f
  LinRow down;
  down.a.assign(n, 0);
  down.a[frac] = -1;
  down.b = -f;
  // x >= f + 1
  LinRow up;
  up.a.assign(n, 0);
  up.a[frac] = 1;
  up.b = f + 1;

  rows.push_back(down);
  SatAnswer r1 = int_lin_solve(rows, n, model, pivots, nodes);
  if (r1 == SatAnswer::Sat) return r1;
  rows.back() = up;
  SatAnswer r2 = int_lin_solve(std::move(rows), n, model, pivots, nodes);
  if (r2 == SatAnswer::Sat) return r2;
  if (r1 == SatAnswer::Unsat && r2 == SatAnswer::Unsat) return SatAnswer::Unsat;
  return SatAnswer::Unknown;
}

// Closed interval over the non-negative integers, possibly unbounded above.
struct IVal {
  int64_t lo = 0;
  std::optional<int64_t> hi;  // nullopt = unbounded

  bool fixed() const { return hi && *hi == lo; }
  bool empty() const { return hi && *hi < lo; }
};

struct IRange {
  std::optional<int64_t> lo, hi;  // nullopt = unbounded on that side
  static IRange point(int64_t v) { return {v, v}; }
};

inline std::optional<int64_t> mul_opt(std::optional<int64_t> a, std::optional<int64_t> b,
                                      bool& overflow) {
  if (!a || !b) return std::nullopt;
  int64_t r;
  if (__builtin_mul_overflow(*a, *b, &r)) {
    overflow = true;
    return std::nullopt;
  }
  return r;
}
inline std::optional<int64_t> add_opt(std::optional<int64_t> a, std::optional<int64_t> b,
                                      bool& overflow) {
  if (!a || !b) return std::nullopt;
  int64_t r;
  if (__builtin_add_overflow(*a, *b, &r)) {
    overflow = true;
    return std::nullopt;
  }
  return r;
}

}  // namespace detail

// The integer constraint store of one Nielsen node: a set of (in)equations
// over non-negative integer atoms, with sound entailment and satisfiability
// queries. Answers of "entailed" and "unsat" are always correct; anything
// the layered reasoning cannot settle comes back unknown.
class IntStore {
public:
  IntStore() = default;
  explicit IntStore(IntSolverLimits limits) : limits_(limits) {}

  // Returns false if the constraint is trivially false (store becomes
  // inconsistent but keeps the witness).
  bool add(const IntConstraint& c) {
    if (c.trivially_true()) return true;
    invalidate();
    if (c.trivially_false()) {
      false_ = true;
      return false;
    }
    auto it = std::lower_bound(cs_.begin(), cs_.end(), c);
    if (it == cs_.end() || !(*it == c)) cs_.insert(it, c);
    return !false_;
  }

  const std::vector<IntConstraint>& constraints() const { return cs_; }
  bool marked_false() const { return false_; }
  const IntSolverLimits& limits() const { return limits_; }
  void set_limits(IntSolverLimits l) { limits_ = l; }

  IntStore substituted(const Substitution& s) const {
    IntStore out(limits_);
    out.false_ = false_;
    for (auto& c : cs_) out.add(s.apply(c));
    return out;
  }

  // Sound entailment: true only if every model of the store satisfies c.
  bool entails(const IntConstraint& c) const {
    if (c.trivially_true()) return true;
    if (false_) return true;
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
    bool res = true;
    for (auto& neg : c.negation()) {
      auto ans = unsat_check(neg);
      if (ans != SatAnswer::Unsat) {
        res = false;
        break;
      }
    }
    cache_.emplace(c, res);
    return res;
  }

  SatAnswer satisfiable(Model* model = nullptr) const {
    if (false_) return SatAnswer::Unsat;
    if (sat_cache_) {
      if (model && *sat_cache_ == SatAnswer::Sat) model->ints = model_cache_;
      return *sat_cache_;
    }
    Model local;
    SatAnswer ans = solve_sat(&local);
    sat_cache_ = ans;
    if (ans == SatAnswer::Sat) model_cache_ = local.ints;
    if (model && ans == SatAnswer::Sat) model->ints = model_cache_;
    return ans;
  }

  // If the polynomial has one entailed value over all models, returns it.
  std::optional<int64_t> entailed_constant(const IntPoly& p) const {
    if (p.is_constant()) return p.constant_value();
    Model m;
    if (satisfiable(&m) != SatAnswer::Sat) return std::nullopt;
    int64_t guess;
    try {
      guess = p.eval(m.ints);
    } catch (const ArithOverflow&) {
      return std::nullopt;
    }
    if (entails(IntConstraint::eq(p, IntPoly::constant(guess)))) return guess;
    return std::nullopt;
  }

  std::vector<IntAtom> atoms() const {
    std::vector<IntAtom> out;
    for (auto& c : cs_) c.poly().collect_atoms(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  size_t hash() const {
    size_t h = 0xa0761d64;
    for (auto& c : cs_) hash_mix(h, c.hash());
    hash_mix(h, false_ ? 1 : 0);
    return h;
  }
  bool operator==(const IntStore& o) const { return false_ == o.false_ && cs_ == o.cs_; }

private:
  struct CHash {
    size_t operator()(const IntConstraint& c) const { return c.hash(); }
  };

  void invalidate() {
    cache_.clear();
    sat_cache_.reset();
    model_cache_.clear();
  }

  // --- sound unsat test for cs_ + extra --------------------------------------
  SatAnswer unsat_check(const IntConstraint& extra) const {
    std::vector<IntConstraint> all = cs_;
    all.push_back(extra);
    return unsat_core(all);
  }

  static bool all_linear(const std::vector<IntConstraint>& cs) {
    for (auto& c : cs)
      if (!c.poly().is_linear()) return false;
    return true;
  }

  SatAnswer unsat_core(std::vector<IntConstraint> cs) const {
    for (auto& c : cs)
      if (c.trivially_false()) return SatAnswer::Unsat;
    cs.erase(std::remove_if(cs.begin(), cs.end(),
                            [](const IntConstraint& c) { return c.trivially_true(); }),
             cs.end());
    if (cs.empty()) return SatAnswer::Sat;

    // Interval propagation and fixed-variable substitution; may settle the
    // query or linearize products.
    for (int round = 0; round < 8; round++) {
      auto iv = propagate_intervals(cs);
      if (!iv) return SatAnswer::Unsat;
      bool changed = false;
      for (auto& [key, val] : *iv) {
        if (!val.fixed()) continue;
        IntAtom a = key_atom(key);
        bool used_nonlinearly = false;
        for (auto& c : cs)
          for (auto& [m, coeff] : c.poly().terms())
            if (m.size() > 1 && std::find(m.begin(), m.end(), a) != m.end())
              used_nonlinearly = true;
        if (!used_nonlinearly) continue;
        for (auto& c : cs) c = c.substitute(a, IntPoly::constant(val.lo));
        changed = true;
      }
      if (changed) {
        for (auto& c : cs)
          if (c.trivially_false()) return SatAnswer::Unsat;
        cs.erase(std::remove_if(cs.begin(), cs.end(),
                                [](const IntConstraint& c) { return c.trivially_true(); }),
                 cs.end());
        if (cs.empty()) return SatAnswer::Sat;
      } else {
        break;
      }
    }

    if (!all_linear(cs)) return SatAnswer::Unknown;

    size_t n;
    auto rows = to_rows(cs, n, nullptr);
    if (!rows) return SatAnswer::Unknown;
    int pivots = limits_.pivot_budget;
    int nodes = limits_.bb_budget;
    return detail::int_lin_solve(std::move(*rows), n, nullptr, pivots, nodes);
  }

  // --- satisfiability with model --------------------------------------------
  SatAnswer solve_sat(Model* model) const {
    std::vector<IntConstraint> cs = cs_;
    for (auto& c : cs)
      if (c.trivially_false()) return SatAnswer::Unsat;
    cs.erase(std::remove_if(cs.begin(), cs.end(),
                            [](const IntConstraint& c) { return c.trivially_true(); }),
             cs.end());
    // All-zero is the common witness.
    std::unordered_map<uint64_t, int64_t> zero;
    if (holds_all(cs, zero)) {
      if (model) model->ints = zero;
      return SatAnswer::Sat;
    }
    if (all_linear(cs)) {
      size_t n;
      std::vector<IntAtom> order;
      auto rows = to_rows(cs, n, &order);
      if (!rows) return SatAnswer::Unknown;
      int pivots = limits_.pivot_budget;
      int nodes = limits_.bb_budget;
      std::vector<int64_t> vals;
      auto ans = detail::int_lin_solve(std::move(*rows), n, &vals, pivots, nodes);
      if (ans == SatAnswer::Sat && model)
        for (size_t j = 0; j < n; j++) model->ints[IntPoly::atom_key(order[j])] = vals[j];
      return ans;
    }
    // Nonlinear: probe small values for atoms in products, linear completion.
    std::vector<IntAtom> nl;
    for (auto& c : cs)
      for (auto& [m, coeff] : c.poly().terms())
        if (m.size() > 1)
          for (auto& a : m) nl.push_back(a);
    std::sort(nl.begin(), nl.end());
    nl.erase(std::unique(nl.begin(), nl.end()), nl.end());
    int leaves = limits_.probe_leaves;
    return probe(cs, nl, 0, model, leaves);
  }

  SatAnswer probe(const std::vector<IntConstraint>& cs, const std::vector<IntAtom>& nl, size_t i,
                  Model* model, int& leaves) const {
    if (i == nl.size()) {
      if (leaves-- <= 0) return SatAnswer::Unknown;
      for (auto& c : cs)
        if (c.trivially_false()) return SatAnswer::Unsat;
      std::vector<IntConstraint> live = cs;
      live.erase(std::remove_if(live.begin(), live.end(),
                                [](const IntConstraint& c) { return c.trivially_true(); }),
                 live.end());
      if (!all_linear(live)) return SatAnswer::Unknown;
      size_t n;
      std::vector<IntAtom> order;
      auto rows = to_rows(live, n, &order);
      if (!rows) return SatAnswer::Unknown;
      int pivots = limits_.pivot_budget;
      int nodes = limits_.bb_budget;
      std::vector<int64_t> vals;
      auto ans = detail::int_lin_solve(std::move(*rows), n, &vals, pivots, nodes);
      if (ans == SatAnswer::Sat && model)
        for (size_t j = 0; j < n; j++) model->ints[IntPoly::atom_key(order[j])] = vals[j];
      return ans;
    }
    bool any_unknown = false;
    for (int64_t v = 0; v <= limits_.probe_bound; v++) {
      if (leaves <= 0) return SatAnswer::Unknown;
      std::vector<IntConstraint> next = cs;
      bool dead = false;
      for (auto& c : next) {
        c = c.substitute(nl[i], IntPoly::constant(v));
        if (c.trivially_false()) dead = true;
      }
      if (dead) continue;
      auto ans = probe(next, nl, i + 1, model, leaves);
      if (ans == SatAnswer::Sat) {
        if (model) model->ints[IntPoly::atom_key(nl[i])] = v;
        return SatAnswer::Sat;
      }
      if (ans == SatAnswer::Unknown) any_unknown = true;
    }
    // Values beyond the probe bound were never tried.
    (void)any_unknown;
    return SatAnswer::Unknown;
  }

  static bool holds_all(const std::vector<IntConstraint>& cs,
                        const std::unordered_map<uint64_t, int64_t>& a) {
    for (auto& c : cs) {
      try {
        if (!c.holds(a)) return false;
      } catch (const ArithOverflow&) {
        return false;
      }
    }
    return true;
  }

  static IntAtom key_atom(uint64_t key) {
    return {key >> 32 ? IntAtom::Kind::Len : IntAtom::Kind::IntVar, static_cast<uint32_t>(key)};
  }

  // Interval propagation from unit constraints plus interval evaluation of
  // every constraint; nullopt means definitely infeasible.
  static std::optional<std::map<uint64_t, detail::IVal>> propagate_intervals(
      const std::vector<IntConstraint>& cs) {
    std::map<uint64_t, detail::IVal> iv;
    std::vector<IntAtom> atoms;
    for (auto& c : cs) c.poly().collect_atoms(atoms);
    for (auto& a : atoms) iv.emplace(IntPoly::atom_key(a), detail::IVal{});

    for (int round = 0; round < 6; round++) {
      bool changed = false;
      for (auto& c : cs) {
        auto& terms = c.poly().terms();
        // Unit form a*x + k REL 0.
        if (terms.size() <= 2) {
          const Mono* mono = nullptr;
          int64_t coeff = 0, cst = 0;
          bool unit = true;
          for (auto& [m, co] : terms) {
            if (m.empty())
              cst = co;
            else if (m.size() == 1 && !mono) {
              mono = &m;
              coeff = co;
            } else
              unit = false;
          }
          if (unit && mono) {
            auto& slot = iv[IntPoly::atom_key((*mono)[0])];
            // coeff*x + cst >= 0 (or == 0)
            if (coeff > 0) {
              int64_t lo = cst >= 0 ? 0 : ((-cst) + coeff - 1) / coeff;
              if (lo > slot.lo) {
                slot.lo = lo;
                changed = true;
              }
              if (c.form() == IntConstraint::Form::Eq0) {
                if (cst > 0 || (-cst) % coeff != 0) return std::nullopt;
                int64_t v = (-cst) / coeff;
                if (!slot.hi || *slot.hi > v) {
                  slot.hi = v;
                  changed = true;
                }
                if (slot.lo < v) {
                  slot.lo = v;
                  changed = true;
                }
              }
            } else if (coeff < 0) {
              // x <= cst / -coeff
              int64_t hi = cst < 0 ? -1 : cst / (-coeff);
              if (hi < 0) return std::nullopt;
              if (!slot.hi || *slot.hi > hi) {
                slot.hi = hi;
                changed = true;
              }
              if (c.form() == IntConstraint::Form::Eq0) {
                if (cst < 0 || cst % (-coeff) != 0) return std::nullopt;
                int64_t v = cst / (-coeff);
                if (slot.lo < v) {
                  slot.lo = v;
                  changed = true;
                }
                if (!slot.hi || *slot.hi > v) slot.hi = v;
              }
            }
            if (slot.empty()) return std::nullopt;
          }
        }
      }
      if (!changed) break;
    }

    // Interval evaluation of each constraint.
    for (auto& c : cs) {
      bool overflow = false;
      detail::IRange total = detail::IRange::point(0);
      for (auto& [m, coeff] : c.poly().terms()) {
        detail::IRange mono = detail::IRange::point(1);
        for (auto& a : m) {
          auto& slot = iv[IntPoly::atom_key(a)];
          // all atoms non-negative
          mono.lo = detail::mul_opt(mono.lo, std::optional<int64_t>(slot.lo), overflow);
          mono.hi = detail::mul_opt(mono.hi, slot.hi, overflow);
        }
        detail::IRange scaled;
        if (coeff >= 0) {
          scaled.lo = detail::mul_opt(mono.lo, std::optional<int64_t>(coeff), overflow);
          scaled.hi = detail::mul_opt(mono.hi, std::optional<int64_t>(coeff), overflow);
        } else {
          scaled.lo = detail::mul_opt(mono.hi, std::optional<int64_t>(coeff), overflow);
          scaled.hi = detail::mul_opt(mono.lo, std::optional<int64_t>(coeff), overflow);
        }
        total.lo = detail::add_opt(total.lo, scaled.lo, overflow);
        total.hi = detail::add_opt(total.hi, scaled.hi, overflow);
      }
      if (overflow) continue;  // no conclusion from this constraint
      if (c.form() == IntConstraint::Form::Ge0) {
        if (total.hi && *total.hi < 0) return std::nullopt;
      } else {
        if ((total.hi && *total.hi < 0) || (total.lo && *total.lo > 0)) return std::nullopt;
      }
    }
    return iv;
  }

  // Converts linear constraints to simplex rows over non-negative variables.
  static std::optional<std::vector<LinRow>> to_rows(const std::vector<IntConstraint>& cs,
                                                    size_t& n, std::vector<IntAtom>* order) {
    std::vector<IntAtom> atoms;
    for (auto& c : cs) c.poly().collect_atoms(atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    n = atoms.size();
    std::map<uint64_t, size_t> col;
    for (size_t j = 0; j < n; j++) col[IntPoly::atom_key(atoms[j])] = j;
    if (order) *order = atoms;
    std::vector<LinRow> rows;
    for (auto& c : cs) {
      LinRow r;
      r.a.assign(n, 0);
      r.eq = c.form() == IntConstraint::Form::Eq0;
      for (auto& [m, coeff] : c.poly().terms()) {
        if (m.empty())
          r.b = checked_mul(coeff, -1);
        else
          r.a[col[IntPoly::atom_key(m[0])]] = coeff;
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  std::vector<IntConstraint> cs_;
  bool false_ = false;
  IntSolverLimits limits_;
  mutable std::unordered_map<IntConstraint, bool, CHash> cache_;
  mutable std::optional<SatAnswer> sat_cache_;
  mutable std::unordered_map<uint64_t, int64_t> model_cache_;
};

}  // namespace wordeq
