#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordeq/ids.hpp"

namespace wordeq {

// Raised when integer arithmetic would overflow; callers degrade to
// "unknown" rather than computing with wrapped values.
struct ArithOverflow : std::runtime_error {
  ArithOverflow() : std::runtime_error("integer arithmetic overflow") {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithOverflow();
  return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithOverflow();
  return r;
}

// An atom of the integer language: an integer variable or the length of a
// string variable. Both range over the non-negative integers.
struct IntAtom {
  enum class Kind : uint8_t { IntVar, Len } kind;
  uint32_t id;

  static IntAtom ivar(IntVarId v) { return {Kind::IntVar, v.v}; }
  static IntAtom len(VarId v) { return {Kind::Len, v.v}; }
  auto operator<=>(const IntAtom&) const = default;
};

// Sorted multiset of atoms; the empty monomial is the constant one.
using Mono = std::vector<IntAtom>;

// Multivariate polynomial with integer coefficients in canonical form:
// monomials sorted, merged, zero coefficients dropped. Products appear
// when nested powers are flattened.
class IntPoly {
public:
  IntPoly() = default;
  static IntPoly constant(int64_t c) {
    IntPoly p;
    if (c != 0) p.terms_.push_back({Mono{}, c});
    return p;
  }
  static IntPoly atom(IntAtom a, int64_t coeff = 1) {
    IntPoly p;
    if (coeff != 0) p.terms_.push_back({Mono{a}, coeff});
    return p;
  }
  static IntPoly var(IntVarId v) { return atom(IntAtom::ivar(v)); }
  static IntPoly len(VarId v) { return atom(IntAtom::len(v)); }

  const std::vector<std::pair<Mono, int64_t>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  int64_t constant_value() const {
    assert(is_constant());
    return terms_.empty() ? 0 : terms_[0].second;
  }
  // Constant part of the polynomial (0 if none).
  int64_t constant_part() const {
    for (auto& [m, c] : terms_)
      if (m.empty()) return c;
    return 0;
  }
  bool is_linear() const {
    for (auto& [m, c] : terms_)
      if (m.size() > 1) return false;
    return true;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (auto& t : b.terms_) r.add_term(t.first, t.second);
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    for (auto& t : b.terms_) r.add_term(t.first, checked_mul(t.second, -1));
    return r;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Mono m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        r.add_term(std::move(m), checked_mul(ca, cb));
      }
    return r;
  }
  IntPoly operator-() const { return IntPoly::constant(0) - *this; }
  IntPoly scaled(int64_t k) const {
    IntPoly r;
    if (k == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = checked_mul(t.second, k);
    return r;
  }

  bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }

  // Replaces one atom by a polynomial, distributing over products.
  IntPoly substitute(IntAtom a, const IntPoly& by) const {
    IntPoly r;
    for (auto& [m, c] : terms_) {
      IntPoly term = IntPoly::constant(c);
      Mono rest;
      size_t applied = 0;
      for (auto& at : m) {
        if (at == a) {
          term = term * by;
          applied++;
        } else {
          rest.push_back(at);
        }
      }
      if (applied == 0) {
        r.add_term(m, c);
      } else {
        IntPoly restp;
        restp.terms_.push_back({rest, 1});
        r = r + term * restp;
      }
    }
    return r;
  }

  int64_t eval(const std::unordered_map<uint64_t, int64_t>& assign) const {
    int64_t sum = 0;
    for (auto& [m, c] : terms_) {
      int64_t prod = c;
      for (auto& a : m) {
        auto it = assign.find(atom_key(a));
        int64_t v = it == assign.end() ? 0 : it->second;
        prod = checked_mul(prod, v);
      }
      sum = checked_add(sum, prod);
    }
    return sum;
  }

  static uint64_t atom_key(IntAtom a) {
    return (static_cast<uint64_t>(a.kind == IntAtom::Kind::Len) << 32) | a.id;
  }

  void collect_atoms(std::vector<IntAtom>& out) const {
    for (auto& [m, c] : terms_)
      for (auto& a : m) out.push_back(a);
  }

  // Greatest common divisor of the non-constant coefficients (0 if none).
  int64_t content() const {
    int64_t g = 0;
    for (auto& [m, c] : terms_)
      if (!m.empty()) g = std::gcd(g, c < 0 ? -c : c);
    return g;
  }

  size_t hash() const {
    size_t h = 0x51ed270b;
    for (auto& [m, c] : terms_) {
      for (auto& a : m) hash_mix(h, atom_key(a));
      hash_mix(h, static_cast<size_t>(c));
    }
    return h;
  }

  auto operator<=>(const IntPoly& o) const = default;

private:
  void add_term(Mono m, int64_t c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Mono& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {std::move(m), c});
    }
  }

  std::vector<std::pair<Mono, int64_t>> terms_;
};

enum class Rel : uint8_t { Eq, Le, Lt, Ge, Gt };

// A constraint in canonical form: poly = 0 or poly >= 0 over non-negative
// integer atoms. Strict inequalities are absorbed into the constant since
// the domain is integral.
class IntConstraint {
public:
  enum class Form : uint8_t { Eq0, Ge0 };

  IntConstraint() = default;
  IntConstraint(Rel rel, const IntPoly& lhs, const IntPoly& rhs) {
    switch (rel) {
      case Rel::Eq: form_ = Form::Eq0; poly_ = lhs - rhs; break;
      case Rel::Le: form_ = Form::Ge0; poly_ = rhs - lhs; break;
      case Rel::Lt: form_ = Form::Ge0; poly_ = rhs - lhs - IntPoly::constant(1); break;
      case Rel::Ge: form_ = Form::Ge0; poly_ = lhs - rhs; break;
      case Rel::Gt: form_ = Form::Ge0; poly_ = lhs - rhs - IntPoly::constant(1); break;
    }
    normalize();
  }
  static IntConstraint eq(const IntPoly& l, const IntPoly& r) { return {Rel::Eq, l, r}; }
  static IntConstraint ge(const IntPoly& l, const IntPoly& r) { return {Rel::Ge, l, r}; }
  static IntConstraint gt(const IntPoly& l, const IntPoly& r) { return {Rel::Gt, l, r}; }
  static IntConstraint le(const IntPoly& l, const IntPoly& r) { return {Rel::Le, l, r}; }
  static IntConstraint lt(const IntPoly& l, const IntPoly& r) { return {Rel::Lt, l, r}; }

  Form form() const { return form_; }
  const IntPoly& poly() const { return poly_; }

  bool trivially_true() const {
    if (!poly_.is_constant()) return false;
    int64_t c = poly_.constant_value();
    return form_ == Form::Eq0 ? c == 0 : c >= 0;
  }
  bool trivially_false() const {
    if (poly_.is_constant()) {
      int64_t c = poly_.constant_value();
      return form_ == Form::Eq0 ? c != 0 : c < 0;
    }
    // An equality whose non-constant coefficients share a divisor that does
    // not divide the constant has no integer solution.
    if (form_ == Form::Eq0) {
      int64_t g = poly_.content();
      if (g > 1 && poly_.constant_part() % g != 0) return true;
    }
    return false;
  }

  bool holds(const std::unordered_map<uint64_t, int64_t>& assign) const {
    int64_t v = poly_.eval(assign);
    return form_ == Form::Eq0 ? v == 0 : v >= 0;
  }

  IntConstraint substitute(IntAtom a, const IntPoly& by) const {
    IntConstraint c;
    c.form_ = form_;
    c.poly_ = poly_.substitute(a, by);
    c.normalize();
    return c;
  }

  // The negation as a disjunction of constraints (two for equalities).
  std::vector<IntConstraint> negation() const {
    IntPoly one = IntPoly::constant(1);
    std::vector<IntConstraint> out;
    if (form_ == Form::Eq0) {
      out.push_back(make(Form::Ge0, poly_ - one));       // poly >= 1
      out.push_back(make(Form::Ge0, -poly_ - one));      // poly <= -1
    } else {
      out.push_back(make(Form::Ge0, -poly_ - one));      // poly <= -1
    }
    return out;
  }

  static IntConstraint make(Form f, IntPoly p) {
    IntConstraint c;
    c.form_ = f;
    c.poly_ = std::move(p);
    c.normalize();
    return c;
  }

  bool operator==(const IntConstraint& o) const { return form_ == o.form_ && poly_ == o.poly_; }
  auto operator<=>(const IntConstraint& o) const = default;
  size_t hash() const {
    size_t h = poly_.hash();
    hash_mix(h, static_cast<size_t>(form_));
    return h;
  }

private:
  void normalize() {
    int64_t g = poly_.content();
    if (g > 1) {
      // Divide through by the content; inequalities round the constant down
      // (sound tightening over the integers), equalities require exactness.
      int64_t c = poly_.constant_part();
      if (form_ == Form::Ge0 || c % g == 0) {
        IntPoly q;
        int64_t cq = form_ == Form::Eq0 ? c / g
                                        : (c >= 0 ? c / g : -(((-c) + g - 1) / g));
        q = IntPoly::constant(cq);
        for (auto& [m, coeff] : poly_.terms())
          if (!m.empty()) {
            IntPoly t;
            t = t + IntPoly::constant(coeff / g) * mono_poly(m);
            q = q + t;
          }
        poly_ = q;
      }
    }
    if (form_ == Form::Eq0 && !poly_.terms().empty() && poly_.terms().back().second < 0) {
      // Sign-normalize equalities on the lexicographically largest monomial.
      poly_ = -poly_;
    }
  }

  static IntPoly mono_poly(const Mono& m) {
    IntPoly p = IntPoly::constant(1);
    for (auto& a : m) p = p * IntPoly::atom(a);
    return p;
  }

  Form form_ = Form::Eq0;
  IntPoly poly_;
};

}  // namespace wordeq
