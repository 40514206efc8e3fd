#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <vector>

#include "wordeq/arith.hpp"
#include "wordeq/ids.hpp"

namespace wordeq {

struct PowData;
class StringTerm;

// One token: a concrete character, a symbolic character, a string variable,
// or a power u^m whose base u is ground (never contains string variables).
class Token {
public:
  enum class Kind : uint8_t { Chr, Sym, Var, Pow };

  static Token chr(Chr c) { return Token(Kind::Chr, static_cast<uint32_t>(c)); }
  static Token sym(SymId s) { return Token(Kind::Sym, s.v); }
  static Token var(VarId v) { return Token(Kind::Var, v.v); }
  static Token pow(StringTerm base, IntPoly exp);

  Kind kind() const { return kind_; }
  bool is_chr() const { return kind_ == Kind::Chr; }
  bool is_sym() const { return kind_ == Kind::Sym; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_pow() const { return kind_ == Kind::Pow; }
  // Concrete or symbolic character.
  bool is_char_like() const { return kind_ == Kind::Chr || kind_ == Kind::Sym; }

  Chr chr_val() const { assert(is_chr()); return static_cast<Chr>(id_); }
  SymId sym_id() const { assert(is_sym()); return SymId{id_}; }
  VarId var_id() const { assert(is_var()); return VarId{id_}; }
  const StringTerm& base() const;
  const IntPoly& exp() const;

  bool operator==(const Token& o) const;
  bool operator<(const Token& o) const;
  size_t hash() const;

private:
  Token(Kind k, uint32_t id) : kind_(k), id_(id) {}
  Token(Kind k, std::shared_ptr<const PowData> p) : kind_(k), id_(0), pow_(std::move(p)) {}

  Kind kind_;
  uint32_t id_;
  std::shared_ptr<const PowData> pow_;
};

// A string term is a finite token sequence; the empty sequence is the
// neutral element of concatenation.
class StringTerm {
public:
  StringTerm() = default;
  StringTerm(std::initializer_list<Token> ts) : toks_(ts) {}
  explicit StringTerm(std::vector<Token> ts) : toks_(std::move(ts)) {}

  bool empty() const { return toks_.empty(); }
  size_t size() const { return toks_.size(); }
  const Token& operator[](size_t i) const { return toks_[i]; }
  const std::vector<Token>& tokens() const { return toks_; }
  auto begin() const { return toks_.begin(); }
  auto end() const { return toks_.end(); }

  void push_back(Token t) { toks_.push_back(std::move(t)); }
  void append(const StringTerm& u) { toks_.insert(toks_.end(), u.toks_.begin(), u.toks_.end()); }
  StringTerm sub(size_t pos, size_t n) const {
    return StringTerm(std::vector<Token>(toks_.begin() + pos, toks_.begin() + pos + n));
  }
  friend StringTerm operator+(const StringTerm& a, const StringTerm& b) {
    StringTerm r = a;
    r.append(b);
    return r;
  }

  bool operator==(const StringTerm& o) const { return toks_ == o.toks_; }
  bool operator<(const StringTerm& o) const {
    return std::lexicographical_compare(toks_.begin(), toks_.end(), o.toks_.begin(), o.toks_.end(),
                                        [](const Token& a, const Token& b) { return a < b; });
  }
  size_t hash() const {
    size_t h = 0xcbf29ce4;
    for (auto& t : toks_) hash_mix(h, t.hash());
    return h;
  }

private:
  std::vector<Token> toks_;
};

struct PowData {
  StringTerm base;
  IntPoly exp;
  size_t cached_hash;
};

bool is_ground(const StringTerm& u);

inline Token Token::pow(StringTerm base, IntPoly exp) {
  assert(is_ground(base));  // bases never contain string variables
  size_t h = base.hash();
  hash_mix(h, exp.hash());
  auto data = std::make_shared<const PowData>(PowData{std::move(base), std::move(exp), h});
  return Token(Kind::Pow, std::move(data));
}
inline const StringTerm& Token::base() const {
  assert(is_pow());
  return pow_->base;
}
inline const IntPoly& Token::exp() const {
  assert(is_pow());
  return pow_->exp;
}

inline bool Token::operator==(const Token& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::Pow) return id_ == o.id_;
  if (pow_ == o.pow_) return true;
  return pow_->cached_hash == o.pow_->cached_hash && pow_->base == o.pow_->base &&
         pow_->exp == o.pow_->exp;
}
inline bool Token::operator<(const Token& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (kind_ != Kind::Pow) return id_ < o.id_;
  if (!(pow_->base == o.pow_->base)) return pow_->base < o.pow_->base;
  return pow_->exp < o.pow_->exp;
}
inline size_t Token::hash() const {
  if (kind_ == Kind::Pow) return pow_->cached_hash;
  size_t h = static_cast<size_t>(kind_) * 0x9e3779b97f4a7c15ull;
  hash_mix(h, id_);
  return h;
}

struct StringTermHash {
  size_t operator()(const StringTerm& t) const { return t.hash(); }
};
struct TokenHash {
  size_t operator()(const Token& t) const { return t.hash(); }
};

// --- Measures ---------------------------------------------------------------

// True if the term contains no string variable at any nesting depth.
inline bool is_ground(const StringTerm& u) {
  for (auto& t : u)
    if (t.is_var()) return false;
  // Power bases are ground by construction.
  return true;
}

inline bool contains_var(const StringTerm& u, VarId v) {
  for (auto& t : u)
    if (t.is_var() && t.var_id() == v) return true;
  return false;
}

// Length as a fully rewritten integer polynomial: characters count one,
// variables contribute len(x), a power contributes exp * len(base).
inline IntPoly length_poly(const StringTerm& u) {
  IntPoly sum;
  for (auto& t : u) {
    switch (t.kind()) {
      case Token::Kind::Chr:
      case Token::Kind::Sym:
        sum = sum + IntPoly::constant(1);
        break;
      case Token::Kind::Var:
        sum = sum + IntPoly::len(t.var_id());
        break;
      case Token::Kind::Pow:
        sum = sum + t.exp() * length_poly(t.base());
        break;
    }
  }
  return sum;
}

// Number of tokens, powers counted as one.
inline size_t symbolic_length(const StringTerm& u) { return u.size(); }

// Token reversal; power bases are reversed recursively, single tokens are
// their own reverse.
inline StringTerm reverse(const StringTerm& u) {
  std::vector<Token> out;
  out.reserve(u.size());
  for (size_t i = u.size(); i-- > 0;) {
    const Token& t = u[i];
    if (t.is_pow())
      out.push_back(Token::pow(reverse(t.base()), t.exp()));
    else
      out.push_back(t);
  }
  return StringTerm(std::move(out));
}

// All contiguous token windows of u, recursing one level into power bases.
inline std::set<StringTerm> sub_terms(const StringTerm& u) {
  std::set<StringTerm> out;
  out.insert(StringTerm{});
  for (size_t i = 0; i < u.size(); i++)
    for (size_t n = 1; i + n <= u.size(); n++) out.insert(u.sub(i, n));
  for (auto& t : u)
    if (t.is_pow()) {
      auto inner = sub_terms(t.base());
      out.insert(inner.begin(), inner.end());
    }
  return out;
}

// A string equation u ~ v; orientation is irrelevant for rule matching.
struct Equation {
  StringTerm lhs, rhs;

  bool operator==(const Equation& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator<(const Equation& o) const {
    if (!(lhs == o.lhs)) return lhs < o.lhs;
    return rhs < o.rhs;
  }
  size_t hash() const {
    size_t h = lhs.hash();
    hash_mix(h, rhs.hash());
    return h;
  }
  size_t token_count() const { return lhs.size() + rhs.size(); }
  bool trivial() const { return lhs == rhs; }
};

}  // namespace wordeq
