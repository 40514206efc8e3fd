#pragma once

#include <cassert>
#include <unordered_map>
#include <vector>

#include "wordeq/term.hpp"

namespace wordeq {

// A substitution maps string variables to terms and symbolic characters to
// character tokens. It is kept acyclic and fully extended: variables
// occurring in an image are not themselves mapped.
class Substitution {
public:
  Substitution() = default;

  static Substitution of_var(VarId x, StringTerm image) {
    Substitution s;
    s.map_var(x, std::move(image));
    return s;
  }
  static Substitution of_sym(SymId o, Token image) {
    Substitution s;
    s.map_sym(o, std::move(image));
    return s;
  }

  void map_var(VarId x, StringTerm image) {
    assert(!contains_var(image, x) || (image.size() == 1 && image[0].is_var()));
    var_map_.insert_or_assign(x, std::move(image));
  }
  void map_sym(SymId o, Token image) {
    assert(image.is_char_like());
    sym_map_.insert_or_assign(o, std::move(image));
  }

  bool identity() const { return var_map_.empty() && sym_map_.empty(); }
  const std::unordered_map<VarId, StringTerm>& var_map() const { return var_map_; }
  const std::unordered_map<SymId, Token>& sym_map() const { return sym_map_; }

  StringTerm apply(const StringTerm& u) const {
    StringTerm out;
    for (auto& t : u) {
      switch (t.kind()) {
        case Token::Kind::Var: {
          auto it = var_map_.find(t.var_id());
          if (it == var_map_.end())
            out.push_back(t);
          else
            out.append(it->second);
          break;
        }
        case Token::Kind::Sym: {
          auto it = sym_map_.find(t.sym_id());
          out.push_back(it == sym_map_.end() ? t : it->second);
          break;
        }
        case Token::Kind::Pow:
          // Bases are ground, so only symbolic characters can change there.
          out.push_back(Token::pow(apply(t.base()), apply(t.exp())));
          break;
        default:
          out.push_back(t);
      }
    }
    return out;
  }

  Equation apply(const Equation& e) const { return {apply(e.lhs), apply(e.rhs)}; }

  // len(x) atoms are replaced by the length of the image of x.
  IntPoly apply(const IntPoly& p) const {
    IntPoly out = p;
    for (auto& [x, u] : var_map_) {
      IntAtom a = IntAtom::len(x);
      out = out.substitute(a, length_poly(u));
    }
    return out;
  }

  IntConstraint apply(const IntConstraint& c) const {
    return IntConstraint::make(c.form(), apply(c.poly()));
  }

private:
  std::unordered_map<VarId, StringTerm> var_map_;
  std::unordered_map<SymId, Token> sym_map_;
};

// A concrete interpretation: words for variables, characters for symbolic
// characters, non-negative values for integer variables.
struct Model {
  std::unordered_map<VarId, std::vector<Chr>> vars;
  std::unordered_map<SymId, Chr> syms;
  std::unordered_map<uint64_t, int64_t> ints;  // keyed by IntPoly::atom_key

  int64_t int_value(IntVarId v) const {
    auto it = ints.find(IntPoly::atom_key(IntAtom::ivar(v)));
    return it == ints.end() ? 0 : it->second;
  }
};

// Unwinds a term into a concrete word under a model. Fails (returns false)
// if an exponent evaluates negative or the result exceeds the cap.
inline bool unwind(const StringTerm& u, const Model& m, std::vector<Chr>& out,
                   size_t cap = 1u << 20) {
  for (auto& t : u) {
    switch (t.kind()) {
      case Token::Kind::Chr:
        out.push_back(t.chr_val());
        break;
      case Token::Kind::Sym: {
        auto it = m.syms.find(t.sym_id());
        if (it == m.syms.end()) return false;
        out.push_back(it->second);
        break;
      }
      case Token::Kind::Var: {
        auto it = m.vars.find(t.var_id());
        if (it == m.vars.end()) return false;
        out.insert(out.end(), it->second.begin(), it->second.end());
        break;
      }
      case Token::Kind::Pow: {
        int64_t e;
        try {
          e = t.exp().eval(m.ints);
        } catch (const ArithOverflow&) {
          return false;
        }
        if (e < 0) return false;
        std::vector<Chr> body;
        if (!unwind(t.base(), m, body, cap)) return false;
        for (int64_t i = 0; i < e; i++) {
          out.insert(out.end(), body.begin(), body.end());
          if (out.size() > cap) return false;
        }
        break;
      }
    }
    if (out.size() > cap) return false;
  }
  return true;
}

// Checks that a model makes both sides of every equation the same word.
inline bool verify_model(const std::vector<Equation>& eqs, const Model& m) {
  for (auto& e : eqs) {
    std::vector<Chr> l, r;
    if (!unwind(e.lhs, m, l) || !unwind(e.rhs, m, r)) return false;
    if (l != r) return false;
  }
  return true;
}

}  // namespace wordeq
