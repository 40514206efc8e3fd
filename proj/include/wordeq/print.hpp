#pragma once

#include <sstream>
#include <string>

#include "wordeq/int_solver.hpp"
#include "wordeq/subst.hpp"
#include "wordeq/term.hpp"

namespace wordeq {

// Textual forms for diagnostics, DOT output and tests. Bound to the symbol
// pool that owns the identifier names.
class Printer {
public:
  explicit Printer(const SymbolPool& pool) : pool_(pool) {}

  static std::string chr_str(Chr c) {
    if (c >= 0x20 && c < 0x7f) return std::string(1, static_cast<char>(c));
    std::ostringstream os;
    os << "\\u{" << std::hex << static_cast<uint32_t>(c) << "}";
    return os.str();
  }

  std::string token(const Token& t) const {
    switch (t.kind()) {
      case Token::Kind::Chr: return chr_str(t.chr_val());
      case Token::Kind::Sym: return pool_.name(t.sym_id());
      case Token::Kind::Var: return pool_.name(t.var_id());
      case Token::Kind::Pow: {
        std::string b = term(t.base());
        std::string e = poly(t.exp());
        return "(" + b + ")^{" + e + "}";
      }
    }
    return "?";
  }

  std::string term(const StringTerm& u) const {
    if (u.empty()) return "\"\"";
    std::string out;
    bool first = true;
    for (auto& t : u) {
      if (!first && (t.is_var() || t.is_sym() || u.size() > 1)) out += " ";
      out += token(t);
      first = false;
    }
    return out;
  }

  std::string atom(const IntAtom& a) const {
    if (a.kind == IntAtom::Kind::Len) return "|" + pool_.name(VarId{a.id}) + "|";
    return pool_.name(IntVarId{a.id});
  }

  std::string poly(const IntPoly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
      if (!first) out += c >= 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      int64_t a = c < 0 ? -c : c;
      std::string mono;
      for (auto& at : m) {
        if (!mono.empty()) mono += "*";
        mono += atom(at);
      }
      if (mono.empty())
        out += std::to_string(a);
      else if (a == 1)
        out += mono;
      else
        out += std::to_string(a) + "*" + mono;
      first = false;
    }
    return out;
  }

  std::string constraint(const IntConstraint& c) const {
    return poly(c.poly()) + (c.form() == IntConstraint::Form::Eq0 ? " = 0" : " >= 0");
  }

  std::string equation(const Equation& e) const { return term(e.lhs) + " == " + term(e.rhs); }

  std::string substitution(const Substitution& s) const {
    std::string out;
    for (auto& [x, u] : s.var_map()) {
      if (!out.empty()) out += ", ";
      out += pool_.name(x) + "/" + term(u);
    }
    for (auto& [o, t] : s.sym_map()) {
      if (!out.empty()) out += ", ";
      out += pool_.name(o) + "/" + token(t);
    }
    return out.empty() ? "id" : out;
  }

private:
  const SymbolPool& pool_;
};

}  // namespace wordeq
