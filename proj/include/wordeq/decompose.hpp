#pragma once

#include <optional>

#include "wordeq/branch.hpp"
#include "wordeq/int_solver.hpp"
#include "wordeq/print.hpp"

namespace wordeq {

// A boundary pair: the first i tokens of the left side against the first j
// tokens of the right side, whose length difference d is an entailed
// constant. `swapped` marks that the sides were exchanged to make d >= 0.
struct Split {
  size_t i = 0, j = 0;
  int64_t d = 0;
  bool swapped = false;
};

namespace detail {

inline bool has_var_or_pow(const StringTerm& u, size_t from, size_t to) {
  for (size_t k = from; k < to; k++)
    if (u[k].is_var() || u[k].is_pow()) return true;
  return false;
}

}  // namespace detail

// Scans interior token boundaries, shortest left part first, and returns
// the first one whose length difference is an entailed integer constant.
// Balanced splits additionally require every part to contain a variable or
// a power token; padded splits only need interior boundaries (each piece
// then strictly shrinks, which keeps the search well founded).
inline std::optional<Split> find_split(const Equation& e, const IntStore& store) {
  const size_t nl = e.lhs.size(), nr = e.rhs.size();
  if (nl == 0 || nr == 0 || nl * nr > 400) return std::nullopt;

  std::vector<IntPoly> lpre(nl + 1), rpre(nr + 1);
  for (size_t i = 0; i < nl; i++) lpre[i + 1] = lpre[i] + length_poly(e.lhs.sub(i, 1));
  for (size_t j = 0; j < nr; j++) rpre[j + 1] = rpre[j] + length_poly(e.rhs.sub(j, 1));

  for (size_t i = 1; i < nl; i++)
    for (size_t j = 1; j < nr; j++) {
      IntPoly d = lpre[i] - rpre[j];
      auto v = store.entailed_constant(d);
      if (!v) continue;
      if (*v == 0) {
        if (detail::has_var_or_pow(e.lhs, 0, i) && detail::has_var_or_pow(e.lhs, i, nl) &&
            detail::has_var_or_pow(e.rhs, 0, j) && detail::has_var_or_pow(e.rhs, j, nr))
          return Split{i, j, 0, false};
        continue;
      }
      if (*v > 0) return Split{i, j, *v, false};
      return Split{i, j, -*v, true};
    }
  return std::nullopt;
}

// Replaces the equation by the two boundary equations, padding with d fresh
// symbolic characters when the left part is longer.
inline Branch make_decomposition(const Equation& e, const Split& s, SymbolPool& pool,
                                 const Printer* pr = nullptr) {
  const StringTerm& u = s.swapped ? e.rhs : e.lhs;
  const StringTerm& v = s.swapped ? e.lhs : e.rhs;
  size_t i = s.swapped ? s.j : s.i;
  size_t j = s.swapped ? s.i : s.j;
  StringTerm u1 = u.sub(0, i), u2 = u.sub(i, u.size() - i);
  StringTerm v1 = v.sub(0, j), v2 = v.sub(j, v.size() - j);
  Branch b;
  if (s.d == 0) {
    b.replace_eq = {Equation{u1, v1}, Equation{u2, v2}};
  } else {
    StringTerm pad;
    for (int64_t k = 0; k < s.d; k++) pad.push_back(Token::sym(pool.fresh_sym("o")));
    StringTerm r1 = v1 + pad;
    StringTerm l2 = pad + u2;
    b.replace_eq = {Equation{u1, r1}, Equation{l2, v2}};
  }
  b.label = "split d=" + std::to_string(s.d);
  (void)pr;
  return b;
}

}  // namespace wordeq
