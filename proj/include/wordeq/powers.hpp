#pragma once

#include <optional>
#include <vector>

#include "wordeq/branch.hpp"
#include "wordeq/int_solver.hpp"
#include "wordeq/print.hpp"

namespace wordeq {

// One strict-prefix case of a ground term: the prefix, side conditions on
// fresh exponent variables, and the exponent bounds used (for pruning).
struct PrefixCase {
  StringTerm prefix;
  std::vector<IntConstraint> side;
  std::vector<IntPoly> exp_bounds;
};

// All strict prefixes of a ground term together with side conditions.
// A power contributes u^{m'} p for every prefix p of its base, with a fresh
// m' constrained by 0 <= m' < m.
inline std::vector<PrefixCase> sdec(const StringTerm& w, SymbolPool& pool) {
  if (w.empty()) return {};
  const Token& head = w[0];
  std::vector<PrefixCase> head_cases;
  switch (head.kind()) {
    case Token::Kind::Chr:
    case Token::Kind::Sym:
      head_cases.push_back({StringTerm{}, {}, {}});
      break;
    case Token::Kind::Pow: {
      for (auto& inner : sdec(head.base(), pool)) {
        IntVarId mp = pool.fresh_ivar("m");
        StringTerm pre{Token::pow(head.base(), IntPoly::var(mp))};
        pre.append(inner.prefix);
        std::vector<IntConstraint> side = inner.side;
        side.push_back(IntConstraint::ge(IntPoly::var(mp), IntPoly::constant(0)));
        side.push_back(IntConstraint::lt(IntPoly::var(mp), head.exp()));
        std::vector<IntPoly> bounds = inner.exp_bounds;
        bounds.push_back(head.exp());
        head_cases.push_back({std::move(pre), std::move(side), std::move(bounds)});
      }
      break;
    }
    case Token::Kind::Var:
      assert(false && "sdec over non-ground term");
      break;
  }
  if (w.size() == 1) return head_cases;
  StringTerm rest = w.sub(1, w.size() - 1);
  std::vector<PrefixCase> out = std::move(head_cases);
  for (auto& tail : sdec(rest, pool)) {
    StringTerm pre{head};
    pre.append(tail.prefix);
    out.push_back({std::move(pre), std::move(tail.side), std::move(tail.exp_bounds)});
  }
  return out;
}

// An equation read as "ground w, then variable, versus variable first":
// consuming x_{i-1} and producing x_i.
struct ChainEdge {
  size_t eq_index;
  Orient orient;
  VarId consumed;
  VarId produced;
  StringTerm w;
};

// A closed cycle of such equations, entirely in the forward or the mirrored
// reading (mixing polarities is unsound).
struct CyclicChain {
  std::vector<ChainEdge> edges;
  bool backward = false;
};

namespace detail {

inline std::vector<ChainEdge> chain_edges(const std::vector<Equation>& eqs, bool backward) {
  std::vector<ChainEdge> out;
  Orient os[2] = {backward ? Orient::Rev : Orient::AsIs,
                  backward ? Orient::SwappedRev : Orient::Swapped};
  for (size_t e = 0; e < eqs.size(); e++) {
    for (Orient o : os) {
      auto [l, r] = oriented(eqs[e], o);
      if (r.empty() || !r[0].is_var()) continue;
      size_t g = 0;
      while (g < l.size() && !l[g].is_var()) g++;
      if (g == 0 || g >= l.size()) continue;
      out.push_back({e, o, l[g].var_id(), r[0].var_id(), l.sub(0, g)});
    }
  }
  return out;
}

inline bool extend_cycle(const std::vector<ChainEdge>& edges, std::vector<size_t>& path,
                         std::vector<bool>& used_eq, VarId start, VarId cur, size_t k) {
  if (path.size() == k) return cur == start;
  for (size_t i = 0; i < edges.size(); i++) {
    const auto& e = edges[i];
    if (e.consumed != cur || used_eq[e.eq_index]) continue;
    // keep the cycle simple: no variable revisited except closing on start
    bool seen = false;
    for (size_t j : path)
      if (edges[j].produced == e.produced) seen = true;
    if (e.produced == start && path.size() + 1 != k) seen = true;
    if (seen && !(e.produced == start && path.size() + 1 == k)) continue;
    used_eq[e.eq_index] = true;
    path.push_back(i);
    if (extend_cycle(edges, path, used_eq, start, e.produced, k)) return true;
    path.pop_back();
    used_eq[e.eq_index] = false;
  }
  return false;
}

}  // namespace detail

// Finds a minimal cycle of equations of the power-introduction shape.
inline std::optional<CyclicChain> detect_chain(const std::vector<Equation>& eqs,
                                               size_t max_k = 4) {
  for (size_t k = 1; k <= max_k; k++) {
    for (int fam = 0; fam < 2; fam++) {
      bool backward = fam == 1;
      auto edges = detail::chain_edges(eqs, backward);
      if (edges.empty()) continue;
      // deterministic start order: ascending variable id
      std::vector<VarId> starts;
      for (auto& e : edges) starts.push_back(e.consumed);
      std::sort(starts.begin(), starts.end());
      starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
      for (VarId s : starts) {
        std::vector<size_t> path;
        std::vector<bool> used(eqs.size(), false);
        if (detail::extend_cycle(edges, path, used, s, s, k)) {
          CyclicChain chain;
          chain.backward = backward;
          for (size_t i : path) chain.edges.push_back(edges[i]);
          return chain;
        }
      }
    }
  }
  return std::nullopt;
}

// True when the term could denote the empty word: nothing but power tokens
// at the top level.
inline bool plausibly_empty(const StringTerm& w) {
  for (auto& t : w)
    if (!t.is_pow()) return false;
  return true;
}

// Builds the successor branches of one power introduction: a shared fresh
// exponent m, one branch per variable and prefix case x_i / w-bar_i^m p, and
// the w-bar_1 == eps branch when that is not excluded syntactically.
// Branches whose side conditions are impossible in the store are dropped.
inline std::vector<Branch> introduce_powers(const CyclicChain& chain, const IntStore& store,
                                            SymbolPool& pool, const Printer* pr = nullptr) {
  const size_t k = chain.edges.size();
  IntVarId m = pool.fresh_ivar("m");
  std::vector<Branch> out;
  StringTerm wbar_1;

  for (size_t i = 0; i < k; i++) {
    // w-bar_i = w_i w_{i-1} ... w_1 w_k ... w_{i+1}
    StringTerm wbar;
    for (size_t step = 0; step < k; step++) {
      size_t idx = (i + k - step) % k;
      wbar.append(chain.edges[idx].w);
    }
    if (i == 0) wbar_1 = wbar;
    VarId x = chain.edges[i].produced;
    for (auto& cas : sdec(wbar, pool)) {
      bool impossible = false;
      for (auto& c : cas.side)
        if (c.trivially_false()) impossible = true;
      for (auto& b : cas.exp_bounds)
        if (store.entails(IntConstraint::le(b, IntPoly::constant(0)))) impossible = true;
      if (impossible) continue;
      StringTerm image{Token::pow(wbar, IntPoly::var(m))};
      image.append(cas.prefix);
      if (chain.backward) image = reverse(image);
      Branch b;
      b.subst.map_var(x, image);
      b.add_ints = cas.side;
      b.add_ints.push_back(IntConstraint::ge(IntPoly::var(m), IntPoly::constant(0)));
      if (pr) b.label = pool.name(x) + "/" + pr->term(image);
      out.push_back(std::move(b));
    }
  }
  if (plausibly_empty(wbar_1)) {
    Branch b;
    StringTerm w = chain.backward ? reverse(wbar_1) : wbar_1;
    b.add_eqs.push_back({w, StringTerm{}});
    if (pr) b.label = pr->term(w) + "/\"\"";
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace wordeq
