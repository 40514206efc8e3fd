#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordeq/term.hpp"

namespace wordeq {

using Word = std::vector<Chr>;

inline Word word_of(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Chr>(static_cast<unsigned char>(c)));
  return w;
}

// No proper non-empty suffix equals a prefix; occurrences of such words
// cannot overlap.
inline bool is_unbordered(const Word& w) {
  for (size_t L = 1; L < w.size(); L++) {
    bool border = true;
    for (size_t i = 0; i < L && border; i++)
      if (w[i] != w[w.size() - L + i]) border = false;
    if (border) return false;
  }
  return !w.empty();
}

inline size_t count_occurrences(const Word& w, const Word& s) {
  if (w.empty() || s.size() < w.size()) return 0;
  size_t n = 0;
  for (size_t i = 0; i + w.size() <= s.size(); i++) {
    bool hit = true;
    for (size_t j = 0; j < w.size() && hit; j++)
      if (s[i + j] != w[j]) hit = false;
    if (hit) n++;
  }
  return n;
}

namespace pk {

inline bool starts_with(const Word& w, const Word& p) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}
inline bool ends_with(const Word& w, const Word& s) {
  if (s.size() > w.size()) return false;
  return std::equal(s.begin(), s.end(), w.end() - s.size());
}
inline bool is_factor(const Word& w, const Word& f) {
  if (f.empty()) return true;
  if (f.size() > w.size()) return false;
  for (size_t i = 0; i + f.size() <= w.size(); i++)
    if (std::equal(f.begin(), f.end(), w.begin() + i)) return true;
  return false;
}

// Element of the abstracted sequence: a concrete character or an opaque
// atom (variable, symbolic character or power token).
struct Elem {
  std::optional<Token> atom;
  Chr c = 0;

  bool ground() const { return !atom.has_value(); }
};
using Seq = std::vector<Elem>;

inline Seq abstract_term(const StringTerm& u) {
  Seq out;
  for (auto& t : u) {
    if (t.is_chr())
      out.push_back({std::nullopt, t.chr_val()});
    else
      out.push_back({t, 0});
  }
  return out;
}

}  // namespace pk

// A rewritten Parikh image: constant plus per-atom coefficients. Symbolic
// characters and powers are treated as variables, keyed by the token itself.
struct ParikhSum {
  int64_t k = 0;
  std::map<Token, int64_t> coeff;

  friend ParikhSum operator-(const ParikhSum& a, const ParikhSum& b) {
    ParikhSum r = a;
    r.k -= b.k;
    for (auto& [t, c] : b.coeff) {
      r.coeff[t] -= c;
      if (r.coeff[t] == 0) r.coeff.erase(t);
    }
    return r;
  }
  friend ParikhSum operator+(const ParikhSum& a, const ParikhSum& b) {
    ParikhSum r = a;
    r.k += b.k;
    for (auto& [t, c] : b.coeff) {
      r.coeff[t] += c;
      if (r.coeff[t] == 0) r.coeff.erase(t);
    }
    return r;
  }
  bool constant() const { return coeff.empty(); }
};

// --- Spec-level gap and crossing predicates ----------------------------------

// A d-gap: x v y (v ground), x v, or v y with v non-empty in the one-sided
// forms, of symbolic length in (0, d]. Symbolic characters and power tokens
// count as variables here.
inline bool is_gap(const StringTerm& u, size_t d) {
  size_t n = u.size();
  if (n == 0 || n > d) return false;
  auto varish = [](const Token& t) { return !t.is_chr(); };
  auto all_chr = [&](size_t from, size_t to) {
    for (size_t i = from; i < to; i++)
      if (varish(u[i])) return false;
    return true;
  };
  if (n >= 2 && varish(u[0]) && varish(u[n - 1]) && all_chr(1, n - 1)) return true;
  if (n >= 2 && varish(u[0]) && all_chr(1, n)) return true;
  if (n >= 2 && varish(u[n - 1]) && all_chr(0, n - 1)) return true;
  return false;
}

// Whether occurrences of pattern w can cross through the gap u.
inline bool crossing(const Word& w, const StringTerm& u) {
  size_t n = u.size();
  if (n == 0) return false;
  auto varish = [](const Token& t) { return !t.is_chr(); };
  Word v;
  if (varish(u[0]) && varish(u[n - 1])) {
    for (size_t i = 1; i + 1 < n; i++) v.push_back(u[i].chr_val());
    if (v.empty()) return w.size() >= 1;  // w = w1 w3, not both empty
    if (v.size() >= w.size()) return false;
    return pk::is_factor(w, v);
  }
  if (varish(u[0])) {  // u = x v : needs w = w1 v with w1 non-empty
    for (size_t i = 1; i < n; i++) v.push_back(u[i].chr_val());
    return v.size() < w.size() && pk::ends_with(w, v);
  }
  if (varish(u[n - 1])) {  // u = v y : needs w = v w2 with w2 non-empty
    for (size_t i = 0; i + 1 < n; i++) v.push_back(u[i].chr_val());
    return v.size() < w.size() && pk::starts_with(w, v);
  }
  return false;
}

// --- The rewriting engine -----------------------------------------------------

namespace pk {

struct ExactResult {
  int64_t k = 0;
  std::vector<Seq> segs;  // residual segments, each containing an atom
};

// Exact phase: explicit occurrences, full-width ground windows, non-crossing
// gap splits and non-crossing boundary drops, applied to a fixpoint. Every
// step preserves the occurrence count exactly.
inline void exact_split(const Word& w, Seq seq, ExactResult& out) {
  const size_t W = w.size();
  for (;;) {
    if (seq.empty()) return;
    // Fully ground sequence: count occurrences directly.
    bool ground = std::all_of(seq.begin(), seq.end(), [](const Elem& e) { return e.ground(); });
    if (ground) {
      Word s;
      for (auto& e : seq) s.push_back(e.c);
      out.k += static_cast<int64_t>(count_occurrences(w, s));
      return;
    }
    // Ground runs: explicit occurrence or over-width window splits.
    bool split_done = false;
    for (size_t i = 0; i < seq.size() && !split_done; i++) {
      if (!seq[i].ground()) continue;
      size_t j = i;
      Word run;
      while (j < seq.size() && seq[j].ground()) run.push_back(seq[j++].c);
      // explicit occurrence of w inside the run
      for (size_t o = 0; o + W <= run.size(); o++) {
        if (std::equal(w.begin(), w.end(), run.begin() + o)) {
          Seq left(seq.begin(), seq.begin() + i + o);
          Seq right(seq.begin() + i + o + W, seq.end());
          out.k += 1;
          exact_split(w, std::move(left), out);
          seq = std::move(right);
          split_done = true;
          break;
        }
      }
      if (split_done) break;
      // full-width non-matching window: split with shared interior
      if (run.size() >= W) {
        Seq left(seq.begin(), seq.begin() + i + W - 1);
        Seq right(seq.begin() + i + 1, seq.end());
        exact_split(w, std::move(left), out);
        seq = std::move(right);
        split_done = true;
        break;
      }
      i = j;
    }
    if (split_done) continue;

    // Leading boundary drops: a character can be dropped when no occurrence
    // can cover it, i.e. the remaining ground prefix is not a prefix of w.
    if (seq[0].ground()) {
      Word g;
      size_t p = 0;
      while (p < seq.size() && seq[p].ground()) g.push_back(seq[p++].c);
      if (p == seq.size()) continue;  // became ground
      if (!(g.size() < W && starts_with(w, g))) {
        seq.erase(seq.begin());
        continue;
      }
    }
    // Trailing mirror.
    if (seq.back().ground()) {
      Word g;
      size_t p = seq.size();
      while (p > 0 && seq[p - 1].ground()) g.insert(g.begin(), seq[--p].c);
      if (!(g.size() < W && ends_with(w, g))) {
        seq.pop_back();
        continue;
      }
    }
    // Interior non-crossing gap splits: atom, ground middle, atom.
    bool gap_split = false;
    for (size_t i = 0; i + 1 < seq.size() && !gap_split; i++) {
      if (seq[i].ground()) continue;
      size_t q = i + 1;
      Word g;
      while (q < seq.size() && seq[q].ground()) g.push_back(seq[q++].c);
      if (q >= seq.size() || seq[q].ground()) continue;
      bool cross = g.empty() ? true : is_factor(w, g);
      if (cross) continue;
      Seq left(seq.begin(), seq.begin() + q);
      Seq right(seq.begin() + i + 1, seq.end());
      exact_split(w, std::move(left), out);
      seq = std::move(right);
      gap_split = true;
    }
    if (gap_split) continue;

    out.segs.push_back(std::move(seq));
    return;
  }
}

// Maximum number of pairwise disjoint crossing occurrences through an
// interior gap with ground middle g (g empty or a factor of w).
inline int64_t max_crossings(const Word& w, const Word& g) {
  if (g.empty()) return 1;
  std::optional<size_t> min_t1, min_t3;
  for (size_t L = 1; L <= g.size() && L < w.size(); L++) {
    if (!min_t1 && ends_with(w, Word(g.begin(), g.begin() + L))) min_t1 = L;
    if (!min_t3 && starts_with(w, Word(g.end() - L, g.end()))) min_t3 = L;
  }
  if (min_t1 && min_t3 && *min_t1 + *min_t3 <= g.size()) return 2;
  return 1;
}

// Mode-specific reduction of one residual segment to atoms. The max mode
// charges the number of crossing occurrences each boundary region can hold;
// the min mode discards them.
inline ParikhSum approx_reduce(bool maximize, const Word& w, const Seq& seg) {
  ParikhSum out;
  size_t i = 0;
  // leading stuck ground run
  if (i < seg.size() && seg[i].ground()) {
    if (maximize) out.k += 1;
    while (i < seg.size() && seg[i].ground()) i++;
  }
  while (i < seg.size()) {
    out.coeff[*seg[i].atom] += 1;
    i++;
    if (i >= seg.size()) break;
    if (seg[i].ground()) {
      Word g;
      size_t q = i;
      while (q < seg.size() && seg[q].ground()) g.push_back(seg[q++].c);
      if (maximize) out.k += q == seg.size() ? 1 : max_crossings(w, g);
      i = q;
    } else if (maximize) {
      out.k += 1;  // two adjacent atoms: one occurrence can straddle them
    }
  }
  return out;
}

}  // namespace pk

enum class PMode { Min, Max };

// Rewrites the min/max Parikh image of u for pattern w into a normal form
// constant + sum of atom coefficients.
inline std::optional<ParikhSum> parikh_rewrite(PMode mode, const Word& w, const StringTerm& u) {
  if (w.size() < 2 || !is_unbordered(w)) return std::nullopt;
  pk::ExactResult ex;
  pk::exact_split(w, pk::abstract_term(u), ex);
  ParikhSum out;
  out.k = ex.k;
  for (auto& seg : ex.segs) out = out + pk::approx_reduce(mode == PMode::Max, w, seg);
  return out;
}

// Maximal unbordered factors of the concrete runs on both sides: a factor
// counts as maximal when extending it one character to the right within its
// run would break unborderedness (or the run ends).
inline std::vector<Word> enumerate_patterns(const Equation& e, size_t max_len = 8) {
  std::vector<Word> out;
  auto scan = [&](const StringTerm& side) {
    Word run;
    auto flush = [&]() {
      for (size_t s = 0; s < run.size(); s++)
        for (size_t L = 2; L <= max_len && s + L <= run.size(); L++) {
          Word f(run.begin() + s, run.begin() + s + L);
          if (!is_unbordered(f)) continue;
          if (s + L < run.size()) {
            Word ext(run.begin() + s, run.begin() + s + L + 1);
            if (is_unbordered(ext) && L + 1 <= max_len) continue;  // extendable
          }
          out.push_back(std::move(f));
        }
      run.clear();
    };
    for (auto& t : side) {
      if (t.is_chr())
        run.push_back(t.chr_val());
      else
        flush();
    }
    flush();
  };
  scan(e.lhs);
  scan(e.rhs);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Refutation {
  bool single_char = false;
  Word pattern;      // the pattern (or single character) that refuted
  int64_t difference = 0;
};

// Unsatisfiability filter for one equation: single-character counts first,
// then the pattern bounds. For each pattern the two sides are split exactly,
// identical residual segments cancel (their true counts agree on both
// sides), and the remaining upper-vs-lower bound difference refutes when it
// is a negative constant.
inline std::optional<Refutation> unsat_filter(const Equation& e, size_t max_len = 8) {
  // Single-character Parikh counts are exact per token.
  {
    std::map<Chr, std::pair<int64_t, int64_t>> counts;
    std::map<Token, int64_t> lhs_atoms, rhs_atoms;
    bool atoms_differ = false;
    for (auto& t : e.lhs) {
      if (t.is_chr())
        counts[t.chr_val()].first++;
      else
        lhs_atoms[t]++;
    }
    for (auto& t : e.rhs) {
      if (t.is_chr())
        counts[t.chr_val()].second++;
      else
        rhs_atoms[t]++;
    }
    atoms_differ = !(lhs_atoms == rhs_atoms);
    if (!atoms_differ) {
      for (auto& [c, lr] : counts)
        if (lr.first != lr.second)
          return Refutation{true, {c}, lr.first - lr.second};
    }
  }

  auto patterns = enumerate_patterns(e, max_len);
  if (patterns.empty()) return std::nullopt;
  pk::Seq ls = pk::abstract_term(e.lhs), rs = pk::abstract_term(e.rhs);
  for (auto& w : patterns) {
    pk::ExactResult exl, exr;
    pk::exact_split(w, ls, exl);
    pk::exact_split(w, rs, exr);
    // Cancel residual segments common to both sides.
    auto elem_cmp = [](const pk::Elem& a, const pk::Elem& b) -> int {
      if (a.ground() != b.ground()) return a.ground() ? -1 : 1;
      if (a.ground()) return a.c < b.c ? -1 : (a.c == b.c ? 0 : 1);
      if (*a.atom == *b.atom) return 0;
      return *a.atom < *b.atom ? -1 : 1;
    };
    auto seq_cmp = [&](const pk::Seq& a, const pk::Seq& b) -> int {
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      for (size_t i = 0; i < a.size(); i++)
        if (int c = elem_cmp(a[i], b[i]); c != 0) return c;
      return 0;
    };
    auto seq_less = [&](const pk::Seq& a, const pk::Seq& b) { return seq_cmp(a, b) < 0; };
    auto seq_eq = [&](const pk::Seq& a, const pk::Seq& b) { return seq_cmp(a, b) == 0; };
    std::sort(exl.segs.begin(), exl.segs.end(), seq_less);
    std::sort(exr.segs.begin(), exr.segs.end(), seq_less);
    std::vector<pk::Seq> lrem, rrem;
    size_t i = 0, j = 0;
    while (i < exl.segs.size() && j < exr.segs.size()) {
      if (seq_eq(exl.segs[i], exr.segs[j])) {
        i++;
        j++;
      } else if (seq_less(exl.segs[i], exr.segs[j])) {
        lrem.push_back(exl.segs[i++]);
      } else {
        rrem.push_back(exr.segs[j++]);
      }
    }
    for (; i < exl.segs.size(); i++) lrem.push_back(exl.segs[i]);
    for (; j < exr.segs.size(); j++) rrem.push_back(exr.segs[j]);

    auto bound = [&](bool maximize, int64_t k, const std::vector<pk::Seq>& segs) {
      ParikhSum s;
      s.k = k;
      for (auto& seg : segs) s = s + pk::approx_reduce(maximize, w, seg);
      return s;
    };
    // max(lhs) - min(rhs) and the symmetric difference
    for (int dir = 0; dir < 2; dir++) {
      const auto& as = dir == 0 ? lrem : rrem;
      const auto& bs = dir == 0 ? rrem : lrem;
      int64_t ka = dir == 0 ? exl.k : exr.k;
      int64_t kb = dir == 0 ? exr.k : exl.k;
      ParikhSum diff = bound(true, ka, as) - bound(false, kb, bs);
      if (diff.constant() && diff.k < 0) return Refutation{false, w, diff.k};
    }
  }
  return std::nullopt;
}

}  // namespace wordeq
