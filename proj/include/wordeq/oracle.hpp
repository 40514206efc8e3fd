#pragma once

#include <optional>
#include <vector>

#include "wordeq/parikh.hpp"
#include "wordeq/subst.hpp"

namespace wordeq {

// Brute-force ground truth for the property tests: exhaustively enumerates
// assignments of the given variables to words over `alphabet` of length at
// most `max_len` (and symbolic characters to alphabet characters), in
// (total length, lexicographic) order. Not part of the decision path.
class BruteForce {
public:
  BruteForce(std::vector<Chr> alphabet, size_t max_len)
      : alphabet_(std::move(alphabet)), max_len_(max_len) {
    words_.push_back({});
    size_t begin = 0, end = 1;
    for (size_t len = 1; len <= max_len_; len++) {
      for (size_t i = begin; i < end; i++)
        for (Chr c : alphabet_) {
          auto w = words_[i];
          w.push_back(c);
          words_.push_back(std::move(w));
        }
      begin = end;
      end = words_.size();
    }
    // enumeration order: total length first, then lexicographic
    std::stable_sort(words_.begin(), words_.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
  }

  // First satisfying assignment, or nullopt when none exists within bounds.
  std::optional<Model> solve(const std::vector<Equation>& eqs) const {
    std::vector<VarId> vars;
    std::vector<SymId> syms;
    collect(eqs, vars, syms);
    Model m;
    std::optional<Model> found;
    for (size_t total = 0; total <= vars.size() * max_len_ && !found; total++)
      enumerate(eqs, vars, syms, 0, total, m, found);
    return found;
  }

  // All satisfying assignments within bounds (for exhaustiveness checks).
  std::vector<Model> all_models(const std::vector<Equation>& eqs) const {
    std::vector<VarId> vars;
    std::vector<SymId> syms;
    collect(eqs, vars, syms);
    std::vector<Model> out;
    Model m;
    enumerate_all(eqs, vars, syms, 0, m, out);
    return out;
  }

  static void collect(const std::vector<Equation>& eqs, std::vector<VarId>& vars,
                      std::vector<SymId>& syms) {
    std::set<VarId> vs;
    std::set<SymId> ss;
    for (auto& e : eqs)
      for (auto* side : {&e.lhs, &e.rhs})
        for (auto& t : *side) {
          if (t.is_var()) vs.insert(t.var_id());
          if (t.is_sym()) ss.insert(t.sym_id());
          if (t.is_pow())
            for (auto& bt : t.base())
              if (bt.is_sym()) ss.insert(bt.sym_id());
        }
    vars.assign(vs.begin(), vs.end());
    syms.assign(ss.begin(), ss.end());
  }

private:
  static bool holds(const std::vector<Equation>& eqs, const Model& m) {
    for (auto& e : eqs) {
      std::vector<Chr> l, r;
      if (!unwind(e.lhs, m, l) || !unwind(e.rhs, m, r)) return false;
      if (l != r) return false;
    }
    return true;
  }

  void enumerate(const std::vector<Equation>& eqs, const std::vector<VarId>& vars,
                 const std::vector<SymId>& syms, size_t i, size_t remaining, Model& m,
                 std::optional<Model>& found) const {
    if (found) return;
    if (i == vars.size()) {
      if (remaining != 0) return;
      assign_syms(eqs, syms, 0, m, found);
      return;
    }
    for (auto& w : words_) {
      if (w.size() > remaining) break;
      if (i + 1 == vars.size() && w.size() != remaining) continue;
      m.vars[vars[i]] = w;
      enumerate(eqs, vars, syms, i + 1, remaining - w.size(), m, found);
      if (found) return;
    }
    m.vars.erase(vars[i]);
  }

  void assign_syms(const std::vector<Equation>& eqs, const std::vector<SymId>& syms, size_t i,
                   Model& m, std::optional<Model>& found) const {
    if (i == syms.size()) {
      if (holds(eqs, m)) found = m;
      return;
    }
    for (Chr c : alphabet_) {
      m.syms[syms[i]] = c;
      assign_syms(eqs, syms, i + 1, m, found);
      if (found) return;
    }
    m.syms.erase(syms[i]);
  }

  void enumerate_all(const std::vector<Equation>& eqs, const std::vector<VarId>& vars,
                     const std::vector<SymId>& syms, size_t i, Model& m,
                     std::vector<Model>& out) const {
    if (i == vars.size()) {
      std::optional<Model> hit;
      Model c = m;
      collect_all_syms(eqs, syms, 0, c, out);
      return;
    }
    for (auto& w : words_) {
      m.vars[vars[i]] = w;
      enumerate_all(eqs, vars, syms, i + 1, m, out);
    }
    m.vars.erase(vars[i]);
  }

  void collect_all_syms(const std::vector<Equation>& eqs, const std::vector<SymId>& syms,
                        size_t i, Model& m, std::vector<Model>& out) const {
    if (i == syms.size()) {
      if (holds(eqs, m)) out.push_back(m);
      return;
    }
    for (Chr c : alphabet_) {
      m.syms[syms[i]] = c;
      collect_all_syms(eqs, syms, i + 1, m, out);
    }
    m.syms.erase(syms[i]);
  }

  std::vector<Chr> alphabet_;
  size_t max_len_;
  std::vector<std::vector<Chr>> words_;
};

}  // namespace wordeq
