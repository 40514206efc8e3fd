#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordeq/decompose.hpp"
#include "wordeq/parikh.hpp"
#include "wordeq/powers.hpp"
#include "wordeq/print.hpp"
#include "wordeq/rewrite.hpp"
#include "wordeq/rules.hpp"

namespace wordeq {

enum class Status : uint8_t { Unextended, Extended, Satisfied, Inconsistent, Stuck };

struct Node {
  std::vector<Equation> eqs;
  IntStore ints;
  Status status = Status::Unextended;
  int tree_parent = -1;
  Substitution in_subst;
  std::string in_label;
  std::vector<int> parents;
  std::vector<int> children;
  int depth_cost = 0;
  size_t token_total = 0;
};

enum class Strategy : uint8_t { IterDeep, Bfs };

struct SolverConfig {
  double timeout_sec = 10.0;
  int64_t max_expansions = 0;  // 0 = unlimited
  int max_depth = 1 << 24;
  int initial_depth = 8;
  IntSolverLimits int_limits;
  size_t max_pattern_len = 8;
  size_t max_chain = 4;
  bool dedup = true;
  Strategy strategy = Strategy::IterDeep;
  uint64_t seed = 0;  // recorded for reproducibility; the search is deterministic
};

struct SolverStats {
  int64_t nodes_created = 0;
  int64_t nodes_expanded = 0;
  int64_t powers_introduced = 0;
  int64_t parikh_refutations = 0;
  int64_t decompositions = 0;
  int64_t lookahead_forced = 0;
  std::map<std::string, int64_t> rules_fired;
  std::string unknown_reason;
  double wall_ms = 0;

  std::string summary() const {
    std::ostringstream os;
    os << "nodes-created: " << nodes_created << "\n";
    os << "nodes-expanded: " << nodes_expanded << "\n";
    os << "powers-introduced: " << powers_introduced << "\n";
    os << "parikh-refutations: " << parikh_refutations << "\n";
    os << "decompositions: " << decompositions << "\n";
    os << "lookahead-forced: " << lookahead_forced << "\n";
    for (auto& [k, v] : rules_fired) os << "rule-" << k << ": " << v << "\n";
    if (!unknown_reason.empty()) os << "unknown-reason: " << unknown_reason << "\n";
    os << "wall-ms: " << static_cast<int64_t>(wall_ms) << "\n";
    return os.str();
  }
};

enum class VerdictKind : uint8_t { Sat, Unsat, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Model> model;
  std::string reason;
};

// The Nielsen graph engine: builds simplified nodes, expands them by the
// highest-priority action (power introduction, forced steps, equality
// decomposition, then generic branching) and searches with iterative
// deepening where shrinking successors stay at the parent's depth.
class Solver {
public:
  Solver(SymbolPool& pool, std::set<Chr> alphabet, SolverConfig cfg = {})
      : pool_(pool), printer_(pool), alphabet_(std::move(alphabet)), cfg_(cfg) {}

  Verdict solve(const std::vector<Equation>& input) {
    start_ = std::chrono::steady_clock::now();
    input_ = input;
    stats_ = {};
    nodes_.clear();
    canon_.clear();
    edges_.clear();
    sat_node_ = -1;

    std::vector<Equation> eqs = input;
    IntStore ints(cfg_.int_limits);
    int root = make_node(std::move(eqs), std::move(ints), -1, Substitution{}, "", 0);
    Verdict v = run(root);
    stats_.wall_ms = elapsed_ms();
    return v;
  }

  const SolverStats& stats() const { return stats_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Printer& printer() const { return printer_; }

  // Rule applications available at a node, before priority selection.
  std::vector<RuleApplication> table_candidates(const Node& n) {
    std::vector<RuleApplication> apps;
    bool power_gate = detect_chain(n.eqs, cfg_.max_chain).has_value();
    for (size_t i = 0; i < n.eqs.size(); i++)
      for (Orient o : {Orient::AsIs, Orient::Swapped, Orient::Rev, Orient::SwappedRev})
        if (auto a = match_orient(i, n.eqs[i], o, n.ints, pool_, power_gate, &printer_))
          apps.push_back(std::move(*a));
    return apps;
  }

  std::string dot() const {
    std::ostringstream os;
    os << "digraph nielsen {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < nodes_.size(); i++) {
      const Node& n = nodes_[i];
      std::string label;
      for (auto& e : n.eqs) label += escape(printer_.equation(e)) + "\\n";
      if (n.eqs.empty()) label += "(no equations)\\n";
      size_t shown = 0;
      for (auto& c : n.ints.constraints()) {
        if (shown++ >= 6) {
          label += "...\\n";
          break;
        }
        label += escape(printer_.constraint(c)) + "\\n";
      }
      const char* color = n.status == Status::Satisfied     ? "green"
                          : n.status == Status::Inconsistent ? "red"
                          : n.status == Status::Stuck        ? "orange"
                                                             : "black";
      os << "  n" << i << " [label=\"" << label << "\", color=" << color << "];\n";
    }
    for (auto& [from, to, label] : edges_)
      os << "  n" << from << " -> n" << to << " [label=\"" << escape(label) << "\"];\n";
    os << "}\n";
    return os.str();
  }

private:
  struct Action {
    std::string kind;
    size_t eq_index = static_cast<size_t>(-1);
    std::vector<Branch> branches;
  };

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }
  bool out_of_time() const { return elapsed_ms() > cfg_.timeout_sec * 1000.0; }

  // --- node construction ------------------------------------------------------

  bool parikh_refuted(const Equation& e) {
    auto it = parikh_memo_.find(e);
    if (it != parikh_memo_.end()) return it->second;
    bool refuted = unsat_filter(e, cfg_.max_pattern_len).has_value();
    parikh_memo_.emplace(e, refuted);
    return refuted;
  }

  Status simpl(std::vector<Equation>& eqs, IntStore& ints) {
    for (int pass = 0; pass < 64; pass++) {
      bool changed = false;
      size_t before = ints.constraints().size();
      for (auto& c : lemma_constraints(eqs)) ints.add(c);
      if (ints.marked_false()) return Status::Inconsistent;
      if (ints.constraints().size() != before) changed = true;

      for (auto& eq : eqs) {
        std::vector<IntConstraint> added;
        DetResult r = det_simplify(eq, ints, added);
        for (auto& c : added)
          if (!ints.add(c)) return Status::Inconsistent;
        if (r == DetResult::Conflict) return Status::Inconsistent;
        if (r == DetResult::Changed) changed = true;
      }
      size_t n0 = eqs.size();
      eqs.erase(std::remove_if(eqs.begin(), eqs.end(),
                               [](const Equation& e) { return e.trivial(); }),
                eqs.end());
      if (eqs.size() != n0) changed = true;

      for (auto& eq : eqs)
        if (parikh_refuted(eq)) {
          stats_.parikh_refutations++;
          return Status::Inconsistent;
        }
      if (!changed) break;
    }
    SatAnswer sat = ints.satisfiable();
    if (sat == SatAnswer::Unsat) return Status::Inconsistent;
    if (eqs.empty())
      return sat == SatAnswer::Sat ? Status::Satisfied : Status::Stuck;
    return Status::Unextended;
  }

  std::string canonical_key(const std::vector<Equation>& eqs, const IntStore& ints) const {
    std::map<uint32_t, int> vmap, smap, imap;
    auto vid = [&](uint32_t v) {
      auto [it, fresh] = vmap.emplace(v, static_cast<int>(vmap.size()));
      return it->second;
    };
    auto sid = [&](uint32_t v) {
      auto [it, fresh] = smap.emplace(v, static_cast<int>(smap.size()));
      return it->second;
    };
    auto iid = [&](uint32_t v) {
      auto [it, fresh] = imap.emplace(v, static_cast<int>(imap.size()));
      return it->second;
    };
    // first pass assigns ids in occurrence order
    std::function<void(const StringTerm&)> walk_term;
    std::function<void(const IntPoly&)> walk_poly = [&](const IntPoly& p) {
      for (auto& [m, c] : p.terms())
        for (auto& a : m) {
          if (a.kind == IntAtom::Kind::Len)
            vid(a.id);
          else
            iid(a.id);
        }
    };
    walk_term = [&](const StringTerm& t) {
      for (auto& tok : t) {
        switch (tok.kind()) {
          case Token::Kind::Var: vid(tok.var_id().v); break;
          case Token::Kind::Sym: sid(tok.sym_id().v); break;
          case Token::Kind::Pow:
            walk_term(tok.base());
            walk_poly(tok.exp());
            break;
          default: break;
        }
      }
    };
    for (auto& e : eqs) {
      walk_term(e.lhs);
      walk_term(e.rhs);
    }
    for (auto& c : ints.constraints()) walk_poly(c.poly());

    // second pass serializes with canonical ids
    std::function<std::string(const IntPoly&)> ser_poly = [&](const IntPoly& p) {
      std::vector<std::string> monos;
      for (auto& [m, c] : p.terms()) {
        std::string t = std::to_string(c) + "*";
        std::vector<std::string> atoms;
        for (auto& a : m)
          atoms.push_back(a.kind == IntAtom::Kind::Len ? "l" + std::to_string(vid(a.id))
                                                       : "i" + std::to_string(iid(a.id)));
        std::sort(atoms.begin(), atoms.end());
        for (auto& s : atoms) t += s;
        monos.push_back(std::move(t));
      }
      std::sort(monos.begin(), monos.end());
      std::string out;
      for (auto& m : monos) out += m + "+";
      return out;
    };
    std::function<std::string(const StringTerm&)> ser_term = [&](const StringTerm& t) {
      std::string out;
      for (auto& tok : t) {
        switch (tok.kind()) {
          case Token::Kind::Chr: out += "c" + std::to_string(tok.chr_val()); break;
          case Token::Kind::Var: out += "v" + std::to_string(vid(tok.var_id().v)); break;
          case Token::Kind::Sym: out += "s" + std::to_string(sid(tok.sym_id().v)); break;
          case Token::Kind::Pow:
            out += "(" + ser_term(tok.base()) + ")^(" + ser_poly(tok.exp()) + ")";
            break;
        }
        out += ".";
      }
      return out;
    };
    std::vector<std::string> eq_strs;
    for (auto& e : eqs) eq_strs.push_back(ser_term(e.lhs) + "=" + ser_term(e.rhs));
    std::sort(eq_strs.begin(), eq_strs.end());
    std::vector<std::string> c_strs;
    for (auto& c : ints.constraints())
      c_strs.push_back(ser_poly(c.poly()) +
                       (c.form() == IntConstraint::Form::Eq0 ? "=0" : ">=0"));
    std::sort(c_strs.begin(), c_strs.end());
    std::string key;
    for (auto& s : eq_strs) key += s + ";";
    key += "|";
    for (auto& s : c_strs) key += s + ";";
    return key;
  }

  int make_node(std::vector<Equation> eqs, IntStore ints, int parent, Substitution subst,
                std::string label, int depth_cost) {
    Status st = simpl(eqs, ints);
    if (cfg_.dedup && st == Status::Unextended) {
      std::string key = canonical_key(eqs, ints);
      auto it = canon_.find(key);
      if (it != canon_.end()) {
        int id = it->second;
        if (parent >= 0) {
          nodes_[parent].children.push_back(id);
          nodes_[id].parents.push_back(parent);
          edges_.push_back({parent, id, label});
          if (depth_cost < nodes_[id].depth_cost) nodes_[id].depth_cost = depth_cost;
        }
        return id;
      }
      canon_.emplace(std::move(key), static_cast<int>(nodes_.size()));
    }
    Node n;
    n.eqs = std::move(eqs);
    n.ints = std::move(ints);
    n.status = st;
    n.tree_parent = parent;
    n.in_subst = std::move(subst);
    n.in_label = label;
    n.depth_cost = depth_cost;
    size_t toks = 0;
    for (auto& e : n.eqs) toks += e.token_count();
    n.token_total = toks;
    int id = static_cast<int>(nodes_.size());
    if (parent >= 0) {
      n.parents.push_back(parent);
      nodes_[parent].children.push_back(id);
      edges_.push_back({parent, id, label});
    }
    nodes_.push_back(std::move(n));
    stats_.nodes_created++;
    if (st == Status::Satisfied && sat_node_ < 0) sat_node_ = id;
    return id;
  }

  void mark_inconsistent(int id) {
    if (nodes_[id].status == Status::Inconsistent) return;
    nodes_[id].status = Status::Inconsistent;
    for (int p : nodes_[id].parents) {
      if (nodes_[p].status != Status::Extended) continue;
      bool all_dead = true;
      for (int c : nodes_[p].children)
        if (nodes_[c].status != Status::Inconsistent) all_dead = false;
      if (all_dead) mark_inconsistent(p);
    }
  }

  // --- expansion ---------------------------------------------------------------

  std::optional<Action> select_action(Node& n) {
    if (auto chain = detect_chain(n.eqs, cfg_.max_chain)) {
      Action a;
      a.kind = "power-introduction";
      a.eq_index = chain->edges[0].eq_index;
      a.branches = introduce_powers(*chain, n.ints, pool_, &printer_);
      return a;
    }
    if (auto app = lookahead_power_zero(n.eqs, n.ints, &printer_)) {
      stats_.lookahead_forced++;
      return action_of(*app, "lookahead-exponent-zero");
    }
    std::vector<RuleApplication> apps;
    for (size_t i = 0; i < n.eqs.size(); i++)
      if (auto g = match_rule(i, n.eqs[i], n.ints, pool_, false, &printer_))
        apps.push_back(std::move(*g));
    std::optional<RuleApplication> best;
    for (auto& app : apps) {
      RuleApplication s = look_ahead(app, n.eqs, n.ints, pool_, &printer_);
      if (!best || app_better(s, *best)) best = std::move(s);
    }
    if (best && (best->conflict || best->branches.size() <= 1)) {
      if (best->branches.size() == 1 &&
          (best->cls == RuleClass::Eliminating || best->cls == RuleClass::Forced) &&
          (best->rule == 8 || best->rule == 10))
        stats_.lookahead_forced++;
      return action_of(*best, rule_kind(*best));
    }
    for (size_t i = 0; i < n.eqs.size(); i++) {
      if (auto split = find_split(n.eqs[i], n.ints)) {
        Action a;
        a.kind = "decompose";
        a.eq_index = i;
        a.branches = {make_decomposition(n.eqs[i], *split, pool_, &printer_)};
        stats_.decompositions++;
        return a;
      }
    }
    if (best) return action_of(*best, rule_kind(*best));
    return std::nullopt;
  }

  static std::string rule_kind(const RuleApplication& app) {
    return "table-" + std::to_string(app.rule);
  }

  Action action_of(const RuleApplication& app, std::string kind) {
    Action a;
    a.kind = std::move(kind);
    a.eq_index = app.eq_index;
    a.branches = app.branches;
    if (app.conflict) a.branches.clear();
    return a;
  }

  void expand(int id) {
    Node& n = nodes_[id];
    auto act = select_action(n);
    n.status = Status::Extended;
    stats_.nodes_expanded++;
    if (!act) {
      n.status = Status::Stuck;
      if (stats_.unknown_reason.empty()) stats_.unknown_reason = "stuck";
      return;
    }
    stats_.rules_fired[act->kind]++;
    if (act->kind == "power-introduction") stats_.powers_introduced++;
    if (act->branches.empty()) {
      mark_inconsistent(id);
      return;
    }
    size_t parent_tokens = nodes_[id].token_total;
    int parent_cost = nodes_[id].depth_cost;
    std::vector<int> kids;
    for (auto& b : act->branches) {
      std::vector<Equation> eqs;
      eqs.reserve(nodes_[id].eqs.size() + 2);
      for (size_t i = 0; i < nodes_[id].eqs.size(); i++) {
        if (b.replace_eq && i == act->eq_index) {
          for (auto& r : *b.replace_eq) eqs.push_back(b.subst.apply(r));
        } else {
          eqs.push_back(b.subst.apply(nodes_[id].eqs[i]));
        }
      }
      for (auto& e : b.add_eqs) eqs.push_back(b.subst.apply(e));
      IntStore ints = nodes_[id].ints.substituted(b.subst);
      for (auto& c : b.add_ints) ints.add(b.subst.apply(c));
      size_t child_tokens = 0;
      for (auto& e : eqs) child_tokens += e.token_count();
      int cost = parent_cost + (child_tokens < parent_tokens ? 0 : 1);
      int kid = make_node(std::move(eqs), std::move(ints), id, b.subst, b.label, cost);
      kids.push_back(kid);
    }
    bool any_live = false;
    for (int k : kids)
      if (nodes_[k].status != Status::Inconsistent) any_live = true;
    if (!any_live) mark_inconsistent(id);
  }

  // --- search loop --------------------------------------------------------------

  Verdict run(int root) {
    if (nodes_[root].status == Status::Inconsistent) return {VerdictKind::Unsat, {}, ""};
    if (nodes_[root].status == Status::Satisfied) return finish_sat(root);
    if (nodes_[root].status == Status::Stuck)
      return {VerdictKind::Unknown, {}, "integer reasoning incomplete"};

    int depth_limit = cfg_.initial_depth;
    std::deque<int> work{root};
    std::vector<int> parked;
    for (;;) {
      while (!work.empty()) {
        if (out_of_time()) return {VerdictKind::Unknown, {}, "timeout"};
        if (cfg_.max_expansions > 0 && stats_.nodes_expanded >= cfg_.max_expansions)
          return {VerdictKind::Unknown, {}, "step budget"};
        int id;
        if (cfg_.strategy == Strategy::Bfs) {
          id = work.front();
          work.pop_front();
        } else {
          id = work.back();
          work.pop_back();
        }
        if (nodes_[id].status != Status::Unextended) continue;
        if (cfg_.strategy == Strategy::IterDeep && nodes_[id].depth_cost > depth_limit) {
          parked.push_back(id);
          continue;
        }
        expand(id);
        if (sat_node_ >= 0) return finish_sat(sat_node_);
        if (nodes_[root].status == Status::Inconsistent) return {VerdictKind::Unsat, {}, ""};
        // newly created children were appended to nodes_; schedule them
        const auto& kids = nodes_[id].children;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
          if (nodes_[*it].status == Status::Unextended) work.push_back(*it);
      }
      if (parked.empty()) break;
      if (depth_limit > cfg_.max_depth) return {VerdictKind::Unknown, {}, "depth budget"};
      depth_limit *= 2;
      std::sort(parked.begin(), parked.end());
      parked.erase(std::unique(parked.begin(), parked.end()), parked.end());
      for (int id : parked) work.push_back(id);
      parked.clear();
    }
    for (auto& n : nodes_)
      if (n.status == Status::Stuck)
        return {VerdictKind::Unknown, {}, stats_.unknown_reason.empty() ? "stuck"
                                                                        : stats_.unknown_reason};
    // Exhaustion proves unsatisfiability only when the live part of the
    // graph is acyclic: a live cycle is an infinite path that could still
    // carry models.
    if (live_cycle(root)) return {VerdictKind::Unknown, {}, "cyclic proof residue"};
    return {VerdictKind::Unsat, {}, ""};
  }

  bool live_cycle(int root) const {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::vector<uint8_t> color(nodes_.size(), 0);
    std::vector<std::pair<int, size_t>> st;
    if (nodes_[root].status == Status::Inconsistent) return false;
    st.push_back({root, 0});
    color[root] = 1;
    while (!st.empty()) {
      int id = st.back().first;
      size_t nx = st.back().second;
      if (nx < nodes_[id].children.size()) {
        st.back().second++;
        int k = nodes_[id].children[nx];
        if (nodes_[k].status == Status::Inconsistent) continue;
        if (color[k] == 1) return true;
        if (color[k] == 0) {
          color[k] = 1;
          st.push_back({k, 0});
        }
      } else {
        color[id] = 2;
        st.pop_back();
      }
    }
    return false;
  }

  Verdict finish_sat(int sat_id) {
    auto model = extract_model(sat_id);
    if (!model) {
      assert(false && "model verification failed");
      nodes_[sat_id].status = Status::Stuck;
      stats_.unknown_reason = "model verification failed";
      return {VerdictKind::Unknown, {}, "model verification failed"};
    }
    return {VerdictKind::Sat, std::move(*model), ""};
  }

  Chr least_char() const { return alphabet_.empty() ? static_cast<Chr>('a') : *alphabet_.begin(); }

  std::optional<Model> extract_model(int sat_id) {
    std::vector<int> path;
    for (int k = sat_id; k != -1; k = nodes_[k].tree_parent) path.push_back(k);
    std::reverse(path.begin(), path.end());

    Model m;
    nodes_[sat_id].ints.satisfiable(&m);

    std::set<VarId> input_vars;
    std::set<SymId> input_syms;
    for (auto& e : input_)
      for (auto* side : {&e.lhs, &e.rhs})
        for (auto& t : *side) {
          if (t.is_var()) input_vars.insert(t.var_id());
          if (t.is_sym()) input_syms.insert(t.sym_id());
        }

    for (VarId x : input_vars) {
      StringTerm img{Token::var(x)};
      for (size_t i = 1; i < path.size(); i++) img = nodes_[path[i]].in_subst.apply(img);
      std::vector<Chr> word;
      if (!concretize(img, m, word)) return std::nullopt;
      m.vars[x] = std::move(word);
    }
    for (SymId o : input_syms) m.syms[o] = least_char();
    if (!verify_model(input_, m)) return std::nullopt;
    return m;
  }

  // Residual variables take the length the integer model assigns to them,
  // filled with the least alphabet character; residual symbolic characters
  // become the least character; powers unwind under the integer model.
  bool concretize(const StringTerm& u, const Model& m, std::vector<Chr>& out) const {
    for (auto& t : u) {
      switch (t.kind()) {
        case Token::Kind::Chr: out.push_back(t.chr_val()); break;
        case Token::Kind::Sym: out.push_back(least_char()); break;
        case Token::Kind::Var: {
          auto it = m.ints.find(IntPoly::atom_key(IntAtom::len(t.var_id())));
          int64_t len = it == m.ints.end() ? 0 : it->second;
          for (int64_t i = 0; i < len; i++) out.push_back(least_char());
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
          if (!concretize(t.base(), m, body)) return false;
          for (int64_t i = 0; i < e; i++) {
            out.insert(out.end(), body.begin(), body.end());
            if (out.size() > (1u << 22)) return false;
          }
          break;
        }
      }
    }
    return true;
  }

  SymbolPool& pool_;
  Printer printer_;
  std::set<Chr> alphabet_;
  SolverConfig cfg_;
  SolverStats stats_;
  std::vector<Equation> input_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> canon_;
  std::vector<std::tuple<int, int, std::string>> edges_;
  int sat_node_ = -1;
  std::chrono::steady_clock::time_point start_;

  struct EqHash {
    size_t operator()(const Equation& e) const { return e.hash(); }
  };
  std::unordered_map<Equation, bool, EqHash> parikh_memo_;
};

}  // namespace wordeq
