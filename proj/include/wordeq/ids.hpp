#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wordeq {

// Strongly typed identifiers for the three symbol spaces. A string variable
// stands for an unknown word, a symbolic character for exactly one unknown
// alphabet character, and an integer variable for an exponent value.
struct VarId {
  uint32_t v = 0;
  auto operator<=>(const VarId&) const = default;
};
struct SymId {
  uint32_t v = 0;
  auto operator<=>(const SymId&) const = default;
};
struct IntVarId {
  uint32_t v = 0;
  auto operator<=>(const IntVarId&) const = default;
};

// Concrete characters are code points; anything the parser reads that is not
// a plain character is mapped to an opaque code point.
using Chr = char32_t;

// Name table for one solver instance. Fresh names use a '!' suffix so they
// can never collide with parsed SMT-LIB simple symbols.
class SymbolPool {
public:
  VarId var(const std::string& name) { return VarId{intern(vars_, var_ix_, name)}; }
  SymId sym(const std::string& name) { return SymId{intern(syms_, sym_ix_, name)}; }
  IntVarId ivar(const std::string& name) { return IntVarId{intern(ints_, int_ix_, name)}; }

  VarId fresh_var(const std::string& base) { return var(fresh_name(var_ix_, base)); }
  SymId fresh_sym(const std::string& base) { return sym(fresh_name(sym_ix_, base)); }
  IntVarId fresh_ivar(const std::string& base) { return ivar(fresh_name(int_ix_, base)); }

  const std::string& name(VarId id) const { return vars_[id.v]; }
  const std::string& name(SymId id) const { return syms_[id.v]; }
  const std::string& name(IntVarId id) const { return ints_[id.v]; }

  bool has_var(const std::string& name) const { return var_ix_.count(name) > 0; }
  size_t num_vars() const { return vars_.size(); }

private:
  using Index = std::unordered_map<std::string, uint32_t>;

  static uint32_t intern(std::vector<std::string>& tab, Index& ix, const std::string& name) {
    auto it = ix.find(name);
    if (it != ix.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(tab.size());
    tab.push_back(name);
    ix.emplace(name, id);
    return id;
  }

  std::string fresh_name(const Index& ix, const std::string& base) {
    std::string stem = base.substr(0, base.find('!'));
    for (;;) {
      std::string cand = stem + "!" + std::to_string(fresh_counter_++);
      if (ix.find(cand) == ix.end()) return cand;
    }
  }

  std::vector<std::string> vars_, syms_, ints_;
  Index var_ix_, sym_ix_, int_ix_;
  uint64_t fresh_counter_ = 0;
};

inline void hash_mix(size_t& h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

}  // namespace wordeq

template <>
struct std::hash<wordeq::VarId> {
  size_t operator()(wordeq::VarId id) const { return std::hash<uint32_t>()(id.v); }
};
template <>
struct std::hash<wordeq::SymId> {
  size_t operator()(wordeq::SymId id) const { return std::hash<uint32_t>()(id.v) * 0x9e3779b9u; }
};
template <>
struct std::hash<wordeq::IntVarId> {
  size_t operator()(wordeq::IntVarId id) const { return std::hash<uint32_t>()(id.v) * 0x85ebca6bu; }
};
