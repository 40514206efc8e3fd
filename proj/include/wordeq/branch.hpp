#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordeq/subst.hpp"

namespace wordeq {

// The four ways a rule can read an equation. Reversed orientations match on
// the last tokens; substitution images built there are reversed back.
enum class Orient : uint8_t { AsIs, Swapped, Rev, SwappedRev };

inline bool orient_reversed(Orient o) { return o == Orient::Rev || o == Orient::SwappedRev; }
inline bool orient_swapped(Orient o) { return o == Orient::Swapped || o == Orient::SwappedRev; }

// Oriented view (left, right) of an equation.
inline std::pair<StringTerm, StringTerm> oriented(const Equation& e, Orient o) {
  StringTerm l = orient_swapped(o) ? e.rhs : e.lhs;
  StringTerm r = orient_swapped(o) ? e.lhs : e.rhs;
  if (orient_reversed(o)) {
    l = reverse(l);
    r = reverse(r);
  }
  return {std::move(l), std::move(r)};
}

// Maps an equation built in the oriented world back to node coordinates.
inline Equation unorient(const StringTerm& l, const StringTerm& r, Orient o) {
  StringTerm a = l, b = r;
  if (orient_reversed(o)) {
    a = reverse(a);
    b = reverse(b);
  }
  if (orient_swapped(o)) std::swap(a, b);
  return {a, b};
}

// One successor description: a substitution applied to the whole node plus
// added integer constraints, added string equations, and optionally a
// replacement for the equation the rule fired on.
struct Branch {
  Substitution subst;
  std::vector<IntConstraint> add_ints;
  std::vector<Equation> add_eqs;
  std::optional<std::vector<Equation>> replace_eq;
  std::string label;
};

}  // namespace wordeq
