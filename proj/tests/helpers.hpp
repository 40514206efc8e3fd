#pragma once

#include <random>
#include <string>

#include "wordeq/oracle.hpp"
#include "wordeq/print.hpp"
#include "wordeq/solver.hpp"

namespace wordeq::test {

// Term builders shared by the suites.
inline StringTerm lit(const std::string& s) {
  StringTerm t;
  for (char c : s) t.push_back(Token::chr(static_cast<Chr>(static_cast<unsigned char>(c))));
  return t;
}

inline Token ch(char c) { return Token::chr(static_cast<Chr>(static_cast<unsigned char>(c))); }

struct Ctx {
  SymbolPool pool;
  Token var(const std::string& n) { return Token::var(pool.var(n)); }
  Token sym(const std::string& n) { return Token::sym(pool.sym(n)); }
  IntPoly ivar(const std::string& n) { return IntPoly::var(pool.ivar(n)); }
};

// Deterministic random plain equations for the property suites.
struct EqGen {
  std::mt19937 rng;
  std::vector<VarId> vars;
  std::vector<Chr> alphabet;

  EqGen(SymbolPool& pool, uint32_t seed, int n_vars = 3,
        std::vector<Chr> alpha = {'a', 'b'})
      : rng(seed), alphabet(std::move(alpha)) {
    for (int i = 0; i < n_vars; i++) vars.push_back(pool.var("v" + std::to_string(i)));
  }

  size_t pick(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }

  StringTerm term(size_t max_tokens, size_t max_run) {
    StringTerm t;
    size_t n = pick(max_tokens + 1);
    for (size_t i = 0; i < n; i++) {
      if (pick(2) == 0) {
        t.push_back(Token::var(vars[pick(vars.size())]));
      } else {
        size_t run = 1 + pick(max_run);
        for (size_t j = 0; j < run && t.size() < max_tokens * 2; j++)
          t.push_back(Token::chr(alphabet[pick(alphabet.size())]));
      }
    }
    return t;
  }

  Equation equation(size_t max_tokens = 5, size_t max_run = 4) {
    return {term(max_tokens, max_run), term(max_tokens, max_run)};
  }
};

inline std::string word_str(const std::vector<Chr>& w) {
  std::string s;
  for (Chr c : w) s += static_cast<char>(c);
  return s;
}

}  // namespace wordeq::test
