#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/subst.hpp"
#include "wordeq/term.hpp"

namespace wordeq {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at " + std::to_string(l) + ":" + std::to_string(c)),
        line(l),
        col(c) {}
};

struct UnsupportedError : std::runtime_error {
  std::string feature;
  explicit UnsupportedError(const std::string& f)
      : std::runtime_error("unsupported feature: " + f), feature(f) {}
};

// A parsed problem: declared string variables, asserted equations, and the
// alphabet (input characters plus one fresh witness character, so that
// unsatisfiability never follows from alphabet exhaustion alone).
struct Problem {
  SymbolPool pool;
  std::vector<VarId> declared;
  std::vector<Equation> assertions;
  std::set<Chr> alphabet;
  std::string logic;
  std::string source;
  bool has_check_sat = false;
  bool wants_model = false;
};

namespace smt2 {

struct Sexp {
  // atom when children empty and !list
  std::string atom;
  bool is_string = false;  // atom was a string literal (already unescaped to code points)
  std::vector<Chr> chars;  // literal contents
  bool list = false;
  std::vector<Sexp> children;
  int line = 1, col = 1;
};

class Lexer {
public:
  Lexer(std::string_view text) : s_(text) {}

  std::optional<Sexp> next() {
    skip_ws();
    if (pos_ >= s_.size()) return std::nullopt;
    return read();
  }

private:
  void error(const std::string& m) const { throw ParseError(m, line_, col_); }

  void advance() {
    if (s_[pos_] == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    pos_++;
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Sexp read() {
    Sexp e;
    e.line = line_;
    e.col = col_;
    char c = s_[pos_];
    if (c == '(') {
      advance();
      e.list = true;
      for (;;) {
        skip_ws();
        if (pos_ >= s_.size()) error("unterminated list");
        if (s_[pos_] == ')') {
          advance();
          return e;
        }
        e.children.push_back(read());
      }
    }
    if (c == ')') error("unexpected ')'");
    if (c == '"') {
      advance();
      e.is_string = true;
      while (pos_ < s_.size()) {
        char d = s_[pos_];
        if (d == '"') {
          advance();
          if (pos_ < s_.size() && s_[pos_] == '"') {  // doubled quote
            e.chars.push_back('"');
            advance();
            continue;
          }
          return e;
        }
        if (d == '\\' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'u') {
          size_t save = pos_;
          advance();
          advance();
          uint32_t cp = 0;
          bool ok = false;
          if (pos_ < s_.size() && s_[pos_] == '{') {
            advance();
            int digits = 0;
            while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) {
              cp = cp * 16 + hex(s_[pos_]);
              advance();
              digits++;
            }
            if (pos_ < s_.size() && s_[pos_] == '}' && digits > 0) {
              advance();
              ok = true;
            }
          } else {
            int digits = 0;
            while (digits < 4 && pos_ < s_.size() &&
                   std::isxdigit(static_cast<unsigned char>(s_[pos_]))) {
              cp = cp * 16 + hex(s_[pos_]);
              advance();
              digits++;
            }
            ok = digits == 4;
          }
          if (ok) {
            e.chars.push_back(static_cast<Chr>(cp));
            continue;
          }
          // not an escape after all; emit the raw backslash
          pos_ = save;
          e.chars.push_back(static_cast<Chr>(static_cast<unsigned char>(s_[pos_])));
          advance();
          continue;
        }
        e.chars.push_back(static_cast<Chr>(static_cast<unsigned char>(d)));
        advance();
      }
      error("unterminated string literal");
    }
    if (c == '|') {
      advance();
      while (pos_ < s_.size() && s_[pos_] != '|') {
        e.atom += s_[pos_];
        advance();
      }
      if (pos_ >= s_.size()) error("unterminated quoted symbol");
      advance();
      return e;
    }
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')' && s_[pos_] != ';') {
      e.atom += s_[pos_];
      advance();
    }
    if (e.atom.empty()) error("empty token");
    return e;
  }

  static uint32_t hex(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return c - 'A' + 10;
  }

  std::string_view s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

inline StringTerm parse_term(const Sexp& e, Problem& p) {
  StringTerm out;
  if (!e.list) {
    if (e.is_string) {
      for (Chr c : e.chars) {
        out.push_back(Token::chr(c));
        p.alphabet.insert(c);
      }
      return out;
    }
    if (!p.pool.has_var(e.atom))
      throw ParseError("undeclared constant '" + e.atom + "'", e.line, e.col);
    out.push_back(Token::var(p.pool.var(e.atom)));
    return out;
  }
  if (e.children.empty()) throw ParseError("empty application", e.line, e.col);
  const std::string& head = e.children[0].atom;
  if (head == "str.++") {
    for (size_t i = 1; i < e.children.size(); i++) out.append(parse_term(e.children[i], p));
    return out;
  }
  throw UnsupportedError(head.empty() ? "nested application" : head);
}

}  // namespace smt2

inline Problem parse_smt2(std::string_view text, std::string source = "<input>") {
  Problem p;
  p.source = std::move(source);
  smt2::Lexer lex(text);
  while (auto cmd = lex.next()) {
    if (!cmd->list || cmd->children.empty() || cmd->children[0].list)
      throw ParseError("expected a command", cmd->line, cmd->col);
    const std::string& head = cmd->children[0].atom;
    auto arity = [&](size_t n) {
      if (cmd->children.size() != n + 1)
        throw ParseError("wrong arity for " + head, cmd->line, cmd->col);
    };
    if (head == "set-logic") {
      arity(1);
      p.logic = cmd->children[1].atom;
      if (p.logic != "QF_S" && p.logic != "QF_SLIA") throw UnsupportedError("logic " + p.logic);
    } else if (head == "set-info" || head == "set-option") {
      // ignored
    } else if (head == "declare-fun" || head == "declare-const") {
      const bool is_fun = head == "declare-fun";
      arity(is_fun ? 3 : 2);
      const smt2::Sexp& name = cmd->children[1];
      if (name.list || name.is_string)
        throw ParseError("expected a symbol", name.line, name.col);
      const smt2::Sexp& sort = cmd->children[is_fun ? 3 : 2];
      if (is_fun) {
        const smt2::Sexp& args = cmd->children[2];
        if (!args.list || !args.children.empty())
          throw UnsupportedError("non-constant function declaration");
      }
      if (sort.list || sort.atom != "String") throw UnsupportedError("sort " + sort.atom);
      if (p.pool.has_var(name.atom))
        throw ParseError("duplicate declaration '" + name.atom + "'", name.line, name.col);
      p.declared.push_back(p.pool.var(name.atom));
    } else if (head == "assert") {
      arity(1);
      const smt2::Sexp& body = cmd->children[1];
      if (!body.list || body.children.size() != 3 || body.children[0].atom != "=")
        throw UnsupportedError(body.list && !body.children.empty() ? body.children[0].atom
                                                                   : "non-equation assertion");
      Equation eq{smt2::parse_term(body.children[1], p), smt2::parse_term(body.children[2], p)};
      p.assertions.push_back(std::move(eq));
    } else if (head == "check-sat") {
      p.has_check_sat = true;
    } else if (head == "get-model") {
      p.wants_model = true;
    } else if (head == "exit") {
      break;
    } else {
      throw UnsupportedError(head);
    }
  }
  // witness character outside the input alphabet
  Chr witness = 'a';
  while (p.alphabet.count(witness)) witness++;
  p.alphabet.insert(witness);
  return p;
}

// --- printing -----------------------------------------------------------------

inline std::string smt2_quote_literal(const std::vector<Chr>& w) {
  std::string out = "\"";
  for (Chr c : w) {
    if (c == '"')
      out += "\"\"";
    else if (c >= 0x20 && c < 0x7f)
      out += static_cast<char>(c);
    else {
      std::ostringstream os;
      os << "\\u{" << std::hex << static_cast<uint32_t>(c) << "}";
      out += os.str();
    }
  }
  return out + "\"";
}

inline std::string smt2_term(const StringTerm& t, const SymbolPool& pool) {
  std::vector<std::string> parts;
  std::vector<Chr> run;
  auto flush = [&]() {
    if (!run.empty()) parts.push_back(smt2_quote_literal(run));
    run.clear();
  };
  for (auto& tok : t) {
    if (tok.is_chr()) {
      run.push_back(tok.chr_val());
    } else if (tok.is_var()) {
      flush();
      parts.push_back(pool.name(tok.var_id()));
    } else {
      flush();
      parts.push_back(pool.name(tok.sym_id()));  // only plain terms are printable
    }
  }
  flush();
  if (parts.empty()) return "\"\"";
  if (parts.size() == 1) return parts[0];
  std::string out = "(str.++";
  for (auto& s : parts) out += " " + s;
  return out + ")";
}

inline std::string print_problem(const Problem& p) {
  std::ostringstream os;
  os << "(set-logic " << (p.logic.empty() ? "QF_S" : p.logic) << ")\n";
  for (VarId v : p.declared) os << "(declare-fun " << p.pool.name(v) << " () String)\n";
  for (auto& e : p.assertions)
    os << "(assert (= " << smt2_term(e.lhs, p.pool) << " " << smt2_term(e.rhs, p.pool) << "))\n";
  os << "(check-sat)\n";
  if (p.wants_model) os << "(get-model)\n";
  return os.str();
}

inline std::string smt2_model(const Problem& p, const Model& m) {
  std::ostringstream os;
  os << "(\n";
  for (VarId v : p.declared) {
    auto it = m.vars.find(v);
    std::vector<Chr> w = it == m.vars.end() ? std::vector<Chr>{} : it->second;
    os << "  (define-fun " << p.pool.name(v) << " () String " << smt2_quote_literal(w) << ")\n";
  }
  os << ")\n";
  return os.str();
}

}  // namespace wordeq
