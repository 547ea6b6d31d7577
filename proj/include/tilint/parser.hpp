#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "tilint/formula.hpp"

// Concrete text grammar:
//   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
//   or := and ("|" and)* ; and := unary ("&" unary)* ;
//   unary := "~" unary | "forall" VAR "." formula | "exists" VAR "." formula
//          | atom | "(" formula ")" | "bot" ;
//   atom := NAME "(" VAR ("," VAR)* ")" | NAME .
// Identifiers are [A-Za-z_][A-Za-z0-9_]* followed by any number of primes,
// so Q', S'' are single names. "~" and "<->" are expanded while parsing.

namespace tilint {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_ws();
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_imp();
    while (try_consume("<->")) f = Formula::iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (try_consume("->")) return Formula::implies(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (try_consume("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (try_consume("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (try_consume("~")) return Formula::neg(parse_unary());
    if (try_consume("(")) {
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    const int line = line_, col = column();
    std::string name = parse_name();
    if (name == "bot") return Formula::bottom();
    if (name == "forall" || name == "exists") {
      std::string v = parse_name();
      if (v.empty() || is_keyword(v)) fail("expected variable after quantifier");
      expect(".");
      Formula body = parse_iff();
      return name == "forall" ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    if (name.empty()) fail("expected formula");
    std::vector<std::string> args;
    if (try_consume("(")) {
      do {
        std::string v = parse_name();
        if (v.empty() || is_keyword(v)) fail("expected variable in argument list");
        args.push_back(std::move(v));
      } while (try_consume(","));
      expect(")");
    }
    auto [it, fresh] = arities_.emplace(name, args.size());
    if (!fresh && it->second != args.size())
      throw ParseError("letter '" + name + "' used with arity " + std::to_string(args.size()) +
                           " but earlier with " + std::to_string(it->second),
                       line, col);
    return Formula::atom(std::move(name), std::move(args));
  }

  static bool is_keyword(const std::string& s) { return s == "forall" || s == "exists" || s == "bot"; }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool try_consume(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!try_consume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

}  // namespace tilint
