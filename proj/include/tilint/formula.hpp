#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Intuitionistic predicate formulas: bot, &, |, ->, forall, exists.
// Negation and <-> are surface sugar only; they never appear in the tree.

namespace tilint {

enum class Conn { Bottom, Atom, And, Or, Implies, Forall, Exists };

class Formula {
 public:
  Formula() : node_(bottom().node_) {}

  static Formula bottom() {
    static const std::shared_ptr<const Node> bot = std::make_shared<Node>(Node{Conn::Bottom, {}, {}, {}, {}});
    return Formula(bot);
  }

  static Formula atom(std::string letter, std::vector<std::string> args = {}) {
    if (letter.empty()) throw std::invalid_argument("atom: empty letter");
    return make(Conn::Atom, std::move(letter), std::move(args), {}, {});
  }

  static Formula conj(Formula a, Formula b) { return make(Conn::And, {}, {}, a.node_, b.node_); }
  static Formula disj(Formula a, Formula b) { return make(Conn::Or, {}, {}, a.node_, b.node_); }
  static Formula implies(Formula a, Formula b) { return make(Conn::Implies, {}, {}, a.node_, b.node_); }

  static Formula forall(std::string var, Formula body) {
    return make(Conn::Forall, std::move(var), {}, body.node_, {});
  }
  static Formula exists(std::string var, Formula body) {
    return make(Conn::Exists, std::move(var), {}, body.node_, {});
  }

  // Sugar; expanded on construction.
  static Formula neg(Formula a) { return implies(std::move(a), bottom()); }
  static Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

  Conn kind() const { return node_->kind; }
  const std::string& letter() const { return node_->name; }          // Atom
  const std::vector<std::string>& args() const { return node_->args; }  // Atom
  const std::string& var() const { return node_->name; }             // Forall/Exists
  Formula body() const { return Formula(node_->left); }              // Forall/Exists
  Formula lhs() const { return Formula(node_->left); }               // And/Or/Implies
  Formula rhs() const { return Formula(node_->right); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.name != y.name || x.args != y.args) return false;
    switch (x.kind) {
      case Conn::Bottom:
      case Conn::Atom:
        return true;
      case Conn::Forall:
      case Conn::Exists:
        return a.body() == b.body();
      default:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Conn kind;
    std::string name;
    std::vector<std::string> args;
    std::shared_ptr<const Node> left, right;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula make(Conn k, std::string name, std::vector<std::string> args,
                      std::shared_ptr<const Node> l, std::shared_ptr<const Node> r) {
    return Formula(std::make_shared<Node>(Node{k, std::move(name), std::move(args), std::move(l), std::move(r)}));
  }

  std::shared_ptr<const Node> node_;
};

// --- printer ------------------------------------------------------------

namespace detail {

inline void print_into(const Formula& f, std::string& out) {
  auto operand = [&out](const Formula& g) {
    // Quantifier bodies extend to the end of the enclosing formula, so a
    // quantifier used as an operand of a binary connective needs parentheses.
    if (g.kind() == Conn::Forall || g.kind() == Conn::Exists) {
      out += '(';
      print_into(g, out);
      out += ')';
    } else {
      print_into(g, out);
    }
  };
  switch (f.kind()) {
    case Conn::Bottom:
      out += "bot";
      break;
    case Conn::Atom:
      out += f.letter();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += f.args()[i];
        }
        out += ')';
      }
      break;
    case Conn::And:
    case Conn::Or:
    case Conn::Implies: {
      const char* op = f.kind() == Conn::And ? " & " : f.kind() == Conn::Or ? " | " : " -> ";
      out += '(';
      operand(f.lhs());
      out += op;
      operand(f.rhs());
      out += ')';
      break;
    }
    case Conn::Forall:
    case Conn::Exists:
      out += f.kind() == Conn::Forall ? "forall " : "exists ";
      out += f.var();
      out += ". ";
      print_into(f.body(), out);
      break;
  }
}

}  // namespace detail

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_into(f, out);
  return out;
}

// --- signature ----------------------------------------------------------

struct Signature {
  std::map<std::string, std::size_t> letters;  // letter -> arity
  std::vector<std::string> variables;          // in order of first occurrence
  bool two_variable() const { return variables.size() <= 2; }
  std::size_t count_with_arity(std::size_t n) const {
    std::size_t c = 0;
    for (const auto& [_, a] : letters) c += a == n;
    return c;
  }
};

namespace detail {

inline void collect_signature(const Formula& f, Signature& sig) {
  auto note_var = [&sig](const std::string& v) {
    for (const auto& seen : sig.variables)
      if (seen == v) return;
    sig.variables.push_back(v);
  };
  switch (f.kind()) {
    case Conn::Bottom:
      break;
    case Conn::Atom: {
      auto [it, fresh] = sig.letters.emplace(f.letter(), f.args().size());
      if (!fresh && it->second != f.args().size())
        throw std::invalid_argument("signature_of: letter '" + f.letter() + "' used with two arities");
      for (const auto& v : f.args()) note_var(v);
      break;
    }
    case Conn::Forall:
    case Conn::Exists:
      note_var(f.var());
      collect_signature(f.body(), sig);
      break;
    default:
      collect_signature(f.lhs(), sig);
      collect_signature(f.rhs(), sig);
      break;
  }
}

}  // namespace detail

inline Signature signature_of(const Formula& f) {
  Signature sig;
  detail::collect_signature(f, sig);
  return sig;
}

// --- positive transform ---------------------------------------------------

// Replaces every bot with "forall x. Q'(x)". The replacement is closed, so
// no capture can occur regardless of surrounding binders.
inline Formula to_positive(const Formula& f) {
  static const Formula substitute = Formula::forall("x", Formula::atom("Q'", {"x"}));
  switch (f.kind()) {
    case Conn::Bottom:
      return substitute;
    case Conn::Atom:
      return f;
    case Conn::Forall:
      return Formula::forall(f.var(), to_positive(f.body()));
    case Conn::Exists:
      return Formula::exists(f.var(), to_positive(f.body()));
    case Conn::And:
      return Formula::conj(to_positive(f.lhs()), to_positive(f.rhs()));
    case Conn::Or:
      return Formula::disj(to_positive(f.lhs()), to_positive(f.rhs()));
    case Conn::Implies:
      return Formula::implies(to_positive(f.lhs()), to_positive(f.rhs()));
  }
  throw std::logic_error("to_positive: unreachable");
}

namespace detail {

inline void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto is_in = [](const std::vector<std::string>& xs, const std::string& v) {
    for (const auto& x : xs)
      if (x == v) return true;
    return false;
  };
  switch (f.kind()) {
    case Conn::Bottom:
      break;
    case Conn::Atom:
      for (const auto& v : f.args())
        if (!is_in(bound, v) && !is_in(out, v)) out.push_back(v);
      break;
    case Conn::Forall:
    case Conn::Exists:
      bound.push_back(f.var());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      break;
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      break;
  }
}

}  // namespace detail

inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  detail::collect_free(f, bound, out);
  return out;
}

inline bool contains_bottom(const Formula& f) {
  switch (f.kind()) {
    case Conn::Bottom:
      return true;
    case Conn::Atom:
      return false;
    case Conn::Forall:
    case Conn::Exists:
      return contains_bottom(f.body());
    default:
      return contains_bottom(f.lhs()) || contains_bottom(f.rhs());
  }
}

}  // namespace tilint
