#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tilint/formula.hpp"

// Finite intuitionistic Kripke models with per-world domains, the structural
// validators (partial order, expanding domains, heredity), and the exact
// forcing relation. Worlds and individuals are dense integer indices.

namespace tilint {

struct Frame {
  int worlds = 0;
  std::vector<std::vector<bool>> rel;  // rel[u][v]  <=>  uRv

  static Frame chain(int n) {
    Frame f;
    f.worlds = n;
    f.rel.assign(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) f.rel[u][v] = true;
    return f;
  }

  bool sees(int u, int v) const { return rel[u][v]; }
};

struct PredicateData {
  std::size_t arity = 0;
  std::vector<std::set<std::vector<int>>> by_world;
};

struct KripkeModel {
  Frame frame;
  std::vector<std::vector<int>> domains;  // sorted members of D_w
  std::map<std::string, PredicateData> interp;

  // Linear (n)-chain with the constant domain {0..domain_size-1}.
  static KripkeModel chain_constant_domain(int worlds, int domain_size) {
    KripkeModel m;
    m.frame = Frame::chain(worlds);
    std::vector<int> all(domain_size);
    for (int d = 0; d < domain_size; ++d) all[d] = d;
    m.domains.assign(worlds, all);
    return m;
  }

  int global_size() const {
    int n = 0;
    for (const auto& d : domains)
      for (int a : d) n = std::max(n, a + 1);
    return n;
  }

  void declare(const std::string& letter, std::size_t arity) {
    auto [it, fresh] = interp.emplace(letter, PredicateData{arity, {}});
    if (!fresh && it->second.arity != arity)
      throw std::invalid_argument("letter '" + letter + "' redeclared with different arity");
    it->second.by_world.resize(frame.worlds);
  }

  void add_fact(int world, const std::string& letter, std::vector<int> tuple) {
    auto it = interp.find(letter);
    if (it == interp.end()) {
      declare(letter, tuple.size());
      it = interp.find(letter);
    }
    if (tuple.size() != it->second.arity)
      throw std::invalid_argument("fact arity mismatch for letter '" + letter + "'");
    it->second.by_world.at(world).insert(std::move(tuple));
  }

  bool has_fact(int world, const std::string& letter, const std::vector<int>& tuple) const {
    auto it = interp.find(letter);
    if (it == interp.end()) return false;
    return it->second.by_world.at(world).count(tuple) > 0;
  }

  // Union every world's facts into all R-successors.
  void close_hereditarily() {
    for (auto& [_, pred] : interp)
      for (int u = 0; u < frame.worlds; ++u)
        for (int v = 0; v < frame.worlds; ++v)
          if (u != v && frame.sees(u, v))
            pred.by_world[v].insert(pred.by_world[u].begin(), pred.by_world[u].end());
  }
};

// --- validation -----------------------------------------------------------

struct ValidationIssue {
  enum class Kind {
    Reflexivity,
    Transitivity,
    Antisymmetry,
    Linearity,
    EmptyDomain,
    ExpandingDomains,
    ConstantDomains,
    Heredity,
    Arity,
    DomainMembership,
  };
  Kind kind;
  std::string detail;
};

struct ValidateOptions {
  bool require_linearity = false;
  bool require_constant_domains = false;
};

inline const char* to_string(ValidationIssue::Kind k) {
  using K = ValidationIssue::Kind;
  switch (k) {
    case K::Reflexivity: return "reflexivity";
    case K::Transitivity: return "transitivity";
    case K::Antisymmetry: return "antisymmetry";
    case K::Linearity: return "linearity";
    case K::EmptyDomain: return "empty-domain";
    case K::ExpandingDomains: return "expanding-domains";
    case K::ConstantDomains: return "constant-domains";
    case K::Heredity: return "heredity";
    case K::Arity: return "arity";
    case K::DomainMembership: return "domain-membership";
  }
  return "?";
}

inline std::vector<ValidationIssue> validate_model(const KripkeModel& m, ValidateOptions opts = {}) {
  using K = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;
  auto add = [&issues](K k, std::string d) { issues.push_back({k, std::move(d)}); };
  const int n = m.frame.worlds;

  for (int w = 0; w < n; ++w)
    if (!m.frame.sees(w, w)) add(K::Reflexivity, "world " + std::to_string(w) + " does not see itself");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!m.frame.sees(u, v)) continue;
      if (u != v && m.frame.sees(v, u))
        add(K::Antisymmetry, "worlds " + std::to_string(u) + " and " + std::to_string(v) + " see each other");
      for (int t = 0; t < n; ++t)
        if (m.frame.sees(v, t) && !m.frame.sees(u, t))
          add(K::Transitivity, "uRv and vRt but not uRt for (" + std::to_string(u) + "," +
                                   std::to_string(v) + "," + std::to_string(t) + ")");
    }
  if (opts.require_linearity)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!m.frame.sees(u, v) && !m.frame.sees(v, u))
          add(K::Linearity, "worlds " + std::to_string(u) + " and " + std::to_string(v) + " are incomparable");

  if (static_cast<int>(m.domains.size()) != n) {
    add(K::EmptyDomain, "domain list has " + std::to_string(m.domains.size()) + " entries for " +
                            std::to_string(n) + " worlds");
    return issues;
  }
  for (int w = 0; w < n; ++w)
    if (m.domains[w].empty()) add(K::EmptyDomain, "world " + std::to_string(w) + " has an empty domain");

  auto subset = [](const std::vector<int>& a, const std::vector<int>& b, int* missing) {
    for (int x : a)
      if (!std::binary_search(b.begin(), b.end(), x)) {
        *missing = x;
        return false;
      }
    return true;
  };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!m.frame.sees(u, v) || u == v) continue;
      int missing = -1;
      if (!subset(m.domains[u], m.domains[v], &missing))
        add(K::ExpandingDomains, "individual " + std::to_string(missing) + " in D_" + std::to_string(u) +
                                     " but not in D_" + std::to_string(v));
      if (opts.require_constant_domains && m.domains[u] != m.domains[v])
        add(K::ConstantDomains,
            "D_" + std::to_string(u) + " differs from D_" + std::to_string(v));
    }

  auto tuple_str = [](const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  };
  for (const auto& [name, pred] : m.interp) {
    if (static_cast<int>(pred.by_world.size()) != n) {
      add(K::Arity, "letter '" + name + "' has facts for the wrong number of worlds");
      continue;
    }
    for (int w = 0; w < n; ++w)
      for (const auto& t : pred.by_world[w]) {
        if (t.size() != pred.arity) {
          add(K::Arity, "letter '" + name + "' at world " + std::to_string(w) + " has tuple " +
                            tuple_str(t) + " of wrong arity");
          continue;
        }
        for (int a : t)
          if (!std::binary_search(m.domains[w].begin(), m.domains[w].end(), a))
            add(K::DomainMembership, "letter '" + name + "' at world " + std::to_string(w) + " uses " +
                                         std::to_string(a) + " outside D_" + std::to_string(w));
      }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!m.frame.sees(u, v) || u == v) continue;
        for (const auto& t : pred.by_world[u])
          if (!pred.by_world[v].count(t)) {
            add(K::Heredity, "letter '" + name + "' loses " + tuple_str(t) + " from world " +
                                 std::to_string(u) + " to " + std::to_string(v));
            break;  // one witness per world pair is enough
          }
      }
  }
  return issues;
}

// --- forcing ----------------------------------------------------------------

using Assignment = std::map<std::string, int>;

// Evaluates one formula against one model, caching subresults. The caller is
// expected to have validated the model; assignments at the entry world must
// take values in that world's domain. The cache makes a single Evaluator
// stateful: share the model across threads, not the Evaluator.
class Evaluator {
 public:
  Evaluator(const KripkeModel& m, const Formula& f) : model_(m), formula_(f) {
    global_ = m.global_size();
    succ_.resize(m.frame.worlds);
    for (int u = 0; u < m.frame.worlds; ++u)
      for (int v = 0; v < m.frame.worlds; ++v)
        if (m.frame.sees(u, v)) succ_[u].push_back(v);
    in_domain_.assign(m.frame.worlds, std::vector<std::uint8_t>(global_, 0));
    for (int w = 0; w < m.frame.worlds; ++w)
      for (int a : m.domains[w]) in_domain_[w][a] = 1;
    root_ = compile(f);
    for (const auto& fv : free_variables(f)) entry_free_.push_back(var_index(fv));
    build_tables();
    if (vars_.size() <= 2) {
      std::size_t span = static_cast<std::size_t>(global_) + 1;
      std::size_t cells = nodes_.size() * static_cast<std::size_t>(model_.frame.worlds) * span * span;
      if (cells > 0 && cells <= (std::size_t{1} << 28)) memo_.assign(cells, 0);
    }
    slots_.assign(vars_.size(), -1);
  }

  const std::vector<std::string>& variables() const { return vars_; }

  bool forces(int world, const Assignment& g = {}) {
    if (world < 0 || world >= model_.frame.worlds) throw std::invalid_argument("forces: no such world");
    std::fill(slots_.begin(), slots_.end(), -1);
    for (const auto& [v, a] : g) {
      if (a < 0 || a >= global_) throw std::invalid_argument("forces: assignment value outside the global domain");
      auto it = std::find(vars_.begin(), vars_.end(), v);
      if (it != vars_.end()) slots_[it - vars_.begin()] = a;
    }
    for (int fv : entry_free_) {
      if (slots_[fv] < 0)
        throw std::invalid_argument("forces: free variable '" + vars_[fv] + "' is unassigned");
      if (!in_domain_[world][slots_[fv]])
        throw std::invalid_argument("forces: '" + vars_[fv] + "' assigned outside D_w at the entry world");
    }
    return eval(root_, world);
  }

 private:
  struct CNode {
    Conn kind;
    int a = -1, b = -1;     // children
    int letter = -1;        // Atom
    std::vector<int> argv;  // Atom argument slots
    int var = -1;           // Forall / Exists
  };
  struct Table {
    std::size_t arity = 0;
    bool absent = false;  // letter not interpreted by the model: uniformly false
    bool dense = false;
    std::vector<std::vector<std::uint8_t>> bits;              // dense: per world, size global^arity
    const std::vector<std::set<std::vector<int>>>* sparse = nullptr;
  };

  int var_index(const std::string& v) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return static_cast<int>(i);
    vars_.push_back(v);
    return static_cast<int>(vars_.size() - 1);
  }

  int letter_index(const std::string& name, std::size_t arity) {
    for (std::size_t i = 0; i < letter_names_.size(); ++i)
      if (letter_names_[i] == name) return static_cast<int>(i);
    letter_names_.push_back(name);
    letter_arity_.push_back(arity);
    return static_cast<int>(letter_names_.size() - 1);
  }

  int compile(const Formula& f) {
    CNode n;
    n.kind = f.kind();
    switch (f.kind()) {
      case Conn::Bottom:
        break;
      case Conn::Atom:
        n.letter = letter_index(f.letter(), f.args().size());
        for (const auto& v : f.args()) n.argv.push_back(var_index(v));
        break;
      case Conn::Forall:
      case Conn::Exists:
        n.var = var_index(f.var());
        n.a = compile(f.body());
        break;
      default:
        n.a = compile(f.lhs());
        n.b = compile(f.rhs());
        break;
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size() - 1);
  }

  void build_tables() {
    tables_.resize(letter_names_.size());
    for (std::size_t i = 0; i < letter_names_.size(); ++i) {
      Table& t = tables_[i];
      t.arity = letter_arity_[i];
      auto it = model_.interp.find(letter_names_[i]);
      if (it == model_.interp.end()) {
        t.absent = true;
        continue;
      }
      if (it->second.arity != t.arity)
        throw std::invalid_argument("forces: letter '" + letter_names_[i] + "' has arity " +
                                    std::to_string(it->second.arity) + " in the model");
      std::size_t size = 1;
      bool fits = true;
      for (std::size_t k = 0; k < t.arity; ++k) {
        size *= static_cast<std::size_t>(global_);
        if (size > (std::size_t{1} << 22)) fits = false;
      }
      if (fits) {
        t.dense = true;
        t.bits.assign(model_.frame.worlds, std::vector<std::uint8_t>(std::max<std::size_t>(size, 1), 0));
        for (int w = 0; w < model_.frame.worlds; ++w)
          for (const auto& tup : it->second.by_world[w]) {
            std::size_t key = 0;
            for (int a : tup) key = key * static_cast<std::size_t>(global_) + static_cast<std::size_t>(a);
            t.bits[w][key] = 1;
          }
      } else {
        t.sparse = &it->second.by_world;
      }
    }
  }

  bool eval(int id, int w) {
    std::size_t mi = 0;
    if (!memo_.empty()) {
      const std::size_t span = static_cast<std::size_t>(global_) + 1;
      const std::size_t v0 = vars_.empty() ? 0 : static_cast<std::size_t>(slots_[0] + 1);
      const std::size_t v1 = vars_.size() < 2 ? 0 : static_cast<std::size_t>(slots_[1] + 1);
      mi = ((static_cast<std::size_t>(id) * model_.frame.worlds + w) * span + v0) * span + v1;
      if (memo_[mi]) return memo_[mi] == 2;
    }
    const CNode& n = nodes_[id];
    bool res = false;
    switch (n.kind) {
      case Conn::Bottom:
        res = false;
        break;
      case Conn::Atom: {
        const Table& t = tables_[n.letter];
        if (t.absent) {
          res = false;
        } else if (t.dense) {
          std::size_t key = 0;
          for (int s : n.argv) key = key * static_cast<std::size_t>(global_) + static_cast<std::size_t>(slots_[s]);
          res = t.bits[w][key] != 0;
        } else {
          std::vector<int> tup;
          tup.reserve(n.argv.size());
          for (int s : n.argv) tup.push_back(slots_[s]);
          res = (*t.sparse)[w].count(tup) > 0;
        }
        break;
      }
      case Conn::And:
        res = eval(n.a, w) && eval(n.b, w);
        break;
      case Conn::Or:
        res = eval(n.a, w) || eval(n.b, w);
        break;
      case Conn::Implies: {
        res = true;
        for (int v : succ_[w])
          if (eval(n.a, v) && !eval(n.b, v)) {
            res = false;
            break;
          }
        break;
      }
      case Conn::Forall: {
        res = true;
        const int saved = slots_[n.var];
        for (int v : succ_[w]) {
          for (int d : model_.domains[v]) {
            slots_[n.var] = d;
            if (!eval(n.a, v)) {
              res = false;
              break;
            }
          }
          if (!res) break;
        }
        slots_[n.var] = saved;
        break;
      }
      case Conn::Exists: {
        res = false;
        const int saved = slots_[n.var];
        for (int d : model_.domains[w]) {
          slots_[n.var] = d;
          if (eval(n.a, w)) {
            res = true;
            break;
          }
        }
        slots_[n.var] = saved;
        break;
      }
    }
    if (!memo_.empty()) memo_[mi] = res ? 2 : 1;
    return res;
  }

  const KripkeModel& model_;
  Formula formula_;
  int global_ = 0;
  int root_ = -1;
  std::vector<CNode> nodes_;
  std::vector<std::string> vars_;
  std::vector<int> entry_free_;
  std::vector<std::string> letter_names_;
  std::vector<std::size_t> letter_arity_;
  std::vector<Table> tables_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<std::uint8_t>> in_domain_;
  std::vector<int> slots_;
  std::vector<std::uint8_t> memo_;
};

inline bool forces(const KripkeModel& m, int world, const Assignment& g, const Formula& f) {
  return Evaluator(m, f).forces(world, g);
}

inline bool forces(const KripkeModel& m, int world, const Formula& f) { return forces(m, world, {}, f); }

inline bool holds_everywhere(const KripkeModel& m, const Formula& f) {
  Evaluator ev(m, f);
  const auto fv = free_variables(f);
  for (int w = 0; w < m.frame.worlds; ++w) {
    const auto& dom = m.domains[w];
    std::vector<std::size_t> choice(fv.size(), 0);
    while (true) {
      Assignment g;
      for (std::size_t i = 0; i < fv.size(); ++i) g[fv[i]] = dom[choice[i]];
      if (!ev.forces(w, g)) return false;
      std::size_t i = 0;
      for (; i < fv.size(); ++i) {
        if (++choice[i] < dom.size()) break;
        choice[i] = 0;
      }
      if (i == fv.size()) break;  // odometer wrapped: all assignments done
    }
  }
  return true;
}

}  // namespace tilint
