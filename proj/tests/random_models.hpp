#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>

#include "tilint/kripke.hpp"

// Shared test-side generators and the independent classical oracle. These are
// deliberately written against the public model surface only, so they stay an
// oracle for the evaluator rather than a mirror of it.

namespace tilint_tests {

// Random intuitionistic model: a random partial order (edges only from lower
// to higher index, then closed transitively), expanding domains, and
// hereditary facts for p/0, P/1, R/2.
inline tilint::KripkeModel random_model(std::mt19937& rng, int max_worlds = 4, int max_domain = 3) {
  using tilint::KripkeModel;
  std::uniform_int_distribution<int> dW(1, max_worlds), dD(1, max_domain), coin(0, 99);
  const int W = dW(rng), D = dD(rng);
  KripkeModel m;
  m.frame.worlds = W;
  m.frame.rel.assign(W, std::vector<bool>(W, false));
  for (int u = 0; u < W; ++u) {
    m.frame.rel[u][u] = true;
    for (int v = u + 1; v < W; ++v)
      if (coin(rng) < 45) m.frame.rel[u][v] = true;
  }
  for (int t = 0; t < W; ++t)
    for (int u = 0; u < W; ++u)
      for (int v = 0; v < W; ++v)
        if (m.frame.rel[u][t] && m.frame.rel[t][v]) m.frame.rel[u][v] = true;

  m.domains.assign(W, {});
  for (int w = 0; w < W; ++w) {
    std::set<int> members;
    for (int u = 0; u < w; ++u)
      if (m.frame.rel[u][w]) members.insert(m.domains[u].begin(), m.domains[u].end());
    for (int a = 0; a < D; ++a)
      if (coin(rng) < 50) members.insert(a);
    if (members.empty()) members.insert(coin(rng) % D);
    m.domains[w].assign(members.begin(), members.end());
  }

  m.declare("p", 0);
  m.declare("P", 1);
  m.declare("R", 2);
  for (int w = 0; w < W; ++w) {
    if (coin(rng) < 40) m.add_fact(w, "p", {});
    for (int a : m.domains[w]) {
      if (coin(rng) < 40) m.add_fact(w, "P", {a});
      for (int b : m.domains[w])
        if (coin(rng) < 25) m.add_fact(w, "R", {a, b});
    }
  }
  m.close_hereditarily();  // make the random facts hereditary
  return m;
}

inline tilint::Formula random_formula(std::mt19937& rng, int depth) {
  using tilint::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  auto var = [&rng]() -> std::string { return rng() % 2 ? "x" : "y"; };
  switch (pick(rng)) {
    case 0:
      return Formula::bottom();
    case 1:
      return Formula::atom("p");
    case 2:
      return rng() % 2 ? Formula::atom("P", {var()}) : Formula::atom("R", {var(), var()});
    case 3:
      return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4:
      return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5:
      return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6:
      return Formula::forall(var(), random_formula(rng, depth - 1));
    case 7:
      return Formula::exists(var(), random_formula(rng, depth - 1));
    default:
      return Formula::neg(random_formula(rng, depth - 1));
  }
}

// Straight transcription of the forcing clauses over the raw model, with no
// compilation, caching or lookup tables: a reference for the real evaluator.
inline bool naive_forces(const tilint::KripkeModel& m, int w, std::map<std::string, int>& g,
                         const tilint::Formula& f) {
  using tilint::Conn;
  switch (f.kind()) {
    case Conn::Bottom:
      return false;
    case Conn::Atom: {
      std::vector<int> tuple;
      for (const auto& v : f.args()) tuple.push_back(g.at(v));
      return m.has_fact(w, f.letter(), tuple);
    }
    case Conn::And:
      return naive_forces(m, w, g, f.lhs()) && naive_forces(m, w, g, f.rhs());
    case Conn::Or:
      return naive_forces(m, w, g, f.lhs()) || naive_forces(m, w, g, f.rhs());
    case Conn::Implies: {
      for (int v = 0; v < m.frame.worlds; ++v)
        if (m.frame.sees(w, v) && naive_forces(m, v, g, f.lhs()) && !naive_forces(m, v, g, f.rhs()))
          return false;
      return true;
    }
    case Conn::Forall: {
      const auto saved = g.find(f.var()) != g.end() ? std::optional<int>(g.at(f.var())) : std::nullopt;
      bool ok = true;
      for (int v = 0; ok && v < m.frame.worlds; ++v) {
        if (!m.frame.sees(w, v)) continue;
        for (int d : m.domains[v]) {
          g[f.var()] = d;
          if (!naive_forces(m, v, g, f.body())) {
            ok = false;
            break;
          }
        }
      }
      if (saved) g[f.var()] = *saved;
      else g.erase(f.var());
      return ok;
    }
    case Conn::Exists: {
      const auto saved = g.find(f.var()) != g.end() ? std::optional<int>(g.at(f.var())) : std::nullopt;
      bool ok = false;
      for (int d : m.domains[w]) {
        g[f.var()] = d;
        if (naive_forces(m, w, g, f.body())) {
          ok = true;
          break;
        }
      }
      if (saved) g[f.var()] = *saved;
      else g.erase(f.var());
      return ok;
    }
  }
  return false;
}

// Classical brute-force truth, sound only on one-world models.
inline bool classical_eval(const tilint::KripkeModel& m, std::map<std::string, int>& g,
                           const tilint::Formula& f) {
  using tilint::Conn;
  switch (f.kind()) {
    case Conn::Bottom:
      return false;
    case Conn::Atom: {
      std::vector<int> tuple;
      for (const auto& v : f.args()) tuple.push_back(g.at(v));
      return m.has_fact(0, f.letter(), tuple);
    }
    case Conn::And:
      return classical_eval(m, g, f.lhs()) && classical_eval(m, g, f.rhs());
    case Conn::Or:
      return classical_eval(m, g, f.lhs()) || classical_eval(m, g, f.rhs());
    case Conn::Implies:
      return !classical_eval(m, g, f.lhs()) || classical_eval(m, g, f.rhs());
    case Conn::Forall:
    case Conn::Exists: {
      const bool is_forall = f.kind() == Conn::Forall;
      const auto saved =
          g.find(f.var()) != g.end() ? std::optional<int>(g.at(f.var())) : std::nullopt;
      bool result = is_forall;
      for (int d : m.domains[0]) {
        g[f.var()] = d;
        const bool sub = classical_eval(m, g, f.body());
        if (is_forall && !sub) {
          result = false;
          break;
        }
        if (!is_forall && sub) {
          result = true;
          break;
        }
      }
      if (saved) g[f.var()] = *saved;
      else g.erase(f.var());
      return result;
    }
  }
  return false;
}

}  // namespace tilint_tests
