#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilint/grid.hpp"
#include "tilint/kripke.hpp"
#include "tilint/reduction.hpp"
#include "tilint/tiles.hpp"

// The finite truncation of the refuting model: a linear chain of worlds
// 0..N with the constant domain 0..N, interpreted from a concrete tiling so
// that world 0 satisfies the grid and tiling blocks while refuting the goal.
// Every letter's truth set below is upward closed in the world index, which
// is what makes the interpretation hereditary.

namespace tilint {

struct TruncatedCountermodel {
  std::uint64_t size = 0;  // N: worlds and individuals are 0..N
  TileSet tiles;
  TileGrid tiling;
  KripkeModel model;
};

struct GridExtent {
  int width = 0, height = 0;
};

// Smallest rectangle covering every grid point with index <= N.
inline GridExtent required_extent(std::uint64_t n) {
  GridExtent e;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const grid::Point p = grid::pair(k);
    e.width = std::max(e.width, static_cast<int>(p.i) + 1);
    e.height = std::max(e.height, static_cast<int>(p.j) + 1);
  }
  return e;
}

inline TruncatedCountermodel build_countermodel(const TileSet& ts, const TileGrid& g, std::uint64_t n) {
  namespace L = letters;
  if (ts.empty()) throw std::invalid_argument("build_countermodel: empty tile set");
  const GridExtent need = required_extent(n);
  if (g.width < need.width || g.height < need.height)
    throw std::invalid_argument("build_countermodel: tiling covers " + std::to_string(g.width) + "x" +
                                std::to_string(g.height) + " but indices up to " + std::to_string(n) +
                                " need " + std::to_string(need.width) + "x" + std::to_string(need.height));
  if (!check_constraints(g, ts).empty())
    throw std::invalid_argument("build_countermodel: tiling violates the matching constraints");

  const int worlds = static_cast<int>(n) + 1;
  TruncatedCountermodel out;
  out.size = n;
  out.tiles = ts;
  out.tiling = g;
  out.model = KripkeModel::chain_constant_domain(worlds, worlds);
  KripkeModel& m = out.model;

  m.declare(L::lhd, 2);
  for (const auto& name : {L::Q, L::Qp, L::next, L::S, L::Sp, L::Spp, L::G, L::wall, L::floor, L::above, L::right})
    m.declare(name, 1);
  for (std::size_t t = 0; t < ts.size(); ++t) m.declare(L::P(t), 1);

  for (int w = 0; w < worlds; ++w) {
    const std::int64_t front = static_cast<std::int64_t>(grid::above(static_cast<std::uint64_t>(w)));
    for (int a = 0; a < worlds; ++a) {
      const grid::Point p = grid::pair(static_cast<std::uint64_t>(a));
      const bool on_wall = p.i == 0, on_floor = p.j == 0;
      if (a <= w) m.add_fact(w, L::Q, {a});
      if (a <= w - 1) m.add_fact(w, L::Qp, {a});
      if (a <= w + 1) m.add_fact(w, L::next, {a});
      if (a <= front) m.add_fact(w, L::S, {a});
      if (a <= front - 1) m.add_fact(w, L::Sp, {a});
      if (a <= front - 2) m.add_fact(w, L::Spp, {a});
      if (a <= front + 1) m.add_fact(w, L::G, {a});
      if (on_wall) m.add_fact(w, L::wall, {a});
      if (on_floor) m.add_fact(w, L::floor, {a});
      if (a <= front && !on_floor) m.add_fact(w, L::above, {a});
      if (a <= front - 1 && !on_wall) m.add_fact(w, L::right, {a});
      m.add_fact(w, L::P(static_cast<std::size_t>(g.at(static_cast<int>(p.i), static_cast<int>(p.j)))), {a});
      if (a + 1 < worlds) m.add_fact(w, L::lhd, {a, a + 1});
    }
  }
  return out;
}

// --- per-conjunct evaluation at world 0 ---------------------------------------

struct Witness {
  int world = 0;
  std::vector<std::pair<std::string, int>> values;
};

struct ConjunctFinding {
  std::string name;
  bool holds = false;
  std::optional<Witness> witness;
  bool boundary = false;  // the witness touches an index >= N - margin
};

struct ConjunctReport {
  std::vector<ConjunctFinding> findings;

  const ConjunctFinding* find(const std::string& name) const {
    for (const auto& f : findings)
      if (f.name == name) return &f;
    return nullptr;
  }
};

namespace detail {

inline std::optional<Witness> search_witness(const KripkeModel& m, const Formula& conjunct) {
  std::vector<std::string> vars;
  Formula matrix = conjunct;
  while (matrix.kind() == Conn::Forall) {
    vars.push_back(matrix.var());
    matrix = matrix.body();
  }
  if (vars.empty()) return std::nullopt;
  Evaluator ev(m, matrix);
  std::vector<std::size_t> choice(vars.size(), 0);
  for (int v = 0; v < m.frame.worlds; ++v) {
    const auto& dom = m.domains[v];
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      Assignment g;
      for (std::size_t i = 0; i < vars.size(); ++i) g[vars[i]] = dom[choice[i]];
      if (!ev.forces(v, g)) {
        Witness w;
        w.world = v;
        for (const auto& var : vars) w.values.emplace_back(var, g[var]);
        return w;
      }
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++choice[i] < dom.size()) break;
        choice[i] = 0;
      }
      if (i == vars.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline ConjunctReport conjunct_report(const TruncatedCountermodel& tm, bool psi_mode,
                                      std::uint64_t margin) {
  if (margin >= tm.size) throw std::invalid_argument("conjunct_report: margin must be below N");
  const std::int64_t threshold = static_cast<std::int64_t>(tm.size - margin);
  ConjunctReport report;
  for (const auto& [name, formula] : named_conjuncts(tm.tiles, psi_mode)) {
    ConjunctFinding f;
    f.name = name;
    f.holds = forces(tm.model, 0, formula);
    // The refutation goals are wanted false; everything else gets a witness.
    if (!f.holds && name != "Refute" && name != "Refute_Q") {
      f.witness = detail::search_witness(tm.model, formula);
      if (f.witness) {
        std::int64_t top = f.witness->world;
        for (const auto& [_, value] : f.witness->values) top = std::max<std::int64_t>(top, value);
        f.boundary = top >= threshold;
      }
    }
    report.findings.push_back(std::move(f));
  }
  return report;
}

// --- the reconstructed neighbour functions -------------------------------------

struct NotAttainedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t least_refuted(const TruncatedCountermodel& tm, std::uint64_t k,
                                   const std::string& move_letter, const std::string& s_letter,
                                   const char* what) {
  namespace L = letters;
  if (k > tm.size) throw std::invalid_argument(std::string(what) + ": index beyond the domain bound");
  const Formula probe = Formula::implies(
      Formula::conj(Formula::atom(L::Q, {"x"}), Formula::atom(move_letter, {"y"})),
      Formula::disj(Formula::atom(L::Qp, {"x"}), Formula::atom(s_letter, {"y"})));
  Evaluator ev(tm.model, probe);
  for (std::uint64_t m = 0; m <= tm.size; ++m)
    if (!ev.forces(0, {{"x", static_cast<int>(k)}, {"y", static_cast<int>(m)}})) return m;
  throw NotAttainedError(std::string(what) + "(" + std::to_string(k) + ") not attained within bound " +
                         std::to_string(tm.size));
}

}  // namespace detail

inline std::uint64_t right_prime(const TruncatedCountermodel& tm, std::uint64_t k) {
  return detail::least_refuted(tm, k, letters::right, letters::Spp, "right_prime");
}

inline std::uint64_t above_prime(const TruncatedCountermodel& tm, std::uint64_t k) {
  return detail::least_refuted(tm, k, letters::above, letters::Sp, "above_prime");
}

// At world 0 the abbreviation Q(y) -> Q(x) orders the domain exactly as <=.
inline bool preceq_matches_leq(const TruncatedCountermodel& tm) {
  Evaluator ev(tm.model, preceq("x", "y"));
  for (int a = 0; a <= static_cast<int>(tm.size); ++a)
    for (int b = 0; b <= static_cast<int>(tm.size); ++b)
      if (ev.forces(0, {{"x", a}, {"y", b}}) != (a <= b)) return false;
  return true;
}

}  // namespace tilint
