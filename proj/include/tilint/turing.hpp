#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilint/tiles.hpp"

// Turing machines over a marked tape (cell 0 carries an end marker, the head
// never falls off the left), their blank-tape runs, and the compiler from a
// machine to a tile set whose valid tilings replay the computation row by row.

namespace tilint {

enum class Move { Left, Stay, Right };

struct Transition {
  std::string state, write;
  Move move = Move::Stay;
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct TuringMachine {
  std::vector<std::string> alphabet;  // contains blank and marker
  std::string blank, marker;
  std::vector<std::string> states;
  std::string initial, halting;
  std::map<std::pair<std::string, std::string>, Transition> delta;
};

struct TmIssue {
  std::string message;
  std::string state, symbol;  // the offending program entry, when applicable
};

inline std::vector<TmIssue> validate_tm(const TuringMachine& m) {
  std::vector<TmIssue> out;
  auto has = [](const std::vector<std::string>& xs, const std::string& v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  if (!has(m.alphabet, m.blank)) out.push_back({"blank symbol not in alphabet", "", m.blank});
  if (!has(m.alphabet, m.marker)) out.push_back({"marker symbol not in alphabet", "", m.marker});
  if (m.blank == m.marker) out.push_back({"blank and marker coincide", "", m.blank});
  if (!has(m.states, m.initial)) out.push_back({"initial state not in state set", m.initial, ""});
  if (!has(m.states, m.halting)) out.push_back({"halting state not in state set", m.halting, ""});
  if (std::set<std::string>(m.alphabet.begin(), m.alphabet.end()).size() != m.alphabet.size())
    out.push_back({"duplicate alphabet symbol", "", ""});
  if (std::set<std::string>(m.states.begin(), m.states.end()).size() != m.states.size())
    out.push_back({"duplicate state", "", ""});

  for (const auto& [key, tr] : m.delta) {
    const auto& [q, s] = key;
    if (!has(m.states, q) || !has(m.alphabet, s))
      out.push_back({"program entry uses unknown state or symbol", q, s});
    if (!has(m.states, tr.state) || !has(m.alphabet, tr.write))
      out.push_back({"program entry maps to unknown state or symbol", q, s});
    if ((s == m.marker) != (tr.write == m.marker))
      out.push_back({"marker must be read iff it is written", q, s});
    if (s == m.marker && tr.move == Move::Left)
      out.push_back({"left move on the marker cell", q, s});
    if (q == m.halting && !(tr.state == m.halting && tr.write == s && tr.move == Move::Stay))
      out.push_back({"halting state must loop in place", q, s});
  }
  for (const auto& q : m.states)
    for (const auto& s : m.alphabet)
      if (!m.delta.count({q, s})) out.push_back({"program is not total", q, s});
  return out;
}

struct Configuration {
  std::vector<std::string> tape;  // minimal prefix; cells beyond hold the blank
  std::size_t head = 0;
  std::string state;
  friend bool operator==(const Configuration&, const Configuration&) = default;

  const std::string& cell(std::size_t i, const std::string& blank) const {
    return i < tape.size() ? tape[i] : blank;
  }
};

inline std::vector<Configuration> run_blank(const TuringMachine& m, std::size_t steps) {
  std::vector<Configuration> out;
  Configuration c{{m.marker}, 0, m.initial};
  out.push_back(c);
  for (std::size_t k = 0; k < steps; ++k) {
    const std::string scanned = c.cell(c.head, m.blank);
    auto it = m.delta.find({c.state, scanned});
    if (it == m.delta.end())
      throw std::invalid_argument("run_blank: no instruction for (" + c.state + "," + scanned + ")");
    const Transition& tr = it->second;
    if (c.head >= c.tape.size()) c.tape.resize(c.head + 1, m.blank);
    c.tape[c.head] = tr.write;
    c.state = tr.state;
    if (tr.move == Move::Left) {
      if (c.head == 0) throw std::logic_error("run_blank: head moved left of cell 0");
      --c.head;
    } else if (tr.move == Move::Right) {
      ++c.head;
    }
    while (c.tape.size() > 1 && c.tape.back() == m.blank) c.tape.pop_back();
    out.push_back(c);
  }
  return out;
}

inline std::optional<std::size_t> halting_step(const TuringMachine& m,
                                               const std::vector<Configuration>& run) {
  for (std::size_t k = 0; k < run.size(); ++k)
    if (run[k].state == m.halting) return k;
  return std::nullopt;
}

// --- machine -> tiles -------------------------------------------------------

// Edge colors are structured and only rendered to strings at the end, so a
// state-symbol pair can never be mistaken for a plain symbol.
struct Color {
  enum class Tag { Cross, DoubleStar, Star, Sym, Pair };
  Tag tag = Tag::Cross;
  std::string q, s;

  static Color cross() { return {Tag::Cross, "", ""}; }
  static Color dstar() { return {Tag::DoubleStar, "", ""}; }
  static Color star() { return {Tag::Star, "", ""}; }
  static Color sym(std::string s) { return {Tag::Sym, "", std::move(s)}; }
  static Color pair(std::string q, std::string s) { return {Tag::Pair, std::move(q), std::move(s)}; }

  friend bool operator==(const Color&, const Color&) = default;
  friend bool operator<(const Color& a, const Color& b) {
    return std::tie(a.tag, a.q, a.s) < std::tie(b.tag, b.q, b.s);
  }

  std::string render() const {
    switch (tag) {
      case Tag::Cross: return "⊗";  // ⊗
      case Tag::DoubleStar: return "**";
      case Tag::Star: return "*";
      case Tag::Sym: return s;
      case Tag::Pair: return q + s;
    }
    return "";
  }
};

struct TmTiles {
  TileSet tiles;
  std::vector<std::string> labels;  // parallel to tiles; t_0 first, t_1 = t_{q1 marker} second
};

namespace detail {

struct ColoredTile {
  Color left, right, up, down;
  std::string label;
};

inline TileType render_tile(const ColoredTile& t, int id, std::map<std::string, Color>& seen) {
  auto render = [&seen, &t](const Color& c) {
    std::string r = c.render();
    auto [it, fresh] = seen.emplace(r, c);
    if (!fresh && !(it->second == c))
      throw std::invalid_argument("tm_to_tiles: colors '" + r + "' collide after rendering (tile " +
                                  t.label + ")");
    return r;
  };
  return TileType{id, render(t.left), render(t.right), render(t.up), render(t.down)};
}

}  // namespace detail

inline TmTiles tm_to_tiles(const TuringMachine& m) {
  if (!validate_tm(m).empty()) throw std::invalid_argument("tm_to_tiles: machine fails validation");
  using detail::ColoredTile;
  const Color CROSS = Color::cross(), DSTAR = Color::dstar(), STAR = Color::star();
  std::vector<ColoredTile> work;

  // t_0 and t_1 head the ordering; t_1 is the halting loop tile t_{q1 marker}.
  work.push_back({CROSS, DSTAR, Color::pair(m.initial, m.marker), CROSS, "t0"});
  work.push_back({CROSS, STAR, Color::pair(m.halting, m.marker), Color::pair(m.halting, m.marker),
                  "t(" + m.halting + "," + m.marker + ")"});

  work.push_back({DSTAR, DSTAR, Color::sym(m.blank), CROSS, "t**(" + m.blank + ")"});
  for (const auto& s : m.alphabet)
    if (s != m.marker) work.push_back({STAR, STAR, Color::sym(s), Color::sym(s), "t*(" + s + ")"});
  work.push_back({CROSS, STAR, Color::sym(m.marker), Color::sym(m.marker), "t*(" + m.marker + ")"});

  for (const auto& q : m.states)
    for (const auto& s : m.alphabet) {
      if (q == m.halting && s == m.marker) continue;  // already placed as t_1
      const Transition& tr = m.delta.at({q, s});
      const Color qs = Color::pair(q, s);
      const std::string label = "t(" + q + "," + s + ")";
      switch (tr.move) {
        case Move::Stay:
          if (s == m.marker)
            work.push_back({CROSS, STAR, Color::pair(tr.state, m.marker), qs, label});
          else
            work.push_back({STAR, STAR, Color::pair(tr.state, tr.write), qs, label});
          break;
        case Move::Right:
          if (s == m.marker)
            work.push_back({CROSS, qs, Color::sym(m.marker), qs, label});
          else
            work.push_back({STAR, qs, Color::sym(tr.write), qs, label});
          for (const auto& a : m.alphabet)
            if (a != m.marker)
              work.push_back({qs, STAR, Color::pair(tr.state, a), Color::sym(a),
                              "t(" + q + "," + s + "|" + a + ")"});
          break;
        case Move::Left:
          work.push_back({qs, STAR, Color::sym(tr.write), qs, label});
          for (const auto& a : m.alphabet) {
            if (a == m.marker)
              work.push_back({CROSS, qs, Color::pair(tr.state, m.marker), Color::sym(m.marker),
                              "t(" + q + "," + s + "|" + a + ")"});
            else
              work.push_back({STAR, qs, Color::pair(tr.state, a), Color::sym(a),
                              "t(" + q + "," + s + "|" + a + ")"});
          }
          break;
      }
    }

  TmTiles out;
  std::map<std::string, Color> seen;
  for (std::size_t i = 0; i < work.size(); ++i) {
    out.tiles.push_back(detail::render_tile(work[i], static_cast<int>(i), seen));
    out.labels.push_back(work[i].label);
  }
  return out;
}

// --- row-by-row replay -------------------------------------------------------

namespace detail {

// All ways to complete one row: down edges must match `below`, left/right
// edges must chain, and the rightmost tile must admit an all-blank
// continuation (right edge "*", which is what the infinite tiling forces
// beyond the head's excursion).
inline void complete_row(const TileSet& ts, const std::vector<std::string>& below,
                         const std::string& boundary_right, std::vector<int>& row, std::size_t col,
                         std::vector<std::vector<int>>& found) {
  if (col == below.size()) {
    found.push_back(row);
    return;
  }
  for (int t = 0; t < static_cast<int>(ts.size()) && found.size() < 2; ++t) {
    if (ts[t].down != below[col]) continue;
    if (col > 0 && ts[row[col - 1]].right != ts[t].left) continue;
    if (col + 1 == below.size() && ts[t].right != boundary_right) continue;
    row[col] = t;
    complete_row(ts, below, boundary_right, row, col + 1, found);
  }
}

}  // namespace detail

// The unique tiling of a rows x width window replaying the blank-tape run.
// Throws if some row has no completion or more than one (either would
// contradict the uniqueness the construction promises).
inline TileGrid blank_tape_tiling(const TuringMachine& m, int rows, int min_width = 0) {
  if (rows < 1) throw std::invalid_argument("blank_tape_tiling: need at least one row");
  const TmTiles tm = tm_to_tiles(m);
  const auto run = run_blank(m, static_cast<std::size_t>(rows) - 1);
  std::size_t excursion = 1;  // past-the-end of any content or head position
  for (const auto& c : run) excursion = std::max({excursion, c.tape.size(), c.head + 1});
  const int width = std::max<int>(static_cast<int>(excursion) + 2, min_width);

  TileGrid g(width, rows);
  const int dstar_index = 2;  // t_0, t_1, then the blank filler
  g.set(0, 0, 0);
  for (int i = 1; i < width; ++i) g.set(i, 0, dstar_index);

  const std::string star = Color::star().render();
  for (int j = 1; j < rows; ++j) {
    std::vector<std::string> below(width);
    for (int i = 0; i < width; ++i) below[i] = tm.tiles[g.at(i, j - 1)].up;
    std::vector<int> row(width, -1);
    std::vector<std::vector<int>> found;
    detail::complete_row(tm.tiles, below, star, row, 0, found);
    if (found.empty())
      throw std::logic_error("blank_tape_tiling: no completion for row " + std::to_string(j));
    if (found.size() > 1)
      throw std::logic_error("blank_tape_tiling: ambiguous completion for row " + std::to_string(j));
    for (int i = 0; i < width; ++i) g.set(i, j, found[0][i]);
  }
  return g;
}

// Row k of the unique window tiling must spell configuration C_k in its top
// edge colors.
inline bool rows_equal_configs(const TuringMachine& m, int rows) {
  const TmTiles tm = tm_to_tiles(m);
  const TileGrid g = blank_tape_tiling(m, rows);
  if (!check_constraints(g, tm.tiles).empty()) return false;
  const auto run = run_blank(m, static_cast<std::size_t>(rows) - 1);
  for (int j = 0; j < rows; ++j) {
    const Configuration& c = run[j];
    for (int i = 0; i < g.width; ++i) {
      const std::string& sym = c.cell(i, m.blank);
      const std::string expect = static_cast<std::size_t>(i) == c.head
                                     ? Color::pair(c.state, sym).render()
                                     : Color::sym(sym).render();
      if (tm.tiles[g.at(i, j)].up != expect) return false;
    }
  }
  return true;
}

}  // namespace tilint
