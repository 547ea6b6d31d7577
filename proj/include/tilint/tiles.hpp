#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Tile types, finite rectangular tilings, the edge-matching constraints, the
// boundary conditions on column 0, and a deterministic backtracking solver.
// Colors are opaque UTF-8 strings compared by equality.

namespace tilint {

struct TileType {
  int id = 0;  // must equal the position in its TileSet
  std::string left, right, up, down;
  friend bool operator==(const TileType&, const TileType&) = default;
};

using TileSet = std::vector<TileType>;

struct TileGrid {
  int width = 0, height = 0;
  std::vector<int> cells;  // row-major: cell (i,j) at j*width + i

  TileGrid() = default;
  TileGrid(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, 0) {}

  int at(int i, int j) const { return cells[static_cast<std::size_t>(j) * width + i]; }
  void set(int i, int j, int t) { cells[static_cast<std::size_t>(j) * width + i] = t; }
};

struct TileViolation {
  enum class Kind { Horizontal, Vertical };
  Kind kind;
  int i = 0, j = 0;  // the cell whose right/up edge clashes with its neighbour
};

inline std::vector<TileViolation> check_constraints(const TileGrid& g, const TileSet& ts) {
  for (int c : g.cells)
    if (c < 0 || c >= static_cast<int>(ts.size()))
      throw std::invalid_argument("check_constraints: cell references tile " + std::to_string(c) +
                                  " outside the tile set");
  std::vector<TileViolation> out;
  for (int j = 0; j < g.height; ++j)
    for (int i = 0; i < g.width; ++i) {
      if (i + 1 < g.width && ts[g.at(i, j)].right != ts[g.at(i + 1, j)].left)
        out.push_back({TileViolation::Kind::Horizontal, i, j});
      if (j + 1 < g.height && ts[g.at(i, j)].up != ts[g.at(i, j + 1)].down)
        out.push_back({TileViolation::Kind::Vertical, i, j});
    }
  return out;
}

// f(0,0) = t_0 and f(0,j) = t_1 for all jstar <= j < height.
inline bool check_boundary(const TileGrid& g, const TileSet& ts, int jstar) {
  (void)ts;
  if (g.width == 0 || g.height == 0) return false;
  if (g.at(0, 0) != 0) return false;
  for (int j = jstar; j < g.height; ++j)
    if (g.at(0, j) != 1) return false;
  return true;
}

using FixedCells = std::map<std::pair<int, int>, int>;  // (i,j) -> tile index

// Depth-first search in row-major cell order, tile indices ascending.
// Returns the first solution found, or nothing.
inline std::optional<TileGrid> solve_window(const TileSet& ts, int width, int height,
                                            const FixedCells& fixed = {}) {
  if (ts.empty() || width < 1 || height < 1) throw std::invalid_argument("solve_window: empty problem");
  for (const auto& [cell, t] : fixed) {
    if (cell.first < 0 || cell.first >= width || cell.second < 0 || cell.second >= height)
      throw std::invalid_argument("solve_window: fixed cell out of bounds");
    if (t < 0 || t >= static_cast<int>(ts.size()))
      throw std::invalid_argument("solve_window: fixed cell uses tile outside the tile set");
  }
  TileGrid g(width, height);
  const int cellCount = width * height;
  auto fits = [&](int i, int j, int t) {
    if (i > 0 && ts[g.at(i - 1, j)].right != ts[t].left) return false;
    if (j > 0 && ts[g.at(i, j - 1)].up != ts[t].down) return false;
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> bool {
    if (cell == cellCount) return true;
    const int i = cell % width, j = cell / width;
    auto fx = fixed.find({i, j});
    if (fx != fixed.end()) {
      if (!fits(i, j, fx->second)) return false;
      g.set(i, j, fx->second);
      return self(self, cell + 1);
    }
    for (int t = 0; t < static_cast<int>(ts.size()); ++t) {
      if (!fits(i, j, t)) continue;
      g.set(i, j, t);
      if (self(self, cell + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return g;
}

}  // namespace tilint
