#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tilint/tiles.hpp"

using namespace tilint;

namespace {

TileType tile(int id, std::string l, std::string r, std::string u, std::string d) {
  return TileType{id, std::move(l), std::move(r), std::move(u), std::move(d)};
}

TileSet uniform_tile() { return {tile(0, "c", "c", "c", "c")}; }

TileSet random_tileset(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4), color(0, 2);
  TileSet ts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    auto c = [&] { return std::string(1, static_cast<char>('a' + color(rng))); };
    ts.push_back(tile(i, c(), c(), c(), c()));
  }
  return ts;
}

}  // namespace

TEST_CASE("a single cell has no adjacency to violate") {
  TileGrid g(1, 1);
  CHECK(check_constraints(g, uniform_tile()).empty());
}

TEST_CASE("a horizontal clash is reported at its cell") {
  const TileSet ts = {tile(0, "a", "b", "c", "c")};  // right != left of the same type
  TileGrid g(2, 1);
  const auto violations = check_constraints(g, ts);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == TileViolation::Kind::Horizontal);
  CHECK(violations[0].i == 0);
  CHECK(violations[0].j == 0);
}

TEST_CASE("a vertical clash is reported at its cell") {
  const TileSet ts = {tile(0, "a", "a", "u", "d")};
  TileGrid g(1, 2);
  const auto violations = check_constraints(g, ts);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == TileViolation::Kind::Vertical);
}

TEST_CASE("cells outside the tile set are an error, not a violation") {
  TileGrid g(1, 1);
  g.set(0, 0, 3);
  CHECK_THROWS_AS(check_constraints(g, uniform_tile()), std::invalid_argument);
}

TEST_CASE("boundary condition on column zero") {
  // Three tiles; grid column 0 runs t0, t2, t1, t1, t1.
  const TileSet ts = {tile(0, "x", "x", "x", "x"), tile(1, "x", "x", "x", "x"),
                      tile(2, "x", "x", "x", "x")};
  TileGrid g(1, 5);
  g.set(0, 0, 0);
  g.set(0, 1, 2);
  for (int j = 2; j < 5; ++j) g.set(0, j, 1);
  CHECK(check_boundary(g, ts, 2));
  CHECK_FALSE(check_boundary(g, ts, 1));  // row 1 is not t_1
  TileGrid wrong_origin = g;
  wrong_origin.set(0, 0, 2);
  CHECK_FALSE(check_boundary(wrong_origin, ts, 2));
}

TEST_CASE("solver tiles a window with a uniform tile") {
  const auto solved = solve_window(uniform_tile(), 4, 3);
  REQUIRE(solved);
  CHECK(solved->width == 4);
  CHECK(solved->height == 3);
  for (int c : solved->cells) CHECK(c == 0);
}

TEST_CASE("solver reports an unavoidable horizontal clash") {
  const TileSet ts = {tile(0, "a", "b", "c", "c")};
  CHECK_FALSE(solve_window(ts, 2, 1).has_value());
  CHECK(solve_window(ts, 1, 3).has_value());  // vertically it still works
}

TEST_CASE("solver honours fixed cells") {
  const TileSet ts = {tile(0, "a", "a", "a", "a"), tile(1, "a", "a", "a", "a")};
  const auto solved = solve_window(ts, 2, 2, {{{1, 1}, 1}});
  REQUIRE(solved);
  CHECK(solved->at(1, 1) == 1);
  CHECK(solved->at(0, 0) == 0);  // ascending order elsewhere
  CHECK_THROWS_AS(solve_window(ts, 2, 2, {{{5, 5}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_window(ts, 2, 2, {{{0, 0}, 9}}), std::invalid_argument);
}

TEST_CASE("solver solutions always satisfy the constraints") {
  std::mt19937 rng(303);
  int solved_count = 0;
  for (int round = 0; round < 300; ++round) {
    const TileSet ts = random_tileset(rng);
    std::uniform_int_distribution<int> dim(1, 4);
    const int w = dim(rng), h = dim(rng);
    const auto solved = solve_window(ts, w, h);
    if (!solved) continue;
    ++solved_count;
    CAPTURE(w, h, ts.size());
    REQUIRE(check_constraints(*solved, ts).empty());
  }
  CHECK(solved_count > 50);
}

TEST_CASE("a larger solved window restricts to a valid smaller one") {
  std::mt19937 rng(304);
  for (int round = 0; round < 200; ++round) {
    const TileSet ts = random_tileset(rng);
    std::uniform_int_distribution<int> dim(1, 3);
    const int w = dim(rng), h = dim(rng);
    const auto big = solve_window(ts, w + 1, h + 1);
    if (!big) continue;
    TileGrid small(w, h);
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < w; ++i) small.set(i, j, big->at(i, j));
    REQUIRE(check_constraints(small, ts).empty());
  }
}

TEST_CASE("the solver is deterministic") {
  std::mt19937 rng(305);
  for (int round = 0; round < 100; ++round) {
    const TileSet ts = random_tileset(rng);
    const auto a = solve_window(ts, 3, 3);
    const auto b = solve_window(ts, 3, 3);
    REQUIRE(a.has_value() == b.has_value());
    if (a) REQUIRE(a->cells == b->cells);
  }
}
