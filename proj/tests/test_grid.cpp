#include <catch2/catch_amalgamated.hpp>

#include "tilint/grid.hpp"

using namespace tilint;

namespace {

// Test oracle: walk the enumeration by its defining recurrences instead of
// inverting the triangular number.
grid::Point pair_by_recurrence(std::uint64_t k) {
  grid::Point p{0, 0};
  for (std::uint64_t step = 0; step < k; ++step) {
    if (p.i > 0)
      p = {p.i - 1, p.j + 1};
    else
      p = {p.j + 1, 0};
  }
  return p;
}

// Every labeled node of the enumeration figure.
constexpr std::pair<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> kFigureNodes[] = {
    {0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {2, 0}},  {4, {1, 1}},
    {5, {0, 2}}, {6, {3, 0}}, {7, {2, 1}}, {8, {1, 2}},  {9, {0, 3}},
    {10, {4, 0}}, {14, {0, 4}}, {15, {5, 0}}, {20, {0, 5}}, {21, {6, 0}},
};

}  // namespace

TEST_CASE("pair reproduces the enumeration figure") {
  for (const auto& [k, ij] : kFigureNodes) {
    CAPTURE(k);
    CHECK(grid::pair(k) == grid::Point{ij.first, ij.second});
    CHECK(grid::num(ij.first, ij.second) == k);
  }
}

TEST_CASE("pair matches the recurrence oracle") {
  for (std::uint64_t k = 0; k <= 300; ++k) {
    CAPTURE(k);
    CHECK(grid::pair(k) == pair_by_recurrence(k));
  }
}

TEST_CASE("pair and num are mutually inverse") {
  for (std::uint64_t k = 0; k <= 1'000'000; ++k)
    REQUIRE(grid::num(grid::pair(k)) == k);
}

TEST_CASE("neighbour examples from the figure") {
  CHECK(grid::right(0) == 1);
  CHECK(grid::above(0) == 2);
  CHECK(grid::above(9) == 14);
  CHECK(grid::wall(2));
  CHECK(grid::floor(1));
  CHECK_FALSE(grid::wall(1));
  CHECK(grid::wall(0));
  CHECK(grid::floor(0));
  CHECK(grid::next(4) == 5);
}

TEST_CASE("above is right plus one") {
  for (std::uint64_t k = 0; k <= 10'000; ++k) {
    CAPTURE(k);
    REQUIRE(grid::above(k) == grid::right(k) + 1);
  }
}

TEST_CASE("right after a step depends on the wall") {
  for (std::uint64_t k = 0; k <= 10'000; ++k) {
    CAPTURE(k);
    const std::uint64_t expected = grid::wall(k) ? grid::above(k) + 1 : grid::above(k);
    REQUIRE(grid::right(k + 1) == expected);
  }
}

TEST_CASE("overflow is a checked error") {
  CHECK_THROWS_AS(grid::num(std::uint64_t{1} << 40, 0), std::overflow_error);
  CHECK_THROWS_AS(grid::pair(std::uint64_t{1} << 62), std::overflow_error);
}
