#include "fabric/grid.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace fabric;
using fabric::testing::make_rng;
using fabric::testing::random_spec;
using fabric::testing::uniform;

TEST_CASE("grid_line places lines by index and orientation") {
  const GridSpec half = GridSpec::make(1.0, 0.5, 0.0, 1.0);

  const auto v1 = grid_line(half, Orientation::vertical, 1);
  REQUIRE(v1.is_line());
  CHECK(v1.as_line().normal.x == 1.0);
  CHECK(v1.as_line().offset == doctest::Approx(0.5));

  const auto h0 = grid_line(half, Orientation::horizontal, 0);
  CHECK(h0.as_line().normal.y == 1.0);
  CHECK(h0.as_line().offset == doctest::Approx(0.0));

  const GridSpec wide = GridSpec::make(2.0, 0.0, 0.0, 1.0);
  CHECK(grid_line(wide, Orientation::vertical, -1).as_line().offset == doctest::Approx(-2.0));
}

TEST_CASE("cell_circle is the inscribed circle of its cell") {
  const GridSpec half = GridSpec::make(1.0, 0.5, 0.0, 1.0);
  const auto c00 = cell_circle(half, 0, 0);
  CHECK(c00.as_circle().center.x == doctest::Approx(0.0));
  CHECK(c00.as_circle().center.y == doctest::Approx(0.5));
  CHECK(c00.as_circle().radius == doctest::Approx(0.5));

  const auto c10 = cell_circle(half, 1, 0);
  CHECK(c10.as_circle().center.x == doctest::Approx(1.0));
  CHECK(c10.as_circle().center.y == doctest::Approx(0.5));

  const GridSpec wide = GridSpec::make(2.0, 0.0, 0.0, 1.0);
  const auto big = cell_circle(wide, 0, 0);
  CHECK(big.as_circle().center.x == doctest::Approx(1.0));
  CHECK(big.as_circle().center.y == doctest::Approx(1.0));
  CHECK(big.as_circle().radius == doctest::Approx(1.0));
}

TEST_CASE("cell circles touch their four bounding lines") {
  auto rng = make_rng(23);
  for (int i = 0; i < 50; ++i) {
    const GridSpec spec = random_spec(rng);
    const int k = static_cast<int>(uniform(rng, -4.0, 4.0));
    const int m = static_cast<int>(uniform(rng, -4.0, 4.0));
    const auto circle = cell_circle(spec, k, m);
    const double tol = 1e-12 * spec.d;
    for (const auto& line : {grid_line(spec, Orientation::vertical, k),
                             grid_line(spec, Orientation::vertical, k + 1),
                             grid_line(spec, Orientation::horizontal, m),
                             grid_line(spec, Orientation::horizontal, m + 1)}) {
      CHECK(static_cast<bool>(tangent(circle, line, tol)));
    }
  }
}

TEST_CASE("adjacent parallel grid lines are d apart") {
  auto rng = make_rng(29);
  for (int i = 0; i < 50; ++i) {
    const GridSpec spec = random_spec(rng);
    for (int k = -5; k < 5; ++k) {
      const double gap = grid_line(spec, Orientation::vertical, k + 1).as_line().offset -
                         grid_line(spec, Orientation::vertical, k).as_line().offset;
      CHECK(gap == doctest::Approx(spec.d).epsilon(1e-12));
    }
  }
}

TEST_CASE("classify_symmetry follows the carrier position") {
  auto at = [](double ax, double ay, double d = 1.0) {
    return classify_symmetry(GridSpec::make(d, ax, ay, 1.0));
  };
  CHECK(at(0.0, 0.0) == SymmetryGroup::D4);        // vertex
  CHECK(at(0.5, 0.5) == SymmetryGroup::D4);        // cell center
  CHECK(at(0.5, 0.0) == SymmetryGroup::D2);        // midpoint of a side
  CHECK(at(0.0, 0.5) == SymmetryGroup::D2);
  CHECK(at(0.3, 0.0) == SymmetryGroup::D1);        // on a side
  CHECK(at(0.3, 0.3) == SymmetryGroup::D1);        // on a diagonal
  CHECK(at(0.7, 0.3) == SymmetryGroup::D1);        // on the other diagonal
  CHECK(at(0.3, 0.1) == SymmetryGroup::C1);

  // scale-invariant: same picture at d = 2.7
  CHECK(at(0.0, 0.0, 2.7) == SymmetryGroup::D4);
  CHECK(at(1.35, 1.35, 2.7) == SymmetryGroup::D4);
  CHECK(at(1.35, 0.0, 2.7) == SymmetryGroup::D2);
  CHECK(at(0.81, 0.81, 2.7) == SymmetryGroup::D1);
  CHECK(at(0.81, 0.27, 2.7) == SymmetryGroup::C1);
}

TEST_CASE("classification is invariant under translation by d and axis swap") {
  auto rng = make_rng(31);
  for (int i = 0; i < 200; ++i) {
    const GridSpec spec = random_spec(rng);
    const SymmetryGroup base = classify_symmetry(spec);
    CHECK(classify_symmetry(GridSpec::make(spec.d, spec.ax + spec.d, spec.ay - spec.d,
                                           spec.r)) == base);
    CHECK(classify_symmetry(GridSpec::make(spec.d, spec.ay, spec.ax, spec.r)) == base);
  }
}

TEST_CASE("GridSpec::make validates and reduces offsets") {
  CHECK_THROWS_AS(GridSpec::make(0.0, 0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::make(1.0, 0.0, 0.0, -2.0), std::invalid_argument);
  const GridSpec reduced = GridSpec::make(1.0, 3.25, -0.75, 1.0);
  CHECK(reduced.ax == doctest::Approx(0.25));
  CHECK(reduced.ay == doctest::Approx(0.25));
}

TEST_CASE("grid spec round-trips through the flat config form") {
  const GridSpec spec = GridSpec::make(2.5, 0.625, 1.75, 0.3);
  const GridSpec back = grid_spec_from_config(to_config(spec));
  CHECK(back.d == spec.d);
  CHECK(back.ax == spec.ax);
  CHECK(back.ay == spec.ay);
  CHECK(back.r == spec.r);
  CHECK_THROWS_AS(grid_spec_from_config("bogus=1\n"), std::invalid_argument);
}
