#include <cmath>

#include "doctest.h"
#include "dude/geometry.hpp"
#include "dude/rng.hpp"

using dude::Point;
using dude::toroidal_distance;

TEST_CASE("toroidal distance of a point to itself is zero") {
  CHECK(toroidal_distance({12.5, 900.0}, {12.5, 900.0}, 1000.0) == 0.0);
}

TEST_CASE("toroidal distance wraps around the window edge") {
  CHECK(toroidal_distance({10.0, 0.0}, {990.0, 0.0}, 1000.0) ==
        doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("toroidal distance at the window diagonal midpoint") {
  // both axes wrap at exactly half the window
  CHECK(toroidal_distance({0.0, 0.0}, {500.0, 500.0}, 1000.0) ==
        doctest::Approx(707.10678118654755).epsilon(1e-12));
}

TEST_CASE("toroidal distance properties on random triples") {
  const double side = 2000.0;
  dude::RngStream rng(dude::RngKey(99).value());
  const double bound = side * std::sqrt(2.0) / 2.0;
  for (int i = 0; i < 1000; ++i) {
    const Point a{rng.next_double() * side, rng.next_double() * side};
    const Point b{rng.next_double() * side, rng.next_double() * side};
    const Point c{rng.next_double() * side, rng.next_double() * side};
    const double ab = toroidal_distance(a, b, side);
    const double ba = toroidal_distance(b, a, side);
    const double bc = toroidal_distance(b, c, side);
    const double ac = toroidal_distance(a, c, side);
    REQUIRE(ab == ba);
    REQUIRE(ab <= bound + 1e-9);
    REQUIRE(ac <= ab + bc + 1e-9);
  }
}
