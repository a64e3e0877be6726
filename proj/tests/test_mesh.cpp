#include <cmath>

#include "doctest.h"
#include "pbedg/errors.hpp"
#include "pbedg/mesh.hpp"

using namespace pbedg;

TEST_CASE("geometric mesh: ratio-2 construction at N=30") {
  const Mesh mesh = Mesh::geometric(30, 1e-3);
  CHECK(mesh.cells() == 30);
  CHECK(mesh.interface(0) == 0.0);
  CHECK(mesh.interface(1) == 1e-3);
  CHECK(mesh.interface(2) == doctest::Approx(2e-3).epsilon(1e-14));
  REQUIRE(mesh.ratio().has_value());
  CHECK(*mesh.ratio() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mesh.length() == doctest::Approx(1e-3 * std::pow(2.0, 29)).epsilon(1e-12));
  CHECK(mesh.width(0) == doctest::Approx(1e-3).epsilon(1e-14));
}

TEST_CASE("geometric mesh: doubling N takes the square root of the ratio") {
  const Mesh coarse = Mesh::geometric(30, 1e-3);
  const Mesh fine = Mesh::geometric(60, 1e-3);
  CHECK(*fine.ratio() * *fine.ratio() == doctest::Approx(*coarse.ratio()).epsilon(1e-12));
  CHECK(fine.length() == doctest::Approx(1e-3 * std::pow(2.0, 29.5)).epsilon(1e-12));
  // Coarse cells sit inside the finer run's slightly larger domain.
  CHECK(coarse.length() < fine.length());
}

TEST_CASE("locate: half-open cells, interface values resolve left") {
  const Mesh mesh = Mesh::geometric(30, 1e-3);
  CHECK(mesh.locate(1e-3) == 0);    // right endpoint of cell 0
  CHECK(mesh.locate(1.5e-3) == 1);
  CHECK(mesh.locate(mesh.interface(2)) == 1);
  CHECK(mesh.locate(mesh.length()) == 29);
  CHECK(mesh.locate(5e-4) == 0);
  CHECK_THROWS_AS(mesh.locate(0.0), OutOfDomain);
  CHECK_THROWS_AS(mesh.locate(-1.0), OutOfDomain);
  CHECK_THROWS_AS(mesh.locate(mesh.length() * 1.000001), OutOfDomain);
}

TEST_CASE("explicit interfaces: validation and uniform widths") {
  const Mesh mesh = Mesh::from_interfaces({0.0, 0.5, 1.0, 1.5, 2.0});
  CHECK(mesh.cells() == 4);
  CHECK_FALSE(mesh.ratio().has_value());
  for (int j = 0; j < 4; ++j) {
    CHECK(mesh.width(j) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mesh.midpoint(j) == doctest::Approx(0.25 + 0.5 * j).epsilon(1e-15));
  }
  CHECK_THROWS_AS(Mesh::from_interfaces({0.0, 1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(Mesh::from_interfaces({0.1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(Mesh::from_interfaces({0.0}), InvalidArgument);
}

TEST_CASE("gauss points map into the owning cell") {
  const Mesh mesh = Mesh::geometric(15, 1e-3);
  const auto rule = QuadratureRule::gauss(3);
  for (int j : {0, 7, 14}) {
    const auto pts = mesh.gauss_points(rule, j);
    REQUIRE(pts.size() == 3);
    for (double x : pts) {
      CHECK(x > mesh.interface(j));
      CHECK(x < mesh.interface(j + 1));
      CHECK(mesh.locate(x) == j);
    }
  }
}

TEST_CASE("geometric mesh: invalid arguments") {
  CHECK_THROWS_AS(Mesh::geometric(0, 1e-3), InvalidArgument);
  CHECK_THROWS_AS(Mesh::geometric(10, -1.0), InvalidArgument);
  CHECK_THROWS_AS(Mesh::geometric(10, 0.0), InvalidArgument);
}
