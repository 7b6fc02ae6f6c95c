#include "fabric/sangaku.hpp"

#include <cmath>

#include <doctest.h>

#include "test_support.hpp"

using namespace fabric;
using fabric::testing::make_rng;
using fabric::testing::uniform;

TEST_CASE("gumma identity on the worked chain") {
  const SangakuReport report = verify_gumma(2.0, 2.0);
  CHECK(report.pass);
  CHECK(report.lhs == doctest::Approx(7.0 * 26.0));
  CHECK(report.rhs == doctest::Approx(2.0 * 86.0 + 5.0 * 2.0));
  CHECK(report.residual == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("gumma identity on a parallel-lines strip") {
  const SangakuReport report = verify_gumma(1.0, 0.0);
  CHECK(report.pass);
  CHECK(report.lhs == doctest::Approx(7.0));
  CHECK(report.rhs == doctest::Approx(7.0));
}

TEST_CASE("gumma with D != 0 fails with residual 9D") {
  const SangakuReport report = verify_gumma(1.0, 2.0, 1.0);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.precondition_ok);
  CHECK(report.residual == doctest::Approx(9.0).epsilon(1e-9));
  CHECK_FALSE(report.diagnostic.empty());
}

TEST_CASE("property: gumma identity is parameter-free given D = 0") {
  auto rng = make_rng(47);
  for (int i = 0; i < 1000; ++i) {
    const double kappa0 = uniform(rng, 0.0, 10.0);
    const double delta = uniform(rng, 0.0, 10.0);
    const SangakuReport report = verify_gumma(kappa0, delta);
    CHECK(report.pass);
    CHECK(std::abs(report.residual) <= 1e-9 * std::max(1.0, std::abs(report.lhs)));
  }
}

TEST_CASE("menuma closed form gives kappa7 = 7/r") {
  const SangakuReport unit = verify_menuma(1.0);
  CHECK(unit.pass);
  CHECK(unit.lhs == doctest::Approx(7.0));

  const SangakuReport scaled = verify_menuma(2.0);
  CHECK(scaled.pass);
  CHECK(scaled.lhs == doctest::Approx(3.5));

  // intermediate quantities of the solution
  auto value = [&](const SangakuReport& r, const char* name) {
    for (const auto& [key, v] : r.quantities)
      if (key == name) return v;
    FAIL("missing quantity ", name);
    return 0.0;
  };
  CHECK(value(unit, "kappa0") == doctest::Approx(7.0 / 6.0));
  CHECK(value(unit, "D") == doctest::Approx(-1.0 / 6.0));
  CHECK(value(unit, "r7") == doctest::Approx(1.0 / 7.0));
}

TEST_CASE("menuma geometry: measured curvatures match the closed form") {
  for (double r : {0.5, 1.0, 3.0}) {
    const Chain chain = construct_menuma_geometry(r, 8);

    CHECK(chain.kappa(1) == doctest::Approx(1.0 / r).epsilon(1e-12));
    CHECK(chain.kappa(7) * r == doctest::Approx(7.0).epsilon(1e-8));
    CHECK(chain.kappa(0) == doctest::Approx(7.0 / (6.0 * r)).epsilon(1e-8));
    CHECK(chain.kappa(2) == doctest::Approx(7.0 / (6.0 * r)).epsilon(1e-8));

    // bounding circles of radii 3r and 2r, internally tangent at the carrier
    REQUIRE(chain.bounding[0].is_circle());
    REQUIRE(chain.bounding[1].is_circle());
    CHECK(chain.bounding[0].as_circle().radius == doctest::Approx(2.0 * r).epsilon(1e-12));
    CHECK(chain.bounding[1].as_circle().radius == doctest::Approx(3.0 * r).epsilon(1e-12));
    CHECK(distance(chain.bounding[0], Point{0.0, 0.0}) <= 1e-12 * r);
    CHECK(distance(chain.bounding[1], Point{0.0, 0.0}) <= 1e-12 * r);

    // the whole window obeys the closed form anchored at (kappa0, kappa1)
    const double kappa0 = chain.kappa(0);
    const double kappa1 = chain.kappa(1);
    const double delta = 1.0 / (6.0 * r);
    for (int n = chain.n_min; n <= chain.n_max; ++n) {
      const double predicted = chain_closed_form(kappa0, kappa1, delta, n);
      CHECK(chain.kappa(n) ==
            doctest::Approx(predicted).epsilon(1e-8));
    }
  }
}

TEST_CASE("menuma geometry is symmetric about the largest circle") {
  const Chain chain = construct_menuma_geometry(1.0, 10);
  for (int n = chain.n_min; n <= chain.n_max; ++n) {
    const int mirror = 2 - n;
    if (!chain.has(mirror)) continue;
    CHECK(chain.kappa(n) == doctest::Approx(chain.kappa(mirror)).epsilon(1e-8));
  }
}

TEST_CASE("menuma chain members are mutually and boundary tangent") {
  const Chain chain = construct_menuma_geometry(1.0, 8);
  for (int n = chain.n_min; n < chain.n_max; ++n) {
    const double tol = 1e-8 * std::max({1.0, scale_of(chain.member(n)),
                                        scale_of(chain.member(n + 1))});
    CHECK(static_cast<bool>(tangent(chain.member(n), chain.member(n + 1), tol)));
  }
  for (int n = chain.n_min; n <= chain.n_max; ++n)
    for (const auto& bound : chain.bounding)
      CHECK(static_cast<bool>(tangent(chain.member(n), bound,
                                      1e-8 * std::max(1.0, scale_of(bound)))));
}

TEST_CASE("sangaku input validation") {
  CHECK_THROWS_AS(verify_menuma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(construct_menuma_geometry(1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(construct_menuma_geometry(-1.0, 8), std::invalid_argument);
}

TEST_CASE("sangaku reports serialize") {
  const SangakuReport report = verify_menuma(1.0);
  CHECK(report.to_text().find("PASS") != std::string::npos);
  CHECK(report.to_csv_row().find("menuma-1828") != std::string::npos);
  CHECK(SangakuReport::csv_header().find("residual") != std::string::npos);
}
