#include <doctest.h>

#include <algorithm>

#include "ratcensus/analysis.hpp"
#include "ratcensus/census.hpp"
#include "ratcensus/errors.hpp"

using namespace ratcensus;

TEST_CASE("fit_points") {
  const FitResult f = fit_points({{1, 1}, {2, 2}, {3, 3}});
  CHECK(f.slope == doctest::Approx(1.0));
  CHECK(f.intercept == doctest::Approx(0.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_points({{2, 1}, {2, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(fit_points({{1, 1}, {2, 2}}), DomainError);

  const FitResult noisy = fit_points({{0, 0}, {1, 2}, {2, 1}, {3, 3}});
  CHECK(noisy.r_squared > 0.0);
  CHECK(noisy.r_squared < 1.0);
}

TEST_CASE("genus series") {
  const GenusSeries knots = genus_series(LinkKind::knot, 3, 50);
  CHECK(knots.points.size() == 48);
  CHECK(knots.points.front().first == 3);
  const GenusSeries links = genus_series(LinkKind::link, 2, 50);
  // no two-component link has crossing number 3
  CHECK(links.points.size() == 48);
  CHECK(std::none_of(links.points.begin(), links.points.end(),
                     [](const auto& p) { return p.first == 3; }));
  for (const auto& [n, avg] : knots.points) REQUIRE(avg > 0);
}

TEST_CASE("average-genus fits") {
  const FitResult knots = fit(genus_series(LinkKind::knot, 3, 50));
  CHECK(std::abs(knots.slope - 0.2495) <= 0.005);
  CHECK(knots.r_squared >= 0.999);
  const FitResult links = fit(genus_series(LinkKind::link, 2, 50));
  CHECK(std::abs(links.slope - 0.2499) <= 0.005);
  CHECK(links.r_squared >= 0.999);
}

TEST_CASE("published fit coefficients come from n = 4..51") {
  const FitResult knots = fit(genus_series(LinkKind::knot, 4, 51));
  CHECK(std::abs(knots.slope - 0.249541338) < 1e-9);
  CHECK(std::abs(knots.intercept - 0.100479927) < 1e-9);
  const FitResult links = fit(genus_series(LinkKind::link, 4, 51));
  CHECK(std::abs(links.slope - 0.249967706) < 1e-9);
  CHECK(std::abs(links.intercept - (-0.41563816)) < 1e-8);
}

TEST_CASE("identity examples") {
  CHECK(count_r(14, 5) + count_r(14, 6) == count_r(15, 6));
  CHECK(count_r(15, 6) == 541);
  BigInt rs18 = 0, rs21 = 0, r11 = 0;
  for (int s = 2; s <= 21; ++s) {
    rs18 += count_rs(18, s);
    rs21 += count_rs(21, s);
    r11 += count_r(11, s);
  }
  CHECK(rs18 == 256);
  CHECK(rs21 == 341);
  CHECK(r11 == 341);
}

TEST_CASE("check_identities") {
  const auto report = check_identities(30);
  REQUIRE(report.size() == 4);
  for (const auto& id : report) {
    CAPTURE(id.name);
    CHECK(id.passed);
    CHECK(id.checks > 0);
    CHECK_FALSE(id.counterexample.has_value());
  }
  CHECK_THROWS_AS(check_identities(5), InputError);
}

TEST_CASE("shape report") {
  const auto rows = shape_report(15);
  const auto row = [&](int n) { return *std::find_if(rows.begin(), rows.end(), [n](const ShapeRow& r) { return r.n == n; }); };
  CHECK(row(15).argmax == std::vector<int>{8});
  CHECK(row(15).maximum == 1176);
  CHECK(row(15).status == ShapeStatus::ok);
  CHECK(row(14).argmax == std::vector<int>{8});
  CHECK(row(4).argmax == std::vector<int>{2, 4});
  CHECK(row(4).status == ShapeStatus::tie);
  // the published row 8 (2,5,13,13,18,9,4) also peaks one step left of (n+2)/2
  CHECK(row(8).argmax == std::vector<int>{4});
  CHECK(row(8).status == ShapeStatus::mismatch);
  for (const auto& r : rows) {
    if (r.n >= 5) CHECK(r.unimodal);
  }
  CHECK_THROWS_AS(shape_report(4), InputError);
}

TEST_CASE("conjecture probe") {
  const auto report = conjecture_probe({3, 7, 10, 20, 50, 100});
  REQUIRE(report.rows.size() == 6);
  CHECK_FALSE(report.rows[0].link_ratio.has_value());
  CHECK(report.rows[1].knot_ratio == Rational(13, 49));
  CHECK(*report.rows[1].link_ratio == Rational(1, 5));
  CHECK(report.rows[2].knot_ratio == Rational(22, 85));
  CHECK(*report.rows[2].link_ratio == Rational(7, 34));
  const auto& hundred = report.rows[5];
  CHECK(hundred.knot_ratio ==
        Rational("662435469910932378212686918087/2640938750475477919784798344525"));
  CHECK(*hundred.link_ratio ==
        Rational("1298461552317116873364455263801/5281877500950983987067267754700"));
  CHECK(hundred.knot_ratio > Rational(24, 100));
  CHECK(hundred.knot_ratio < Rational(26, 100));
  for (const auto& r : report.rows) CHECK(r.below_half);
  CHECK_THROWS_AS(conjecture_probe({2}), InputError);
}
