#include <doctest.h>

#include "ratcensus/census.hpp"
#include "ratcensus/errors.hpp"
#include "ratcensus/rdecomp.hpp"
#include "reference_tables.hpp"

using namespace ratcensus;

TEST_CASE("binom") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("count_r") {
  CHECK(count_r(8, 5) == 13);
  CHECK(count_r(7, 4) == 7);
  // row 15 of the published table: s=8 is 1163, s=9 is 1106
  CHECK(count_r(15, 9) == 1106);
  CHECK(count_r(15, 8) == 1163);
  CHECK(count_r(2, 2) == 1);
  CHECK(count_r(5, 6) == 0);
}

TEST_CASE("count_rs") {
  CHECK(count_rs(12, 6) == 10);
  CHECK(count_rs(9, 8) == 0);
  for (int n = 2; n <= 30; ++n) {
    for (int s = 3; s <= n; s += 2) REQUIRE(count_rs(n, s) == 0);
  }
}

TEST_CASE("published type I/III and symmetric tables") {
  for (const auto& row : reference::kTypeOneThree) {
    BigInt total = 0;
    for (int s = 2; s <= row.n; ++s) total += count_r(row.n, s);
    CHECK(total == row.total);
    for (const auto& cell : row.cells) CHECK(count_r(row.n, cell.s) == cell.count);
  }
  for (const auto& row : reference::kSymmetric) {
    BigInt total = 0;
    for (int s = 2; s <= row.n; ++s) total += count_rs(row.n, s);
    CHECK(total == row.total);
    for (const auto& cell : row.cells) CHECK(count_rs(row.n, cell.s) == cell.count);
  }
}

TEST_CASE("totals") {
  CHECK(rk_total(7) == 14);
  CHECK(rk_total(9) == 48);
  CHECK(rk_total(2) == 0);
  CHECK(rl_total(2) == 2);
  CHECK(rl_total(7) == 10);
  CHECK(rl_total(9) == 42);
  CHECK(rl_total(3) == 0);
}

TEST_CASE("psi and phi") {
  CHECK(psi(7, 2) == 8);
  CHECK(psi(7, 3) == 2);
  for (int n = 3; n <= 20; ++n) CHECK(psi(n, 0) == 0);
  CHECK(phi(6, 1) == 6);
  CHECK(phi(2, 0) == 2);
  CHECK(phi(7, 0) == 0);
  CHECK(psi(7, 10) == 0);
  CHECK(phi(7, 10) == 0);
}

TEST_CASE("averages") {
  CHECK(avg_genus_knots(7) == Rational(13, 7));
  CHECK(avg_genus_links(7) == Rational(7, 5));
  CHECK(avg_genus_links(2) == 0);
  CHECK_THROWS_AS(avg_genus_knots(2), DomainError);
  CHECK_THROWS_AS(avg_genus_links(3), DomainError);
}

TEST_CASE("oracle agrees with the closed forms") {
  for (int n = 2; n <= 14; ++n) {
    for (int s = 2; s <= n; ++s) {
      REQUIRE(oracle_count(n, s) == count_r(n, s));
      REQUIRE(oracle_symmetric_count(n, s) == count_rs(n, s));
    }
  }
}

TEST_CASE("definitional consistency of psi and phi") {
  for (int n = 3; n <= 40; ++n) {
    for (int g = 0; g <= n; ++g) {
      const int s = n + 1 - 2 * g;
      const BigInt expected = s >= 2 ? count_lambda(n, s) : BigInt(0);
      REQUIRE(psi(n, g) == expected);
    }
  }
  for (int n = 2; n <= 40; ++n) {
    for (int g = 0; g <= n; ++g) {
      const int s = n - 2 * g;
      const BigInt expected = s >= 2 ? count_lambda(n, s) : BigInt(0);
      REQUIRE(phi(n, g) == expected);
    }
  }
}

TEST_CASE("partition, grand total and parity") {
  for (int n = 3; n <= 60; ++n) {
    BigInt knots = 0, links = 0, grand = 0;
    for (int g = 0; g <= n; ++g) {
      knots += psi(n, g);
      links += phi(n, g);
    }
    for (int s = 2; s <= n; ++s) {
      grand += count_lambda(n, s);
      REQUIRE(count_lambda(n, s) == count_r(n, s) + count_rs(n, s));
      REQUIRE(count_lambda(n, s) >= 0);
    }
    REQUIRE(knots == rk_total(n));
    REQUIRE(links == rl_total(n));
    REQUIRE(grand == rk_total(n) + rl_total(n));
  }
}

TEST_CASE("averages stay below n/2") {
  for (int n = 3; n <= 80; ++n) {
    REQUIRE(avg_genus_knots(n) < Rational(n, 2));
    if (n != 3) REQUIRE(avg_genus_links(n) < Rational(n, 2));
  }
}

TEST_CASE("tables") {
  const CountTable lambda = make_table(TableKind::Lambda, 15);
  for (const auto& row : reference::kAllLinks) {
    for (const auto& cell : row.cells) CHECK(lambda.at(row.n, cell.s) == cell.count);
  }
  CHECK(lambda.at(15, 20) == 0);
  CHECK(lambda.at(16, 3) == 0);

  const CountTable psi_table = make_table(TableKind::Psi, 12);
  CHECK(psi_table.at(7, 2) == 8);
  CHECK(table_min_n(TableKind::Psi) == 3);
  CHECK(table_index_range(TableKind::Psi, 7) == std::pair{1, 3});
  CHECK(table_index_range(TableKind::Phi, 7) == std::pair{0, 3});
  CHECK(table_index_range(TableKind::R, 7) == std::pair{2, 7});

  for (TableKind k : {TableKind::R, TableKind::RS, TableKind::Lambda, TableKind::Psi, TableKind::Phi}) {
    CHECK(table_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(table_kind_from_string("nope"), InputError);
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(Rational(13, 7)) == "1.857142857143");
  CHECK(to_decimal(Rational(-1, 3)) == "-0.333333333333");
  CHECK(to_decimal(Rational(1, 2), 0) == "1");
  CHECK(to_decimal(Rational(0)) == "0.000000000000");
  CHECK(to_decimal(Rational(BigInt(-1), BigInt("1000000000000000"))) == "0.000000000000");
  CHECK(to_decimal(Rational(5, 2), 3) == "2.500");
}
