#pragma once

#include <map>
#include <string>
#include <utility>

#include "ratcensus/bigint.hpp"

namespace ratcensus {

/// C(a, b), zero whenever b < 0, a < 0 or a < b.
BigInt binom(long a, long b);

/// Type I/III R-decompositions with n crossings and s Seifert circles.
BigInt count_r(int n, int s);

/// Reversal-symmetric type III R-decompositions; zero for odd s.
BigInt count_rs(int n, int s);

/// count_r + count_rs: oriented rational knots/links with n crossings and s
/// Seifert circles in a minimal diagram.
BigInt count_lambda(int n, int s);

/// Rational knots with n crossings (closed form).
BigInt rk_total(int n);

/// Oriented rational two-component links with n crossings (closed form).
BigInt rl_total(int n);

/// Knots with crossing number n and genus g, explicit sum.
BigInt psi(int n, int g);

/// Oriented links with crossing number n and genus g, explicit sum.
BigInt phi(int n, int g);

/// Exact averages. Throw DomainError when the population is empty.
Rational avg_genus_knots(int n);
Rational avg_genus_links(int n);

enum class TableKind { R, RS, Lambda, Psi, Phi };

std::string to_string(TableKind k);
TableKind table_kind_from_string(const std::string& name);

/// Exact counts indexed by (n, s) for R/RS/Lambda and by (n, g) for Psi/Phi.
/// Only in-range indices are stored; lookups outside them read as zero.
struct CountTable {
  TableKind kind = TableKind::R;
  int max_n = 0;
  std::map<std::pair<int, int>, BigInt> entries;

  BigInt at(int n, int index) const;
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// First crossing number and index range stored for each kind.
int table_min_n(TableKind kind) noexcept;
std::pair<int, int> table_index_range(TableKind kind, int n) noexcept;

CountTable make_table(TableKind kind, int max_n);

}  // namespace ratcensus
