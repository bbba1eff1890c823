#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcensus/bigint.hpp"
#include "ratcensus/rdecomp.hpp"

namespace ratcensus {

struct GenusSeries {
  LinkKind kind = LinkKind::knot;
  std::vector<std::pair<int, Rational>> points;  // n strictly increasing
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Average genus for every n in [first, last] whose population is non-empty.
GenusSeries genus_series(LinkKind kind, int first, int last);

/// Ordinary least squares of average genus against n.
FitResult fit(const GenusSeries& series);

/// Least squares over raw (x, y) points; DomainError when all x coincide or
/// fewer than three points are given.
FitResult fit_points(const std::vector<std::pair<double, double>>& points);

struct IdentityCheck {
  std::string name;
  long checks = 0;
  bool passed = true;
  std::optional<std::string> counterexample;  // first failure only
};

/// Verifies the four sequence identities for every running index up to max_n:
///   column addition  R(n, 2k-1) + R(n, 2k) = R(n+1, 2k), k >= 2, n >= 2k
///   Jacobsthal       sum_s R(n+1, s) = (2^n - (-1)^n) / 3
///   binomial rows    RS(2n, 2k) = C(n-1, k-1) and sum_s RS(2n, s) = 2^(n-1)
///   odd RS rows      sum_s RS(2n+1, s) = sum_s R(n+1, s)
std::vector<IdentityCheck> check_identities(int max_n);

enum class ShapeStatus { ok, tie, mismatch };

struct ShapeRow {
  int n = 0;
  bool unimodal = false;
  std::vector<int> argmax;  // every s attaining the maximum
  int expected_argmax = 0;
  BigInt maximum;
  ShapeStatus status = ShapeStatus::ok;
};

/// Bell-shape observation on Lambda_n(s): unimodality and the location of the
/// peak. Observational; ties are flagged, not failed.
std::vector<ShapeRow> shape_report(int max_n);

struct ConjectureRow {
  int n = 0;
  Rational knot_ratio;  // <g>_K(n) / n
  Rational knot_gap;    // 1/4 - knot_ratio
  // empty at n = 3, where no two-component link exists
  std::optional<Rational> link_ratio;  // <g>_L(n) / n
  std::optional<Rational> link_gap;
  bool below_half = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool knot_gap_shrinking = false;  // |gap| non-increasing along the list
  bool link_gap_shrinking = false;
};

ConjectureReport conjecture_probe(const std::vector<int>& n_list);

std::string to_string(ShapeStatus s);
std::string to_string(LinkKind k);

}  // namespace ratcensus
