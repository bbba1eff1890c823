#include "ratcensus/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratcensus/census.hpp"
#include "ratcensus/errors.hpp"

namespace ratcensus {

namespace {

BigInt row_sum_r(int n) {
  BigInt sum = 0;
  for (int s = 2; s <= n; ++s) sum += count_r(n, s);
  return sum;
}

BigInt row_sum_rs(int n) {
  BigInt sum = 0;
  for (int s = 2; s <= n; ++s) sum += count_rs(n, s);
  return sum;
}

BigInt pow2(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect_equal(const BigInt& lhs, const BigInt& rhs, const std::string& where) {
    ++result_.checks;
    if (lhs == rhs) return;
    if (result_.passed) {
      std::ostringstream os;
      os << where << ": " << lhs.get_str() << " != " << rhs.get_str();
      result_.counterexample = os.str();
    }
    result_.passed = false;
  }

  IdentityCheck finish() { return std::move(result_); }

 private:
  IdentityCheck result_;
};

std::string at(int n, int k) {
  return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool non_increasing(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace

GenusSeries genus_series(LinkKind kind, int first, int last) {
  if (first > last) throw InputError("empty n-range");
  GenusSeries series{kind, {}};
  for (int n = std::max(first, 2); n <= last; ++n) {
    // no knots at n = 2 and no two-component links at n = 3
    const BigInt population = kind == LinkKind::knot ? rk_total(n) : rl_total(n);
    if (population == 0) continue;
    series.points.emplace_back(n, kind == LinkKind::knot ? avg_genus_knots(n) : avg_genus_links(n));
  }
  return series;
}

FitResult fit_points(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DomainError("a fit needs at least three points");
  const double count = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
    syy += (y - mean_y) * (y - mean_y);
  }
  if (sxx == 0.0) throw DomainError("degenerate fit: all abscissae are equal");

  FitResult out;
  out.slope = sxy / sxx;
  out.intercept = mean_y - out.slope * mean_x;
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (out.slope * x + out.intercept);
    ss_res += r * r;
  }
  out.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return out;
}

FitResult fit(const GenusSeries& series) {
  std::vector<std::pair<double, double>> points;
  points.reserve(series.points.size());
  for (const auto& [n, avg] : series.points) points.emplace_back(n, avg.get_d());
  return fit_points(points);
}

std::vector<IdentityCheck> check_identities(int max_n) {
  if (max_n < 6) throw InputError("identity checks need max_n >= 6");
  std::vector<IdentityCheck> out;

  Checker column("column-addition");
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 2; 2 * k <= n; ++k) {
      column.expect_equal(count_r(n, 2 * k - 1) + count_r(n, 2 * k), count_r(n + 1, 2 * k),
                          at(n, k));
    }
  }
  out.push_back(column.finish());

  Checker jacobsthal("jacobsthal-row-totals");
  for (int n = 1; n <= max_n; ++n) {
    const BigInt expected = (pow2(n) - (n % 2 == 0 ? 1 : -1)) / 3;
    jacobsthal.expect_equal(row_sum_r(n + 1), expected, "n=" + std::to_string(n));
  }
  out.push_back(jacobsthal.finish());

  Checker binomial("rs-even-binomial-rows");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) binomial.expect_equal(count_rs(2 * n, 2 * k), binom(n - 1, k - 1), at(n, k));
    binomial.expect_equal(row_sum_rs(2 * n), pow2(n - 1), "total n=" + std::to_string(n));
  }
  out.push_back(binomial.finish());

  Checker odd_rows("rs-odd-row-totals");
  for (int n = 1; n <= max_n; ++n) {
    odd_rows.expect_equal(row_sum_rs(2 * n + 1), row_sum_r(n + 1), "n=" + std::to_string(n));
  }
  out.push_back(odd_rows.finish());
  return out;
}

std::vector<ShapeRow> shape_report(int max_n) {
  if (max_n < 5) throw InputError("shape report needs max_n >= 5");
  std::vector<ShapeRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<BigInt> values;
    for (int s = 2; s <= n; ++s) values.push_back(count_lambda(n, s));

    ShapeRow row;
    row.n = n;
    row.expected_argmax = n % 2 == 1 ? (n + 1) / 2 : (n + 2) / 2;
    row.maximum = *std::max_element(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == row.maximum) row.argmax.push_back(static_cast<int>(i) + 2);
    }
    // weakly unimodal: no entry is strictly below something on each side
    row.unimodal = true;
    BigInt left_peak = 0;
    for (std::size_t i = 0; i < values.size() && row.unimodal; ++i) {
      const BigInt right_peak = *std::max_element(values.begin() + i, values.end());
      if (values[i] < left_peak && values[i] < right_peak) row.unimodal = false;
      left_peak = std::max(left_peak, values[i]);
    }
    if (row.argmax.size() > 1) {
      row.status = ShapeStatus::tie;
    } else {
      row.status = row.argmax.front() == row.expected_argmax ? ShapeStatus::ok : ShapeStatus::mismatch;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ConjectureReport conjecture_probe(const std::vector<int>& n_list) {
  ConjectureReport report;
  const Rational quarter(1, 4);
  const Rational half(1, 2);
  std::vector<Rational> knot_gaps;
  std::vector<Rational> link_gaps;
  for (int n : n_list) {
    if (n < 3) throw InputError("conjecture probe needs n >= 3");
    ConjectureRow row;
    row.n = n;
    row.knot_ratio = avg_genus_knots(n) / n;
    row.knot_gap = quarter - row.knot_ratio;
    row.below_half = row.knot_ratio < half;
    knot_gaps.push_back(abs_rational(row.knot_gap));
    if (rl_total(n) != 0) {
      row.link_ratio = Rational(avg_genus_links(n) / n);
      row.link_gap = Rational(quarter - *row.link_ratio);
      row.below_half = row.below_half && *row.link_ratio < half;
      link_gaps.push_back(abs_rational(*row.link_gap));
    }
    report.rows.push_back(std::move(row));
  }
  report.knot_gap_shrinking = non_increasing(knot_gaps);
  report.link_gap_shrinking = non_increasing(link_gaps);
  return report;
}

std::string to_string(ShapeStatus s) {
  switch (s) {
    case ShapeStatus::ok: return "ok";
    case ShapeStatus::tie: return "tie";
    case ShapeStatus::mismatch: return "mismatch";
  }
  return "?";
}

std::string to_string(LinkKind k) { return k == LinkKind::knot ? "knot" : "link"; }

}  // namespace ratcensus
