#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ratcensus {

/// A reduced fraction p/q with 0 < p < q. Construction rejects anything else.
class Fraction {
 public:
  Fraction(std::int64_t p, std::int64_t q);

  /// Reduces p/q first; still rejects values outside (0, 1).
  static Fraction reduced(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  /// Parses "P/Q".
  static Fraction parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Odd-length vector of positive continued-fraction entries [a1, ..., a_{2m+1}].
class CFVector {
 public:
  explicit CFVector(std::vector<std::int64_t> entries);

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }

  CFVector reversed() const;

  /// Parses "a1,a2,...".
  static CFVector parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const CFVector&, const CFVector&) = default;
  friend auto operator<=>(const CFVector&, const CFVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Greedy Euclidean expansion, normalized to odd length by rewriting a
/// trailing entry a >= 2 as (a - 1, 1).
CFVector expand(const Fraction& f);

/// Value of 1/(a1 + 1/(a2 + ... + 1/a_{2m+1})). Throws InputError when the
/// value is not in (0, 1), which happens only for [1].
Fraction evaluate(const CFVector& v);

std::int64_t crossing_number(const CFVector& v) noexcept;

/// Every odd-length positive vector with the given entry sum, in
/// lexicographic order.
std::vector<CFVector> vectors_with_sum(std::int64_t n);

}  // namespace ratcensus
