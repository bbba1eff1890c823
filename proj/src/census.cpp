#include "ratcensus/census.hpp"

#include <algorithm>

#include "ratcensus/errors.hpp"

namespace ratcensus {

namespace {

// Floor and ceiling of a/b for b > 0, correct for negative a.
constexpr long fl(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr long cl(long a, long b) { return -fl(-a, b); }

// (-1)^e
constexpr long sgn_pow(long e) { return e % 2 == 0 ? 1 : -1; }

BigInt pow2(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigInt exact_third(const BigInt& v, const char* what) {
  if (v % 3 != 0) throw ConsistencyError(std::string(what) + " is not divisible by 3");
  return v / 3;
}

void require_n(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw InputError(std::string(what) + " requires n >= " + std::to_string(min_n) + ", got " +
                     std::to_string(n));
  }
}

}  // namespace

BigInt binom(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt count_r(int n, int s) {
  require_n(n, 2, "count_r");
  if (s < 2) throw InputError("count_r requires s >= 2");
  const long half_s_minus = fl(s - 1, 2);
  const long upper = std::min(cl(s - 1, 2), fl(n, 2) - half_s_minus);
  const long parity_shift = (sgn_pow(s) + 1) / 2;
  BigInt sum = 0;
  for (long j = 1; j <= upper; ++j) {
    sum += binom(j + half_s_minus - 1, 2 * j - parity_shift - 1) *
           binom(n - j - fl(s + 1, 2), j + half_s_minus - 1);
  }
  return sum;
}

BigInt count_rs(int n, int s) {
  require_n(n, 2, "count_rs");
  if (s < 2) throw InputError("count_rs requires s >= 2");
  const long prefactor = (sgn_pow(s) + 1) / 2;
  if (prefactor == 0) return 0;
  const long k = fl(s, 2);
  const long upper = std::min(k, fl(n, 2) + 1 - k);
  BigInt sum = 0;
  for (long j = 1; j <= upper; ++j) {
    const long parity_gate = (sgn_pow((j + k) * n) + 1) / 2;
    if (parity_gate == 0) continue;
    sum += binom(fl(j + k, 2) - 1, j - 1) * binom(fl(n, 2) - cl(j + k, 2), fl(j + k, 2) - 1);
  }
  return prefactor * sum;
}

BigInt count_lambda(int n, int s) { return count_r(n, s) + count_rs(n, s); }

BigInt rk_total(int n) {
  require_n(n, 2, "rk_total");
  BigInt v = pow2(n - 2);
  if (n % 2 == 1) v += pow2((n - 1) / 2);  // ((-1)^{n+1} + 1)/2 selects odd n
  v += (sgn_pow(n + 1) - 1) / 2;
  v += 1 - sgn_pow(fl(n, 2) * n);
  return exact_third(v, "rk_total numerator");
}

BigInt rl_total(int n) {
  require_n(n, 2, "rl_total");
  BigInt v = exact_third(pow2(n - 2) + 2 * sgn_pow(n), "rl_total numerator");
  if (n % 2 == 0) v += pow2((n - 2) / 2);
  return v;
}

BigInt psi(int n, int g) {
  require_n(n, 3, "psi");
  if (g < 0) throw InputError("psi requires g >= 0");
  const long fn = fl(n, 2);
  const long cn = cl(n, 2);
  const long upper = std::min<long>(g, cn - g);

  BigInt first = 0;
  for (long j = 1; j <= upper; ++j) {
    first += binom(fn + j - g - 1, 2 * j + (sgn_pow(n) - 1) / 2 - 1) *
             binom(cn + g - j - 1, fn + j - g - 1);
  }

  BigInt second = 0;
  const long odd_n = (1 - sgn_pow(n)) / 2;
  if (odd_n != 0) {
    for (long j = 1; j <= upper; ++j) {
      if ((sgn_pow(cn + j - g) + 1) / 2 == 0) continue;
      const long m = j + cn - g;
      second += binom(fl(m, 2) - 1, j - 1) * binom(fn - cl(m, 2), fl(m, 2) - 1);
    }
  }
  return first + odd_n * second;
}

BigInt phi(int n, int g) {
  require_n(n, 2, "phi");
  if (g < 0) throw InputError("phi requires g >= 0");
  const long fn = fl(n, 2);
  const long fn1 = fl(n - 1, 2);
  const long even_n = (sgn_pow(n) + 1) / 2;

  BigInt first = 0;
  const long upper_first = std::min<long>(g + even_n, fn - g);
  for (long j = 1; j <= upper_first; ++j) {
    first += binom(j + fn1 - g - 1, 2 * j - even_n - 1) * binom(fn + g - j, j + fn1 - g - 1);
  }

  BigInt second = 0;
  if (even_n != 0) {
    // upper limit g + 1, as printed; it differs from the knot case on purpose
    const long upper_second = std::min<long>(g + 1, fn - g);
    for (long j = 1; j <= upper_second; ++j) {
      const long m = fn + j - g;
      second += binom(fl(m, 2) - 1, j - 1) * binom(fn - cl(m, 2), fl(m, 2) - 1);
    }
  }
  return first + even_n * second;
}

Rational avg_genus_knots(int n) {
  require_n(n, 2, "avg_genus_knots");
  const BigInt total = rk_total(n);
  if (total == 0) throw DomainError("no rational knots with " + std::to_string(n) + " crossings");
  BigInt weighted = 0;
  for (int g = 1; g <= fl(n - 1, 2); ++g) weighted += g * psi(n, g);
  Rational avg(weighted, total);
  avg.canonicalize();
  return avg;
}

Rational avg_genus_links(int n) {
  require_n(n, 2, "avg_genus_links");
  const BigInt total = rl_total(n);
  if (total == 0) throw DomainError("no rational links with " + std::to_string(n) + " crossings");
  BigInt weighted = 0;
  for (int g = 0; g <= fl(n, 2); ++g) weighted += g * phi(n, g);
  Rational avg(weighted, total);
  avg.canonicalize();
  return avg;
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::R: return "R";
    case TableKind::RS: return "RS";
    case TableKind::Lambda: return "Lambda";
    case TableKind::Psi: return "Psi";
    case TableKind::Phi: return "Phi";
  }
  return "?";
}

TableKind table_kind_from_string(const std::string& name) {
  for (auto k : {TableKind::R, TableKind::RS, TableKind::Lambda, TableKind::Psi, TableKind::Phi}) {
    if (to_string(k) == name) return k;
  }
  throw InputError("unknown table kind '" + name + "'");
}

BigInt CountTable::at(int n, int index) const {
  const auto it = entries.find({n, index});
  return it == entries.end() ? BigInt(0) : it->second;
}

int table_min_n(TableKind kind) noexcept { return kind == TableKind::Psi ? 3 : 2; }

std::pair<int, int> table_index_range(TableKind kind, int n) noexcept {
  switch (kind) {
    case TableKind::Psi: return {1, static_cast<int>(fl(n - 1, 2))};
    case TableKind::Phi: return {0, static_cast<int>(fl(n, 2))};
    default: return {2, n};
  }
}

CountTable make_table(TableKind kind, int max_n) {
  CountTable table{kind, max_n, {}};
  for (int n = table_min_n(kind); n <= max_n; ++n) {
    const auto [lo, hi] = table_index_range(kind, n);
    for (int i = lo; i <= hi; ++i) {
      BigInt v;
      switch (kind) {
        case TableKind::R: v = count_r(n, i); break;
        case TableKind::RS: v = count_rs(n, i); break;
        case TableKind::Lambda: v = count_lambda(n, i); break;
        case TableKind::Psi: v = psi(n, i); break;
        case TableKind::Phi: v = phi(n, i); break;
      }
      table.entries.emplace(std::pair{n, i}, std::move(v));
    }
  }
  return table;
}

}  // namespace ratcensus
