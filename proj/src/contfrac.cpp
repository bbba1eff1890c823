#include "ratcensus/contfrac.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "ratcensus/errors.hpp"

namespace ratcensus {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum)) {
    throw InputError("continued fraction value overflows 64-bit integers");
  }
  return sum;
}

void compositions_odd(std::int64_t remaining, std::vector<std::int64_t>& prefix,
                      std::vector<CFVector>& out) {
  if (remaining == 0) {
    if (prefix.size() % 2 == 1) out.emplace_back(prefix);
    return;
  }
  for (std::int64_t a = 1; a <= remaining; ++a) {
    prefix.push_back(a);
    compositions_odd(remaining - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Fraction::Fraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p <= 0 || q <= 0) throw InputError("fraction entries must be positive: " + str());
  if (p >= q) throw InputError("fraction must satisfy p < q: " + str());
  if (std::gcd(p, q) != 1) throw InputError("fraction is not reduced: " + str());
}

Fraction Fraction::reduced(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) {
    throw InputError("fraction entries must be positive: " + std::to_string(p) + "/" +
                     std::to_string(q));
  }
  const std::int64_t g = std::gcd(p, q);
  return Fraction(p / g, q / g);
}

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InputError("expected P/Q, got '" + text + "'");
  const std::string_view view(text);
  return Fraction(parse_int(view.substr(0, slash), "numerator"),
                  parse_int(view.substr(slash + 1), "denominator"));
}

std::string Fraction::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

CFVector::CFVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 == 0) {
    throw InputError("continued-fraction vector must have odd length, got " +
                     std::to_string(entries_.size()));
  }
  for (auto a : entries_) {
    if (a < 1) throw InputError("continued-fraction entries must be positive");
  }
}

CFVector CFVector::reversed() const {
  return CFVector(std::vector<std::int64_t>(entries_.rbegin(), entries_.rend()));
}

CFVector CFVector::parse(const std::string& text) {
  std::vector<std::int64_t> entries;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    entries.push_back(parse_int(rest.substr(0, comma), "vector entry"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return CFVector(std::move(entries));
}

std::string CFVector::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ']';
  return os.str();
}

CFVector expand(const Fraction& f) {
  std::vector<std::int64_t> entries;
  std::int64_t num = f.p();
  std::int64_t den = f.q();
  // num/den = 1/(den/num); peel a = floor(den/num) each step.
  while (num != 0) {
    entries.push_back(den / num);
    const std::int64_t rem = den % num;
    den = num;
    num = rem;
  }
  if (entries.size() % 2 == 0) {
    // last entry is >= 2 because the final step divides exactly with num < den
    entries.back() -= 1;
    entries.push_back(1);
  }
  return CFVector(std::move(entries));
}

Fraction evaluate(const CFVector& v) {
  // Fold from the back: x = 1/(a + x) with x = num/den.
  std::int64_t num = 0;
  std::int64_t den = 1;
  const auto entries = v.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const std::int64_t next_den = checked_mul_add(*it, den, num);
    num = den;
    den = next_den;
  }
  return Fraction::reduced(num, den);
}

std::int64_t crossing_number(const CFVector& v) noexcept {
  const auto e = v.entries();
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::vector<CFVector> vectors_with_sum(std::int64_t n) {
  std::vector<CFVector> out;
  std::vector<std::int64_t> prefix;
  if (n >= 1) compositions_odd(n, prefix, out);
  return out;
}

}  // namespace ratcensus
