#include "ratcensus/bigint.hpp"

#include "ratcensus/errors.hpp"

namespace ratcensus {

std::string to_decimal(const Rational& v, int digits) {
  if (digits < 0) throw InputError("negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = v < 0;
  const Rational magnitude = negative ? Rational(-v) : v;
  // round half up on the magnitude: floor((2 * num * scale + den) / (2 * den))
  const BigInt scaled =
      (2 * magnitude.get_num() * scale + magnitude.get_den()) / (2 * magnitude.get_den());
  std::string body = scaled.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return (negative && scaled != 0 ? "-" : "") + body;
}

}  // namespace ratcensus
