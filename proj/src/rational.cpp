#include "cluster_crystal/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "cluster_crystal/errors.hpp"

namespace cluster_crystal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw UsageError("invalid_rational", "cannot parse rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw UsageError("invalid_rational", "zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational ratio(long p, long q) {
  if (q == 0) throw DomainError("division_by_zero", "zero denominator");
  Rational out(p);
  out /= q;
  return out;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Rational power(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw DomainError("division_by_zero", "zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out = exponent > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

long to_integer(const Rational& value) {
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw DomainError("not_integral", "expected an integer, got " + format_rational(value));
  }
  return value.get_num().get_si();
}

}  // namespace cluster_crystal
