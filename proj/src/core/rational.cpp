#include "core/rational.hpp"

#include <cctype>

#include "core/error.hpp"

namespace reeb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw ParseError("empty number");
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else {
    auto dot = s.find('.');
    std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw ParseError("malformed number '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (dot != std::string_view::npos && !frac_part.empty() && !all_digits(frac_part)) ||
        (dot != std::string_view::npos && frac_part.empty()))
      throw ParseError("malformed number '" + std::string(text) + "'");
    std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
    mpz_class n(digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_part.size());
    result = Rational(n, d);
    result.canonicalize();
  }
  if (negative) result = -result;
  return result;
}

std::string format_rational(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str();

  unsigned places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * (scale / value.get_den());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace reeb
