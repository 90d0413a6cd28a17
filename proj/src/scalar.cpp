#include "rectcolor/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rectcolor {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Scalar(mpz_class(std::string(num), 10), d);
  } else {
    auto dot = s.find('.');
    auto int_part = s.substr(0, dot);
    std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (dot != std::string_view::npos && frac_part.empty()))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    value = Scalar(mpz_class(digits, 10), den);
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Scalar& v) { return v.get_str(10); }

double to_double(const Scalar& v) { return v.get_d(); }

Scalar dyadic_floor(double v) {
  if (!(v > 0.0)) return Scalar(0);
  mpz_class num(std::ldexp(v, 64));  // truncation == floor for v > 0
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace rectcolor
