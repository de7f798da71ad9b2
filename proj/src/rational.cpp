#include "corrcast/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "corrcast/error.hpp"

namespace corrcast {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw SyntaxError("malformed number '" + std::string(original) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw SyntaxError("malformed number '" + std::string(original) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw SyntaxError("malformed number '" + std::string(original) + "'");
    digits = std::string(s);
  }
  Rational value{mpz_class(digits, 10)};
  if (exponent > 0)
    value *= Rational(pow10(static_cast<unsigned long>(exponent)));
  else if (exponent < 0)
    value /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw SyntaxError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(s, text);
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw PreconditionError("non-finite value has no rational form");
  Rational r(value);
  r.canonicalize();
  return r;
}

Rational snap_rational(double value, long denominator) {
  Rational scaled = exact_rational(value) * denominator;
  // round half away from zero
  mpz_class num = scaled.get_num();
  mpz_class den = scaled.get_den();
  mpz_class q;
  mpz_class twice = 2 * num + (num >= 0 ? den : mpz_class(-den));
  mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  Rational r(q, mpz_class(denominator));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str(10);
}

const Rational& ExtRational::finite() const {
  if (infinite_) throw PreconditionError("infinite value where a finite one is required");
  return value_;
}

double ExtRational::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

std::string ExtRational::str() const { return infinite_ ? std::string("inf") : to_string(value_); }

ExtRational& ExtRational::operator+=(const ExtRational& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

ExtRational operator-(const ExtRational& lhs, const Rational& rhs) {
  if (lhs.infinite_) return lhs;
  return ExtRational(Rational(lhs.value_ - rhs));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtRational parse_ext_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "INF") return ExtRational::infinity();
  return ExtRational(parse_rational(s));
}

}  // namespace corrcast
