#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace corrcast {

using Rational = mpq_class;

/// Parses "3", "-3/2", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (every double is dyadic).
Rational exact_rational(double value);

/// Nearest multiple of 1/denominator.
Rational snap_rational(double value, long denominator = 1'000'000'000'000L);

std::string to_string(const Rational& value);

/// Nonnegative-or-finite rational extended with +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  ExtRational(long value) : value_(value) {}

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws PreconditionError when infinite.
  const Rational& finite() const;

  double to_double() const;

  /// "inf" or the canonical fraction.
  std::string str() const;

  ExtRational& operator+=(const ExtRational& rhs);

  friend ExtRational operator+(ExtRational lhs, const ExtRational& rhs) { return lhs += rhs; }
  /// Subtracting a finite value; infinity minus anything finite stays infinite.
  friend ExtRational operator-(const ExtRational& lhs, const Rational& rhs);

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Accepts everything parse_rational does plus "inf"/"infinity".
ExtRational parse_ext_rational(std::string_view text);

}  // namespace corrcast
