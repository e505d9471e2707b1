#pragma once

#include <mpfr.h>

#include <string>

namespace pgst {

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Owning handle for an MPFR float of fixed significand precision.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions and round to nearest.
class MpReal {
 public:
  explicit MpReal(unsigned bits = kDefaultPrecisionBits);
  MpReal(double value, unsigned bits);
  MpReal(long value, unsigned bits);
  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  static MpReal pi(unsigned bits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  MpReal& operator+=(const MpReal& rhs);
  MpReal& operator-=(const MpReal& rhs);
  MpReal& operator*=(const MpReal& rhs);
  MpReal& operator/=(const MpReal& rhs);
  MpReal& operator*=(long rhs);
  MpReal& operator/=(long rhs);

  friend MpReal operator+(const MpReal& lhs, const MpReal& rhs);
  friend MpReal operator-(const MpReal& lhs, const MpReal& rhs);
  friend MpReal operator*(const MpReal& lhs, const MpReal& rhs);
  friend MpReal operator/(const MpReal& lhs, const MpReal& rhs);
  friend MpReal operator-(const MpReal& value);

  friend bool operator<(const MpReal& lhs, const MpReal& rhs) { return mpfr_less_p(lhs.value_, rhs.value_) != 0; }
  friend bool operator>(const MpReal& lhs, const MpReal& rhs) { return rhs < lhs; }
  friend bool operator<=(const MpReal& lhs, const MpReal& rhs) { return mpfr_lessequal_p(lhs.value_, rhs.value_) != 0; }
  friend bool operator>=(const MpReal& lhs, const MpReal& rhs) { return rhs <= lhs; }
  friend bool operator==(const MpReal& lhs, const MpReal& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }

 private:
  mpfr_t value_;
};

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
MpReal sin(const MpReal& x);
MpReal cos(const MpReal& x);
void sin_cos(const MpReal& x, MpReal& sine, MpReal& cosine);

/// x - k*y with k = round(x/y), so the result lies in [-y/2, y/2].
MpReal remainder(const MpReal& x, const MpReal& y);

}  // namespace pgst
