#include "pgst/mp_real.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

namespace pgst {
namespace {

mpfr_prec_t wider(const MpReal& a, const MpReal& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

}  // namespace

MpReal::MpReal(unsigned bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(value_, 1);
}

MpReal::MpReal(double value, unsigned bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

MpReal::MpReal(long value, unsigned bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(value_); }

MpReal MpReal::pi(unsigned bits) {
  MpReal out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

std::string MpReal::to_string(int digits) const {
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Re", std::max(digits - 1, 0), value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(text, &mpfr_free_str);
  return std::string(text);
}

MpReal& MpReal::operator+=(const MpReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator-=(const MpReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator*=(const MpReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator/=(const MpReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

MpReal operator+(const MpReal& lhs, const MpReal& rhs) {
  MpReal out(static_cast<unsigned>(wider(lhs, rhs)));
  mpfr_add(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

MpReal operator-(const MpReal& lhs, const MpReal& rhs) {
  MpReal out(static_cast<unsigned>(wider(lhs, rhs)));
  mpfr_sub(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

MpReal operator*(const MpReal& lhs, const MpReal& rhs) {
  MpReal out(static_cast<unsigned>(wider(lhs, rhs)));
  mpfr_mul(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

MpReal operator/(const MpReal& lhs, const MpReal& rhs) {
  MpReal out(static_cast<unsigned>(wider(lhs, rhs)));
  mpfr_div(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

MpReal operator-(const MpReal& value) {
  MpReal out(value.precision());
  mpfr_neg(out.value_, value.value_, MPFR_RNDN);
  return out;
}

MpReal abs(const MpReal& x) {
  MpReal out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

MpReal sqrt(const MpReal& x) {
  MpReal out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

MpReal sin(const MpReal& x) {
  MpReal out(x.precision());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

MpReal cos(const MpReal& x) {
  MpReal out(x.precision());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

void sin_cos(const MpReal& x, MpReal& sine, MpReal& cosine) {
  mpfr_sin_cos(sine.raw(), cosine.raw(), x.raw(), MPFR_RNDN);
}

MpReal remainder(const MpReal& x, const MpReal& y) {
  MpReal out(static_cast<unsigned>(wider(x, y)));
  mpfr_remainder(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return out;
}

}  // namespace pgst
