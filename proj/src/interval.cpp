#include "eucmin/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "eucmin/errors.hpp"

namespace eucmin {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_si(long v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_si(out.lo_, v, MPFR_RNDD);
  mpfr_set_si(out.hi_, v, MPFR_RNDU);
  return out;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, v.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  if (lo > hi) raise(errc::internal, "interval endpoints out of order");
  Interval out(prec);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

namespace {

mpq_class mpfr_to_q(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) raise(errc::precision_exhausted, "non-finite interval endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

mpq_class Interval::lo_q() const { return mpfr_to_q(lo_); }
mpq_class Interval::hi_q() const { return mpfr_to_q(hi_); }

mpq_class Interval::width_q() const { return hi_q() - lo_q(); }

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

Interval Interval::operator-() const {
  Interval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval out(std::max(prec_, rhs.prec_));
  mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval out(std::max(prec_, rhs.prec_));
  mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator*(const Interval& rhs) const {
  mpfr_prec_t p = std::max(prec_, rhs.prec_);
  Interval out(p);
  mpfr_t t;
  mpfr_init2(t, p);
  // lo: min of the four products rounded down
  mpfr_mul(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  // hi: max of the four products rounded up
  mpfr_mul(out.hi_, lo_, rhs.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (rhs.contains_zero()) raise(errc::precision_exhausted, "interval division by interval containing zero");
  mpfr_prec_t p = std::max(prec_, rhs.prec_);
  Interval out(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_div(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, rhs.lo_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_div(out.hi_, lo_, rhs.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

Interval Interval::abs() const {
  Interval out(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  // straddles zero
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) raise(errc::invalid_input, "sqrt of interval with negative lower end");
  Interval out(prec_);
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::sqrt_clamped() const {
  if (mpfr_sgn(hi_) < 0) raise(errc::invalid_input, "sqrt_clamped of certainly-negative interval");
  Interval clamped(*this);
  if (mpfr_sgn(clamped.lo_) < 0) mpfr_set_zero(clamped.lo_, 1);
  return clamped.sqrt();
}

Interval Interval::square() const {
  Interval a = abs();
  Interval out(prec_);
  mpfr_mul(out.lo_, a.lo_, a.lo_, MPFR_RNDD);
  mpfr_mul(out.hi_, a.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::pow_int(long e) const {
  if (e == 0) return from_si(1, prec_);
  if (e < 0) return pow_int(-e).reciprocal();
  // positive even powers factor through abs; odd powers are monotone
  if (e % 2 == 0) {
    Interval a = abs();
    Interval out(prec_);
    mpfr_pow_si(out.lo_, a.lo_, e, MPFR_RNDD);
    mpfr_pow_si(out.hi_, a.hi_, e, MPFR_RNDU);
    return out;
  }
  Interval out(prec_);
  mpfr_pow_si(out.lo_, lo_, e, MPFR_RNDD);
  mpfr_pow_si(out.hi_, hi_, e, MPFR_RNDU);
  return out;
}

Interval Interval::root(unsigned long k) const {
  if (k == 0) raise(errc::invalid_input, "0th root");
  if (mpfr_sgn(lo_) < 0) raise(errc::invalid_input, "root of interval with negative lower end");
  Interval out(prec_);
  mpfr_rootn_ui(out.lo_, lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_, hi_, k, MPFR_RNDU);
  return out;
}

Interval Interval::reciprocal() const {
  if (contains_zero()) raise(errc::precision_exhausted, "reciprocal of interval containing zero");
  Interval out(prec_);
  mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::pow(const mpq_class& raw_exponent) const {
  if (mpfr_sgn(lo_) <= 0) raise(errc::invalid_input, "rational power needs positive base");
  mpq_class e = raw_exponent;
  e.canonicalize();
  if (sgn(e) == 0) return from_si(1, prec_);
  if (sgn(e) < 0) return pow(mpq_class(-e)).reciprocal();
  long num = 0, den = 0;
  if (e.get_num().fits_slong_p() && e.get_den().fits_slong_p()) {
    num = e.get_num().get_si();
    den = e.get_den().get_si();
  } else {
    raise(errc::invalid_input, "power exponent too large");
  }
  // x^(num/den) = (x^num)^(1/den); monotone in base for e > 0
  return pow_int(num).root(static_cast<unsigned long>(den));
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

namespace {

std::string mpfr_to_string(mpfr_srcptr x, size_t digits) {
  if (digits == 0) {
    // enough digits to reparse the value exactly at the same precision
    digits = static_cast<size_t>(mpfr_get_prec(x) * 0.30103) + 3;
  }
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x) < 0)
    raise(errc::internal, "mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

std::string Interval::lo_string(size_t digits) const { return mpfr_to_string(lo_, digits); }
std::string Interval::hi_string(size_t digits) const { return mpfr_to_string(hi_, digits); }

std::string Interval::to_string() const { return "[" + lo_string() + ", " + hi_string() + "]"; }

cmp3 compare(const Interval& a, const Interval& b) {
  if (mpfr_cmp(a.hi(), b.lo()) < 0) return cmp3::less;
  if (mpfr_cmp(a.lo(), b.hi()) > 0) return cmp3::greater;
  return cmp3::overlap;
}

bool certified_le(const Interval& a, const Interval& b) { return mpfr_cmp(a.hi(), b.lo()) <= 0; }
bool certified_gt(const Interval& a, const Interval& b) { return mpfr_cmp(a.lo(), b.hi()) > 0; }

}  // namespace eucmin
