#ifndef EUCMIN_QINTERVAL_HPP
#define EUCMIN_QINTERVAL_HPP

// Intervals with exact rational endpoints: no rounding anywhere, so the
// enclosure is the exact image of the operands.

#include <gmpxx.h>

#include "eucmin/interval.hpp"

namespace eucmin {

struct QInterval {
  mpq_class lo, hi;

  QInterval() : lo(0), hi(0) {}
  explicit QInterval(const mpq_class& v) : lo(v), hi(v) {}
  QInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {}
  static QInterval centered(const mpq_class& center, const mpq_class& radius) {
    return {center - radius, center + radius};
  }

  bool is_point() const { return lo == hi; }
  mpq_class width() const { return hi - lo; }

  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  QInterval operator-() const { return {-hi, -lo}; }

  QInterval operator*(const QInterval& o) const {
    mpq_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    mpq_class l = a, h = a;
    for (const mpq_class* v : {&b, &c, &d}) {
      if (*v < l) l = *v;
      if (*v > h) h = *v;
    }
    return {l, h};
  }

  QInterval abs() const {
    if (sgn(lo) >= 0) return *this;
    if (sgn(hi) <= 0) return -*this;
    return {mpq_class(0), std::max(mpq_class(-lo), hi)};
  }

  QInterval square() const {
    QInterval a = abs();
    return {a.lo * a.lo, a.hi * a.hi};
  }

  Interval to_interval(mpfr_prec_t prec) const { return Interval::from_endpoints(lo, hi, prec); }
};

}  // namespace eucmin

#endif
