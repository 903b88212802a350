#ifndef EUCMIN_INTERVAL_HPP
#define EUCMIN_INTERVAL_HPP

// Floating-point interval [lo, hi] with outward directed rounding (MPFR).
// Every operation encloses the exact result at the working precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace eucmin {

class Interval {
public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_si(long v, mpfr_prec_t prec);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
  static Interval from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const noexcept { return prec_; }
  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }
  // Exact endpoint values (every finite MPFR number is rational).
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  mpq_class width_q() const;  // upper bound on hi - lo

  bool contains(const mpq_class& v) const;
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0, certified
  bool is_negative() const;  // hi < 0, certified

  Interval operator-() const;
  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;  // rhs must exclude 0

  Interval abs() const;
  Interval sqrt() const;  // lo must be >= 0
  // sqrt of a quantity known to be nonnegative: a slightly negative lower
  // endpoint (rounding slack) is clamped to 0.
  Interval sqrt_clamped() const;
  Interval square() const;
  Interval pow_int(long e) const;         // integer power; for e < 0 excludes 0
  Interval root(unsigned long k) const;   // k-th root, lo >= 0
  Interval pow(const mpq_class& e) const; // rational power, base must be positive
  Interval reciprocal() const;

  static Interval min(const Interval& a, const Interval& b);
  static Interval max(const Interval& a, const Interval& b);
  // smallest interval containing both
  static Interval hull(const Interval& a, const Interval& b);

  // String of both endpoints with enough digits to reparse exactly.
  std::string to_string() const;
  std::string lo_string(size_t digits = 0) const;
  std::string hi_string(size_t digits = 0) const;

private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

enum class cmp3 { less, greater, overlap };

// Certified order of the exact values: `less` iff a.hi <= b.lo and the
// intervals touch at most at one point with a < b... strictly: returns
// `less` when a.hi < b.lo, `greater` when a.lo > b.hi, else `overlap`.
cmp3 compare(const Interval& a, const Interval& b);

// a <= b certainly holds (a.hi <= b.lo).
bool certified_le(const Interval& a, const Interval& b);
// a <= b certainly fails (a.lo > b.hi).
bool certified_gt(const Interval& a, const Interval& b);

}  // namespace eucmin

#endif
