#ifndef EUCMIN_EXACT_CONSTANT_HPP
#define EUCMIN_EXACT_CONSTANT_HPP

// Exact positive constants of the form prod p_i^(e_i) with prime bases p_i
// and rational exponents e_i, e.g. 2^(-9/4) * 3^(-3/4). Multiplication and
// rational powers are exact; comparison is decided symbolically or by
// interval refinement (distinct canonical forms always separate).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "eucmin/interval.hpp"

namespace eucmin {

class ExactConstant {
public:
  ExactConstant() = default;  // the constant 1

  static ExactConstant one() { return ExactConstant(); }
  // base >= 1 is factored into primes (base = 1 contributes nothing)
  static ExactConstant base_pow(std::uint64_t base, const mpq_class& exponent);
  static ExactConstant from_integer(const mpz_class& v);  // v >= 1, 64-bit
  static ExactConstant from_rational(const mpq_class& v); // v > 0

  ExactConstant& operator*=(const ExactConstant& rhs);
  friend ExactConstant operator*(ExactConstant a, const ExactConstant& b) { return a *= b; }
  ExactConstant pow(const mpq_class& e) const;
  ExactConstant inverse() const { return pow(mpq_class(-1)); }

  bool is_one() const { return factors_.empty(); }
  bool is_rational() const;  // all exponents integral
  std::optional<mpq_class> as_rational() const;

  const std::map<std::uint64_t, mpq_class>& factors() const { return factors_; }

  Interval to_interval(mpfr_prec_t prec = 128) const;

  // canonical form, e.g. "2^(-9/4)*3^(-3/4)", "1" for the empty product
  std::string to_string() const;

  // Decimal truncation in the style of printed tables: terminating values in
  // full, others cut (never rounded) after `places` fractional digits.
  struct Decimal {
    std::string digits;
    bool truncated;  // true when digits were cut, i.e. the value continues
  };
  Decimal to_decimal(int places = 5) const;

  std::strong_ordering compare(const ExactConstant& rhs) const;
  friend bool operator==(const ExactConstant&, const ExactConstant&) = default;

private:
  // prime base -> nonzero rational exponent
  std::map<std::uint64_t, mpq_class> factors_;
};

}  // namespace eucmin

#endif
