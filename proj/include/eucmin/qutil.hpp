#ifndef EUCMIN_QUTIL_HPP
#define EUCMIN_QUTIL_HPP

// Small exact-arithmetic helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eucmin {

// canonicalized rational from a possibly non-coprime pair (the two-argument
// mpq_class constructor does not reduce)
inline mpq_class make_q(long num, long den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// q^e for integer e (q != 0 when e < 0).
mpq_class pow_q(const mpq_class& q, long e);

mpz_class floor_q(const mpq_class& q);
mpz_class ceil_q(const mpq_class& q);
// Nearest integer, ties away from half toward floor(q + 1/2).
mpz_class round_q(const mpq_class& q);

// Rational bounds on sqrt(q), q >= 0, with absolute slack <= 2^-bits.
mpq_class sqrt_q_upper(const mpq_class& q, unsigned bits = 32);
mpq_class sqrt_q_lower(const mpq_class& q, unsigned bits = 32);

// Nearest rational with denominator 2^bits.
mpq_class round_dyadic(const mpq_class& q, unsigned bits);

// Trial-division factorization; input must fit in 64 bits.
std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t v);

mpz_class factorial(unsigned long n);

// Parse a decimal integer string (optional sign). Throws errc::invalid_input.
mpz_class parse_mpz(const std::string& text);

// Exact decimal expansion; only valid when den(q) = 2^a 5^b.
bool has_finite_decimal(const mpq_class& q);
std::string finite_decimal_string(const mpq_class& q);

// floor(q * 10^places) rendered with a decimal point: the truncation of q
// at `places` fractional digits (q >= 0).
std::string truncate_decimal(const mpq_class& q, int places);

std::string q_to_string(const mpq_class& q);  // "p/q" or "p"
mpq_class q_from_string(const std::string& s);

}  // namespace eucmin

#endif
