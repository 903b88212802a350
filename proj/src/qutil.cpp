#include "eucmin/qutil.hpp"

#include <stdexcept>

#include "eucmin/errors.hpp"

namespace eucmin {

mpq_class pow_q(const mpq_class& q, long e) {
  if (e == 0) return mpq_class(1);
  if (q == 0 && e < 0) raise(errc::invalid_input, "pow_q: zero base with negative exponent");
  mpz_class num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), ae);
  mpq_class out(num, den);
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return z;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return z;
}

mpz_class round_q(const mpq_class& q) { return floor_q(q + mpq_class(1, 2)); }

namespace {

// floor(sqrt(q) * 2^bits) as an integer, exact.
mpz_class sqrt_scaled_floor(const mpq_class& q, unsigned bits) {
  if (sgn(q) < 0) raise(errc::invalid_input, "sqrt of negative rational");
  // floor(sqrt(num * 4^bits / den)) = floor(sqrt(floor(num * 4^bits / den))) is not
  // exact in general; use floor(sqrt(num * 4^bits * den)) / den <= sqrt scaled.
  // Simpler: isqrt(num * 4^bits * den) / den has the right floor:
  //   sqrt(num/den) * 2^bits = sqrt(num * den * 4^bits) / den.
  mpz_class scaled = q.get_num() * q.get_den();
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 2, 2 * bits);
  scaled *= pw;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

}  // namespace

mpq_class sqrt_q_upper(const mpq_class& q, unsigned bits) {
  mpz_class f = sqrt_scaled_floor(q, bits) + 2;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  mpq_class out(f, den);
  out.canonicalize();
  return out;
}

mpq_class sqrt_q_lower(const mpq_class& q, unsigned bits) {
  mpz_class f = sqrt_scaled_floor(q, bits) - 1;
  if (f < 0) f = 0;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  mpq_class out(f, den);
  out.canonicalize();
  return out;
}

mpq_class round_dyadic(const mpq_class& q, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  mpz_class num = round_q(q * mpq_class(scale));
  mpq_class out(num, scale);
  out.canonicalize();
  return out;
}

std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t v) {
  if (v == 0) raise(errc::invalid_input, "cannot factor zero");
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    while (v % p == 0) {
      ++out[p];
      v /= p;
    }
  }
  if (v > 1) ++out[v];
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

mpz_class parse_mpz(const std::string& text) {
  if (text.empty()) raise(errc::invalid_input, "empty integer literal");
  try {
    return mpz_class(text, 10);
  } catch (const std::invalid_argument&) {
    raise(errc::invalid_input, "bad integer literal: " + text);
  }
}

bool has_finite_decimal(const mpq_class& q) {
  mpz_class d = q.get_den();
  for (int p : {2, 5}) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
  }
  return d == 1;
}

std::string finite_decimal_string(const mpq_class& q) {
  if (sgn(q) < 0) return "-" + finite_decimal_string(-q);
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) raise(errc::invalid_input, "denominator is not of the form 2^a 5^b");
  unsigned long digits = std::max(twos, fives);
  // q = num / (2^a 5^b); scale to num * 2^(d-a) 5^(d-b) / 10^d.
  mpz_class scaled = q.get_num();
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, digits - twos);
  scaled *= m;
  mpz_ui_pow_ui(m.get_mpz_t(), 5, digits - fives);
  scaled *= m;
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  // drop trailing zeros after the point, but keep at least one digit
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string truncate_decimal(const mpq_class& q, int places) {
  if (sgn(q) < 0) raise(errc::invalid_input, "truncate_decimal expects q >= 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class m = floor_q(q * mpq_class(scale));
  std::string s = m.get_str();
  if (places == 0) return s;
  if (s.size() <= static_cast<size_t>(places)) s.insert(0, places + 1 - s.size(), '0');
  s.insert(s.size() - places, ".");
  return s;
}

std::string q_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class q_from_string(const std::string& s) {
  try {
    mpq_class q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    raise(errc::invalid_input, "bad rational literal: " + s);
  }
}

}  // namespace eucmin
