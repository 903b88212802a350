#include "eucmin/exact_constant.hpp"

#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

ExactConstant ExactConstant::base_pow(std::uint64_t base, const mpq_class& exponent) {
  if (base == 0) raise(errc::invalid_input, "zero base in exact constant");
  mpq_class canon = exponent;
  canon.canonicalize();
  ExactConstant out;
  if (base == 1 || sgn(canon) == 0) return out;
  for (const auto& [p, k] : factor_u64(base)) {
    mpq_class e = canon * static_cast<long>(k);
    if (sgn(e) != 0) out.factors_[p] = e;
  }
  return out;
}

ExactConstant ExactConstant::from_integer(const mpz_class& v) {
  if (v < 1) raise(errc::invalid_input, "exact constants are positive");
  if (!v.fits_ulong_p()) raise(errc::invalid_input, "integer too large to factor exactly");
  return base_pow(v.get_ui(), mpq_class(1));
}

ExactConstant ExactConstant::from_rational(const mpq_class& v) {
  if (sgn(v) <= 0) raise(errc::invalid_input, "exact constants are positive");
  ExactConstant num = from_integer(v.get_num());
  ExactConstant den = from_integer(v.get_den());
  return num * den.inverse();
}

ExactConstant& ExactConstant::operator*=(const ExactConstant& rhs) {
  for (const auto& [p, e] : rhs.factors_) {
    auto it = factors_.find(p);
    if (it == factors_.end()) {
      factors_.emplace(p, e);
    } else {
      it->second += e;
      if (sgn(it->second) == 0) factors_.erase(it);
    }
  }
  return *this;
}

ExactConstant ExactConstant::pow(const mpq_class& e) const {
  ExactConstant out;
  if (sgn(e) == 0) return out;
  for (const auto& [p, x] : factors_) out.factors_[p] = x * e;
  return out;
}

bool ExactConstant::is_rational() const {
  for (const auto& [p, e] : factors_)
    if (e.get_den() != 1) return false;
  return true;
}

std::optional<mpq_class> ExactConstant::as_rational() const {
  if (!is_rational()) return std::nullopt;
  mpq_class out = 1;
  for (const auto& [p, e] : factors_) {
    mpz_class pw;
    mpz_class ae = ::abs(e.get_num());
    if (!ae.fits_ulong_p()) raise(errc::invalid_input, "exponent too large");
    mpz_ui_pow_ui(pw.get_mpz_t(), p, ae.get_ui());
    if (sgn(e) > 0)
      out *= mpq_class(pw);
    else
      out /= mpq_class(pw);
  }
  return out;
}

Interval ExactConstant::to_interval(mpfr_prec_t prec) const {
  Interval out = Interval::from_si(1, prec);
  for (const auto& [p, e] : factors_) {
    Interval base = Interval::from_si(static_cast<long>(p), prec);
    out = out * base.pow(e);
  }
  return out;
}

std::string ExactConstant::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e != 1) {
      std::string es = e.get_str();
      bool needs_parens = e.get_den() != 1 || sgn(e) < 0;
      out += "^";
      out += needs_parens ? "(" + es + ")" : es;
    }
  }
  return out;
}

ExactConstant::Decimal ExactConstant::to_decimal(int places) const {
  if (auto q = as_rational()) {
    if (has_finite_decimal(*q)) return {finite_decimal_string(*q), false};
    return {truncate_decimal(*q, places), true};
  }
  // irrational: v = (A/B)^(1/L) with A, B integers. Truncation digit string m
  // satisfies m <= v 10^places < m+1, i.e. m^L B <= A 10^(L places) < (m+1)^L B.
  mpz_class L = 1;
  for (const auto& [p, e] : factors_) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.get_den().get_mpz_t());
  if (!L.fits_ulong_p()) raise(errc::invalid_input, "exponent denominators too large");
  unsigned long l = L.get_ui();
  mpz_class A = 1, B = 1;
  for (const auto& [p, e] : factors_) {
    mpq_class scaled = e * mpq_class(L);
    mpz_class k = scaled.get_num();  // integral now
    mpz_class pw;
    mpz_class ak = ::abs(k);
    if (!ak.fits_ulong_p()) raise(errc::invalid_input, "exponent too large");
    mpz_ui_pow_ui(pw.get_mpz_t(), p, ak.get_ui());
    (sgn(k) > 0 ? A : B) *= pw;
  }
  // estimate via interval, then verify/adjust exactly
  Interval approx = to_interval(192);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class m = floor_q(approx.lo_q() * mpq_class(scale));
  mpz_class ten_l;
  mpz_pow_ui(ten_l.get_mpz_t(), scale.get_mpz_t(), l);
  mpz_class rhs = A * ten_l;
  auto fits = [&](const mpz_class& cand) {
    if (cand < 0) return false;
    mpz_class cl;
    mpz_pow_ui(cl.get_mpz_t(), cand.get_mpz_t(), l);
    return cl * B <= rhs;
  };
  while (!fits(m)) --m;
  while (fits(m + 1)) ++m;
  std::string s = m.get_str();
  if (places > 0) {
    if (s.size() <= static_cast<size_t>(places)) s.insert(0, places + 1 - s.size(), '0');
    s.insert(s.size() - places, ".");
  }
  return {s, true};
}

std::strong_ordering ExactConstant::compare(const ExactConstant& rhs) const {
  if (factors_ == rhs.factors_) return std::strong_ordering::equal;
  ExactConstant ratio = *this * rhs.inverse();
  // distinct primes are multiplicatively independent, so a nonempty canonical
  // form is never exactly 1 and interval refinement terminates
  mpq_class one(1);
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    Interval v = ratio.to_interval(prec);
    if (!v.contains(one)) return v.hi_q() < 1 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  raise(errc::precision_exhausted, "exact constant comparison did not separate");
}

}  // namespace eucmin
