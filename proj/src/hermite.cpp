#include "eucmin/hermite.hpp"

#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

const char* provenance_name(HermiteProvenance p) noexcept {
  switch (p) {
    case HermiteProvenance::exact: return "exact";
    case HermiteProvenance::blichfeldt: return "blichfeldt";
    case HermiteProvenance::wen1: return "wen1";
    case HermiteProvenance::wen2: return "wen2";
  }
  return "unknown";
}

std::optional<ExactConstant> hermite_exact(int n) {
  if (n < 1) raise(errc::invalid_input, "dimension must be >= 1");
  auto c2 = [](long num, long den) { return ExactConstant::base_pow(2, mpq_class(num, den)); };
  auto c3 = [](long num, long den) { return ExactConstant::base_pow(3, mpq_class(num, den)); };
  switch (n) {
    case 1: return ExactConstant::one();
    case 2: return c2(1, 1) * c3(-1, 2);
    case 3: return c2(1, 3);
    case 4: return c2(1, 2);
    case 5: return c2(3, 5);
    case 6: return c2(1, 1) * c3(-1, 6);
    case 7: return c2(6, 7);
    case 8: return c2(1, 1);
    case 24: return c2(2, 1);
    default: return std::nullopt;
  }
}

Interval blichfeldt_bound(int n, mpfr_prec_t prec) {
  if (n < 1) raise(errc::invalid_input, "dimension must be >= 1");
  Interval pi = Interval::pi(prec);
  unsigned long un = static_cast<unsigned long>(n);
  if (n % 2 == 0) {
    // Gamma(2 + n/2) = (1 + n/2)! ; bound = (2/pi) * (m^2)^(1/n)
    mpz_class m = factorial(1 + un / 2);
    Interval mm = Interval::from_mpz(m * m, prec);
    return Interval::from_si(2, prec) * mm.root(un) / pi;
  }
  // odd n: Gamma(2 + n/2) = Gamma(k + 1/2) with k = (n+3)/2,
  // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi) = q sqrt(pi).
  // Then (2/pi) (q sqrt(pi))^(2/n) = 2 q^(2/n) pi^((1-n)/n).
  unsigned long k = (un + 3) / 2;
  mpz_class num = factorial(2 * k);
  mpz_class den = factorial(k);
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  den *= four_k;
  mpq_class q(num, den);
  q.canonicalize();
  Interval q_pow = Interval::from_mpq(q * q, prec).root(un);  // q^(2/n)
  Interval pi_pow = pi.pow_int(static_cast<long>(un) - 1).root(un);  // pi^((n-1)/n)
  return Interval::from_si(2, prec) * q_pow / pi_pow;
}

std::pair<mpq_class, mpq_class> wen_bounds(int n) {
  if (n < 1) raise(errc::invalid_input, "dimension must be >= 1");
  return {make_q(n, 8) + mpq_class(6, 5), make_q(2 * n, 17) + 2};
}

HermiteEstimate best_hermite_upper(int n, mpfr_prec_t prec) {
  HermiteEstimate out;
  out.n = n;
  if (auto exact = hermite_exact(n)) {
    out.provenance = HermiteProvenance::exact;
    out.exact = exact;
    out.value = exact->to_interval(prec);
    return out;
  }
  Interval blich = blichfeldt_bound(n, prec);
  auto [w1, w2] = wen_bounds(n);
  // compare certified upper ends; all three are valid upper bounds for gamma_n
  out.provenance = HermiteProvenance::blichfeldt;
  out.value = blich;
  if (mpfr_cmp_q(out.value.hi(), w1.get_mpq_t()) > 0) {
    out.provenance = HermiteProvenance::wen1;
    out.value = Interval::from_mpq(w1, prec);
  }
  if (mpfr_cmp_q(out.value.hi(), w2.get_mpq_t()) > 0) {
    out.provenance = HermiteProvenance::wen2;
    out.value = Interval::from_mpq(w2, prec);
  }
  return out;
}

}  // namespace eucmin
