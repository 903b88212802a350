#include "eucmin/bounds.hpp"

#include <algorithm>
#include <climits>

#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

const char* formula_name(BoundFormula f) noexcept {
  switch (f) {
    case BoundFormula::theorem_1_1: return "theorem_1_1";
    case BoundFormula::corollary_1_2: return "corollary_1_2";
    case BoundFormula::bfbj_1_2: return "bfbj_1_2";
    case BoundFormula::bayer_fluckiger_4_1: return "bayer_fluckiger_4_1";
    case BoundFormula::a_equals_s_4_2: return "a_equals_s_4_2";
  }
  return "unknown";
}

namespace {

void check_a(const FieldDescriptor& desc, int a) {
  if (a < 1 || a > desc.r + desc.s)
    raise(errc::invalid_a, "parameter a must satisfy 1 <= a <= r + s = " +
                               std::to_string(desc.r + desc.s) + ", got " + std::to_string(a));
}

void check_estimate(const FieldDescriptor& desc, const HermiteEstimate& g) {
  if (g.n != desc.n)
    raise(errc::dimension_mismatch, "Hermite estimate dimension " + std::to_string(g.n) +
                                        " does not match field degree " + std::to_string(desc.n));
}

// Finish a bound whose gamma-free factor and gamma exponent are set: resolve
// the coefficient against the estimate.
void resolve(BoundResult& b, const HermiteEstimate& g, mpfr_prec_t prec) {
  b.hermite = g;
  if (g.is_exact()) {
    b.coeff_exact = b.coeff_rational * g.exact->pow(b.gamma_exponent);
    b.coeff_value = b.coeff_exact->to_interval(prec);
    return;
  }
  // gamma exponents are positive in every formula that carries gamma, and
  // gamma_n >= 1, so [1, upper] encloses the admissible coefficient range
  Interval gamma_range = Interval::hull(Interval::from_si(1, prec), g.value);
  b.coeff_value = b.coeff_rational.to_interval(prec) * gamma_range.pow(b.gamma_exponent);
}

}  // namespace

BoundResult theorem_bound(const FieldDescriptor& desc, int a, const HermiteEstimate& g,
                          mpfr_prec_t prec) {
  check_a(desc, a);
  check_estimate(desc, g);
  const int n = desc.n, s = desc.s;
  BoundResult b;
  b.formula = BoundFormula::theorem_1_1;
  b.n = n;
  b.a_param = a;
  b.disc_exponent = make_q(s + a, 2 * a);
  b.coeff_rational = ExactConstant::base_pow(2, mpq_class(-n)) *
                     ExactConstant::base_pow(static_cast<std::uint64_t>(n),
                                             make_q(-n * s, 2 * a));
  b.gamma_exponent = make_q(n * (s + a), 2 * a);
  resolve(b, g, prec);
  return b;
}

BoundResult corollary_bound(const FieldDescriptor& desc, const HermiteEstimate& g,
                            mpfr_prec_t prec) {
  if (desc.r + desc.s < 1) raise(errc::invalid_a, "corollary needs r + s >= 1");
  BoundResult b = theorem_bound(desc, desc.r + desc.s, g, prec);
  b.formula = BoundFormula::corollary_1_2;
  return b;
}

BoundResult bfbj_bound(const FieldDescriptor& desc, int a, const HermiteEstimate& g,
                       mpfr_prec_t prec) {
  BoundResult b = theorem_bound(desc, a, g, prec);
  b.formula = BoundFormula::bfbj_1_2;
  b.coeff_rational *= improvement_factor(desc, a);
  resolve(b, g, prec);
  return b;
}

BoundResult bayer_fluckiger_bound(const FieldDescriptor& desc, mpfr_prec_t prec) {
  BoundResult b;
  b.formula = BoundFormula::bayer_fluckiger_4_1;
  b.n = desc.n;
  b.disc_exponent = 1;
  b.coeff_rational = ExactConstant::base_pow(2, mpq_class(-desc.n));
  b.gamma_exponent = 0;
  b.coeff_exact = b.coeff_rational;
  b.coeff_value = b.coeff_rational.to_interval(prec);
  return b;
}

BoundResult a_equals_s_bound(const FieldDescriptor& desc, const HermiteEstimate& g,
                             mpfr_prec_t prec) {
  if (desc.s < 1)
    raise(errc::signature_totally_real, "the a = s bound needs a complex place (s >= 1)");
  check_estimate(desc, g);
  const int n = desc.n;
  BoundResult b;
  b.formula = BoundFormula::a_equals_s_4_2;
  b.n = n;
  b.a_param = desc.s;
  b.disc_exponent = 1;
  b.coeff_rational = ExactConstant::base_pow(2, mpq_class(-n)) *
                     ExactConstant::base_pow(static_cast<std::uint64_t>(n), make_q(-n, 2));
  b.gamma_exponent = n;
  resolve(b, g, prec);
  return b;
}

ExactConstant improvement_factor(const FieldDescriptor& desc, int a) {
  check_a(desc, a);
  return ExactConstant::base_pow(2, make_q(a * desc.r + desc.r * desc.s, 2 * a));
}

std::vector<BoundResult> bound_family(const FieldDescriptor& desc, mpfr_prec_t prec) {
  HermiteEstimate g = best_hermite_upper(desc.n, prec);
  std::vector<BoundResult> out;
  for (int a = 1; a <= desc.r + desc.s; ++a) out.push_back(theorem_bound(desc, a, g, prec));
  for (int a = 1; a <= desc.r + desc.s; ++a) out.push_back(bfbj_bound(desc, a, g, prec));
  out.push_back(bayer_fluckiger_bound(desc, prec));
  if (desc.s >= 1) out.push_back(a_equals_s_bound(desc, g, prec));
  return out;
}

Interval evaluate_at_disc(const BoundResult& bound, const mpz_class& disc_value,
                          mpfr_prec_t prec) {
  if (disc_value < 1) raise(errc::invalid_input, "disc_value must be >= 1");
  Interval d = Interval::from_mpz(disc_value, prec);
  return bound.coeff_value * d.pow(bound.disc_exponent);
}

BoundResult best_bound(const FieldDescriptor& desc, const mpz_class& disc_value,
                       mpfr_prec_t prec) {
  std::vector<BoundResult> family = bound_family(desc, prec);
  for (auto& b : family) b.value_at_disc = evaluate_at_disc(b, disc_value, prec);
  auto better = [](const BoundResult& x, const BoundResult& y) {
    // order by certified upper value, then smaller a, then formula tag
    int c = mpfr_cmp(x.value_at_disc->hi(), y.value_at_disc->hi());
    if (c != 0) return c < 0;
    int ax = x.a_param.value_or(INT_MAX), ay = y.a_param.value_or(INT_MAX);
    if (ax != ay) return ax < ay;
    return static_cast<int>(x.formula) < static_cast<int>(y.formula);
  };
  const BoundResult* best = &family.front();
  for (const auto& b : family)
    if (better(b, *best)) best = &b;
  return *best;
}

}  // namespace eucmin
