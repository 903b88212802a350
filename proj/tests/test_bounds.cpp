#include "doctest.h"
#include "eucmin/bounds.hpp"
#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"

using namespace eucmin;

namespace {

FieldDescriptor sig(int n, int r, int s) { return make_descriptor(n, r, s, mpz_class(1)); }

}  // namespace

TEST_CASE("theorem bound reproduces printed rows") {
  // (n=2, r=0, s=1), a=1: coefficient 1/6, exponent 1
  BoundResult b = theorem_bound(sig(2, 0, 1), 1, best_hermite_upper(2));
  CHECK(b.coeff_exact->as_rational() == mpq_class(1, 6));
  CHECK(b.disc_exponent == 1);

  // (n=4, r=0, s=2), a=1: 2^-9, exponent 3/2
  b = theorem_bound(sig(4, 0, 2), 1, best_hermite_upper(4));
  CHECK(b.coeff_exact->to_string() == "2^(-9)");
  CHECK(b.disc_exponent == mpq_class(3, 2));

  // (n=5, r=3, s=1), a=2: 2^(-11/4) 5^(-5/4), exponent 3/4
  b = theorem_bound(sig(5, 3, 1), 2, best_hermite_upper(5));
  CHECK(b.coeff_exact->to_string() == "2^(-11/4)*5^(-5/4)");
  CHECK(b.disc_exponent == mpq_class(3, 4));
  CHECK(b.a_param == 2);
  CHECK(b.formula == BoundFormula::theorem_1_1);

  CHECK_THROWS_AS(theorem_bound(sig(5, 3, 1), 0, best_hermite_upper(5)), Error);
  CHECK_THROWS_AS(theorem_bound(sig(5, 3, 1), 5, best_hermite_upper(5)), Error);
  // estimate dimension must match
  CHECK_THROWS_AS(theorem_bound(sig(5, 3, 1), 1, best_hermite_upper(4)), Error);
}

TEST_CASE("corollary bound is the theorem at a = r + s") {
  // (3, 3, 0): 2^(-5/2) D^(1/2)
  BoundResult c = corollary_bound(sig(3, 3, 0), best_hermite_upper(3));
  CHECK(c.formula == BoundFormula::corollary_1_2);
  CHECK(c.coeff_exact->to_string() == "2^(-5/2)");
  CHECK(c.disc_exponent == mpq_class(1, 2));

  // (4, 2, 1): a = 3 row, 2^-4 D^(2/3)
  c = corollary_bound(sig(4, 2, 1), best_hermite_upper(4));
  CHECK(c.coeff_exact->to_string() == "2^(-4)");
  CHECK(c.disc_exponent == mpq_class(2, 3));
  CHECK(c.a_param == 3);

  // (2, 0, 1): r + s = 1 forces a = 1, identical to the theorem
  BoundResult t = theorem_bound(sig(2, 0, 1), 1, best_hermite_upper(2));
  c = corollary_bound(sig(2, 0, 1), best_hermite_upper(2));
  CHECK(c.coeff_exact == t.coeff_exact);
  CHECK(c.disc_exponent == t.disc_exponent);
}

TEST_CASE("prior bound and the improvement factor") {
  // r = 0: both formulas coincide
  BoundResult t = theorem_bound(sig(4, 0, 2), 1, best_hermite_upper(4));
  BoundResult p = bfbj_bound(sig(4, 0, 2), 1, best_hermite_upper(4));
  CHECK(t.coeff_exact == p.coeff_exact);
  CHECK(improvement_factor(sig(4, 0, 2), 1).is_one());

  // (2, 2, 0), a=1: prior = 2^-1 gamma_2, theorem = 2^-2 gamma_2, ratio 2
  t = theorem_bound(sig(2, 2, 0), 1, best_hermite_upper(2));
  p = bfbj_bound(sig(2, 2, 0), 1, best_hermite_upper(2));
  CHECK(p.coeff_exact->to_string() == "3^(-1/2)");       // 2^-1 * 2 * 3^(-1/2)
  CHECK(t.coeff_exact->to_string() == "2^(-1)*3^(-1/2)");
  CHECK((t.coeff_rational * ExactConstant::from_rational(mpq_class(2))) == p.coeff_rational);

  // (3, 1, 1), a=1: ratio 2^((1+1)/2) = 2
  CHECK(improvement_factor(sig(3, 1, 1), 1).as_rational() == mpq_class(2));
  // (r=2, s=1), a=1: 2^((2+2)/2) = 4
  CHECK(improvement_factor(sig(4, 2, 1), 1).as_rational() == mpq_class(4));
  // (r=3, s=1), a=2: 2^((6+3)/4) = 2^(9/4)
  CHECK(improvement_factor(sig(5, 3, 1), 2).to_string() == "2^(9/4)");
  CHECK_THROWS_AS(improvement_factor(sig(5, 3, 1), 0), Error);
}

TEST_CASE("signature-free and a = s bounds") {
  CHECK(bayer_fluckiger_bound(sig(1, 1, 0)).coeff_exact->as_rational() == mpq_class(1, 2));
  CHECK(bayer_fluckiger_bound(sig(4, 2, 1)).coeff_exact->to_string() == "2^(-4)");
  CHECK(bayer_fluckiger_bound(sig(24, 0, 12)).coeff_exact->to_string() == "2^(-24)");
  CHECK(bayer_fluckiger_bound(sig(4, 2, 1)).disc_exponent == 1);

  // (2, 0, 1): 2^-2 2^-1 gamma_2^2 = 1/8 * 4/3 = 1/6
  BoundResult s1 = a_equals_s_bound(sig(2, 0, 1), best_hermite_upper(2));
  CHECK(s1.coeff_exact->as_rational() == mpq_class(1, 6));
  CHECK(s1.disc_exponent == 1);
  // (4, 2, 1): 2^-4 4^-2 gamma_4^4 = 2^-6
  BoundResult s2 = a_equals_s_bound(sig(4, 2, 1), best_hermite_upper(4));
  CHECK(s2.coeff_exact->to_string() == "2^(-6)");
  CHECK(s2.a_param == 1);
  // totally real: error
  CHECK_THROWS_AS(a_equals_s_bound(sig(3, 3, 0), best_hermite_upper(3)), Error);

  // a = s bound equals the theorem at a = s
  BoundResult t = theorem_bound(sig(4, 2, 1), 1, best_hermite_upper(4));
  CHECK(t.coeff_exact == s2.coeff_exact);
}

TEST_CASE("theorem coefficients are a-independent for totally real fields") {
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    FieldDescriptor desc = sig(n, n, 0);
    HermiteEstimate g = best_hermite_upper(n);
    BoundResult first = theorem_bound(desc, 1, g);
    for (int a = 2; a <= n; ++a) {
      BoundResult other = theorem_bound(desc, a, g);
      CHECK(first.coeff_exact == other.coeff_exact);
      CHECK(first.disc_exponent == other.disc_exponent);
    }
  }
}

TEST_CASE("best bound at a concrete discriminant") {
  // Q(i): min(1/6 * 4, 2^-2 * 4) = 2/3 via the theorem at a = 1
  BoundResult best = best_bound(sig(2, 0, 1), mpz_class(4));
  CHECK(best.formula == BoundFormula::theorem_1_1);
  CHECK(best.a_param == 1);
  CHECK(best.value_at_disc->contains(mpq_class(2, 3)));

  // degree 1: 0.5 * D^(1/2) at D = 1
  best = best_bound(sig(1, 1, 0), mpz_class(1));
  CHECK(best.formula == BoundFormula::theorem_1_1);
  CHECK(best.value_at_disc->contains(mpq_class(1, 2)));

  // large-D asymptotics: the smallest disc exponent n/(2(r+s)) wins
  best = best_bound(sig(4, 2, 1), mpz_class("1000000000000000000"));
  CHECK(best.disc_exponent == mpq_class(2, 3));
  CHECK(best.a_param == 3);

  CHECK_THROWS_AS(best_bound(sig(2, 0, 1), mpz_class(0)), Error);
}

TEST_CASE("bound family enumerates every admissible formula") {
  auto family = bound_family(sig(4, 2, 1));
  // theorem a=1..3, prior a=1..3, signature-free, a=s
  CHECK(family.size() == 8);
  int theorem_count = 0, prior_count = 0, other = 0;
  for (const auto& b : family) {
    if (b.formula == BoundFormula::theorem_1_1) ++theorem_count;
    else if (b.formula == BoundFormula::bfbj_1_2) ++prior_count;
    else ++other;
  }
  CHECK(theorem_count == 3);
  CHECK(prior_count == 3);
  CHECK(other == 2);

  // totally real: no a = s bound
  CHECK(bound_family(sig(3, 3, 0)).size() == 7);
}

TEST_CASE("bounds with non-exact Hermite estimates stay usable") {
  // n = 9 has no exact gamma; the numeric upper end must still be certified
  FieldDescriptor desc = sig(9, 1, 4);
  HermiteEstimate g = best_hermite_upper(9);
  BoundResult b = theorem_bound(desc, 2, g);
  CHECK_FALSE(b.coeff_exact.has_value());
  CHECK(b.coeff_value.is_positive());
  Interval at = evaluate_at_disc(b, mpz_class(1000));
  CHECK(at.is_positive());
}
