#include <random>

#include "doctest.h"
#include "eucmin/errors.hpp"
#include "eucmin/field.hpp"
#include "eucmin/lattice.hpp"
#include "eucmin/qutil.hpp"

using namespace eucmin;

namespace {

std::vector<std::vector<mpq_class>> qrows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& row : rows) {
    std::vector<mpq_class> r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

const mpq_class kTol(mpz_class(1), mpz_class("1000000000000000000"));  // 1e-18

}  // namespace

TEST_CASE("successive minima of the unit lattice") {
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  SuccessiveMinima m = successive_minima(identity, 2);
  REQUIRE(m.mu.size() == 2);
  CHECK(m.mu[0].contains(mpq_class(1)));
  CHECK(m.mu[1].contains(mpq_class(1)));
  CHECK(m.mu_sq_centers[0] == 1);
  CHECK(m.mu_sq_centers[1] == 1);
  CHECK(m.rigorous);

  CHECK_THROWS_AS(successive_minima(identity, 0), Error);
  CHECK_THROWS_AS(successive_minima(identity, 3), Error);
}

TEST_CASE("successive minima of the Gaussian lattice") {
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^2+1"));
  SuccessiveMinima m = successive_minima(basis, 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(m.mu[i].contains(mpq_class(1)));
    CHECK(m.mu[i].width_q() < kTol);
  }
}

TEST_CASE("shortest vector of the sqrt2 lattice is psi(1)") {
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^2-2"));
  SuccessiveMinima m = successive_minima(basis, 1);
  // mu_1 = sqrt2: check by squaring the interval ends
  CHECK(m.mu[0].lo_q() * m.mu[0].lo_q() <= 2);
  CHECK(m.mu[0].hi_q() * m.mu[0].hi_q() >= 2);
  CHECK(m.mu[0].width_q() < kTol);
  // the achieving vector is +-psi(1) = (1, 0) coefficients
  CHECK(abs(m.vectors[0][0]) == 1);
  CHECK(m.vectors[0][1] == 0);
}

TEST_CASE("enumeration respects the node budget") {
  LatticeBasis identity =
      LatticeBasis::exact(Split{4, 0}, qrows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EnumerationOptions opts;
  opts.node_budget = 3;
  CHECK_THROWS_AS(successive_minima(identity, 4, opts), Error);
  try {
    successive_minima(identity, 4, opts);
  } catch (const Error& e) {
    CHECK(e.code() == errc::search_space_too_large);
    CHECK(exit_class(e.code()) == 5);
  }
}

TEST_CASE("Minkowski product check examples") {
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  auto [lhs, rhs] = minkowski_product_check(identity, 2, best_hermite_upper(2));
  CHECK(lhs.contains(mpq_class(1)));
  // rhs = gamma_2 = 1.1547...
  CHECK(mpfr_cmp_d(rhs.lo(), 1.1547) > 0);
  CHECK(certified_le(lhs, rhs));

  // Lambda of x^2-2, k=1: (sqrt2, gamma_2^(1/2) sqrt(2 sqrt2)) ~ (1.414, 1.8072)
  LatticeBasis sqrt2 = minkowski_basis(IntPolynomial::parse("x^2-2"));
  auto [l2, r2] = minkowski_product_check(sqrt2, 1, best_hermite_upper(2));
  CHECK(l2.square().contains(mpq_class(2)));
  CHECK(mpfr_cmp_d(r2.lo(), 1.8072) > 0);
  CHECK(mpfr_cmp_d(r2.hi(), 1.8073) < 0);
  CHECK(certified_le(l2, r2));
}

TEST_CASE("Minkowski product holds on random 3d lattices") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> entry(-9, 9);
  HermiteEstimate g = best_hermite_upper(3);
  mpq_class gamma_cubed = *hermite_exact(3)->pow(mpq_class(3)).as_rational();
  int tested = 0;
  while (tested < 20) {
    std::vector<std::vector<mpq_class>> rows(3, std::vector<mpq_class>(3));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    mpq_class det = det_exact(rows);
    if (sgn(det) == 0) continue;
    ++tested;
    LatticeBasis basis = LatticeBasis::exact(Split{3, 0}, rows);
    SuccessiveMinima m = successive_minima(basis, 3);
    mpq_class prod = 1;
    for (int k = 1; k <= 3; ++k) {
      prod *= m.mu_sq_centers[k - 1];
      CHECK(pow_q(prod, 3) <= pow_q(gamma_cubed, k) * pow_q(det * det, k));
    }
    auto [lhs, rhs] = minkowski_product_check(basis, 3, g);
    CHECK_FALSE(certified_gt(lhs, rhs));
  }
}

TEST_CASE("homogeneous minimum estimates") {
  // Lambda of x^2+1, box 3: estimate 1 at psi(1)
  LatticeBasis gauss = minkowski_basis(IntPolynomial::parse("x^2+1"));
  MinimaEstimate est = homogeneous_minimum_estimate(gauss, 3);
  CHECK(est.kind == MinimaEstimate::Kind::m_s_upper_estimate);
  CHECK(est.value.contains(mpq_class(1)));
  CHECK(est.value.width_q() < kTol);
  CHECK(est.params == "coeff_box=3, points=48");

  // Lambda of x^2-2, box 3: psi(1) has N = |1 * 1| = 1
  LatticeBasis sqrt2 = minkowski_basis(IntPolynomial::parse("x^2-2"));
  est = homogeneous_minimum_estimate(sqrt2, 3);
  CHECK(est.value.contains(mpq_class(1)));
  CHECK(est.value.width_q() < kTol);

  // unit cube scaled by 2, split (2,0), box 1: N = 4 at (2,0) ... every
  // nonzero point has a zero coordinate except the corners with N = 4
  LatticeBasis doubled = LatticeBasis::exact(Split{2, 0}, qrows({{2, 0}, {0, 2}}));
  est = homogeneous_minimum_estimate(doubled, 1);
  // (1,0) scaled: (2,0): N_0 = |2 * 0| = 0 -- the axis points give zero
  CHECK(est.value.contains(mpq_class(0)));

  // with the complex split (0,1) the scaled lattice gives 2^2 = 4
  LatticeBasis doubled_c = LatticeBasis::exact(Split{0, 1}, qrows({{2, 0}, {0, 2}}));
  est = homogeneous_minimum_estimate(doubled_c, 1);
  CHECK(est.value.contains(mpq_class(4)));

  CHECK_THROWS_AS(homogeneous_minimum_estimate(gauss, 0), Error);
}

TEST_CASE("inhomogeneous minimum lower estimates") {
  LatticeBasis gauss = minkowski_basis(IntPolynomial::parse("x^2+1"));
  TargetSpec spec;
  spec.grid_k = 1;
  spec.explicit_targets = {{mpq_class(1, 2), mpq_class(1, 2)}};
  MinimaEstimate est = inhomogeneous_minimum_lower_estimate(gauss, spec);
  CHECK(est.kind == MinimaEstimate::Kind::M_s_lower_estimate);
  CHECK(est.value.hi_q() >= mpq_class(1, 2));
  CHECK(est.value.lo_q() >= mpq_class(1, 2) - kTol);

  // Lambda of x^2-2, target psi(1/2) = (1/2, 1/2): estimate >= 1/4
  LatticeBasis sqrt2 = minkowski_basis(IntPolynomial::parse("x^2-2"));
  TargetSpec spec2;
  spec2.grid_k = 1;
  spec2.explicit_targets = {{mpq_class(1, 2), mpq_class(1, 2)}};
  MinimaEstimate est2 = inhomogeneous_minimum_lower_estimate(sqrt2, spec2);
  CHECK(est2.value.hi_q() >= mpq_class(1, 4));
  CHECK(est2.value.lo_q() >= mpq_class(1, 4) - kTol);

  // a lattice point as the only target: inner minimum 0
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  TargetSpec spec3;
  spec3.grid_k = 0;  // only the origin from the grid
  spec3.explicit_targets = {{mpq_class(1), mpq_class(0)}};
  MinimaEstimate est3 = inhomogeneous_minimum_lower_estimate(identity, spec3);
  CHECK(est3.value.contains(mpq_class(0)));
  CHECK(est3.value.hi_q() <= kTol);

  // dimension mismatch in explicit targets
  TargetSpec bad;
  bad.explicit_targets = {{mpq_class(1)}};
  CHECK_THROWS_AS(inhomogeneous_minimum_lower_estimate(identity, bad), Error);
}

TEST_CASE("random targets are reproducible for a fixed seed") {
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  TargetSpec spec;
  spec.grid_k = 0;
  spec.random_targets = 8;
  spec.seed = 1234;
  MinimaEstimate a = inhomogeneous_minimum_lower_estimate(identity, spec);
  MinimaEstimate b = inhomogeneous_minimum_lower_estimate(identity, spec);
  CHECK(a.value.lo_q() == b.value.lo_q());
  CHECK(a.value.hi_q() == b.value.hi_q());
  CHECK(a.params == b.params);
  spec.seed = 4321;
  MinimaEstimate c = inhomogeneous_minimum_lower_estimate(identity, spec);
  CHECK(c.params != a.params);
}

TEST_CASE("lemma m <= 2^s n^(-n/2) mu_1^n") {
  // Lambda of x^2+1: (1, 1) equality
  LatticeBasis gauss = minkowski_basis(IntPolynomial::parse("x^2+1"));
  LemmaCheck check = lemma_m_mu1_check(gauss, 3);
  CHECK_FALSE(check.violated);
  CHECK(check.certified_applicable);
  CHECK(check.lhs.contains(mpq_class(1)));
  CHECK(check.rhs.contains(mpq_class(1)));

  // Lambda of x^2-2: (1, 2^0 2^-1 (sqrt2)^2) = (1, 1) equality
  LatticeBasis sqrt2 = minkowski_basis(IntPolynomial::parse("x^2-2"));
  check = lemma_m_mu1_check(sqrt2, 3);
  CHECK_FALSE(check.violated);
  CHECK(check.certified_applicable);
  CHECK(check.rhs.contains(mpq_class(1)));

  // identity with split (2,0): N_0 vanishes on the axes, so the enumerated
  // minimum is 0 and the inequality holds trivially
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  check = lemma_m_mu1_check(identity, 3);
  CHECK_FALSE(check.violated);
  CHECK(check.lhs.contains(mpq_class(0)));
  CHECK(check.rhs.contains(mpq_class(1, 2)));

  // a tiny box cannot certify coverage of the mu_1 ball: informational
  LatticeBasis skew = LatticeBasis::exact(Split{2, 0}, qrows({{100, 1}, {99, 1}}));
  LLLResult reduced = lll_reduce(skew);
  LemmaCheck weak = lemma_m_mu1_check(reduced.basis, 1);
  // (the reduced basis of this lattice has a short vector (1, 0), so box 1
  // may or may not cover; just exercise both fields)
  CHECK((weak.certified_applicable || !weak.note.empty()));
}

TEST_CASE("lemma M <= 2^(s-n) mu_n^n") {
  LatticeBasis gauss = minkowski_basis(IntPolynomial::parse("x^2+1"));
  TargetSpec spec;
  spec.grid_k = 2;
  spec.explicit_targets = {{mpq_class(1, 2), mpq_class(1, 2)}};
  LemmaCheck check = lemma_M_mun_check(gauss, spec);
  CHECK_FALSE(check.violated);
  CHECK(check.certified_applicable);
  // equality within sampling resolution: lhs = 1/2, rhs = 2^(1-2) mu_2^2 = 1/2
  CHECK(check.lhs.contains(mpq_class(1, 2)));
  CHECK(check.rhs.contains(mpq_class(1, 2)));

  // unit dim-2 lattice, split (2,0): lhs <= 1/4 = rhs
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  TargetSpec spec2;
  spec2.grid_k = 2;  // includes (1/2, 1/2), the worst dyadic target
  LemmaCheck check2 = lemma_M_mun_check(identity, spec2);
  CHECK_FALSE(check2.violated);
  CHECK(check2.lhs.contains(mpq_class(1, 4)));
  CHECK(check2.rhs.contains(mpq_class(1, 4)));

  // Lambda of x^2-2: rhs = 2^-2 mu_2^2 = 1/4 * 4 = 1 from mu_2 = 2
  LatticeBasis sqrt2 = minkowski_basis(IntPolynomial::parse("x^2-2"));
  TargetSpec spec3;
  spec3.grid_k = 3;
  LemmaCheck check3 = lemma_M_mun_check(sqrt2, spec3);
  CHECK_FALSE(check3.violated);
  CHECK(check3.rhs.contains(mpq_class(1)));
}
