#include <random>

#include "doctest.h"
#include "eucmin/errors.hpp"
#include "eucmin/field.hpp"
#include "eucmin/polynomial.hpp"
#include "eucmin/qutil.hpp"
#include "oracle.hpp"

using namespace eucmin;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial parsing") {
  CHECK(IntPolynomial::parse("x^3 - x - 1") == poly({-1, -1, 0, 1}));
  CHECK(IntPolynomial::parse("[-1, -1, 0, 1]") == poly({-1, -1, 0, 1}));
  CHECK(IntPolynomial::parse("x^2+1") == poly({1, 0, 1}));
  CHECK(IntPolynomial::parse("2x^2 + 3x - 4") == poly({-4, 3, 2}));
  CHECK(IntPolynomial::parse("2*x^2 + 3*x - 4") == poly({-4, 3, 2}));
  CHECK(IntPolynomial::parse("-x + 5") == poly({5, -1}));
  CHECK(IntPolynomial::parse("x + x") == poly({0, 2}));
  CHECK(IntPolynomial::parse("7") == poly({7}));

  CHECK_THROWS_AS(IntPolynomial::parse(""), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("x^"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("x 1"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("x - x"), Error);  // identically zero
  CHECK_THROWS_AS(IntPolynomial::parse("[1, \"oops\"]"), Error);
}

TEST_CASE("parse round trip through to_string") {
  for (auto p : {poly({-1, -1, 0, 1}), poly({1, 0, 1}), poly({-4, 3, 2}), poly({5, -1}),
                 poly({0, 0, 0, -7, 0, 1})}) {
    CHECK(IntPolynomial::parse(p.to_string()) == p);
    CHECK(IntPolynomial::from_json(p.to_json()) == p);
  }
}

TEST_CASE("derivative, shift, evaluation") {
  IntPolynomial p = poly({-1, -1, 0, 1});  // x^3 - x - 1
  CHECK(p.derivative() == poly({-1, 0, 3}));
  CHECK(p.eval(mpq_class(2)) == 5);
  CHECK(p.eval(mpq_class(1, 2)) == mpq_class(-11, 8));
  IntPolynomial shifted = p.shift_x(mpz_class(3));  // p(x + 3)
  CHECK(shifted.eval(mpq_class(0)) == p.eval(mpq_class(3)));
  CHECK(shifted.eval(mpq_class(-3)) == p.eval(mpq_class(0)));
  CHECK(shifted.degree() == 3);
}

TEST_CASE("gcd and squarefree detection") {
  IntPolynomial sq = poly({1, -2, 1});  // (x-1)^2
  CHECK_FALSE(sq.squarefree());
  CHECK(poly({-1, 0, 1}).squarefree());
  IntPolynomial g = poly_gcd(poly({-1, 0, 1}), poly({1, -2, 1}));  // gcd(x^2-1, (x-1)^2) = x-1
  CHECK(g == poly({-1, 1}));
}

TEST_CASE("signature-relevant Sturm machinery") {
  SturmChain quad(poly({1, 0, 1}));  // x^2 + 1
  CHECK(quad.count_real_roots() == 0);
  SturmChain sqrt2(poly({-2, 0, 1}));
  CHECK(sqrt2.count_real_roots() == 2);
  SturmChain cubic(poly({-1, -1, 0, 1}));
  CHECK(cubic.count_real_roots() == 1);
  CHECK(cubic.count_real_roots() == oracle::count_real_roots(poly({-1, -1, 0, 1})));

  // x^4 - 5x^2 + 6 = (x^2-2)(x^2-3): four real roots
  SturmChain quartic(poly({6, 0, -5, 0, 1}));
  CHECK(quartic.count_real_roots() == 4);
  CHECK(quartic.count_roots_in(mpq_class(0), mpq_class(2)) == 2);  // sqrt2, sqrt3
}

TEST_CASE("real root isolation and refinement") {
  IntPolynomial p = poly({6, 0, -5, 0, 1});  // roots +-sqrt2, +-sqrt3
  SturmChain chain(p);
  auto roots = chain.isolate_real_roots();
  REQUIRE(roots.size() == 4);
  std::vector<long> squares{3, 2, 2, 3};
  for (size_t i = 0; i < 4; ++i) {
    RealRoot refined = refine_root(p, roots[i], 70);
    CHECK(refined.radius() <= pow_q(mpq_class(1, 2), 70));
    // enclosure must sit on the true root: compare the squared endpoints
    mpq_class lo = refined.lower(), hi = refined.upper();
    CHECK(lo * lo <= mpq_class(squares[i]) + mpq_class(1, 1000));
    CHECK(hi * hi >= mpq_class(squares[i]) - mpq_class(1, 1000));
  }
  for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].upper() <= roots[i].lower());
}

TEST_CASE("isolation finds exact rational roots") {
  IntPolynomial p = poly({0, -4, 0, 1});  // x(x-2)(x+2)
  SturmChain chain(p);
  auto roots = chain.isolate_real_roots();
  REQUIRE(roots.size() == 3);
  for (auto& r : roots) {
    RealRoot refined = refine_root(p, r, 40);
    if (refined.exact) CHECK(p.eval(refined.value) == 0);
    CHECK(refined.radius() <= pow_q(mpq_class(1, 2), 40));
  }
}

TEST_CASE("resultant against the Sylvester oracle") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coeff(-12, 12);
  for (int iter = 0; iter < 200; ++iter) {
    int da = 1 + static_cast<int>(rng() % 4);
    int db = 1 + static_cast<int>(rng() % 4);
    std::vector<mpz_class> a(da + 1), b(db + 1);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    if (a.back() == 0) a.back() = 1;
    if (b.back() == 0) b.back() = 1;
    IntPolynomial pa(a), pb(b);
    CHECK(resultant(pa, pb) == oracle::sylvester_resultant(pa, pb));
  }
}

TEST_CASE("discriminant examples") {
  CHECK(polynomial_discriminant(poly({1, 0, 1})) == -4);
  CHECK(polynomial_discriminant(poly({-2, 0, 1})) == 8);
  CHECK(polynomial_discriminant(poly({-1, -1, 0, 1})) == -23);
  CHECK(polynomial_discriminant(poly({-1, -1, 1})) == 5);  // x^2 - x - 1
  CHECK(polynomial_discriminant(poly({1, 0, 0, 0, 1})) == 256);
  CHECK_THROWS_AS(polynomial_discriminant(poly({1, 0, 2})), Error);  // non-monic
  CHECK_THROWS_AS(polynomial_discriminant(poly({7})), Error);        // degree zero

  // the float oracle agrees on the named examples
  CHECK(oracle::discriminant(poly({1, 0, 1})) == doctest::Approx(-4));
  CHECK(oracle::discriminant(poly({-2, 0, 1})) == doctest::Approx(8));
  CHECK(oracle::discriminant(poly({-1, -1, 0, 1})) == doctest::Approx(-23));
}

TEST_CASE("discriminant matches the root-product oracle on random cubics") {
  std::mt19937_64 rng(20250809);
  std::uniform_int_distribution<long> coeff(-20, 20);
  int tested = 0;
  while (tested < 1000) {
    std::vector<mpz_class> c{coeff(rng), coeff(rng), coeff(rng), 1};
    IntPolynomial p(c);
    if (!p.squarefree()) continue;
    ++tested;
    mpz_class exact = polynomial_discriminant(p);
    double approx = oracle::discriminant(p);
    double exact_d = exact.get_d();
    CHECK(std::abs(approx - exact_d) <= 1e-6 * std::max(1.0, std::abs(exact_d)));
  }
}

// the discriminant of a trinomial has a closed form; spot-check the PRS path
TEST_CASE("trinomial discriminant closed form") {
  // disc(x^3 + px + q) = -4p^3 - 27q^2
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-30, 30);
  for (int i = 0; i < 100; ++i) {
    long p = coeff(rng), q = coeff(rng);
    IntPolynomial f(std::vector<mpz_class>{mpz_class(q), mpz_class(p), mpz_class(0), mpz_class(1)});
    mpz_class expect = -4 * mpz_class(p) * p * p - 27 * mpz_class(q) * q;
    CHECK(polynomial_discriminant(f) == expect);
  }
}
