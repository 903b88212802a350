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

}  // namespace

TEST_CASE("Minkowski basis for the Gaussian integers is the identity") {
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^2+1"));
  CHECK(basis.dim() == 2);
  CHECK(basis.split().r == 0);
  CHECK(basis.split().s == 1);
  CHECK(basis.centers()[0][0] == 1);
  CHECK(basis.centers()[0][1] == 0);
  // psi(i) = (0, 1): the root is exactly dyadic so the enclosure is exact
  CHECK(abs(basis.centers()[1][0]) <= mpq_class(1, mpz_class(1) << 80));
  CHECK(abs(basis.centers()[1][1] - 1) <= mpq_class(1, mpz_class(1) << 80));
  DetInterval det = det_interval(basis);
  CHECK(det.lo <= 1);
  CHECK(det.hi >= 1);
}

TEST_CASE("Minkowski basis for Q(sqrt 2)") {
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^2-2"));
  CHECK(basis.split().r == 2);
  CHECK(basis.split().s == 0);
  // rows psi(1) = (1, 1), psi(theta) = (-sqrt2, sqrt2) or (sqrt2, -sqrt2)
  // depending on embedding order (roots ascending: -sqrt2 first)
  CHECK(basis.centers()[0][0] == 1);
  CHECK(basis.centers()[0][1] == 1);
  mpq_class a = basis.centers()[1][0];
  CHECK(a < 0);  // ascending root order puts -sqrt2 in the first coordinate
  CHECK(abs(a * a - 2) < mpq_class(1, mpz_class(1) << 70));
  // |det| = 2 sqrt2 = sqrt8
  DetInterval det = det_interval(basis);
  mpq_class lo = std::min(abs(det.lo), abs(det.hi));
  mpq_class hi = std::max(abs(det.lo), abs(det.hi));
  CHECK(lo * lo <= 8);
  CHECK(hi * hi >= 8);
}

TEST_CASE("det identity for the named fields") {
  for (const char* text : {"x^2+1", "x^2-2", "x^2-x-1", "x^3-x-1", "x^4+1"}) {
    FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse(text));
    LatticeBasis basis = minkowski_basis(*desc.defining_poly);
    DetCheck check = det_identity_check(desc, basis);
    CAPTURE(text);
    CHECK(check.contains_exact);
    CHECK(check.width < mpq_class(mpz_class(1), mpz_class("100000000000000000000")));
  }
}

TEST_CASE("custom integral basis scales the lattice") {
  // basis {1, 2 theta} for Z[i]: index 2 in the ring of integers, det 2
  std::vector<std::vector<mpq_class>> elements{{mpq_class(1)}, {mpq_class(0), mpq_class(2)}};
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^2+1"), elements);
  DetInterval det = det_interval(basis);
  CHECK(det.lo <= 2);
  CHECK(det.hi >= 2);
  // wrong element count
  std::vector<std::vector<mpq_class>> bad{{mpq_class(1)}};
  CHECK_THROWS_AS(minkowski_basis(IntPolynomial::parse("x^2+1"), bad), Error);
}

TEST_CASE("norm form on exact vectors") {
  CHECK(norm_form({mpq_class(3), mpq_class(-2)}, Split{2, 0}) == 6);
  CHECK(norm_form({mpq_class(3), mpq_class(4)}, Split{0, 1}) == 25);
  CHECK(norm_form({mpq_class(2), mpq_class(1), mpq_class(1)}, Split{1, 1}) == 4);
  CHECK_THROWS_AS(norm_form({mpq_class(1)}, Split{2, 0}), Error);
}

TEST_CASE("norm form homogeneity: N(t v) = t^n N(v)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-50, 50);
  for (int iter = 0; iter < 200; ++iter) {
    int s = static_cast<int>(rng() % 3);
    int r = static_cast<int>(rng() % 3);
    if (r + 2 * s == 0) continue;
    Split split{r, s};
    int n = split.n();
    std::vector<mpq_class> v(n);
    for (auto& x : v) x = mpq_class(num(rng), 7);
    for (auto& x : v) x.canonicalize();
    mpq_class t(static_cast<long>(1 + rng() % 9), 4);
    t.canonicalize();
    std::vector<mpq_class> tv(n);
    for (int i = 0; i < n; ++i) tv[i] = t * v[i];
    CHECK(norm_form(tv, split) == pow_q(t, n) * norm_form(v, split));
  }
}

TEST_CASE("length lower bound examples") {
  // split (0,1), v = (1,1): equality at sqrt2
  auto [lhs, rhs] = length_lower_bound({mpq_class(1), mpq_class(1)}, Split{0, 1});
  CHECK(!certified_gt(rhs, lhs));
  CHECK(compare(lhs, rhs) == cmp3::overlap);  // equal up to rounding
  CHECK(length_lower_bound_holds({mpq_class(1), mpq_class(1)}, Split{0, 1}));

  // split (2,0), v = (1,1): equality again
  CHECK(length_lower_bound_holds({mpq_class(1), mpq_class(1)}, Split{2, 0}));

  // split (2,0), v = (2,1): sqrt5 > 2 strictly
  auto [l2, r2] = length_lower_bound({mpq_class(2), mpq_class(1)}, Split{2, 0});
  CHECK(certified_gt(l2, r2));
  CHECK(l2.square().contains(mpq_class(5)));
  CHECK(r2.square().contains(mpq_class(4)));

  CHECK_THROWS_AS(length_lower_bound({mpq_class(0), mpq_class(0)}, Split{2, 0}), Error);
}

TEST_CASE("LLL: identity is a fixed point") {
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  LLLResult out = lll_reduce(identity);
  CHECK(out.basis.centers() == identity.centers());
  CHECK(out.transform == std::vector<std::vector<mpz_class>>{{1, 0}, {0, 1}});
}

TEST_CASE("LLL reduces a skew basis") {
  LatticeBasis skew = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {1000, 1}}));
  LLLResult out = lll_reduce(skew);
  // first reduced vector within the Hermite bound gamma_2^(1/2) det^(1/2) = 2/sqrt3
  mpq_class norm1_sq = 0;
  for (const auto& x : out.basis.centers()[0]) norm1_sq += x * x;
  CHECK(norm1_sq * 3 <= 4);  // ||b1||^2 <= 4/3
  // determinant preserved exactly
  CHECK(abs(det_of_centers(out.basis)) == abs(det_of_centers(skew)));
}

TEST_CASE("LLL output is a unimodular transform of the input") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-30, 30);
  int tested = 0;
  while (tested < 50) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    if (sgn(det_exact(rows)) == 0) continue;
    ++tested;
    LatticeBasis basis = LatticeBasis::exact(Split{n, 0}, rows);
    LLLResult out = lll_reduce(basis);
    // rows_out = U rows_in, exactly
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) {
        mpq_class acc = 0;
        for (int t = 0; t < n; ++t) acc += mpq_class(out.transform[i][t]) * rows[t][c];
        CHECK(acc == out.basis.centers()[i][c]);
      }
    // |det U| = 1
    std::vector<std::vector<mpq_class>> uq(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) uq[i][j] = out.transform[i][j];
    CHECK(abs(det_exact(uq)) == 1);
    // determinant invariant
    CHECK(abs(det_of_centers(out.basis)) == abs(det_exact(rows)));
  }
}

TEST_CASE("LLL rejects bad delta and dependent rows") {
  LatticeBasis identity = LatticeBasis::exact(Split{2, 0}, qrows({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(lll_reduce(identity, mpq_class(1, 5)), Error);
  CHECK_THROWS_AS(lll_reduce(identity, mpq_class(1)), Error);
  CHECK_THROWS_AS(LatticeBasis::exact(Split{2, 0}, qrows({{1, 1}, {2, 2}})), Error);
}

TEST_CASE("lattice JSON round trip") {
  LatticeBasis basis = minkowski_basis(IntPolynomial::parse("x^3-x-1"));
  nlohmann::json j = basis.to_json();
  CHECK(j["dim"] == 3);
  CHECK(j["split"][0] == 1);
  CHECK(j["split"][1] == 1);
  CHECK(j["err_bits"].get<int>() > 80);
  LatticeBasis back = LatticeBasis::from_json(j);
  CHECK(back.dim() == basis.dim());
  // reloaded entries enclose the original centers
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) {
      mpq_class diff = abs(back.centers()[i][c] - basis.centers()[i][c]);
      CHECK(diff <= back.radii()[i][c]);
    }
  // determinant agrees within the (coarser) reloaded radii
  DetInterval orig = det_interval(basis);
  DetInterval reload = det_interval(back);
  CHECK(reload.lo <= orig.hi);
  CHECK(reload.hi >= orig.lo);

  // exact bases use the sentinel and reload exactly
  LatticeBasis exact = LatticeBasis::exact(Split{2, 0}, qrows({{3, 1}, {1, 2}}));
  nlohmann::json je = exact.to_json();
  CHECK(je["err_bits"] == 65535);
  LatticeBasis exact_back = LatticeBasis::from_json(je);
  CHECK(exact_back.centers() == exact.centers());
  CHECK(exact_back.is_exact());

  CHECK_THROWS_AS(LatticeBasis::from_json(nlohmann::json{{"dim", 2}}), Error);
}
