#include <algorithm>

#include "eucmin/errors.hpp"
#include "eucmin/lattice.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

namespace {

struct GSO {
  std::vector<std::vector<mpq_class>> mu;  // lower triangular
  std::vector<mpq_class> B;                // squared lengths of the b* vectors
};

GSO compute_gso(const std::vector<std::vector<mpq_class>>& rows) {
  const int n = static_cast<int>(rows.size());
  GSO g;
  g.mu.assign(n, std::vector<mpq_class>(n, mpq_class(0)));
  g.B.assign(n, mpq_class(0));
  std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    star[i] = rows[i];
    for (int j = 0; j < i; ++j) {
      mpq_class dot = 0;
      for (int t = 0; t < n; ++t) dot += rows[i][t] * star[j][t];
      if (sgn(g.B[j]) == 0) raise(errc::invalid_input, "LLL input rows are dependent");
      g.mu[i][j] = dot / g.B[j];
      for (int t = 0; t < n; ++t) star[i][t] -= g.mu[i][j] * star[j][t];
    }
    for (int t = 0; t < n; ++t) g.B[i] += star[i][t] * star[i][t];
    if (sgn(g.B[i]) == 0) raise(errc::invalid_input, "LLL input rows are dependent");
  }
  return g;
}

}  // namespace

LLLResult lll_reduce(const LatticeBasis& basis, const mpq_class& delta) {
  if (delta <= mpq_class(1, 4) || delta >= 1)
    raise(errc::invalid_input, "LLL delta must lie in (1/4, 1)");
  const int n = basis.dim();
  std::vector<std::vector<mpq_class>> rows = basis.centers();
  std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (int i = 0; i < n; ++i) U[i][i] = 1;

  GSO g = compute_gso(rows);
  int k = 1;
  long iterations = 0;
  while (k < n) {
    if (++iterations > 10000000) raise(errc::internal, "LLL did not terminate");
    // size-reduce row k
    for (int j = k - 1; j >= 0; --j) {
      mpz_class q = round_q(g.mu[k][j]);
      if (q != 0) {
        mpq_class qq(q);
        for (int t = 0; t < n; ++t) rows[k][t] -= qq * rows[j][t];
        for (int t = 0; t < n; ++t) U[k][t] -= q * U[j][t];
        for (int t = 0; t < j; ++t) g.mu[k][t] -= qq * g.mu[j][t];
        g.mu[k][j] -= qq;
      }
    }
    // Lovasz condition at k
    if (g.B[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
      ++k;
    } else {
      std::swap(rows[k], rows[k - 1]);
      std::swap(U[k], U[k - 1]);
      g = compute_gso(rows);  // small dimensions: full recompute is cheap
      k = std::max(k - 1, 1);
    }
  }

  // map the radii through |U|
  std::vector<std::vector<mpq_class>> radii(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      mpz_class au = ::abs(U[i][t]);
      if (au != 0)
        for (int c = 0; c < n; ++c) radii[i][c] += mpq_class(au) * basis.radii()[t][c];
    }
  return LLLResult{LatticeBasis(basis.split(), std::move(rows), std::move(radii)), std::move(U)};
}

}  // namespace eucmin
