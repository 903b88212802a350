#include <algorithm>
#include <random>
#include <sstream>

#include "eucmin/errors.hpp"
#include "eucmin/lattice.hpp"
#include "eucmin/qinterval.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

namespace {

struct GSO {
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> B;
};

GSO gso_of(const std::vector<std::vector<mpq_class>>& rows) {
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
      if (sgn(g.B[j]) == 0) raise(errc::invalid_input, "enumeration rows are dependent");
      g.mu[i][j] = dot / g.B[j];
      for (int t = 0; t < n; ++t) star[i][t] -= g.mu[i][j] * star[j][t];
    }
    for (int t = 0; t < n; ++t) g.B[i] += star[i][t] * star[i][t];
    if (sgn(g.B[i]) == 0) raise(errc::invalid_input, "enumeration rows are dependent");
  }
  return g;
}

// Exact Fincke-Pohst: visit every integer x with ||x . rows - target||^2 <= R2.
// The callback receives x (coefficients) and the exact squared distance on the
// center lattice.
class Enumerator {
public:
  Enumerator(const std::vector<std::vector<mpq_class>>& rows, std::uint64_t budget)
      : rows_(rows), n_(static_cast<int>(rows.size())), gso_(gso_of(rows)), budget_(budget) {
    star_.assign(n_, std::vector<mpq_class>(n_));
    for (int i = 0; i < n_; ++i) {
      star_[i] = rows_[i];
      for (int j = 0; j < i; ++j)
        for (int t = 0; t < n_; ++t) star_[i][t] -= gso_.mu[i][j] * star_[j][t];
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  template <typename Callback>
  void enumerate_ball(const mpq_class& R2, const std::vector<mpq_class>* target, Callback&& cb) {
    // target coordinates in the b* frame: tau_i = <t, b*_i> / B_i
    std::vector<mpq_class> tau(n_, mpq_class(0));
    if (target) {
      for (int i = 0; i < n_; ++i) {
        mpq_class dot = 0;
        for (int t = 0; t < n_; ++t) dot += (*target)[t] * star_[i][t];
        tau[i] = dot / gso_.B[i];
      }
    }
    x_.assign(n_, mpz_class(0));
    recurse(n_ - 1, mpq_class(0), R2, tau, cb);
  }

private:
  // upper bound on sqrt(q): a double with margin, exact fallback near the
  // edges of the double range
  static mpq_class sqrt_upper_fast(const mpq_class& q) {
    double d = q.get_d();
    if (d > 1e-280 && d < 1e280) {
      double up = std::sqrt(d) * (1.0 + 1e-9);
      mpq_class out(up);
      return out;
    }
    return sqrt_q_upper(q, 48);
  }

  template <typename Callback>
  void recurse(int level, const mpq_class& partial, const mpq_class& R2,
               const std::vector<mpq_class>& tau, Callback&& cb) {
    if (level < 0) {
      cb(x_, partial);
      return;
    }
    // center c = tau_level - sum_{j > level} mu_{j,level} x_j
    mpq_class c = tau[level];
    for (int j = level + 1; j < n_; ++j)
      if (x_[j] != 0) c -= gso_.mu[j][level] * mpq_class(x_[j]);
    mpq_class room = R2 - partial;
    if (sgn(room) < 0) return;
    mpq_class t = sqrt_upper_fast(room / gso_.B[level]);
    mpz_class lo = ceil_q(c - t);
    mpz_class hi = floor_q(c + t);
    for (mpz_class v = lo; v <= hi; ++v) {
      if (++nodes_ > budget_)
        raise(errc::search_space_too_large,
              "enumeration node budget exceeded (" + std::to_string(budget_) + ")");
      mpq_class diff = mpq_class(v) - c;
      mpq_class next = partial + diff * diff * gso_.B[level];
      if (next > R2) continue;
      x_[level] = v;
      recurse(level - 1, next, R2, tau, cb);
    }
    x_[level] = 0;
  }

  const std::vector<std::vector<mpq_class>>& rows_;
  int n_;
  GSO gso_;
  std::vector<std::vector<mpq_class>> star_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<mpz_class> x_;
};

mpq_class row_norm_sq(const std::vector<mpq_class>& row) {
  mpq_class out = 0;
  for (const auto& x : row) out += x * x;
  return out;
}

// upper bound on | ||x . C_true|| - ||x . C_center|| | from the entry radii
std::vector<mpq_class> row_radius_norms(const LatticeBasis& basis) {
  std::vector<mpq_class> out;
  for (const auto& row : basis.radii()) out.push_back(sqrt_q_upper(row_norm_sq(row), 96));
  return out;
}

mpq_class coefficient_perturbation(const std::vector<mpz_class>& x,
                                   const std::vector<mpq_class>& row_rads) {
  mpq_class w = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) w += mpq_class(::abs(x[i])) * row_rads[i];
  return w;
}

// exact rank over Q of a set of integer vectors
bool independent_of(const std::vector<std::vector<mpq_class>>& chosen,
                    const std::vector<mpz_class>& cand) {
  std::vector<std::vector<mpq_class>> m = chosen;
  std::vector<mpq_class> row;
  for (const auto& v : cand) row.emplace_back(v);
  m.push_back(std::move(row));
  // Gaussian elimination; rank must equal m.size()
  size_t cols = m.back().size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < m.size(); ++i) {
      if (sgn(m[i][col]) == 0) continue;
      mpq_class f = m[i][col] / m[rank][col];
      for (size_t t = col; t < cols; ++t) m[i][t] -= f * m[rank][t];
    }
    ++rank;
  }
  return rank == m.size();
}

std::vector<mpq_class> apply_coeffs(const std::vector<std::vector<mpq_class>>& rows,
                                    const std::vector<mpz_class>& x) {
  size_t n = rows.front().size();
  std::vector<mpq_class> v(n, mpq_class(0));
  for (size_t i = 0; i < rows.size(); ++i)
    if (x[i] != 0)
      for (size_t t = 0; t < n; ++t) v[t] += mpq_class(x[i]) * rows[i][t];
  return v;
}

bool lex_less(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

SuccessiveMinima successive_minima(const LatticeBasis& basis, int k,
                                   const EnumerationOptions& opts) {
  const int n = basis.dim();
  if (k < 1 || k > n) raise(errc::invalid_input, "need 1 <= k <= dim");

  LLLResult reduced = lll_reduce(basis);
  const auto& rows = reduced.basis.centers();

  // every successive minimum is reached within the longest reduced row
  mpq_class R2 = 0;
  for (const auto& row : rows) R2 = std::max(R2, row_norm_sq(row));
  R2 *= mpq_class(1048577, 1048576);  // slack for the center/true gap

  struct Cand {
    std::vector<mpz_class> x;  // in the reduced basis
    mpq_class dist2;
  };
  std::vector<Cand> cands;
  Enumerator enumerator(rows, opts.node_budget);
  enumerator.enumerate_ball(R2, nullptr, [&](const std::vector<mpz_class>& x, const mpq_class& d2) {
    bool zero = true;
    for (const auto& v : x) zero = zero && v == 0;
    if (!zero) cands.push_back({x, d2});
  });
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
    return lex_less(a.x, b.x);
  });

  std::vector<mpq_class> row_rads = row_radius_norms(reduced.basis);
  mpq_class W = 0;

  SuccessiveMinima out;
  std::vector<std::vector<mpq_class>> chosen_q;
  for (const auto& cand : cands) {
    if (static_cast<int>(out.vectors.size()) == k) break;
    if (!independent_of(chosen_q, cand.x)) continue;
    std::vector<mpq_class> row;
    for (const auto& v : cand.x) row.emplace_back(v);
    chosen_q.push_back(std::move(row));
    W = std::max(W, coefficient_perturbation(cand.x, row_rads));
    // map coefficients back to the input basis: v = x . U . input
    std::vector<mpz_class> orig(n, mpz_class(0));
    for (int i = 0; i < n; ++i)
      if (cand.x[i] != 0)
        for (int t = 0; t < n; ++t) orig[t] += cand.x[i] * reduced.transform[i][t];
    out.vectors.push_back(std::move(orig));
    out.mu_sq_centers.push_back(cand.dist2);
  }
  if (static_cast<int>(out.vectors.size()) < k)
    raise(errc::internal, "enumeration ball did not contain k independent vectors");

  for (int i = 0; i < k; ++i) {
    mpq_class lo = sqrt_q_lower(out.mu_sq_centers[i], 160) - W;
    if (sgn(lo) < 0) lo = 0;
    mpq_class hi = sqrt_q_upper(out.mu_sq_centers[i], 160) + W;
    out.mu.push_back(Interval::from_endpoints(lo, hi, 192));
  }
  out.nodes = enumerator.nodes();
  out.rigorous = n <= 8;
  return out;
}

std::pair<Interval, Interval> minkowski_product_check(const LatticeBasis& basis, int k,
                                                      const HermiteEstimate& g,
                                                      const EnumerationOptions& opts) {
  if (g.n != basis.dim()) raise(errc::dimension_mismatch, "estimate dimension mismatch");
  SuccessiveMinima minima = successive_minima(basis, k, opts);
  Interval lhs = Interval::from_si(1, 192);
  for (const auto& mu : minima.mu) lhs = lhs * mu;
  DetInterval d = det_interval(basis);
  mpq_class abs_lo = std::min(abs(d.lo), abs(d.hi));
  mpq_class abs_hi = std::max(abs(d.lo), abs(d.hi));
  Interval det_abs = Interval::from_endpoints(abs_lo, abs_hi, 192);
  Interval rhs = g.value.pow(make_q(k, 2)) * det_abs.pow(make_q(k, basis.dim()));
  return {lhs, rhs};
}

MinimaEstimate homogeneous_minimum_estimate(const LatticeBasis& basis, int coeff_box) {
  if (coeff_box < 1) raise(errc::invalid_input, "coefficient box must be >= 1");
  const int n = basis.dim();
  const auto& rows = basis.centers();
  std::vector<mpq_class> row_rads;  // L1 entry radius bounds per row
  for (const auto& row : basis.radii()) {
    mpq_class m = 0;
    for (const auto& x : row)
      if (x > m) m = x;
    row_rads.push_back(m);
  }

  std::optional<QInterval> best;
  std::vector<mpz_class> coeffs(n, mpz_class(0));

  // depth-first over coefficient vectors, accumulating partial center sums
  std::vector<std::vector<mpq_class>> partial_rows(n + 1, std::vector<mpq_class>(n, mpq_class(0)));
  std::vector<mpq_class> rad_acc(n + 1, mpq_class(0));
  auto recurse = [&](auto&& self, int level) -> void {
    if (level == n) {
      bool zero = true;
      for (const auto& v : coeffs) zero = zero && v == 0;
      if (zero) return;
      QInterval prod{mpq_class(1), mpq_class(1)};
      const Split& sp = basis.split();
      const auto& v = partial_rows[n];
      const mpq_class& w = rad_acc[n];
      for (int i = 0; i < sp.r; ++i) prod = prod * QInterval::centered(v[i], w).abs();
      for (int j = 0; j < sp.s; ++j)
        prod = prod * (QInterval::centered(v[sp.r + 2 * j], w).square() +
                       QInterval::centered(v[sp.r + 2 * j + 1], w).square());
      if (!best) {
        best = prod;
      } else {
        if (prod.lo < best->lo) best->lo = prod.lo;
        if (prod.hi < best->hi) best->hi = prod.hi;
      }
      return;
    }
    for (long c = -coeff_box; c <= coeff_box; ++c) {
      coeffs[level] = c;
      for (int t = 0; t < n; ++t)
        partial_rows[level + 1][t] = partial_rows[level][t] + c * rows[level][t];
      rad_acc[level + 1] = rad_acc[level] + mpq_class(std::abs(c)) * row_rads[level];
      self(self, level + 1);
    }
    coeffs[level] = 0;
  };
  recurse(recurse, 0);

  MinimaEstimate out;
  out.kind = MinimaEstimate::Kind::m_s_upper_estimate;
  out.value = Interval::from_endpoints(std::max(best->lo, mpq_class(0)), best->hi, 192);
  out.rigorous = true;
  long points = 1;
  for (int i = 0; i < n; ++i) points *= 2 * coeff_box + 1;
  out.params = "coeff_box=" + std::to_string(coeff_box) +
               ", points=" + std::to_string(points - 1);
  return out;
}

namespace {

// Round centers to 2^-bits dyadics and widen the radii accordingly: keeps
// every certificate valid while shrinking the rational operand sizes in the
// per-target scans.
LatticeBasis coarsen_basis(const LatticeBasis& basis, unsigned bits) {
  mpq_class step = pow_q(mpq_class(1, 2), static_cast<long>(bits));
  bool worth_it = false;
  for (const auto& row : basis.centers())
    for (const auto& c : row)
      if (c.get_den() > step.get_den()) worth_it = true;
  if (!worth_it) return basis;
  const int n = basis.dim();
  std::vector<std::vector<mpq_class>> centers(n, std::vector<mpq_class>(n));
  std::vector<std::vector<mpq_class>> radii(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      centers[i][j] = round_dyadic(basis.centers()[i][j], bits);
      radii[i][j] = basis.radii()[i][j] + step;
    }
  return LatticeBasis(basis.split(), std::move(centers), std::move(radii));
}

}  // namespace

MinimaEstimate inhomogeneous_minimum_lower_estimate(const LatticeBasis& input_basis,
                                                    const TargetSpec& spec,
                                                    const EnumerationOptions& opts) {
  LatticeBasis basis = coarsen_basis(input_basis, 128);
  const int n = basis.dim();
  const auto& rows = basis.centers();
  const Split& sp = basis.split();

  // enumeration radius: a ball certain to contain the closest lattice point
  // (covering radius <= (sqrt(n)/2) mu_n)
  SuccessiveMinima minima = successive_minima(basis, n, opts);
  mpq_class mu_n_up = minima.mu.back().hi_q();
  mpq_class R2 = make_q(n, 4) * mu_n_up * mu_n_up;
  R2 *= mpq_class(1048577, 1048576);

  int grid_k = spec.grid_k.value_or(n <= 3 ? 6 : (n <= 6 ? 4 : 3));
  long per_dim = 1L << grid_k;

  std::vector<std::vector<mpq_class>> targets;
  {
    // dyadic grid over the fundamental parallelepiped of the basis
    std::vector<long> idx(n, 0);
    bool done = false;
    while (!done) {
      std::vector<mpq_class> t(n, mpq_class(0));
      for (int i = 0; i < n; ++i) {
        if (idx[i] == 0) continue;
        mpq_class f(idx[i], per_dim);
        f.canonicalize();
        for (int c = 0; c < n; ++c) t[c] += f * rows[i][c];
      }
      targets.push_back(std::move(t));
      int pos = 0;
      while (pos < n && ++idx[pos] == per_dim) idx[pos++] = 0;
      done = pos == n;
    }
  }
  for (const auto& t : spec.explicit_targets) {
    if (static_cast<int>(t.size()) != n)
      raise(errc::dimension_mismatch, "explicit target has wrong dimension");
    targets.push_back(t);
  }
  if (spec.random_targets > 0) {
    std::mt19937_64 rng(spec.seed);
    for (int i = 0; i < spec.random_targets; ++i) {
      std::vector<mpq_class> t(n, mpq_class(0));
      for (int c = 0; c < n; ++c) {
        mpq_class f(static_cast<long>(rng() % (1 << 20)), 1 << 20);
        f.canonicalize();
        for (int d = 0; d < n; ++d) t[d] += f * rows[c][d];
      }
      targets.push_back(std::move(t));
    }
  }

  std::vector<mpq_class> row_rads;
  for (const auto& row : basis.radii()) {
    mpq_class m = 0;
    for (const auto& x : row)
      if (x > m) m = x;
    row_rads.push_back(m);
  }

  Enumerator enumerator(rows, opts.node_budget);
  std::optional<QInterval> overall;
  for (const auto& target : targets) {
    std::optional<QInterval> inner;
    enumerator.enumerate_ball(R2, &target, [&](const std::vector<mpz_class>& x, const mpq_class&) {
      std::vector<mpq_class> diff = apply_coeffs(rows, x);
      mpq_class w = 0;
      for (int i = 0; i < n; ++i)
        if (x[i] != 0) w += mpq_class(::abs(x[i])) * row_rads[i];
      QInterval prod{mpq_class(1), mpq_class(1)};
      for (int i = 0; i < sp.r; ++i)
        prod = prod * QInterval::centered(target[i] - diff[i], w).abs();
      for (int j = 0; j < sp.s; ++j)
        prod = prod * (QInterval::centered(target[sp.r + 2 * j] - diff[sp.r + 2 * j], w).square() +
                       QInterval::centered(target[sp.r + 2 * j + 1] - diff[sp.r + 2 * j + 1], w)
                           .square());
      if (!inner) {
        inner = prod;
      } else {
        if (prod.lo < inner->lo) inner->lo = prod.lo;
        if (prod.hi < inner->hi) inner->hi = prod.hi;
      }
    });
    if (!inner) raise(errc::internal, "closest-point ball was empty");
    if (!overall) {
      overall = inner;
    } else {
      if (inner->lo > overall->lo) overall->lo = inner->lo;
      if (inner->hi > overall->hi) overall->hi = inner->hi;
    }
  }

  MinimaEstimate out;
  out.kind = MinimaEstimate::Kind::M_s_lower_estimate;
  out.value = Interval::from_endpoints(std::max(overall->lo, mpq_class(0)), overall->hi, 192);
  out.rigorous = true;
  std::ostringstream params;
  params << "grid_k=" << grid_k << ", targets=" << targets.size()
         << ", explicit=" << spec.explicit_targets.size() << ", random=" << spec.random_targets
         << ", seed=" << spec.seed << ", nodes=" << enumerator.nodes();
  out.params = params.str();
  return out;
}

LemmaCheck lemma_m_mu1_check(const LatticeBasis& basis, int coeff_box,
                             const EnumerationOptions& opts) {
  const int n = basis.dim();
  const int s = basis.split().s;
  MinimaEstimate m_est = homogeneous_minimum_estimate(basis, coeff_box);
  SuccessiveMinima minima = successive_minima(basis, 1, opts);
  const Interval& mu1 = minima.mu.front();

  LemmaCheck out;
  out.lhs = m_est.value;
  out.rhs = Interval::from_si(2, 192).pow_int(s) * Interval::from_si(n, 192).pow(make_q(-n, 2)) *
            mu1.pow_int(n);
  out.violated = certified_gt(out.lhs, out.rhs);

  // the bound constrains the true infimum m_s; the estimate stands in for it
  // only when the box provably covers every vector of length <= mu_1
  mpq_class mu1_up = mu1.hi_q();
  bool covered = true;
  {
    // v = x . C gives x = v . C^-1, so |x_i| <= ||v|| ||column i of C^-1||;
    // invert the center matrix exactly
    const auto& rows = basis.centers();
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i][j] = rows[i][j];
      aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int pivot = col;
      while (pivot < n && sgn(aug[pivot][col]) == 0) ++pivot;
      if (pivot == n) raise(errc::internal, "center matrix singular");
      std::swap(aug[col], aug[pivot]);
      mpq_class inv = 1 / aug[col][col];
      for (int t = 0; t < 2 * n; ++t) aug[col][t] *= inv;
      for (int i = 0; i < n; ++i) {
        if (i == col || sgn(aug[i][col]) == 0) continue;
        mpq_class f = aug[i][col];
        for (int t = 0; t < 2 * n; ++t) aug[i][t] -= f * aug[col][t];
      }
    }
    for (int i = 0; i < n; ++i) {
      mpq_class col_norm_sq = 0;
      for (int j = 0; j < n; ++j) col_norm_sq += aug[j][n + i] * aug[j][n + i];
      mpq_class bound = mu1_up * sqrt_q_upper(col_norm_sq, 96);
      bound *= mpq_class(1048577, 1048576);
      if (mpq_class(coeff_box) < bound) covered = false;
    }
  }
  out.certified_applicable = covered;
  if (!covered)
    out.note = "informational: coefficient box does not provably cover the mu_1 ball; "
               "the reported value is an upper estimate of the true infimum";
  return out;
}

LemmaCheck lemma_M_mun_check(const LatticeBasis& basis, const TargetSpec& targets,
                             const EnumerationOptions& opts) {
  const int n = basis.dim();
  const int s = basis.split().s;
  MinimaEstimate M_est = inhomogeneous_minimum_lower_estimate(basis, targets, opts);
  SuccessiveMinima minima = successive_minima(basis, n, opts);
  const Interval& mu_n = minima.mu.back();

  LemmaCheck out;
  out.lhs = M_est.value;
  out.rhs = Interval::from_si(2, 192).pow_int(s - n) * mu_n.pow_int(n);
  out.violated = certified_gt(out.lhs, out.rhs);
  out.certified_applicable = true;
  return out;
}

}  // namespace eucmin
