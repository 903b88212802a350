#include "eucmin/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

namespace {

// Complex number with exact rational parts. Iterations round back to dyadic
// after each step to keep operand sizes bounded.
struct QC {
  mpq_class re, im;

  QC() = default;
  QC(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
  QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
  QC operator*(const QC& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  QC operator/(const QC& o) const {
    mpq_class d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  mpq_class norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  QC rounded(unsigned bits) const { return {round_dyadic(re, bits), round_dyadic(im, bits)}; }
};

QC eval_poly(const std::vector<mpz_class>& coeffs, const QC& z) {
  QC acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re += mpq_class(*it);
  }
  return acc;
}

std::vector<QC> initial_circle(const IntPolynomial& p, unsigned bits) {
  int n = p.degree();
  double radius = 0.5 + 0.5 * mpq_class(cauchy_bound(p)).get_d();
  std::vector<QC> z(n);
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * 3.14159265358979323846 * (k + 0.3728) / n + 0.2193;
    z[k] = QC(round_dyadic(mpq_class(radius * std::cos(ang) * (1u << 20), 1u << 20), bits),
              round_dyadic(mpq_class(radius * std::sin(ang) * (1u << 20), 1u << 20), bits));
  }
  return z;
}

// One Aberth-Ehrlich sweep; returns max |step| (L1) over the roots.
mpq_class aberth_sweep(const IntPolynomial& p, const IntPolynomial& dp, std::vector<QC>& z,
                       unsigned bits) {
  const int n = static_cast<int>(z.size());
  mpq_class max_step = 0;
  for (int k = 0; k < n; ++k) {
    QC pv = eval_poly(p.coeffs(), z[k]);
    if (pv.is_zero()) continue;
    QC dv = eval_poly(dp.coeffs(), z[k]);
    if (dv.is_zero()) {
      // nudge off the critical point
      z[k].re += mpq_class(1, 1u << 16);
      continue;
    }
    QC newton = pv / dv;
    QC sum;
    bool collision = false;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      QC diff = z[k] - z[j];
      if (diff.is_zero()) {
        collision = true;
        break;
      }
      sum = sum + QC(mpq_class(1), mpq_class(0)) / diff;
    }
    if (collision) {
      z[k].im += mpq_class(1, 1u << 16);
      continue;
    }
    QC denom = QC(mpq_class(1), mpq_class(0)) - newton * sum;
    QC step = denom.is_zero() ? newton : newton / denom;
    z[k] = (z[k] - step).rounded(bits);
    mpq_class len = abs(step.re) + abs(step.im);
    if (len > max_step) max_step = len;
  }
  return max_step;
}

struct Candidate {
  QC z;
  mpq_class radius;  // certified containment radius
};

// Certified containment radius at z, or nothing when p'(z) vanishes:
// the disk of radius n |p(z)/p'(z)| around z contains at least one root.
std::optional<mpq_class> containment_radius(const IntPolynomial& p, const IntPolynomial& dp,
                                            const QC& z, unsigned sqrt_bits) {
  QC pv = eval_poly(p.coeffs(), z);
  QC dv = eval_poly(dp.coeffs(), z);
  mpq_class d2 = dv.norm2();
  if (sgn(d2) == 0) return std::nullopt;
  mpq_class rho2 = mpq_class(p.degree()) * mpq_class(p.degree()) * pv.norm2() / d2;
  return sqrt_q_upper(rho2, sqrt_bits);
}

}  // namespace

RootIsolation isolate_roots(const IntPolynomial& p, unsigned target_bits) {
  if (p.degree() < 1) raise(errc::degree_zero, "cannot isolate roots of a constant");
  if (!p.squarefree()) raise(errc::not_squarefree, "polynomial is not squarefree");

  RootIsolation out;
  out.bits = target_bits;

  SturmChain chain(p);
  std::vector<RealRoot> isolated = chain.isolate_real_roots();
  for (auto& root : isolated) out.real_roots.push_back(refine_root(p, root, target_bits + 4));

  int n = p.degree();
  int r = static_cast<int>(out.real_roots.size());
  if ((n - r) % 2 != 0) raise(errc::internal, "real root count does not match degree parity");
  int s = (n - r) / 2;
  if (s == 0) return out;

  IntPolynomial dp = p.derivative();
  mpq_class target_radius = pow_q(mpq_class(1, 2), static_cast<long>(target_bits));

  unsigned work_bits = std::max(2 * target_bits + 32, 192u);
  const unsigned max_bits = std::max(16 * target_bits, 4096u);
  for (; work_bits <= max_bits; work_bits *= 2) {
    std::vector<QC> z = initial_circle(p, work_bits);
    mpq_class stop = pow_q(mpq_class(1, 2), static_cast<long>(target_bits + 24));
    bool converged = false;
    for (int iter = 0; iter < 400; ++iter) {
      if (aberth_sweep(p, dp, z, work_bits) <= stop) {
        converged = true;
        break;
      }
    }
    if (!converged) continue;

    // candidates: the s approximations highest above the real axis
    std::sort(z.begin(), z.end(), [](const QC& a, const QC& b) { return a.im > b.im; });
    std::vector<Candidate> cands;
    for (int k = 0; k < s && k < n; ++k) {
      if (sgn(z[k].im) <= 0) break;
      auto radius = containment_radius(p, dp, z[k], target_bits + 64);
      if (!radius) break;
      cands.push_back({z[k], *radius});
    }
    if (static_cast<int>(cands.size()) != s) continue;

    bool ok = true;
    for (const auto& c : cands) {
      if (c.radius > target_radius || c.z.im <= c.radius) {
        ok = false;
        break;
      }
    }
    // pairwise disjoint, also against the conjugate family
    for (size_t i = 0; ok && i < cands.size(); ++i) {
      for (size_t j = 0; ok && j < cands.size(); ++j) {
        if (i == j) continue;
        mpq_class d2 = (cands[i].z - cands[j].z).norm2();
        mpq_class rr = cands[i].radius + cands[j].radius;
        if (d2 <= rr * rr) ok = false;
        QC conj{cands[j].z.re, -cands[j].z.im};
        mpq_class dc2 = (cands[i].z - conj).norm2();
        if (dc2 <= rr * rr) ok = false;
      }
    }
    if (!ok) continue;

    for (const auto& c : cands)
      out.complex_roots.push_back(ComplexRootDisk{c.z.re, c.z.im, c.radius});
    std::sort(out.complex_roots.begin(), out.complex_roots.end(),
              [](const ComplexRootDisk& a, const ComplexRootDisk& b) {
                return a.re != b.re ? a.re < b.re : a.im < b.im;
              });
    return out;
  }
  raise(errc::precision_exhausted,
        "could not certify complex roots of " + p.to_string() + " within the precision cap");
}

}  // namespace eucmin
