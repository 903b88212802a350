#include "eucmin/lattice.hpp"

#include <algorithm>

#include "eucmin/errors.hpp"
#include "eucmin/qinterval.hpp"
#include "eucmin/qutil.hpp"
#include "eucmin/roots.hpp"

namespace eucmin {

namespace {

mpq_class row_norm_sq(const std::vector<mpq_class>& row) {
  mpq_class out = 0;
  for (const auto& x : row) out += x * x;
  return out;
}

}  // namespace

LatticeBasis::LatticeBasis(Split split, std::vector<std::vector<mpq_class>> centers,
                           std::vector<std::vector<mpq_class>> radii)
    : dim_(split.n()), split_(split), centers_(std::move(centers)), radii_(std::move(radii)) {
  if (dim_ < 1) raise(errc::invalid_input, "lattice dimension must be >= 1");
  if (static_cast<int>(centers_.size()) != dim_)
    raise(errc::dimension_mismatch, "basis must have dim rows");
  if (radii_.empty()) radii_.assign(dim_, std::vector<mpq_class>(dim_, mpq_class(0)));
  if (static_cast<int>(radii_.size()) != dim_)
    raise(errc::dimension_mismatch, "radius matrix must have dim rows");
  for (int i = 0; i < dim_; ++i) {
    if (static_cast<int>(centers_[i].size()) != dim_ ||
        static_cast<int>(radii_[i].size()) != dim_)
      raise(errc::dimension_mismatch, "basis rows must have dim entries");
    for (const auto& rad : radii_[i])
      if (sgn(rad) < 0) raise(errc::invalid_input, "negative error radius");
  }
  DetInterval d = det_interval(*this);
  if (sgn(d.lo) <= 0 && sgn(d.hi) >= 0)
    raise(errc::invalid_input, "basis vectors are not certifiably independent");
}

LatticeBasis LatticeBasis::exact(Split split, std::vector<std::vector<mpq_class>> rows) {
  return LatticeBasis(split, std::move(rows), {});
}

bool LatticeBasis::is_exact() const {
  for (const auto& row : radii_)
    for (const auto& x : row)
      if (sgn(x) != 0) return false;
  return true;
}

mpq_class LatticeBasis::max_radius() const {
  mpq_class m = 0;
  for (const auto& row : radii_)
    for (const auto& x : row)
      if (x > m) m = x;
  return m;
}

Interval LatticeBasis::entry(int i, int j, mpfr_prec_t prec) const {
  return Interval::from_endpoints(centers_[i][j] - radii_[i][j], centers_[i][j] + radii_[i][j],
                                  prec);
}

mpq_class det_exact(const std::vector<std::vector<mpq_class>>& rows) {
  // clear denominators row by row, then fraction-free Bareiss elimination
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpq_class scale = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      raise(errc::dimension_mismatch, "determinant needs a square matrix");
    mpz_class l = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rows[i][j].get_den().get_mpz_t());
    scale /= mpq_class(l);
    for (int j = 0; j < n; ++j) {
      mpq_class v = rows[i][j] * mpq_class(l);
      m[i][j] = v.get_num();
    }
  }
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * mpq_class(m[n - 1][n - 1]) * scale;
}

mpq_class det_of_centers(const LatticeBasis& basis) { return det_exact(basis.centers()); }

DetInterval det_interval(const LatticeBasis& basis) {
  // multilinearity: |det(C + E) - det(C)| <= prod(||c_i|| + ||e_i||) - prod ||c_i||
  mpq_class det_c = det_of_centers(basis);
  mpq_class prod_a = 1, prod_ae = 1;
  for (int i = 0; i < basis.dim(); ++i) {
    mpq_class a = sqrt_q_upper(row_norm_sq(basis.centers()[i]), 96);
    mpq_class e = sqrt_q_upper(row_norm_sq(basis.radii()[i]), 96);
    prod_a *= a;
    prod_ae *= a + e;
  }
  mpq_class delta = prod_ae - prod_a;
  return {det_c - delta, det_c + delta};
}

namespace {

QInterval eval_interval_poly(const std::vector<mpq_class>& coeffs, const QInterval& x) {
  QInterval acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + QInterval(*it);
  return acc;
}

// complex disk (center, radius) with exact rational data
struct QDisk {
  mpq_class re, im, rad;

  static mpq_class abs1(const QDisk& d) { return abs(d.re) + abs(d.im); }

  QDisk operator+(const QDisk& o) const { return {re + o.re, im + o.im, rad + o.rad}; }
  QDisk operator*(const QDisk& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re,
            abs1(*this) * o.rad + abs1(o) * rad + rad * o.rad};
  }
};

QDisk eval_disk_poly(const std::vector<mpq_class>& coeffs, const QDisk& z) {
  QDisk acc{0, 0, 0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

}  // namespace

LatticeBasis minkowski_basis(const IntPolynomial& poly,
                             const std::optional<std::vector<std::vector<mpq_class>>>& integral_basis,
                             unsigned root_target_bits) {
  if (poly.degree() < 1) raise(errc::degree_zero, "defining polynomial needs degree >= 1");
  if (!poly.is_monic()) raise(errc::non_monic, "defining polynomial must be monic");
  const int n = poly.degree();

  std::vector<std::vector<mpq_class>> elements;
  if (integral_basis) {
    if (static_cast<int>(integral_basis->size()) != n)
      raise(errc::dimension_mismatch, "integral basis must have n elements");
    for (const auto& b : *integral_basis) {
      if (static_cast<int>(b.size()) > n)
        raise(errc::invalid_input, "integral basis elements must have degree < n");
      elements.push_back(b);
    }
  } else {
    for (int k = 0; k < n; ++k) {
      std::vector<mpq_class> power(k + 1, mpq_class(0));
      power[k] = 1;
      elements.push_back(std::move(power));
    }
  }

  mpq_class target = pow_q(mpq_class(1, 2), static_cast<long>(root_target_bits));
  unsigned bits = root_target_bits + 24;
  const unsigned max_bits = 16 * root_target_bits + 4096;
  while (true) {
    RootIsolation roots = isolate_roots(poly, bits);
    const int r = static_cast<int>(roots.real_roots.size());
    const int s = static_cast<int>(roots.complex_roots.size());
    Split split{r, s};

    std::vector<std::vector<mpq_class>> centers(n, std::vector<mpq_class>(n));
    std::vector<std::vector<mpq_class>> radii(n, std::vector<mpq_class>(n));
    mpq_class worst = 0;
    for (int k = 0; k < n; ++k) {
      int col = 0;
      for (int i = 0; i < r; ++i) {
        QInterval x{roots.real_roots[i].lower(), roots.real_roots[i].upper()};
        QInterval v = eval_interval_poly(elements[k], x);
        centers[k][col] = (v.lo + v.hi) / 2;
        radii[k][col] = (v.hi - v.lo) / 2;
        if (radii[k][col] > worst) worst = radii[k][col];
        ++col;
      }
      for (int j = 0; j < s; ++j) {
        const auto& d = roots.complex_roots[j];
        QDisk v = eval_disk_poly(elements[k], QDisk{d.re, d.im, d.radius});
        centers[k][col] = v.re;
        radii[k][col] = v.rad;
        centers[k][col + 1] = v.im;
        radii[k][col + 1] = v.rad;
        if (v.rad > worst) worst = v.rad;
        col += 2;
      }
    }
    if (worst <= target) return LatticeBasis(split, std::move(centers), std::move(radii));
    if (bits >= max_bits)
      raise(errc::precision_exhausted, "embedding entries did not reach the target radius");
    bits *= 2;
  }
}

mpq_class norm_form(const std::vector<mpq_class>& v, const Split& split) {
  if (static_cast<int>(v.size()) != split.n())
    raise(errc::dimension_mismatch, "vector length must be r + 2s");
  mpq_class out = 1;
  for (int i = 0; i < split.r; ++i) out *= abs(v[i]);
  for (int j = 0; j < split.s; ++j) {
    const mpq_class& re = v[split.r + 2 * j];
    const mpq_class& im = v[split.r + 2 * j + 1];
    out *= re * re + im * im;
  }
  return out;
}

Interval norm_form(const std::vector<Interval>& v, const Split& split) {
  if (static_cast<int>(v.size()) != split.n())
    raise(errc::dimension_mismatch, "vector length must be r + 2s");
  mpfr_prec_t prec = v.empty() ? 128 : v.front().prec();
  Interval out = Interval::from_si(1, prec);
  for (int i = 0; i < split.r; ++i) out = out * v[i].abs();
  for (int j = 0; j < split.s; ++j)
    out = out * (v[split.r + 2 * j].square() + v[split.r + 2 * j + 1].square());
  return out;
}

std::pair<Interval, Interval> length_lower_bound(const std::vector<mpq_class>& v,
                                                 const Split& split, mpfr_prec_t prec) {
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
  if (!nonzero) raise(errc::zero_vector, "length bound needs a nonzero vector");
  const int n = split.n();
  mpq_class len_sq = 0;
  for (const auto& x : v) len_sq += x * x;
  Interval lhs = Interval::from_mpq(len_sq, prec).sqrt();
  mpq_class norm = norm_form(v, split);
  Interval rhs = Interval::from_si(2, prec).pow(make_q(-split.s, n)) *
                 Interval::from_si(n, prec).sqrt() *
                 Interval::from_mpq(norm, prec).pow(make_q(1, n));
  return {lhs, rhs};
}

bool length_lower_bound_holds(const std::vector<mpq_class>& v, const Split& split) {
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
  if (!nonzero) raise(errc::zero_vector, "length bound needs a nonzero vector");
  // ||v|| >= 2^(-s/n) sqrt(n) N^(1/n)  <=>  ||v||^(2n) * 2^(2s) >= n^n N^2
  const int n = split.n();
  mpq_class len_sq = 0;
  for (const auto& x : v) len_sq += x * x;
  mpq_class norm = norm_form(v, split);
  mpq_class lhs = pow_q(len_sq, n) * pow_q(mpq_class(4), split.s);
  mpq_class rhs = pow_q(mpq_class(n), n) * norm * norm;
  return lhs >= rhs;
}

DetCheck det_identity_check(const FieldDescriptor& desc, const LatticeBasis& basis) {
  if (basis.dim() != desc.n)
    raise(errc::dimension_mismatch, "basis dimension does not match field degree");
  DetCheck out;
  out.disc_abs = desc.disc_abs;
  out.s = desc.s;
  DetInterval d = det_interval(basis);
  mpq_class abs_lo = std::min(abs(d.lo), abs(d.hi));
  mpq_class abs_hi = std::max(abs(d.lo), abs(d.hi));
  if (sgn(d.lo) <= 0 && sgn(d.hi) >= 0) abs_lo = 0;
  out.width = d.hi - d.lo;
  out.det_abs = Interval::from_endpoints(abs_lo, abs_hi, 192);
  Interval rhs = Interval::from_mpz(desc.disc_abs, 192).sqrt() *
                 Interval::from_si(2, 192).pow_int(-desc.s);
  out.rhs = rhs;
  // containment decided exactly: lo <= 2^-s sqrt(D) <= hi  <=>  squares compare
  mpq_class target_sq = mpq_class(desc.disc_abs) / pow_q(mpq_class(4), desc.s);
  out.contains_exact = abs_lo * abs_lo <= target_sq && target_sq <= abs_hi * abs_hi;
  return out;
}

nlohmann::json LatticeBasis::to_json() const {
  // pick the decimal length from the current certified radius so truncation
  // noise stays below it
  bool needs_truncation = false;
  for (const auto& row : centers_)
    for (const auto& c : row)
      if (!has_finite_decimal(c)) needs_truncation = true;

  mpq_class rad = max_radius();
  unsigned err_bits;
  if (sgn(rad) == 0 && !needs_truncation) {
    err_bits = 65535;
  } else if (sgn(rad) == 0) {
    err_bits = 994;  // exact entries, but a center needs decimal truncation
  } else {
    unsigned b = 0;
    mpq_class t = rad;
    while (t < mpq_class(1, 2) && b < 960) {
      t *= 2;
      ++b;
    }
    err_bits = b;  // rad < 2^-b
  }
  int digits = static_cast<int>(err_bits * 0.302) + 10;

  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < dim_; ++j) {
      const mpq_class& c = centers_[i][j];
      if (has_finite_decimal(c)) {
        row.push_back(finite_decimal_string(c));
      } else {
        std::string sign_prefix = sgn(c) < 0 ? "-" : "";
        row.push_back(sign_prefix + truncate_decimal(abs(c), digits));
      }
    }
    rows.push_back(std::move(row));
  }
  if (needs_truncation && err_bits > 0) --err_bits;  // absorb truncation error
  nlohmann::json j;
  j["dim"] = dim_;
  j["split"] = {split_.r, split_.s};
  j["rows"] = std::move(rows);
  j["err_bits"] = err_bits;
  return j;
}

LatticeBasis LatticeBasis::from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("split") || !j.contains("rows") || !j.contains("err_bits"))
    raise(errc::invalid_input, "lattice JSON needs dim, split, rows, err_bits");
  int dim = j["dim"].get<int>();
  Split split{j["split"][0].get<int>(), j["split"][1].get<int>()};
  if (split.n() != dim) raise(errc::invalid_input, "split does not match dim");
  unsigned err_bits = j["err_bits"].get<unsigned>();
  mpq_class rad = err_bits >= 65535 ? mpq_class(0) : pow_q(mpq_class(1, 2), err_bits);
  std::vector<std::vector<mpq_class>> centers, radii;
  for (const auto& row : j["rows"]) {
    std::vector<mpq_class> c, e;
    for (const auto& entry : row) {
      std::string s = entry.get<std::string>();
      // decimal string -> exact rational
      size_t dot = s.find('.');
      if (dot == std::string::npos) {
        c.push_back(mpq_class(parse_mpz(s)));
      } else {
        std::string digits_part = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac = s.size() - dot - 1;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpq_class v(parse_mpz(digits_part), den);
        v.canonicalize();
        c.push_back(v);
      }
      e.push_back(rad);
    }
    centers.push_back(std::move(c));
    radii.push_back(std::move(e));
  }
  return LatticeBasis(split, std::move(centers), std::move(radii));
}

}  // namespace eucmin
