#ifndef EUCMIN_LATTICE_HPP
#define EUCMIN_LATTICE_HPP

// Minkowski-embedding lattices: basis construction from a defining
// polynomial, exact LLL reduction, certified successive minima by
// Fincke-Pohst enumeration, and one-sided estimates of the homogeneous and
// inhomogeneous minima of the norm form N_s.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eucmin/field.hpp"
#include "eucmin/hermite.hpp"
#include "eucmin/interval.hpp"
#include "eucmin/polynomial.hpp"
#include "json.hpp"

namespace eucmin {

struct Split {
  int r = 0;
  int s = 0;
  int n() const { return r + 2 * s; }
};

// Row-major basis: row k is the k-th basis vector. Entries are kept as exact
// rational centers plus nonnegative error radii; an all-zero radius matrix
// means the basis is exact.
class LatticeBasis {
public:
  LatticeBasis(Split split, std::vector<std::vector<mpq_class>> centers,
               std::vector<std::vector<mpq_class>> radii);
  static LatticeBasis exact(Split split, std::vector<std::vector<mpq_class>> rows);

  int dim() const { return dim_; }
  const Split& split() const { return split_; }
  const std::vector<std::vector<mpq_class>>& centers() const { return centers_; }
  const std::vector<std::vector<mpq_class>>& radii() const { return radii_; }
  bool is_exact() const;
  mpq_class max_radius() const;
  Interval entry(int i, int j, mpfr_prec_t prec = 128) const;

  // {dim, split: [r, s], rows: [[decimal strings]], err_bits}. err_bits B
  // certifies per-entry error <= 2^-B; B = 65535 marks exact entries.
  nlohmann::json to_json() const;
  static LatticeBasis from_json(const nlohmann::json& j);

private:
  int dim_ = 0;
  Split split_;
  std::vector<std::vector<mpq_class>> centers_;
  std::vector<std::vector<mpq_class>> radii_;
};

// Rational interval certain to contain det of the true basis (signed).
struct DetInterval {
  mpq_class lo, hi;
};
DetInterval det_interval(const LatticeBasis& basis);
mpq_class det_of_centers(const LatticeBasis& basis);
// exact determinant of a square rational matrix (fraction-free elimination)
mpq_class det_exact(const std::vector<std::vector<mpq_class>>& rows);

// psi(b_k) rows for the order spanned by integral_basis (power basis
// 1, theta, ..., theta^(n-1) by default): the r real embeddings first, then
// (Re, Im) of one representative per conjugate pair. Roots are isolated to
// 2^-root_target_bits and the entry radii certified no larger.
LatticeBasis minkowski_basis(
    const IntPolynomial& poly,
    const std::optional<std::vector<std::vector<mpq_class>>>& integral_basis = std::nullopt,
    unsigned root_target_bits = 80);

// N_s(v) = prod |u_i| * prod (v_j^2 + w_j^2).
mpq_class norm_form(const std::vector<mpq_class>& v, const Split& split);
Interval norm_form(const std::vector<Interval>& v, const Split& split);

// (||v||, 2^(-s/n) n^(1/2) N_s(v)^(1/n)); the first dominates the second.
std::pair<Interval, Interval> length_lower_bound(const std::vector<mpq_class>& v,
                                                 const Split& split, mpfr_prec_t prec = 128);
// Exact decision of the same inequality (always conclusive for rational v).
bool length_lower_bound_holds(const std::vector<mpq_class>& v, const Split& split);

struct LLLResult {
  LatticeBasis basis;
  std::vector<std::vector<mpz_class>> transform;  // unimodular U with out = U * in
};
// Exact rational LLL on the center matrix; delta in (1/4, 1).
LLLResult lll_reduce(const LatticeBasis& basis, const mpq_class& delta = mpq_class(99, 100));

struct EnumerationOptions {
  std::uint64_t node_budget = 100000000;
};

struct SuccessiveMinima {
  std::vector<Interval> mu;                       // mu_1 .. mu_k
  std::vector<std::vector<mpz_class>> vectors;    // coefficients in the input basis
  std::vector<mpq_class> mu_sq_centers;           // exact ||.||^2 on the center lattice
  bool rigorous = false;
  std::uint64_t nodes = 0;
};
// Exhaustive Fincke-Pohst enumeration; rigorous for dim <= 8.
SuccessiveMinima successive_minima(const LatticeBasis& basis, int k,
                                   const EnumerationOptions& opts = {});

// (mu_1 ... mu_k, gamma_n^(k/2) det^(k/n)).
std::pair<Interval, Interval> minkowski_product_check(const LatticeBasis& basis, int k,
                                                      const HermiteEstimate& g,
                                                      const EnumerationOptions& opts = {});

struct DetCheck {
  Interval det_abs;        // |det| of the true basis
  mpq_class width;         // exact width of the rational det enclosure
  mpz_class disc_abs;
  int s = 0;
  Interval rhs;            // 2^-s sqrt(disc_abs)
  bool contains_exact = false;  // det enclosure contains 2^-s sqrt(disc_abs)
};
DetCheck det_identity_check(const FieldDescriptor& desc, const LatticeBasis& basis);

struct MinimaEstimate {
  enum class Kind { mu_k, m_s_upper_estimate, M_s_lower_estimate };
  Kind kind = Kind::mu_k;
  Interval value;
  bool rigorous = false;
  std::string params;
};

// min of N_s over nonzero integer combinations with coefficients in
// [-coeff_box, coeff_box]: an upper estimate of m_s.
MinimaEstimate homogeneous_minimum_estimate(const LatticeBasis& basis, int coeff_box);

struct TargetSpec {
  std::optional<int> grid_k;  // dyadic refinement per dimension; default 6 for
                              // n <= 3, 4 for n <= 6, 3 beyond
  std::vector<std::vector<mpq_class>> explicit_targets;  // ambient coordinates
  int random_targets = 0;
  std::uint64_t seed = 0;
};
// max over targets of (min of N_s over lattice points enumerated in a ball
// certain to contain the closest point): a lower estimate of M_s.
MinimaEstimate inhomogeneous_minimum_lower_estimate(const LatticeBasis& basis,
                                                    const TargetSpec& targets = {},
                                                    const EnumerationOptions& opts = {});

struct LemmaCheck {
  Interval lhs, rhs;
  bool certified_applicable = false;  // the one-sided estimate provably stands
                                      // in for the true quantity in lhs <= rhs
  bool violated = false;              // certified lhs > rhs
  std::string note;
};

// m_s upper estimate vs 2^s n^(-n/2) mu_1^n; applicable when the coefficient
// box is certified to cover the mu_1 ball.
LemmaCheck lemma_m_mu1_check(const LatticeBasis& basis, int coeff_box = 3,
                             const EnumerationOptions& opts = {});
// M_s lower estimate vs 2^(s-n) mu_n^n.
LemmaCheck lemma_M_mun_check(const LatticeBasis& basis, const TargetSpec& targets = {},
                             const EnumerationOptions& opts = {});

}  // namespace eucmin

#endif
