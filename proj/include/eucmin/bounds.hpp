#ifndef EUCMIN_BOUNDS_HPP
#define EUCMIN_BOUNDS_HPP

// Upper bounds on the Euclidean minimum M(K): every bound has the shape
// M(K) <= c * D_K^e with c an exact constant times a power of gamma_n.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "eucmin/exact_constant.hpp"
#include "eucmin/field.hpp"
#include "eucmin/hermite.hpp"
#include "eucmin/interval.hpp"

namespace eucmin {

enum class BoundFormula {
  theorem_1_1,
  corollary_1_2,
  bfbj_1_2,
  bayer_fluckiger_4_1,
  a_equals_s_4_2,
};

const char* formula_name(BoundFormula f) noexcept;

struct BoundResult {
  BoundFormula formula = BoundFormula::theorem_1_1;
  int n = 0;
  std::optional<int> a_param;
  mpq_class disc_exponent;          // power of D_K
  ExactConstant coeff_rational;     // gamma-free factor of the coefficient
  mpq_class gamma_exponent;         // symbolic gamma_n power (0 when absent)
  std::optional<HermiteEstimate> hermite;  // the estimate the numeric fields used
  std::optional<ExactConstant> coeff_exact;  // resolved when the estimate is exact
  Interval coeff_value;  // numeric coefficient; for non-exact estimates only
                         // the upper endpoint is a certified bound
  std::optional<Interval> value_at_disc;  // c * D^e at a concrete D
};

// M(K) <= 2^-n n^(-ns/2a) gamma_n^(n(s+a)/2a) D^((s+a)/2a), 1 <= a <= r+s.
BoundResult theorem_bound(const FieldDescriptor& desc, int a, const HermiteEstimate& g,
                          mpfr_prec_t prec = 128);

// theorem_bound at the optimal a = r + s.
BoundResult corollary_bound(const FieldDescriptor& desc, const HermiteEstimate& g,
                            mpfr_prec_t prec = 128);

// The prior bound: larger than theorem_bound by 2^((ar+rs)/2a).
BoundResult bfbj_bound(const FieldDescriptor& desc, int a, const HermiteEstimate& g,
                       mpfr_prec_t prec = 128);

// M(K) <= 2^-n D (signature-free).
BoundResult bayer_fluckiger_bound(const FieldDescriptor& desc, mpfr_prec_t prec = 128);

// a = s specialization: M(K) <= 2^-n n^(-n/2) gamma_n^n D, needs s >= 1.
BoundResult a_equals_s_bound(const FieldDescriptor& desc, const HermiteEstimate& g,
                             mpfr_prec_t prec = 128);

// 2^((ar+rs)/2a), the exact ratio bfbj / theorem.
ExactConstant improvement_factor(const FieldDescriptor& desc, int a);

// Every admissible bound for the signature: theorem and bfbj for each valid a,
// the signature-free bound, and the a = s bound when s >= 1. Uses
// best_hermite_upper for the estimate; no disc evaluation.
std::vector<BoundResult> bound_family(const FieldDescriptor& desc, mpfr_prec_t prec = 128);

// Minimum of the family evaluated at D = disc_value; ties break toward
// smaller a, then formula order as listed in BoundFormula.
BoundResult best_bound(const FieldDescriptor& desc, const mpz_class& disc_value,
                       mpfr_prec_t prec = 128);

// c * D^e for a concrete discriminant.
Interval evaluate_at_disc(const BoundResult& bound, const mpz_class& disc_value,
                          mpfr_prec_t prec = 128);

}  // namespace eucmin

#endif
