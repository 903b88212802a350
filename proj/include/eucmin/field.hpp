#ifndef EUCMIN_FIELD_HPP
#define EUCMIN_FIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "eucmin/polynomial.hpp"

namespace eucmin {

enum class DiscProvenance {
  given,           // disc_abs supplied by the caller as the field discriminant
  equation_order,  // disc_abs = |disc Z[theta]|; equals D_K only for a maximal order
};

// Degree, signature and |discriminant| of a number field: n = r + 2s.
struct FieldDescriptor {
  int n = 0;
  int r = 0;
  int s = 0;
  mpz_class disc_abs;
  std::optional<IntPolynomial> defining_poly;
  DiscProvenance disc_provenance = DiscProvenance::given;
  bool irreducibility_checked = false;  // true when the degree <= 4 heuristic ran clean
};

// Real-root count by Sturm sign variations (exact), s = (deg - r) / 2.
// Throws NotSquarefree / DegreeZero.
std::pair<int, int> signature_from_polynomial(const IntPolynomial& poly);

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') for monic p, by an exact
// pseudo-remainder-sequence resultant. Throws NonMonic / DegreeZero.
mpz_class polynomial_discriminant(const IntPolynomial& poly);

// Builds the descriptor of Q[x]/(poly) using the equation order Z[theta].
// Degree <= 4 polynomials get a trial-factorization irreducibility check;
// higher degrees are the caller's responsibility.
FieldDescriptor descriptor_from_polynomial(const IntPolynomial& poly);

// Descriptor from raw invariants; validates n = r + 2s, n >= 1, disc >= 1.
FieldDescriptor make_descriptor(int n, int r, int s, const mpz_class& disc_abs);

// Trial factorization over Z for monic polynomials of degree <= 4.
// Returns false when a factorization exists; true means irreducible.
bool irreducible_by_trial_factorization(const IntPolynomial& poly);

}  // namespace eucmin

#endif
