#ifndef EUCMIN_ROOTS_HPP
#define EUCMIN_ROOTS_HPP

// Certified root isolation for squarefree integer polynomials: real roots by
// Sturm bisection, complex conjugate pairs by Aberth iteration followed by a
// Newton-Kantorovich style containment disk (radius n |p(z)/p'(z)|).

#include <gmpxx.h>

#include <vector>

#include "eucmin/polynomial.hpp"

namespace eucmin {

// A disk in the upper half plane certified to contain exactly one root.
struct ComplexRootDisk {
  mpq_class re, im;  // center, im > radius > 0
  mpq_class radius;
};

struct RootIsolation {
  std::vector<RealRoot> real_roots;            // sorted ascending, radius <= 2^-bits
  std::vector<ComplexRootDisk> complex_roots;  // one per conjugate pair, sorted by (re, im)
  unsigned bits = 0;                           // achieved certified accuracy
};

// Isolates all roots to radius <= 2^-target_bits. The union of the real
// enclosures, the disks and their conjugates covers every root exactly once.
// Throws NotSquarefree / DegreeZero / PrecisionExhausted.
RootIsolation isolate_roots(const IntPolynomial& p, unsigned target_bits = 80);

}  // namespace eucmin

#endif
