#ifndef EUCMIN_HERMITE_HPP
#define EUCMIN_HERMITE_HPP

// Hermite constants gamma_n: exact values where known (n = 1..8 and 24),
// certified upper bounds otherwise (Blichfeldt's gamma-function bound and the
// two linear bounds of Wen).

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "eucmin/exact_constant.hpp"
#include "eucmin/interval.hpp"

namespace eucmin {

enum class HermiteProvenance { exact, blichfeldt, wen1, wen2 };

const char* provenance_name(HermiteProvenance p) noexcept;

struct HermiteEstimate {
  int n = 0;
  HermiteProvenance provenance = HermiteProvenance::exact;
  std::optional<ExactConstant> exact;  // set iff provenance == exact
  Interval value;                      // enclosure of the value / upper bound

  bool is_exact() const { return provenance == HermiteProvenance::exact; }
};

// Exact gamma_n for n in {1..8, 24}, absent otherwise.
std::optional<ExactConstant> hermite_exact(int n);

// (2/pi) * Gamma(2 + n/2)^(2/n) as a directed-rounding enclosure. Gamma is
// evaluated symbolically: an exact factorial for even n, an exact rational
// multiple of sqrt(pi) for odd n.
Interval blichfeldt_bound(int n, mpfr_prec_t prec = 128);

// (n/8 + 6/5, 2n/17 + 2) as exact rationals.
std::pair<mpq_class, mpq_class> wen_bounds(int n);

// Exact value when known, otherwise the smallest of the three upper bounds,
// with provenance recording the winner.
HermiteEstimate best_hermite_upper(int n, mpfr_prec_t prec = 128);

}  // namespace eucmin

#endif
