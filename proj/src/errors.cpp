#include "eucmin/errors.hpp"

namespace eucmin {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::degree_zero: return "DegreeZero";
    case errc::non_monic: return "NonMonic";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::invalid_a: return "InvalidA";
    case errc::signature_totally_real: return "SignatureTotallyReal";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

int exit_class(errc code) noexcept {
  switch (code) {
    case errc::precision_exhausted: return 4;
    case errc::search_space_too_large: return 5;
    case errc::internal: return 70;
    default: return 2;
  }
}

}  // namespace eucmin
