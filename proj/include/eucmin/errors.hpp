#ifndef EUCMIN_ERRORS_HPP
#define EUCMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eucmin {

enum class errc {
  invalid_input,
  degree_zero,
  non_monic,
  not_squarefree,
  not_irreducible,
  invalid_a,
  signature_totally_real,
  dimension_mismatch,
  zero_vector,
  precision_exhausted,
  search_space_too_large,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(errc code) noexcept;

// Exit-code class of an error: 2 invalid input, 4 precision exhausted,
// 5 search budget exceeded. Check failures (exit 3) are reported by the
// verification suites, not thrown.
int exit_class(errc code) noexcept;

}  // namespace eucmin

#endif
