#ifndef EUCMIN_POLYNOMIAL_HPP
#define EUCMIN_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace eucmin {

// Univariate polynomial over Z, constant term first.
class IntPolynomial {
public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  // Accepts "x^3 - x - 1" style text or a JSON array "[-1, -1, 0, 1]"
  // (constant term first).
  static IntPolynomial parse(const std::string& text);
  static IntPolynomial from_json(const nlohmann::json& j);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const mpz_class& coeff(size_t i) const;  // 0 beyond degree
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPolynomial derivative() const;
  IntPolynomial shift_x(const mpz_class& c) const;  // p(x + c)

  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  int sign_at_infinity(int direction) const;  // direction = +1 or -1

  bool squarefree() const;  // gcd(p, p') is constant

  std::string to_string(const std::string& var = "x") const;
  nlohmann::json to_json() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  std::vector<mpz_class> coeffs_;
};

// Exact primitive gcd over Z (content stripped).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Res(a, b) by the subresultant polynomial remainder sequence.
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

// One real root of a squarefree polynomial: either an exact rational value or
// an open interval (lo, hi) with sign(p(lo)) * sign(p(hi)) < 0.
struct RealRoot {
  bool exact = false;
  mpq_class value;     // when exact
  mpq_class lo, hi;    // when not exact
  mpq_class lower() const { return exact ? value : lo; }
  mpq_class upper() const { return exact ? value : hi; }
  mpq_class midpoint() const { return exact ? value : mpq_class((lo + hi) / 2); }
  mpq_class radius() const { return exact ? mpq_class(0) : mpq_class((hi - lo) / 2); }
};

class SturmChain {
public:
  explicit SturmChain(const IntPolynomial& p);

  int variations_at(const mpq_class& x) const;
  int variations_at_infinity(int direction) const;
  int count_real_roots() const;
  // number of roots in the half-open interval (a, b]
  int count_roots_in(const mpq_class& a, const mpq_class& b) const;

  // Disjoint enclosures, one per real root, sorted ascending.
  std::vector<RealRoot> isolate_real_roots() const;

  const IntPolynomial& polynomial() const { return p_; }

private:
  IntPolynomial p_;
  std::vector<IntPolynomial> chain_;
};

// Shrink an isolating enclosure until its radius is at most 2^-bits.
RealRoot refine_root(const IntPolynomial& p, RealRoot root, unsigned bits);

// Root magnitude bound: 1 + max |a_i| / |a_n|.
mpq_class cauchy_bound(const IntPolynomial& p);

}  // namespace eucmin

#endif
