#include "eucmin/field.hpp"

#include <vector>

#include "eucmin/errors.hpp"

namespace eucmin {

std::pair<int, int> signature_from_polynomial(const IntPolynomial& poly) {
  if (poly.degree() < 1) raise(errc::degree_zero, "signature needs degree >= 1");
  if (!poly.squarefree())
    raise(errc::not_squarefree, "gcd(p, p') is nonconstant: " + poly.to_string());
  SturmChain chain(poly);
  int r = chain.count_real_roots();
  int n = poly.degree();
  if ((n - r) % 2 != 0) raise(errc::internal, "parity mismatch in real root count");
  return {r, (n - r) / 2};
}

mpz_class polynomial_discriminant(const IntPolynomial& poly) {
  if (poly.degree() < 1) raise(errc::degree_zero, "discriminant needs degree >= 1");
  if (!poly.is_monic()) raise(errc::non_monic, "discriminant requires a monic polynomial");
  long n = poly.degree();
  mpz_class res = resultant(poly, poly.derivative());
  bool negate = ((n * (n - 1)) / 2) % 2 == 1;
  return negate ? mpz_class(-res) : res;
}

namespace {

std::vector<mpz_class> divisors_signed(const mpz_class& v) {
  // all divisors of |v|, both signs; |v| is a polynomial constant term and
  // stays small in practice
  std::vector<mpz_class> out;
  mpz_class a = ::abs(v);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      mpz_class e = a / d;
      if (e != d) {
        out.push_back(e);
        out.push_back(-e);
      }
    }
  }
  return out;
}

bool has_integer_root(const IntPolynomial& p) {
  if (p.coeff(0) == 0) return true;  // root 0
  for (const auto& d : divisors_signed(p.coeff(0)))
    if (p.sign_at(mpq_class(d)) == 0) return true;
  return false;
}

// monic quartic = (x^2 + a x + b)(x^2 + c x + d) over Z?
bool splits_into_quadratics(const IntPolynomial& p) {
  const mpz_class p3 = p.coeff(3), p2 = p.coeff(2), p1 = p.coeff(1), p0 = p.coeff(0);
  if (p0 == 0) return true;
  for (const auto& b : divisors_signed(p0)) {
    mpz_class d = p0 / b;
    // a + c = p3, b + d + a c = p2, a d + b c = p1
    mpz_class ac = p2 - b - d;
    // a, c are roots of t^2 - p3 t + ac
    mpz_class discq = p3 * p3 - 4 * ac;
    if (discq < 0) continue;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), discq.get_mpz_t());
    if (sq * sq != discq) continue;
    for (int pick = 0; pick < 2; ++pick) {
      mpz_class twice_a = pick == 0 ? mpz_class(p3 + sq) : mpz_class(p3 - sq);
      if (twice_a % 2 != 0) continue;
      mpz_class a = twice_a / 2;
      mpz_class c = p3 - a;
      if (a * d + b * c == p1) return true;
    }
  }
  return false;
}

}  // namespace

bool irreducible_by_trial_factorization(const IntPolynomial& poly) {
  int n = poly.degree();
  if (n == 1) return true;
  if (n == 2 || n == 3) return !has_integer_root(poly);
  if (n == 4) return !has_integer_root(poly) && !splits_into_quadratics(poly);
  raise(errc::invalid_input, "trial factorization only covers degree <= 4");
}

FieldDescriptor descriptor_from_polynomial(const IntPolynomial& poly) {
  if (poly.degree() < 1) raise(errc::degree_zero, "field polynomial needs degree >= 1");
  if (!poly.is_monic()) raise(errc::non_monic, "field polynomial must be monic");
  FieldDescriptor out;
  out.n = poly.degree();
  auto [r, s] = signature_from_polynomial(poly);
  out.r = r;
  out.s = s;
  out.disc_abs = ::abs(polynomial_discriminant(poly));
  out.defining_poly = poly;
  out.disc_provenance = DiscProvenance::equation_order;
  if (poly.degree() <= 4) {
    if (!irreducible_by_trial_factorization(poly))
      raise(errc::not_irreducible, "polynomial factors over Q: " + poly.to_string());
    out.irreducibility_checked = true;
  }
  return out;
}

FieldDescriptor make_descriptor(int n, int r, int s, const mpz_class& disc_abs) {
  if (n < 1) raise(errc::invalid_input, "degree must be >= 1");
  if (r < 0 || s < 0 || n != r + 2 * s)
    raise(errc::invalid_input, "signature must satisfy n = r + 2s");
  if (disc_abs < 1) raise(errc::invalid_input, "disc_abs must be >= 1");
  FieldDescriptor out;
  out.n = n;
  out.r = r;
  out.s = s;
  out.disc_abs = disc_abs;
  out.disc_provenance = DiscProvenance::given;
  return out;
}

}  // namespace eucmin
