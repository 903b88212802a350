#include "eucmin/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "eucmin/errors.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

const mpz_class& IntPolynomial::coeff(size_t i) const {
  static const mpz_class zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const mpz_class& IntPolynomial::leading() const {
  if (is_zero()) raise(errc::degree_zero, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return IntPolynomial();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shift_x(const mpz_class& c) const {
  // Horner from the leading coefficient: res <- res * (x + c) + a_i
  std::vector<mpz_class> res;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<mpz_class> next(res.size() + 1, mpz_class(0));
    for (size_t i = 0; i < res.size(); ++i) {
      next[i + 1] += res[i];
      next[i] += res[i] * c;
    }
    next[0] += *it;
    res = std::move(next);
  }
  return IntPolynomial(std::move(res));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

int IntPolynomial::sign_at_infinity(int direction) const {
  if (is_zero()) return 0;
  int lead = sgn(coeffs_.back());
  if (direction > 0) return lead;
  return degree() % 2 == 0 ? lead : -lead;
}

bool IntPolynomial::squarefree() const {
  if (degree() < 1) return false;
  return poly_gcd(*this, derivative()).degree() == 0;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = ::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = (a != 1) || i == 0;
    if (show_coeff) out += a.get_str();
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

nlohmann::json IntPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) raise(errc::invalid_input, "polynomial JSON must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& e : j) {
    if (e.is_number_integer())
      coeffs.emplace_back(static_cast<long>(e.get<long long>()));
    else if (e.is_string())
      coeffs.push_back(parse_mpz(e.get<std::string>()));
    else
      raise(errc::invalid_input, "polynomial coefficients must be integers");
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

struct TermParser {
  const std::string& s;
  size_t pos = 0;

  explicit TermParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  mpz_class parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      raise(errc::invalid_input, "expected a number in polynomial at offset " + std::to_string(pos));
    return mpz_class(s.substr(start, pos - start), 10);
  }
};

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) raise(errc::invalid_input, "empty polynomial");
  if (text[b] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::invalid_input, "bad polynomial JSON array");
    return from_json(j);
  }

  TermParser p(text);
  std::vector<mpz_class> coeffs;
  auto add_term = [&coeffs](const mpz_class& c, unsigned long e) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, mpz_class(0));
    coeffs[e] += c;
  };

  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      raise(errc::invalid_input, "expected '+' or '-' between polynomial terms");
    }
    first = false;

    mpz_class coeff = 1;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff = p.parse_number();
      saw_number = true;
    }
    if (p.peek() == '*') ++p.pos;
    unsigned long expo = 0;
    char v = p.peek();
    if (v == 'x' || v == 'X') {
      ++p.pos;
      expo = 1;
      if (p.peek() == '^') {
        ++p.pos;
        mpz_class e = p.parse_number();
        if (!e.fits_ulong_p()) raise(errc::invalid_input, "exponent too large");
        expo = e.get_ui();
      }
    } else if (!saw_number) {
      raise(errc::invalid_input, "expected a coefficient or 'x' in polynomial");
    }
    add_term(sign * coeff, expo);
  }
  IntPolynomial out{std::move(coeffs)};
  if (out.is_zero()) raise(errc::invalid_input, "polynomial is identically zero");
  return out;
}

namespace {

mpz_class content(const std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::vector<mpz_class> primitive(std::vector<mpz_class> c) {
  mpz_class g = content(c);
  if (g > 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return c;
}

// Pseudo-remainder: prem(a, b) = lc(b)^(deg a - deg b + 1) * (a mod b),
// computed without fractions. Requires deg a >= deg b >= 0, b nonzero.
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  long da = static_cast<long>(a.size()) - 1;
  long db = static_cast<long>(b.size()) - 1;
  const mpz_class& lb = b.back();
  long e = da - db + 1;
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    long cur = static_cast<long>(a.size()) - 1;
    mpz_class la = a.back();
    for (auto& x : a) x *= lb;
    for (long i = 0; i <= db; ++i) a[cur - db + i] -= la * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    --e;
  }
  // top up the multiplier so the total factor is exactly lc(b)^(da-db+1)
  if (e > 0 && !a.empty()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : a) x *= f;
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return IntPolynomial(primitive(b.coeffs()));
  if (b.is_zero()) return IntPolynomial(primitive(a.coeffs()));
  std::vector<mpz_class> u = primitive(a.coeffs());
  std::vector<mpz_class> v = primitive(b.coeffs());
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<mpz_class> r = primitive(prem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  if (!u.empty() && u.back() < 0)
    for (auto& x : u) x = -x;
  return IntPolynomial(std::move(u));
}

mpz_class resultant(const IntPolynomial& A, const IntPolynomial& B) {
  // Euclidean pseudo-remainder sequence with exact cofactor tracking:
  //   res(a, b) = (-1)^(da*db) lc(b)^(da-dr) res(b, r),  r = a mod b,
  //   res(b, c*f) = c^db res(b, f),
  // with r reached through prem and primitive-part reduction, and every
  // removed constant folded into an exact rational accumulator.
  if (A.is_zero() || B.is_zero()) return mpz_class(0);
  std::vector<mpz_class> a = A.coeffs(), b = B.coeffs();
  mpq_class acc = 1;
  if (a.size() < b.size()) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    if ((da % 2) && (db % 2)) acc = -acc;
    std::swap(a, b);
  }
  while (true) {
    long da = static_cast<long>(a.size()) - 1;
    long db = static_cast<long>(b.size()) - 1;
    if (db == 0) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(da));
      mpq_class res = acc * mpq_class(p);
      if (res.get_den() != 1) raise(errc::internal, "resultant accumulator not integral");
      return res.get_num();
    }
    std::vector<mpz_class> r = prem(a, b);
    if (r.empty()) return mpz_class(0);
    // r = lc(b)^(da-db+1) * (a mod b); strip content too
    mpz_class cont = content(r);
    std::vector<mpz_class> rp = primitive(std::move(r));
    long dr = static_cast<long>(rp.size()) - 1;
    // scale factor c = lc(b)^(da-db+1) * sign/content: true remainder = (cont / lc^(e)) * rp
    mpq_class c = mpq_class(cont);
    mpz_class lbp;
    mpz_pow_ui(lbp.get_mpz_t(), b.back().get_mpz_t(), static_cast<unsigned long>(da - db + 1));
    c /= mpq_class(lbp);
    if ((da % 2) && (db % 2)) acc = -acc;
    mpz_class lc_pow;
    mpz_pow_ui(lc_pow.get_mpz_t(), b.back().get_mpz_t(), static_cast<unsigned long>(da - dr));
    acc *= mpq_class(lc_pow);
    acc *= pow_q(c, db);
    a = std::move(b);
    b = std::move(rp);
  }
}

SturmChain::SturmChain(const IntPolynomial& p) : p_(p) {
  if (p.degree() < 1) raise(errc::degree_zero, "Sturm chain needs degree >= 1");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2].coeffs();
    const auto& b = chain_.back().coeffs();
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    std::vector<mpz_class> r = prem(a, b);
    if (r.empty()) break;
    // prem scales (a mod b) by lc(b)^(da-db+1); if that factor is negative the
    // sign already flipped, so skip the negation in that case
    bool multiplier_negative = (b.back() < 0) && ((da - db + 1) % 2 == 1);
    if (!multiplier_negative)
      for (auto& x : r) x = -x;
    chain_.emplace_back(primitive(std::move(r)));
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(f.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(int direction) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(f.sign_at_infinity(direction));
  return count_variations(signs);
}

int SturmChain::count_real_roots() const {
  return variations_at_infinity(-1) - variations_at_infinity(+1);
}

int SturmChain::count_roots_in(const mpq_class& a, const mpq_class& b) const {
  return variations_at(a) - variations_at(b);
}

mpq_class cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) raise(errc::degree_zero, "Cauchy bound needs degree >= 1");
  mpq_class lead(::abs(p.leading()));
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class c(::abs(p.coeff(i)));
    c /= lead;
    if (c > m) m = c;
  }
  return m + 1;
}

std::vector<RealRoot> SturmChain::isolate_real_roots() const {
  std::vector<RealRoot> out;
  mpq_class bound = cauchy_bound(p_);
  struct Seg {
    mpq_class a, b;
    int count;
  };
  std::vector<Seg> stack;
  {
    // all real roots lie strictly inside (-bound, bound)
    int total = count_roots_in(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
  }
  while (!stack.empty()) {
    Seg seg = stack.back();
    stack.pop_back();
    if (seg.count == 1) {
      if (p_.sign_at(seg.b) == 0)
        out.push_back(RealRoot{true, seg.b, 0, 0});
      else
        out.push_back(RealRoot{false, 0, seg.a, seg.b});
      continue;
    }
    mpq_class mid = (seg.a + seg.b) / 2;
    int left = count_roots_in(seg.a, mid);
    int right = seg.count - left;
    if (right > 0) stack.push_back({mid, seg.b, right});
    if (left > 0) stack.push_back({seg.a, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.upper() < y.upper(); });
  return out;
}

RealRoot refine_root(const IntPolynomial& p, RealRoot root, unsigned bits) {
  if (root.exact) return root;
  mpq_class target = pow_q(mpq_class(1, 2), static_cast<long>(bits)) * 2;
  int sa = p.sign_at(root.lo);
  int sb = p.sign_at(root.hi);
  if (sa == 0) {
    // the left endpoint is itself a root of p (of a neighbouring enclosure);
    // step right without skipping past the enclosed root
    SturmChain chain(p);
    mpq_class step = (root.hi - root.lo) / 2;
    while (chain.count_roots_in(root.lo, root.lo + step) > 0) step /= 2;
    root.lo += step;
    sa = p.sign_at(root.lo);
  }
  if (sa == 0 || sb == 0 || sa == sb)
    raise(errc::internal, "refine_root: enclosure endpoints do not bracket a sign change");
  while (root.hi - root.lo > target) {
    mpq_class mid = (root.lo + root.hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) return RealRoot{true, mid, 0, 0};
    if (sm == sa)
      root.lo = mid;
    else
      root.hi = mid;
  }
  return root;
}

}  // namespace eucmin
