#include "eucmin/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "eucmin/bounds.hpp"
#include "eucmin/errors.hpp"
#include "eucmin/lattice.hpp"
#include "eucmin/qutil.hpp"
#include "eucmin/report.hpp"

namespace eucmin {

namespace {

template <typename Fn>
CheckResult timed(const std::string& id, const std::string& description, Fn&& fn) {
  CheckResult out;
  out.id = id;
  out.description = description;
  auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    out.passed = fn(detail);
    out.detail = detail.str();
  } catch (const Error& e) {
    out.passed = false;
    out.detail = std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

struct TableRowSpec {
  int n, s;
  std::vector<int> a_set;
  const char* coeff;
  const char* decimal;
  const char* exponent;
};

// the printed bound table, 20 rows, coefficients in canonical prime form
const TableRowSpec kBoundTable[] = {
    {1, 0, {1}, "2^(-1)", "0.5", "1/2"},
    {2, 0, {1, 2}, "2^(-1)*3^(-1/2)", "0.28867", "1/2"},
    {2, 1, {1}, "2^(-1)*3^(-1)", "0.16666", "1"},
    {3, 0, {1, 2, 3}, "2^(-5/2)", "0.17677", "1/2"},
    {3, 1, {1}, "2^(-2)*3^(-3/2)", "0.04811", "1"},
    {3, 1, {2}, "2^(-9/4)*3^(-3/4)", "0.09222", "3/4"},
    {4, 0, {1, 2, 3, 4}, "2^(-3)", "0.125", "1/2"},
    {4, 1, {1}, "2^(-6)", "0.015625", "1"},
    {4, 1, {2}, "2^(-9/2)", "0.04419", "3/4"},
    {4, 1, {3}, "2^(-4)", "0.0625", "2/3"},
    {4, 2, {1}, "2^(-9)", "0.001953125", "3/2"},
    {4, 2, {2}, "2^(-6)", "0.015625", "1"},
    {5, 0, {1, 2, 3, 4, 5}, "2^(-7/2)", "0.08838", "1/2"},
    {5, 1, {1}, "2^(-2)*5^(-5/2)", "0.00447", "1"},
    {5, 1, {2}, "2^(-11/4)*5^(-5/4)", "0.01988", "3/4"},
    {5, 1, {3}, "2^(-3)*5^(-5/6)", "0.03269", "2/3"},
    {5, 1, {4}, "2^(-25/8)*5^(-5/8)", "0.04192", "5/8"},
    {5, 2, {1}, "2^(-1/2)*5^(-5)", "0.00022", "3/2"},
    {5, 2, {2}, "2^(-2)*5^(-5/2)", "0.00447", "1"},
    {5, 2, {3}, "2^(-5/2)*5^(-5/3)", "0.01209", "5/6"},
};

}  // namespace

CheckResult check_table_reproduction(const VerifyOptions&) {
  return timed("table_reproduction", "bound table for 1 <= n <= 5 matches the printed rows",
               [&](std::ostringstream& detail) {
                 std::vector<ReportRow> rows = reproduce_bound_table(5);
                 size_t expected = std::size(kBoundTable);
                 if (rows.size() != expected) {
                   detail << "expected " << expected << " rows, got " << rows.size();
                   return false;
                 }
                 for (size_t i = 0; i < expected; ++i) {
                   const auto& got = rows[i];
                   const auto& want = kBoundTable[i];
                   if (got.n != want.n || got.s != want.s || got.a_set != want.a_set ||
                       got.coeff_exact != want.coeff || got.coeff_decimal != want.decimal ||
                       got.disc_exponent != mpq_class(want.exponent)) {
                     detail << "row " << i << " mismatch: got (n=" << got.n << ", s=" << got.s
                            << ", coeff=" << got.coeff_exact << ", dec=" << got.coeff_decimal
                            << ", e=" << got.disc_exponent.get_str() << ") want (coeff="
                            << want.coeff << ", dec=" << want.decimal << ", e=" << want.exponent
                            << ")";
                     return false;
                   }
                 }
                 detail << expected << " rows match character for character";
                 return true;
               });
}

CheckResult check_hermite_consistency(const VerifyOptions& opts) {
  return timed("hermite_consistency",
               "exact gamma_n never exceeds the Blichfeldt or Wen upper bounds",
               [&](std::ostringstream& detail) {
                 int checked = 0;
                 for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 24}) {
                   Interval exact = hermite_exact(n)->to_interval(opts.prec);
                   Interval blich = blichfeldt_bound(n, opts.prec);
                   auto [w1, w2] = wen_bounds(n);
                   if (!certified_le(exact, blich)) {
                     detail << "gamma_" << n << " vs blichfeldt not separated";
                     return false;
                   }
                   if (mpfr_cmp_q(exact.hi(), w1.get_mpq_t()) > 0 ||
                       mpfr_cmp_q(exact.hi(), w2.get_mpq_t()) > 0) {
                     detail << "gamma_" << n << " exceeds a Wen bound";
                     return false;
                   }
                   ++checked;
                 }
                 detail << checked << " dimensions checked with interval comparisons";
                 return true;
               });
}

CheckResult check_blichfeldt_scan(const VerifyOptions&) {
  return timed("blichfeldt_scan", "blichfeldt(n) < sqrt(n) exactly for n in {2..43}",
               [&](std::ostringstream& detail) {
                 std::vector<int> scan = blichfeldt_scan(128, 1024);
                 if (scan.size() != 42 || scan.front() != 2 || scan.back() != 43) {
                   detail << "scan returned " << scan.size() << " values";
                   return false;
                 }
                 for (size_t i = 0; i < scan.size(); ++i)
                   if (scan[i] != static_cast<int>(i) + 2) {
                     detail << "gap at position " << i;
                     return false;
                   }
                 // and 44 certifiably fails
                 Interval b44 = blichfeldt_bound(44, 256);
                 Interval r44 = Interval::from_si(44, 256).sqrt();
                 if (compare(b44, r44) != cmp3::greater) {
                   detail << "n = 44 not certified above sqrt(44)";
                   return false;
                 }
                 detail << "scan = {2..43}, 42 values, n = 44 certified out";
                 return true;
               });
}

CheckResult check_improvement_factor(const VerifyOptions& opts) {
  return timed(
      "improvement_factor",
      "theorem coefficient <= prior coefficient, equal exactly when r = 0 (n <= 10)",
      [&](std::ostringstream& detail) {
        int checked = 0;
        for (int n = 1; n <= 10; ++n) {
          HermiteEstimate g = best_hermite_upper(n, opts.prec);
          for (int s = 0; 2 * s <= n; ++s) {
            int r = n - 2 * s;
            if (r + s < 1) continue;
            FieldDescriptor desc = make_descriptor(n, r, s, mpz_class(1));
            for (int a = 1; a <= r + s; ++a) {
              BoundResult thm = theorem_bound(desc, a, g, opts.prec);
              BoundResult prior = bfbj_bound(desc, a, g, opts.prec);
              if (thm.gamma_exponent != prior.gamma_exponent ||
                  thm.disc_exponent != prior.disc_exponent) {
                detail << "exponent mismatch at n=" << n << " s=" << s << " a=" << a;
                return false;
              }
              ExactConstant factor = improvement_factor(desc, a);
              if (thm.coeff_rational * factor != prior.coeff_rational) {
                detail << "ratio is not the improvement factor at n=" << n << " s=" << s
                       << " a=" << a;
                return false;
              }
              auto order = thm.coeff_rational.compare(prior.coeff_rational);
              bool equal = order == std::strong_ordering::equal;
              bool less = order == std::strong_ordering::less;
              if (r == 0 ? !equal : !less) {
                detail << "ordering wrong at n=" << n << " s=" << s << " a=" << a;
                return false;
              }
              if ((r == 0) != factor.is_one()) {
                detail << "factor-1 criterion wrong at n=" << n << " s=" << s << " a=" << a;
                return false;
              }
              ++checked;
            }
          }
        }
        detail << checked << " (n, s, a) triples checked as exact constants";
        return true;
      });
}

CheckResult check_length_inequality(const VerifyOptions& opts) {
  return timed(
      "length_inequality",
      "||v|| >= 2^(-s/n) sqrt(n) N_s(v)^(1/n) on random vectors for n in {2..8}",
      [&](std::ostringstream& detail) {
        std::mt19937_64 rng(opts.seed);
        const long denom = 1L << 20;
        std::uniform_int_distribution<long> dist(-4 * denom, 4 * denom);
        long long total = 0, exact_fallbacks = 0;
        for (int n = 2; n <= 8; ++n) {
          for (int s = 0; 2 * s <= n; ++s) {
            Split split{n - 2 * s, s};
            mpq_class four_s = pow_q(mpq_class(4), s);
            mpq_class n_pow_n = pow_q(mpq_class(n), n);
            for (int it = 0; it < opts.length_samples_per_split; ++it) {
              std::vector<mpq_class> v(n);
              bool nonzero = false;
              for (int i = 0; i < n; ++i) {
                long raw = dist(rng);
                v[i] = mpq_class(raw, denom);
                v[i].canonicalize();
                nonzero = nonzero || raw != 0;
              }
              if (!nonzero) {
                --it;
                continue;
              }
              // interval comparison of the equivalent integer-power form:
              // ||v||^(2n) 2^(2s) >= n^n N^2
              mpq_class len_sq = 0;
              for (const auto& x : v) len_sq += x * x;
              mpq_class norm = norm_form(v, split);
              Interval lhs = Interval::from_mpq(len_sq, opts.prec).pow_int(n) *
                             Interval::from_mpq(four_s, opts.prec);
              Interval rhs = Interval::from_mpq(n_pow_n * norm * norm, opts.prec);
              ++total;
              if (certified_le(rhs, lhs)) continue;
              if (certified_gt(rhs, lhs)) {
                // a certified counterexample would disprove the lemma
                detail << "violation at n=" << n << " s=" << s;
                return false;
              }
              ++exact_fallbacks;
              if (!length_lower_bound_holds(v, split)) {
                detail << "exact violation at n=" << n << " s=" << s;
                return false;
              }
            }
          }
        }
        detail << total << " vectors, zero failures, " << exact_fallbacks
               << " decided by the exact fallback";
        return true;
      });
}

CheckResult check_det_identity(const VerifyOptions&) {
  return timed(
      "det_identity", "det(Lambda_K) = 2^-s sqrt(D) within width 1e-20 for five fields",
      [&](std::ostringstream& detail) {
        const mpq_class width_cap(mpz_class(1), mpz_class("100000000000000000000"));  // 1e-20
        for (const char* text : {"x^2+1", "x^2-2", "x^2-x-1", "x^3-x-1", "x^4+1"}) {
          FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse(text));
          LatticeBasis basis = minkowski_basis(*desc.defining_poly, std::nullopt, 80);
          DetCheck check = det_identity_check(desc, basis);
          if (!check.contains_exact) {
            detail << text << ": det interval misses 2^-s sqrt(D)";
            return false;
          }
          if (check.width >= width_cap) {
            detail << text << ": width too large";
            return false;
          }
        }
        detail << "5 fields: interval contains 2^-s sqrt(D), width < 1e-20";
        return true;
      });
}

CheckResult check_gaussian_minima(const VerifyOptions& opts) {
  return timed(
      "gaussian_minima",
      "Q(i): mu_1 = mu_2 = 1, m_s estimate 1, M_s >= 1/2, best bound 2/3, chain holds",
      [&](std::ostringstream& detail) {
        FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse("x^2+1"));
        LatticeBasis basis = minkowski_basis(*desc.defining_poly, std::nullopt, 80);
        EnumerationOptions eopts{opts.node_budget};
        const mpq_class tol(mpz_class(1), mpz_class("1000000000000000000"));  // 1e-18

        SuccessiveMinima minima = successive_minima(basis, 2, eopts);
        for (int i = 0; i < 2; ++i) {
          if (!minima.mu[i].contains(mpq_class(1)) || minima.mu[i].width_q() > tol) {
            detail << "mu_" << i + 1 << " = " << minima.mu[i].to_string();
            return false;
          }
        }
        if (!minima.rigorous) {
          detail << "enumeration not rigorous";
          return false;
        }

        MinimaEstimate m_est = homogeneous_minimum_estimate(basis, 3);
        if (!m_est.value.contains(mpq_class(1)) || m_est.value.width_q() > tol) {
          detail << "m_s estimate = " << m_est.value.to_string();
          return false;
        }

        TargetSpec targets;
        targets.grid_k = 2;
        targets.explicit_targets = {{mpq_class(1, 2), mpq_class(1, 2)}};
        MinimaEstimate M_est = inhomogeneous_minimum_lower_estimate(basis, targets, eopts);
        if (M_est.value.hi_q() < mpq_class(1, 2) ||
            M_est.value.lo_q() < mpq_class(1, 2) - tol) {
          detail << "M_s estimate = " << M_est.value.to_string();
          return false;
        }

        BoundResult best = best_bound(desc, mpz_class(4), opts.prec);
        if (best.formula != BoundFormula::theorem_1_1 || best.a_param != 1) {
          detail << "best bound came from " << formula_name(best.formula);
          return false;
        }
        mpq_class coeff = *best.coeff_exact->as_rational();
        if (coeff * 4 != mpq_class(2, 3) || best.disc_exponent != 1) {
          detail << "best bound value is not 2/3";
          return false;
        }
        if (!best.value_at_disc->contains(mpq_class(2, 3))) {
          detail << "numeric value does not enclose 2/3";
          return false;
        }
        // chain: M_s lower estimate <= M(K) bound
        if (M_est.value.hi_q() > mpq_class(2, 3)) {
          detail << "chain 1/2 <= 2/3 violated";
          return false;
        }
        detail << "mu_1 = mu_2 = 1, m_s = 1, M_s >= 1/2, best = 2/3 via theorem a=1, chain holds";
        return true;
      });
}

CheckResult check_minkowski_products(const VerifyOptions& opts) {
  return timed(
      "minkowski_product",
      "mu_1...mu_k <= gamma_n^(k/2) det^(k/n) on random LLL-reduced lattices, n in {2,3,4}",
      [&](std::ostringstream& detail) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long> entry(-9, 9);
        long long cases = 0;
        for (int n = 2; n <= 4; ++n) {
          mpq_class gamma_n_pow = *hermite_exact(n)->pow(mpq_class(n)).as_rational();
          HermiteEstimate g = best_hermite_upper(n, opts.prec);
          for (int trial = 0; trial < opts.lattices_per_dim; ++trial) {
            std::vector<std::vector<mpq_class>> rows;
            mpq_class det;
            do {
              rows.assign(n, std::vector<mpq_class>(n));
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[i][j] = entry(rng);
              det = det_exact(rows);
            } while (sgn(det) == 0);
            LatticeBasis basis = LatticeBasis::exact(Split{n, 0}, rows);
            LLLResult reduced = lll_reduce(basis);
            SuccessiveMinima minima =
                successive_minima(reduced.basis, n, EnumerationOptions{opts.node_budget});
            mpq_class det_sq = det * det;
            mpq_class prod = 1;
            for (int k = 1; k <= n; ++k) {
              prod *= minima.mu_sq_centers[k - 1];
              // (prod mu_i^2)^n <= (gamma^n)^k (det^2)^k, all exact
              if (pow_q(prod, n) > pow_q(gamma_n_pow, k) * pow_q(det_sq, k)) {
                detail << "violation at n=" << n << " trial=" << trial << " k=" << k;
                return false;
              }
              ++cases;
            }
            if (trial < 5) {
              // exercise the interval route as well
              auto [lhs, rhs] = minkowski_product_check(reduced.basis, n, g,
                                                        EnumerationOptions{opts.node_budget});
              if (certified_gt(lhs, rhs)) {
                detail << "interval route certified a violation at n=" << n;
                return false;
              }
            }
          }
        }
        detail << cases << " (lattice, k) cases verified exactly";
        return true;
      });
}

CheckResult check_a_equals_s_comparison(const VerifyOptions& opts) {
  return timed(
      "a_equals_s_comparison",
      "for 2 <= n <= 8, s >= 1: the a = s coefficient is strictly below 2^-n",
      [&](std::ostringstream& detail) {
        int checked = 0;
        for (int n = 2; n <= 8; ++n) {
          HermiteEstimate g = best_hermite_upper(n, opts.prec);
          for (int s = 1; 2 * s <= n; ++s) {
            FieldDescriptor desc = make_descriptor(n, n - 2 * s, s, mpz_class(1));
            BoundResult special = a_equals_s_bound(desc, g, opts.prec);
            BoundResult general = bayer_fluckiger_bound(desc, opts.prec);
            if (special.coeff_exact->compare(*general.coeff_exact) !=
                std::strong_ordering::less) {
              detail << "not strictly below at n=" << n << " s=" << s;
              return false;
            }
            ++checked;
          }
        }
        detail << checked << " signatures compared as exact constants";
        return true;
      });
}

std::vector<std::string> check_ids() {
  return {"table_reproduction", "hermite_consistency", "blichfeldt_scan", "improvement_factor",
          "length_inequality",  "det_identity",        "gaussian_minima", "minkowski_product",
          "a_equals_s_comparison"};
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& id : check_ids()) out.push_back(run_check(id, opts));
  return out;
}

CheckResult run_check(const std::string& id, const VerifyOptions& opts) {
  if (id == "table_reproduction") return check_table_reproduction(opts);
  if (id == "hermite_consistency") return check_hermite_consistency(opts);
  if (id == "blichfeldt_scan") return check_blichfeldt_scan(opts);
  if (id == "improvement_factor") return check_improvement_factor(opts);
  if (id == "length_inequality") return check_length_inequality(opts);
  if (id == "det_identity") return check_det_identity(opts);
  if (id == "gaussian_minima") return check_gaussian_minima(opts);
  if (id == "minkowski_product") return check_minkowski_products(opts);
  if (id == "a_equals_s_comparison") return check_a_equals_s_comparison(opts);
  raise(errc::invalid_input, "unknown check id: " + id);
}

}  // namespace eucmin
