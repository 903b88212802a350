#include "doctest.h"
#include "eucmin/errors.hpp"
#include "eucmin/report.hpp"
#include "eucmin/verify.hpp"

using namespace eucmin;

TEST_CASE("bound table rows match the printed digits") {
  std::vector<ReportRow> rows = reproduce_bound_table(5);
  REQUIRE(rows.size() == 20);

  auto find = [&](int n, int s, int a_first) -> const ReportRow& {
    for (const auto& row : rows)
      if (row.n == n && row.s == s && row.a_set.front() == a_first) return row;
    FAIL("row not found");
    return rows.front();
  };

  // row (3, 1, 1): 2^-2 3^(-3/2) D, decimal 0.04811
  const ReportRow& r1 = find(3, 1, 1);
  CHECK(r1.coeff_exact == "2^(-2)*3^(-3/2)");
  CHECK(r1.coeff_decimal == "0.04811");
  CHECK(r1.disc_exponent == 1);
  CHECK(r1.decimal_truncated);

  // row (5, 2, 1): 2^(-1/2) 5^-5 D^(3/2), decimal 0.00022
  const ReportRow& r2 = find(5, 2, 1);
  CHECK(r2.coeff_exact == "2^(-1/2)*5^(-5)");
  CHECK(r2.coeff_decimal == "0.00022");
  CHECK(r2.disc_exponent == mpq_class(3, 2));

  // row (4, 1, 2): 2^(-9/2) D^(3/4), decimal 0.04419
  const ReportRow& r3 = find(4, 1, 2);
  CHECK(r3.coeff_exact == "2^(-9/2)");
  CHECK(r3.coeff_decimal == "0.04419");
  CHECK(r3.disc_exponent == mpq_class(3, 4));

  // grouped totally real rows
  const ReportRow& r4 = find(5, 0, 1);
  CHECK(r4.a_set == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r4.coeff_decimal == "0.08838");

  // terminating decimals print exactly
  CHECK(find(4, 2, 1).coeff_decimal == "0.001953125");
  CHECK_FALSE(find(4, 2, 1).decimal_truncated);

  CHECK(reproduce_bound_table(1).size() == 1);
  CHECK_THROWS_AS(reproduce_bound_table(0), Error);
  CHECK_THROWS_AS(reproduce_bound_table(9), Error);
}

TEST_CASE("blichfeldt scan returns exactly 2..43") {
  std::vector<int> scan = blichfeldt_scan();
  REQUIRE(scan.size() == 42);
  CHECK(scan.front() == 2);
  CHECK(scan.back() == 43);
  for (size_t i = 0; i < scan.size(); ++i) CHECK(scan[i] == static_cast<int>(i) + 2);
}

TEST_CASE("table formatting") {
  std::vector<ReportRow> rows = reproduce_bound_table(2);
  std::string csv = format_table(rows, Format::csv);
  CHECK(csv.find("n,s,a_set,coeff_exact,coeff_decimal,disc_exponent\n") == 0);
  CHECK(csv.find("2,1,1,2^(-1)*3^(-1),0.16666,1") != std::string::npos);
  CHECK(csv.find("2,0,1;2,") != std::string::npos);

  std::string md = format_table(rows, Format::markdown);
  CHECK(md.find("| 2 | 0 | 1 or 2 |") != std::string::npos);
  CHECK(md.find("0.16666...") != std::string::npos);
  CHECK(md.find("0.5 *") != std::string::npos);  // exact decimal without dots

  nlohmann::json doc = nlohmann::json::parse(format_table(rows, Format::json));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["table"].size() == rows.size());
}

TEST_CASE("hermite report structure") {
  nlohmann::json doc = hermite_report(8, 9);
  CHECK(doc["schema_version"] == 1);
  REQUIRE(doc["hermite"].size() == 2);
  CHECK(doc["hermite"][0]["exact"] == "2");
  CHECK(doc["hermite"][1]["exact"].is_null());
  CHECK(doc["hermite"][1]["best"]["provenance"] == "blichfeldt");
}

TEST_CASE("field report for Q(i)") {
  FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse("x^2+1"));
  FieldReportOptions opts;
  opts.grid_k = 2;
  nlohmann::json doc = field_report(desc, opts);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["descriptor"]["n"] == 2);
  CHECK(doc["descriptor"]["disc_abs"] == "4");
  CHECK(doc["disc_used"] == "4");
  CHECK(doc["best_bound"]["formula"] == "theorem_1_1");
  CHECK(doc["best_bound"]["coeff_exact"] == "2^(-1)*3^(-1)");
  // value at D = 4 encloses 2/3
  double best_hi = std::stod(doc["best_bound"]["value_at_disc"]["hi"].get<std::string>());
  CHECK(best_hi == doctest::Approx(2.0 / 3).epsilon(1e-12));
  REQUIRE(!doc["lattice"].is_null());
  double ms_hi = std::stod(doc["lattice"]["M_s_lower_estimate"]["value"]["hi"].get<std::string>());
  CHECK(ms_hi == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(doc["lattice"]["det_check"]["contains_exact"] == true);
  CHECK(doc["lattice"]["chain_M_s_below_best_bound"] == true);
  CHECK(doc["lattice_skipped_reason"].is_null());

  // JSON round trip
  nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
  CHECK(reparsed == doc);
}

TEST_CASE("field report without a polynomial skips the lattice stage") {
  FieldDescriptor desc = make_descriptor(24, 0, 12, mpz_class("1000000000000000000000000000000"));
  nlohmann::json doc = field_report(desc);
  CHECK(doc["lattice"].is_null());
  CHECK(doc["lattice_skipped_reason"] == "no polynomial");
  CHECK(doc["bounds"].size() > 0);
  // every bound was evaluated at the given discriminant
  for (const auto& b : doc["bounds"]) CHECK(b.contains("value_at_disc"));
}

TEST_CASE("field report honors a discriminant override") {
  FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse("x^2+1"));
  FieldReportOptions opts;
  opts.disc_override = mpz_class(100);
  opts.with_lattice = false;
  nlohmann::json doc = field_report(desc, opts);
  CHECK(doc["disc_used"] == "100");
  CHECK(doc["lattice_skipped_reason"] == "disabled");
}

TEST_CASE("verification checks pass on reduced sample sizes") {
  VerifyOptions opts;
  opts.length_samples_per_split = 500;
  opts.lattices_per_dim = 10;
  for (const auto& id : check_ids()) {
    CheckResult result = run_check(id, opts);
    CAPTURE(result.id);
    CAPTURE(result.detail);
    CHECK(result.passed);
  }
  CHECK_THROWS_AS(run_check("nonsense", opts), Error);
}
