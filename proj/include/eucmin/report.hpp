#ifndef EUCMIN_REPORT_HPP
#define EUCMIN_REPORT_HPP

// Reporting layer: bound tables, the Blichfeldt scan, per-field reports and
// their JSON / CSV / markdown rendering. All JSON documents carry
// schema_version 1.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "eucmin/bounds.hpp"
#include "eucmin/field.hpp"
#include "json.hpp"

namespace eucmin {

enum class Format { json, csv, markdown };
Format parse_format(const std::string& name);

struct ReportRow {
  int n = 0;
  int s = 0;
  std::vector<int> a_set;        // grouped a values yielding this exact bound
  std::string coeff_exact;       // canonical ExactConstant string
  std::string coeff_decimal;     // truncated decimal, paper style
  bool decimal_truncated = false;
  mpq_class disc_exponent;
  std::string note;              // e.g. the printed table's divergent a column
};

// One row per (n, s) and distinct exact bound, grouping the a values that
// coincide, for every signature with 1 <= degree <= n_max (n_max <= 8: the
// table uses exact Hermite constants).
std::vector<ReportRow> reproduce_bound_table(int n_max = 5);

// Every n >= 2 with blichfeldt_bound(n) < sqrt(n), scanning upward until the
// first failure; comparisons decided by disjoint intervals, precision
// doubling from start_prec up to max_prec.
std::vector<int> blichfeldt_scan(mpfr_prec_t start_prec = 128, mpfr_prec_t max_prec = 1024);

struct FieldReportOptions {
  std::optional<mpz_class> disc_override;
  mpfr_prec_t prec = 128;
  unsigned root_target_bits = 80;
  int coeff_box = 3;
  std::optional<int> grid_k;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100000000;
  bool with_lattice = true;
};

// Full pipeline for one field: descriptor, the whole bound family, the best
// bound at D_K, and (when a defining polynomial is present) the lattice with
// det check, successive minima, m_s / M_s estimates and the lemma checks.
nlohmann::json field_report(const FieldDescriptor& desc, const FieldReportOptions& opts = {});

nlohmann::json hermite_report(int n_min, int n_max, mpfr_prec_t prec = 128);

std::string format_table(const std::vector<ReportRow>& rows, Format format);
std::string format_scan(const std::vector<int>& values, Format format);
std::string format_json_or_markdown(const nlohmann::json& doc, Format format);

// serialization helpers shared with the C API layer
nlohmann::json bound_to_json(const BoundResult& bound);
nlohmann::json descriptor_to_json(const FieldDescriptor& desc);

}  // namespace eucmin

#endif
