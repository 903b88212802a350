// eucmin command line: bound / table / hermite / scan / lattice / verify.
// Talks to the library exclusively through the C API in eucmin.h.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "eucmin.h"

namespace {

struct GlobalOptions {
  unsigned precision_bits = 128;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100000000;
};

eucmin_format format_of(const std::string& name) {
  if (name == "csv") return EUCMIN_FORMAT_CSV;
  if (name == "markdown" || name == "md") return EUCMIN_FORMAT_MARKDOWN;
  return EUCMIN_FORMAT_JSON;
}

int finish(eucmin_ctx* ctx, eucmin_status status, char* output) {
  if (output) {
    std::fputs(output, stdout);
    eucmin_string_free(output);
  }
  if (status != EUCMIN_OK && status != EUCMIN_ERR_CHECK_FAILED)
    std::fprintf(stderr, "error: %s\n", eucmin_ctx_last_error(ctx));
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on Euclidean minima of number fields, with lattice verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--precision-bits", global.precision_bits, "working precision (fractional bits)")
      ->capture_default_str();
  app.add_option("--format", global.format, "output format: json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for randomized procedures (recorded in output)")
      ->capture_default_str();
  app.add_option("--node-budget", global.node_budget, "enumeration node budget")
      ->capture_default_str();

  // bound
  std::string bound_poly;
  unsigned bound_n = 0, bound_r = 0, bound_s = 0;
  std::string bound_disc;
  auto* bound = app.add_subcommand("bound", "all M(K) bounds for a field, best bound at D_K");
  bound->add_option("--poly", bound_poly, "defining polynomial, e.g. \"x^3 - x - 1\"");
  bound->add_option("--n", bound_n, "degree (with --r/--s instead of --poly)");
  bound->add_option("--r", bound_r, "real embeddings");
  bound->add_option("--s", bound_s, "complex-conjugate pairs");
  bound->add_option("--disc", bound_disc, "|discriminant| (required without --poly)");

  // table
  unsigned table_n_max = 5;
  auto* table = app.add_subcommand("table", "reproduce the bound table for 1 <= n <= n-max");
  table->add_option("--n-max", table_n_max, "largest degree (<= 8)")->capture_default_str();

  // hermite
  unsigned hermite_n = 0, hermite_min = 1, hermite_max = 8;
  auto* hermite = app.add_subcommand("hermite", "Hermite constants and certified upper bounds");
  hermite->add_option("--n", hermite_n, "single dimension");
  hermite->add_option("--n-min", hermite_min, "range start")->capture_default_str();
  hermite->add_option("--n-max", hermite_max, "range end")->capture_default_str();

  // scan
  auto* scan = app.add_subcommand("scan", "all n with blichfeldt(n) < sqrt(n)");

  // lattice
  std::string lattice_poly;
  unsigned lattice_grid_k = 0, lattice_coeff_box = 0, lattice_root_bits = 0;
  auto* lattice = app.add_subcommand("lattice", "Minkowski lattice, minima and lemma checks");
  lattice->add_option("--poly", lattice_poly, "defining polynomial")->required();
  lattice->add_option("--grid-k", lattice_grid_k,
                      "dyadic target-grid refinement per dimension (0: default)");
  lattice->add_option("--coeff-box", lattice_coeff_box,
                      "coefficient box for the m_s scan (0: default 3)");
  lattice->add_option("--root-bits", lattice_root_bits,
                      "root isolation target bits (0: default 80)");

  // verify
  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_suite, "run a single suite by id");

  CLI11_PARSE(app, argc, argv);

  eucmin_ctx* ctx = nullptr;
  if (eucmin_ctx_new(&ctx) != EUCMIN_OK) {
    std::fprintf(stderr, "error: could not create context\n");
    return static_cast<int>(EUCMIN_ERR_INTERNAL);
  }
  eucmin_status status = eucmin_ctx_set_precision_bits(ctx, global.precision_bits);
  if (status == EUCMIN_OK) status = eucmin_ctx_set_seed(ctx, global.seed);
  if (status == EUCMIN_OK) status = eucmin_ctx_set_node_budget(ctx, global.node_budget);
  if (status != EUCMIN_OK) {
    int code = finish(ctx, status, nullptr);
    eucmin_ctx_free(ctx);
    return code;
  }

  eucmin_format format = format_of(global.format);
  char* output = nullptr;

  if (bound->parsed()) {
    eucmin_field* field = nullptr;
    if (!bound_poly.empty()) {
      status = eucmin_field_from_polynomial(ctx, bound_poly.c_str(), &field);
    } else if (bound_n > 0 && !bound_disc.empty()) {
      status = eucmin_field_from_signature(ctx, bound_n, bound_r, bound_s, bound_disc.c_str(),
                                           &field);
    } else {
      std::fprintf(stderr, "error: bound needs --poly or (--n, --r, --s, --disc)\n");
      eucmin_ctx_free(ctx);
      return static_cast<int>(EUCMIN_ERR_INVALID_INPUT);
    }
    if (status == EUCMIN_OK)
      status = eucmin_bounds_report(ctx, field, bound_disc.empty() ? nullptr : bound_disc.c_str(),
                                    format, &output);
    eucmin_field_free(field);
  } else if (table->parsed()) {
    status = eucmin_bound_table(ctx, table_n_max, format, &output);
  } else if (hermite->parsed()) {
    unsigned lo = hermite_n > 0 ? hermite_n : hermite_min;
    unsigned hi = hermite_n > 0 ? hermite_n : hermite_max;
    status = eucmin_hermite_report(ctx, lo, hi, format, &output);
  } else if (scan->parsed()) {
    status = eucmin_blichfeldt_scan(ctx, format, &output);
  } else if (lattice->parsed()) {
    status = eucmin_lattice_report(ctx, lattice_poly.c_str(), lattice_grid_k, lattice_coeff_box,
                                   lattice_root_bits, format, &output);
  } else if (verify->parsed()) {
    status = eucmin_verify(ctx, verify_suite.empty() ? nullptr : verify_suite.c_str(), format,
                           &output);
  }

  int code = finish(ctx, status, output);
  eucmin_ctx_free(ctx);
  return code;
}
