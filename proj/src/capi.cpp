#include "eucmin.h"

#include <cstring>
#include <sstream>
#include <string>

#include "eucmin/bounds.hpp"
#include "eucmin/errors.hpp"
#include "eucmin/field.hpp"
#include "eucmin/qutil.hpp"
#include "eucmin/report.hpp"
#include "eucmin/verify.hpp"

using namespace eucmin;

struct eucmin_ctx {
  mpfr_prec_t prec = 128;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100000000;
  std::string last_error;
};

struct eucmin_field {
  FieldDescriptor desc;
};

namespace {

eucmin_status status_of(errc code) {
  switch (exit_class(code)) {
    case 2: return EUCMIN_ERR_INVALID_INPUT;
    case 4: return EUCMIN_ERR_PRECISION_EXHAUSTED;
    case 5: return EUCMIN_ERR_BUDGET_EXCEEDED;
    default: return EUCMIN_ERR_INTERNAL;
  }
}

char *dup_string(const std::string& s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
eucmin_status guarded(eucmin_ctx *ctx, Fn&& fn) {
  if (!ctx) return EUCMIN_ERR_NULL_ARGUMENT;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    ctx->last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EUCMIN_ERR_INTERNAL;
  }
}

Format to_format(eucmin_format f) {
  switch (f) {
    case EUCMIN_FORMAT_CSV: return Format::csv;
    case EUCMIN_FORMAT_MARKDOWN: return Format::markdown;
    default: return Format::json;
  }
}

}  // namespace

extern "C" {

const char *eucmin_version(void) { return "0.1.0"; }

eucmin_status eucmin_ctx_new(eucmin_ctx **out) {
  if (!out) return EUCMIN_ERR_NULL_ARGUMENT;
  *out = new eucmin_ctx();
  return EUCMIN_OK;
}

void eucmin_ctx_free(eucmin_ctx *ctx) { delete ctx; }

eucmin_status eucmin_ctx_set_precision_bits(eucmin_ctx *ctx, unsigned bits) {
  if (!ctx) return EUCMIN_ERR_NULL_ARGUMENT;
  if (bits < 16 || bits > 65536) {
    ctx->last_error = "precision must lie in [16, 65536] bits";
    return EUCMIN_ERR_INVALID_INPUT;
  }
  ctx->prec = bits;
  return EUCMIN_OK;
}

eucmin_status eucmin_ctx_set_seed(eucmin_ctx *ctx, uint64_t seed) {
  if (!ctx) return EUCMIN_ERR_NULL_ARGUMENT;
  ctx->seed = seed;
  return EUCMIN_OK;
}

eucmin_status eucmin_ctx_set_node_budget(eucmin_ctx *ctx, uint64_t nodes) {
  if (!ctx) return EUCMIN_ERR_NULL_ARGUMENT;
  if (nodes == 0) {
    ctx->last_error = "node budget must be positive";
    return EUCMIN_ERR_INVALID_INPUT;
  }
  ctx->node_budget = nodes;
  return EUCMIN_OK;
}

const char *eucmin_ctx_last_error(const eucmin_ctx *ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

eucmin_status eucmin_field_from_polynomial(eucmin_ctx *ctx, const char *poly,
                                           eucmin_field **out) {
  if (!poly || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse(poly));
    *out = new eucmin_field{std::move(desc)};
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_field_from_signature(eucmin_ctx *ctx, unsigned n, unsigned r, unsigned s,
                                          const char *disc_abs_decimal, eucmin_field **out) {
  if (!disc_abs_decimal || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    FieldDescriptor desc = make_descriptor(static_cast<int>(n), static_cast<int>(r),
                                           static_cast<int>(s), parse_mpz(disc_abs_decimal));
    *out = new eucmin_field{std::move(desc)};
    return EUCMIN_OK;
  });
}

void eucmin_field_free(eucmin_field *field) { delete field; }

unsigned eucmin_field_degree(const eucmin_field *field) {
  return field ? static_cast<unsigned>(field->desc.n) : 0;
}

unsigned eucmin_field_real_embeddings(const eucmin_field *field) {
  return field ? static_cast<unsigned>(field->desc.r) : 0;
}

unsigned eucmin_field_complex_pairs(const eucmin_field *field) {
  return field ? static_cast<unsigned>(field->desc.s) : 0;
}

eucmin_status eucmin_field_disc_abs(eucmin_ctx *ctx, const eucmin_field *field, char **out) {
  if (!field || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = dup_string(field->desc.disc_abs.get_str());
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_bound_table(eucmin_ctx *ctx, unsigned n_max, eucmin_format format,
                                 char **out) {
  if (!out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = dup_string(format_table(reproduce_bound_table(static_cast<int>(n_max)),
                                   to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_hermite_report(eucmin_ctx *ctx, unsigned n_min, unsigned n_max,
                                    eucmin_format format, char **out) {
  if (!out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    nlohmann::json doc =
        hermite_report(static_cast<int>(n_min), static_cast<int>(n_max), ctx->prec);
    *out = dup_string(format_json_or_markdown(doc, to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_blichfeldt_scan(eucmin_ctx *ctx, eucmin_format format, char **out) {
  if (!out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    *out = dup_string(format_scan(blichfeldt_scan(ctx->prec, 1024), to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_bounds_report(eucmin_ctx *ctx, const eucmin_field *field,
                                   const char *disc_decimal, eucmin_format format, char **out) {
  if (!field || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    FieldReportOptions opts;
    opts.prec = ctx->prec;
    opts.seed = ctx->seed;
    opts.node_budget = ctx->node_budget;
    opts.with_lattice = false;
    if (disc_decimal) opts.disc_override = parse_mpz(disc_decimal);
    nlohmann::json doc = field_report(field->desc, opts);
    *out = dup_string(format_json_or_markdown(doc, to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_lattice_report(eucmin_ctx *ctx, const char *poly, unsigned grid_k,
                                    unsigned coeff_box, unsigned root_bits,
                                    eucmin_format format, char **out) {
  if (!poly || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    FieldDescriptor desc = descriptor_from_polynomial(IntPolynomial::parse(poly));
    FieldReportOptions opts;
    opts.prec = ctx->prec;
    opts.seed = ctx->seed;
    opts.node_budget = ctx->node_budget;
    if (grid_k > 0) opts.grid_k = static_cast<int>(grid_k);
    if (coeff_box > 0) opts.coeff_box = static_cast<int>(coeff_box);
    if (root_bits > 0) opts.root_target_bits = root_bits;
    nlohmann::json doc = field_report(desc, opts);
    *out = dup_string(format_json_or_markdown(doc, to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_field_report(eucmin_ctx *ctx, const eucmin_field *field,
                                  const char *disc_override_decimal, eucmin_format format,
                                  char **out) {
  if (!field || !out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&] {
    FieldReportOptions opts;
    opts.prec = ctx->prec;
    opts.seed = ctx->seed;
    opts.node_budget = ctx->node_budget;
    if (disc_override_decimal) opts.disc_override = parse_mpz(disc_override_decimal);
    nlohmann::json doc = field_report(field->desc, opts);
    *out = dup_string(format_json_or_markdown(doc, to_format(format)));
    return EUCMIN_OK;
  });
}

eucmin_status eucmin_verify(eucmin_ctx *ctx, const char *suite, eucmin_format format,
                            char **out) {
  if (!out) return EUCMIN_ERR_NULL_ARGUMENT;
  return guarded(ctx, [&]() -> eucmin_status {
    VerifyOptions opts;
    opts.seed = ctx->seed == 0 ? VerifyOptions{}.seed : ctx->seed;
    opts.prec = ctx->prec;
    opts.node_budget = ctx->node_budget;
    std::vector<CheckResult> results =
        suite ? std::vector<CheckResult>{run_check(suite, opts)} : run_all_checks(opts);
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (to_format(format) == Format::json) {
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["seed"] = opts.seed;
      doc["all_passed"] = all_passed;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results)
        arr.push_back({{"id", r.id},
                       {"description", r.description},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
      doc["checks"] = std::move(arr);
      *out = dup_string(doc.dump(2) + "\n");
    } else {
      std::ostringstream text;
      for (const auto& r : results) {
        text << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  (" << r.seconds << " s)  "
             << r.detail << "\n";
      }
      text << (all_passed ? "all checks passed" : "CHECK FAILURE") << " (seed " << opts.seed
           << ")\n";
      *out = dup_string(text.str());
    }
    return all_passed ? EUCMIN_OK : EUCMIN_ERR_CHECK_FAILED;
  });
}

void eucmin_string_free(char *s) { delete[] s; }

}  // extern "C"
