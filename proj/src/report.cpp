#include "eucmin/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eucmin/errors.hpp"
#include "eucmin/lattice.hpp"
#include "eucmin/qutil.hpp"

namespace eucmin {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "markdown" || name == "md") return Format::markdown;
  raise(errc::invalid_input, "unknown format: " + name + " (expected json, csv or markdown)");
}

std::vector<ReportRow> reproduce_bound_table(int n_max) {
  if (n_max < 1) raise(errc::invalid_input, "n_max must be >= 1");
  if (n_max > 8)
    raise(errc::invalid_input, "the bound table uses exact Hermite constants (n <= 8)");
  std::vector<ReportRow> out;
  for (int n = 1; n <= n_max; ++n) {
    HermiteEstimate g = best_hermite_upper(n);
    for (int s = 0; 2 * s <= n; ++s) {
      int r = n - 2 * s;
      if (r + s < 1) continue;
      FieldDescriptor desc = make_descriptor(n, r, s, mpz_class(1));
      // group a values whose bounds agree as exact constants
      std::map<std::pair<std::string, std::string>, ReportRow> groups;
      std::vector<std::pair<std::string, std::string>> order;
      for (int a = 1; a <= r + s; ++a) {
        BoundResult b = theorem_bound(desc, a, g);
        std::pair<std::string, std::string> key{b.coeff_exact->to_string(),
                                                b.disc_exponent.get_str()};
        auto it = groups.find(key);
        if (it == groups.end()) {
          ReportRow row;
          row.n = n;
          row.s = s;
          row.a_set = {a};
          row.coeff_exact = key.first;
          auto dec = b.coeff_exact->to_decimal(5);
          row.coeff_decimal = dec.digits;
          row.decimal_truncated = dec.truncated;
          row.disc_exponent = b.disc_exponent;
          // the printed table lists a = 0 for the n <= 2 rows even though the
          // theorem needs a >= 1; the coefficients match the computed a set
          if (n <= 2) row.note = "printed table lists a = 0 for this row";
          groups.emplace(key, std::move(row));
          order.push_back(key);
        } else {
          it->second.a_set.push_back(a);
        }
      }
      for (const auto& key : order) out.push_back(groups.at(key));
    }
  }
  return out;
}

std::vector<int> blichfeldt_scan(mpfr_prec_t start_prec, mpfr_prec_t max_prec) {
  std::vector<int> out;
  for (int n = 2;; ++n) {
    bool below = false, decided = false;
    for (mpfr_prec_t prec = start_prec; prec <= max_prec; prec *= 2) {
      Interval bound = blichfeldt_bound(n, prec);
      Interval root = Interval::from_si(n, prec).sqrt();
      cmp3 c = compare(bound, root);
      if (c != cmp3::overlap) {
        below = c == cmp3::less;
        decided = true;
        break;
      }
    }
    if (!decided)
      raise(errc::precision_exhausted,
            "Blichfeldt scan could not separate at n = " + std::to_string(n));
    if (!below) break;
    out.push_back(n);
  }
  return out;
}

namespace {

nlohmann::json interval_to_json(const Interval& v) {
  return {{"lo", v.lo_string(40)}, {"hi", v.hi_string(40)}};
}

nlohmann::json estimate_to_json(const MinimaEstimate& est) {
  const char* kind = est.kind == MinimaEstimate::Kind::mu_k ? "mu_k"
                     : est.kind == MinimaEstimate::Kind::m_s_upper_estimate
                         ? "m_s_upper_estimate"
                         : "M_s_lower_estimate";
  return {{"kind", kind},
          {"value", interval_to_json(est.value)},
          {"rigorous", est.rigorous},
          {"params", est.params}};
}

nlohmann::json lemma_to_json(const LemmaCheck& check) {
  nlohmann::json j{{"lhs", interval_to_json(check.lhs)},
                   {"rhs", interval_to_json(check.rhs)},
                   {"certified_applicable", check.certified_applicable},
                   {"violated", check.violated}};
  if (!check.note.empty()) j["note"] = check.note;
  return j;
}

}  // namespace

nlohmann::json descriptor_to_json(const FieldDescriptor& desc) {
  nlohmann::json j;
  j["n"] = desc.n;
  j["r"] = desc.r;
  j["s"] = desc.s;
  j["disc_abs"] = desc.disc_abs.get_str();
  j["disc_provenance"] =
      desc.disc_provenance == DiscProvenance::given ? "given" : "equation_order";
  if (desc.defining_poly) {
    j["defining_poly"] = desc.defining_poly->to_json();
    j["defining_poly_text"] = desc.defining_poly->to_string();
    j["irreducibility_checked"] = desc.irreducibility_checked;
  } else {
    j["defining_poly"] = nullptr;
  }
  return j;
}

nlohmann::json bound_to_json(const BoundResult& bound) {
  nlohmann::json j;
  j["formula"] = formula_name(bound.formula);
  j["n"] = bound.n;
  if (bound.a_param)
    j["a"] = *bound.a_param;
  else
    j["a"] = nullptr;
  j["disc_exponent"] = bound.disc_exponent.get_str();
  j["coeff_rational"] = bound.coeff_rational.to_string();
  j["gamma_exponent"] = bound.gamma_exponent.get_str();
  if (bound.hermite) j["hermite_provenance"] = provenance_name(bound.hermite->provenance);
  if (bound.coeff_exact) {
    j["coeff_exact"] = bound.coeff_exact->to_string();
    j["coeff_decimal"] = bound.coeff_exact->to_decimal(5).digits;
  }
  j["coeff_value"] = interval_to_json(bound.coeff_value);
  if (bound.value_at_disc) j["value_at_disc"] = interval_to_json(*bound.value_at_disc);
  return j;
}

nlohmann::json hermite_report(int n_min, int n_max, mpfr_prec_t prec) {
  if (n_min < 1 || n_max < n_min) raise(errc::invalid_input, "bad dimension range");
  nlohmann::json rows = nlohmann::json::array();
  for (int n = n_min; n <= n_max; ++n) {
    nlohmann::json j;
    j["n"] = n;
    if (auto exact = hermite_exact(n)) {
      j["exact"] = exact->to_string();
      j["exact_decimal"] = exact->to_decimal(5).digits;
    } else {
      j["exact"] = nullptr;
    }
    j["blichfeldt"] = interval_to_json(blichfeldt_bound(n, prec));
    auto [w1, w2] = wen_bounds(n);
    j["wen1"] = w1.get_str();
    j["wen2"] = w2.get_str();
    HermiteEstimate best = best_hermite_upper(n, prec);
    j["best"] = {{"provenance", provenance_name(best.provenance)},
                 {"value", interval_to_json(best.value)}};
    rows.push_back(std::move(j));
  }
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["hermite"] = std::move(rows);
  return doc;
}

nlohmann::json field_report(const FieldDescriptor& desc, const FieldReportOptions& opts) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["descriptor"] = descriptor_to_json(desc);
  doc["precision_bits"] = static_cast<long>(opts.prec);
  doc["seed"] = opts.seed;
  doc["node_budget"] = opts.node_budget;

  mpz_class disc = opts.disc_override.value_or(desc.disc_abs);
  doc["disc_used"] = disc.get_str();

  nlohmann::json bounds = nlohmann::json::array();
  for (auto& b : bound_family(desc, opts.prec)) {
    b.value_at_disc = evaluate_at_disc(b, disc, opts.prec);
    bounds.push_back(bound_to_json(b));
  }
  doc["bounds"] = std::move(bounds);
  doc["best_bound"] = bound_to_json(best_bound(desc, disc, opts.prec));

  if (!desc.defining_poly || !opts.with_lattice) {
    doc["lattice"] = nullptr;
    doc["lattice_skipped_reason"] = desc.defining_poly ? "disabled" : "no polynomial";
    return doc;
  }

  EnumerationOptions eopts{opts.node_budget};
  LatticeBasis basis = minkowski_basis(*desc.defining_poly, std::nullopt, opts.root_target_bits);
  nlohmann::json lat;
  lat["basis"] = basis.to_json();

  DetCheck det = det_identity_check(desc, basis);
  lat["det_check"] = {{"det_abs", interval_to_json(det.det_abs)},
                      {"width", det.width.get_str()},
                      {"rhs", interval_to_json(det.rhs)},
                      {"contains_exact", det.contains_exact}};

  if (desc.n <= 8) {
    SuccessiveMinima minima = successive_minima(basis, desc.n, eopts);
    nlohmann::json mus = nlohmann::json::array();
    for (int i = 0; i < desc.n; ++i) {
      nlohmann::json m;
      m["k"] = i + 1;
      m["value"] = interval_to_json(minima.mu[i]);
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : minima.vectors[i]) coeffs.push_back(c.get_str());
      m["coefficients"] = std::move(coeffs);
      mus.push_back(std::move(m));
    }
    lat["successive_minima"] = std::move(mus);
    lat["minima_rigorous"] = minima.rigorous;

    HermiteEstimate g = best_hermite_upper(desc.n, opts.prec);
    auto [lhs, rhs] = minkowski_product_check(basis, desc.n, g, eopts);
    lat["minkowski_check"] = {{"lhs", interval_to_json(lhs)},
                              {"rhs", interval_to_json(rhs)},
                              {"violated", certified_gt(lhs, rhs)}};
  } else {
    lat["successive_minima"] = nullptr;
    lat["minima_rigorous"] = false;
  }

  MinimaEstimate m_est = homogeneous_minimum_estimate(basis, opts.coeff_box);
  lat["m_s_upper_estimate"] = estimate_to_json(m_est);

  TargetSpec targets;
  targets.grid_k = opts.grid_k;
  targets.seed = opts.seed;
  MinimaEstimate M_est = inhomogeneous_minimum_lower_estimate(basis, targets, eopts);
  lat["M_s_lower_estimate"] = estimate_to_json(M_est);

  lat["lemma_m_mu1"] = lemma_to_json(lemma_m_mu1_check(basis, opts.coeff_box, eopts));
  lat["lemma_M_mun"] = lemma_to_json(lemma_M_mun_check(basis, targets, eopts));

  // consistency of the chain M(K) <= M_s(Lambda_K) <= best bound
  const Interval& best_val = *best_bound(desc, disc, opts.prec).value_at_disc;
  lat["chain_M_s_below_best_bound"] = !certified_gt(M_est.value, best_val);

  doc["lattice"] = std::move(lat);
  doc["lattice_skipped_reason"] = nullptr;
  return doc;
}

namespace {

std::string a_set_string(const std::vector<int>& a_set, bool paper_style) {
  std::string out;
  for (size_t i = 0; i < a_set.size(); ++i) {
    if (i > 0) {
      if (paper_style)
        out += i + 1 == a_set.size() ? " or " : ", ";
      else
        out += ";";
    }
    out += std::to_string(a_set[i]);
  }
  return out;
}

}  // namespace

std::string format_table(const std::vector<ReportRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      out << "n,s,a_set,coeff_exact,coeff_decimal,disc_exponent\n";
      for (const auto& row : rows)
        out << row.n << ',' << row.s << ',' << a_set_string(row.a_set, false) << ','
            << row.coeff_exact << ',' << row.coeff_decimal << ',' << row.disc_exponent.get_str()
            << '\n';
      break;
    }
    case Format::markdown: {
      out << "| n | s | a | upper bound for M(K) |\n|---|---|---|---|\n";
      bool any_note = false;
      for (const auto& row : rows) {
        out << "| " << row.n << " | " << row.s << " | " << a_set_string(row.a_set, true)
            << (row.note.empty() ? "" : " (*)") << " | " << row.coeff_exact << " * D^("
            << row.disc_exponent.get_str() << ") = " << row.coeff_decimal
            << (row.decimal_truncated ? "..." : "") << " * D^(" << row.disc_exponent.get_str()
            << ") |\n";
        any_note = any_note || !row.note.empty();
      }
      if (any_note)
        out << "\n(*) the printed table lists a = 0 for these rows; the computed admissible "
               "a values are shown\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["schema_version"] = 1;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json j{{"n", row.n},
                         {"s", row.s},
                         {"a_set", row.a_set},
                         {"coeff_exact", row.coeff_exact},
                         {"coeff_decimal", row.coeff_decimal},
                         {"decimal_truncated", row.decimal_truncated},
                         {"disc_exponent", row.disc_exponent.get_str()}};
        if (!row.note.empty()) j["note"] = row.note;
        arr.push_back(std::move(j));
      }
      doc["table"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string format_scan(const std::vector<int>& values, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      out << "n\n";
      for (int v : values) out << v << '\n';
      break;
    }
    case Format::markdown: {
      out << "blichfeldt(n) < sqrt(n) for n in {";
      for (size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
      out << "}\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["schema_version"] = 1;
      doc["scan"] = values;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string format_json_or_markdown(const nlohmann::json& doc, Format format) {
  if (format == Format::json || format == Format::csv) return doc.dump(2) + "\n";
  // generic markdown rendering: fenced JSON keeps the documents readable
  return "```json\n" + doc.dump(2) + "\n```\n";
}

}  // namespace eucmin
