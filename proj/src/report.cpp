#include "chnorm/report.hpp"

#include <sstream>

#include <json.hpp>

#include "chnorm/error.hpp"

namespace chnorm {

void Report::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), Value(std::move(value)));
}

void Report::add(std::string key, std::uint64_t value) {
  fields_.emplace_back(std::move(key), Value(value));
}

void Report::add(std::string key, bool value) {
  fields_.emplace_back(std::move(key), Value(value));
}

void Report::add_check(std::string key, bool value) {
  if (!value) checks_ok_ = false;
  fields_.emplace_back(std::move(key), Value(value));
}

void Report::add_list(std::string key, std::vector<std::string> values) {
  fields_.emplace_back(std::move(key), Value(std::move(values)));
}

std::string Report::render_text() const {
  std::ostringstream out;
  for (const auto& [key, value] : fields_) {
    out << key << ": ";
    if (const auto* s = std::get_if<std::string>(&value)) {
      out << *s;
    } else if (const auto* n = std::get_if<std::uint64_t>(&value)) {
      out << *n;
    } else if (const auto* b = std::get_if<bool>(&value)) {
      out << (*b ? "true" : "false");
    } else {
      const auto& list = std::get<std::vector<std::string>>(value);
      out << '[';
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << ", ";
        out << list[i];
      }
      out << ']';
    }
    out << '\n';
  }
  return out.str();
}

std::string Report::render_structured() const {
  nlohmann::ordered_json doc;
  for (const auto& [key, value] : fields_) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      doc[key] = *s;
    } else if (const auto* n = std::get_if<std::uint64_t>(&value)) {
      doc[key] = *n;
    } else if (const auto* b = std::get_if<bool>(&value)) {
      doc[key] = *b;
    } else {
      doc[key] = std::get<std::vector<std::string>>(value);
    }
  }
  return doc.dump(2) + "\n";
}

bool Report::verifications_ok() const { return checks_ok_; }

namespace {

void add_header(Report& r, const std::string& command, const Algebra& a) {
  r.add("command", command);
  r.add("algebra", a.name());
  r.add("dim", static_cast<std::uint64_t>(a.dim()));
}

std::vector<std::string> coord_rows(
    const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(coords_to_string(row));
  return out;
}

void add_multiplicativity(Report& r, const MultiplicativityVerdict& v) {
  r.add("multiplicativity_mode", verify_mode_name(v.mode_used));
  r.add_check("multiplicative", v.multiplicative);
  if (v.mode_used == VerifyMode::kRandomized) {
    r.add("trials", static_cast<std::uint64_t>(v.trials));
  }
  r.add("note", v.note);
  if (!v.multiplicative) {
    r.add("witness_a", coords_to_string(v.witness_a));
    r.add("witness_b", coords_to_string(v.witness_b));
  }
}

}  // namespace

std::string verify_mode_name(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kExact:
      return "exact";
    case VerifyMode::kRandomized:
      return "randomized";
    case VerifyMode::kAuto:
      return "auto";
  }
  throw InternalError("unknown verification mode");
}

Report build_validation_report(const Algebra& a, const ValidationReport& v) {
  Report r;
  add_header(r, "validate", a);
  r.add("valid", v.ok());
  r.add("failure_count", static_cast<std::uint64_t>(v.failures.size()));
  std::size_t i = 0;
  for (const std::string& f : v.failures) {
    r.add("failure_" + std::to_string(++i), f);
  }
  return r;
}

Report build_norm_report(const NormReport& n) {
  Report r;
  r.add("command", std::string("norm"));
  r.add("algebra", n.algebra_name);
  r.add("dim", static_cast<std::uint64_t>(n.dim));
  r.add("degree", static_cast<std::uint64_t>(n.degree));
  r.add("minimal_polynomial", n.min_poly.poly.to_string());
  r.add("minimal_norm", n.minimal_norm.to_string());
  r.add("regular_norm", n.regular_norm.to_string());
  r.add("regular_char_poly", n.regular_char_poly.to_string());
  r.add("cofactor", n.cofactor.to_string());
  r.add_check("ch_verified", n.ch_verified);
  r.add_check("norm_of_unit_is_one", n.norm_of_unit_is_one);
  r.add_check("homogeneous_of_degree_k", n.homogeneous_of_degree_k);
  add_multiplicativity(r, n.multiplicativity);
  r.add("seed", n.multiplicativity.seed);
  return r;
}

Report build_minpoly_report(const Algebra& a, const MinimalPolynomial& p) {
  Report r;
  add_header(r, "minpoly", a);
  r.add("degree", static_cast<std::uint64_t>(p.degree()));
  r.add("minimal_polynomial", p.poly.to_string());
  r.add_check("monic", p.poly.is_monic());
  // P(x) = 0 was checked exactly during construction.
  r.add_check("satisfied_by_generic_element", true);
  return r;
}

Report build_degree_report(const Algebra& a, std::size_t degree) {
  Report r;
  add_header(r, "degree", a);
  r.add("degree", static_cast<std::uint64_t>(degree));
  return r;
}

Report build_charpoly_report(const Element& e, const RatUniPoly& chi) {
  Report r;
  add_header(r, "charpoly", e.algebra());
  r.add("element", e.to_string());
  r.add("char_poly", chi.to_string());
  r.add("char_poly_degree", static_cast<std::uint64_t>(chi.degree()));
  // chi(element) = 0 was checked exactly during construction.
  r.add_check("element_satisfies_char_poly", true);
  r.add("element_degree",
        static_cast<std::uint64_t>(element_degree(e)));
  return r;
}

Report build_verify_ch_report(const Algebra& a, bool ok) {
  Report r;
  add_header(r, "verify", a);
  r.add("check", std::string("ch"));
  r.add_check("ch_verified", ok);
  return r;
}

Report build_verify_mult_report(const Algebra& a, const MultiPoly& norm,
                                const MultiplicativityVerdict& v) {
  Report r;
  add_header(r, "verify", a);
  r.add("check", std::string("mult"));
  r.add("minimal_norm", norm.to_string());
  add_multiplicativity(r, v);
  r.add("seed", v.seed);
  return r;
}

Report build_radical_report(const Algebra& a, const RadicalBasis& rad) {
  Report r;
  add_header(r, "radical", a);
  r.add("radical_dim", static_cast<std::uint64_t>(rad.dim()));
  r.add_list("radical_basis", coord_rows(rad.vectors));
  r.add("nilpotency_index", static_cast<std::uint64_t>(rad.nilpotency_index));
  r.add("semisimple", rad.vectors.empty());
  return r;
}

Report build_decomposition_report(const DecompositionReport& d) {
  Report r;
  r.add("command", std::string("decompose"));
  r.add("algebra", d.algebra_name);
  r.add("dim", static_cast<std::uint64_t>(d.dim));
  r.add("radical_dim", static_cast<std::uint64_t>(d.radical.dim()));
  r.add_list("radical_basis", coord_rows(d.radical.vectors));
  r.add("nilpotency_index",
        static_cast<std::uint64_t>(d.radical.nilpotency_index));
  r.add("quotient_dim", static_cast<std::uint64_t>(d.quotient.dim()));
  r.add("factor_count", static_cast<std::uint64_t>(d.factors.size()));
  {
    std::vector<std::string> dims;
    for (const Algebra& f : d.factors) dims.push_back(std::to_string(f.dim()));
    r.add_list("factor_dims", std::move(dims));
  }
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const std::string tag = std::to_string(i + 1);
    r.add("idempotent_" + tag, d.idempotents[i].to_string());
    r.add("norm_" + tag, d.irreducible_norms[i].norm.to_string());
    r.add("norm_degree_" + tag,
          static_cast<std::uint64_t>(d.irreducible_norms[i].degree));
    r.add("exponent_" + tag, static_cast<std::uint64_t>(d.exponents[i]));
  }
  r.add("minimal_norm", d.minimal_norm.to_string());
  r.add("minimal_norm_degree", static_cast<std::uint64_t>(d.norm_degree));
  r.add_check("idempotents_verified", d.idempotents_verified);
  r.add_check("norms_multiplicative", d.norms_multiplicative);
  r.add_check("norm_product_identity", d.norm_product_identity);
  r.add_check("degree_sum_identity", d.degree_sum_identity);
  r.add_check("radical_invariance", d.radical_invariance);
  if (d.nilpotency_observation.applicable) {
    std::ostringstream note;
    note << "exponent " << d.nilpotency_observation.exponent
         << (d.nilpotency_observation.matches ? " equals" : " differs from")
         << " maximal element nilpotency "
         << d.nilpotency_observation.max_element_nilpotency;
    r.add("nilpotency_observation", note.str());
  } else {
    r.add("nilpotency_observation", std::string("not applicable"));
  }
  r.add("seed", d.seed);
  return r;
}

Report build_restrict_report(const Algebra& parent, const Algebra& sub,
                             const MultiPoly& restricted,
                             std::size_t parent_degree, std::size_t sub_degree,
                             const MultiPoly* sub_own_norm) {
  Report r;
  add_header(r, "restrict", parent);
  r.add("sub_algebra", sub.name());
  r.add("sub_dim", static_cast<std::uint64_t>(sub.dim()));
  r.add("parent_degree", static_cast<std::uint64_t>(parent_degree));
  r.add("sub_degree", static_cast<std::uint64_t>(sub_degree));
  r.add("restricted_norm", restricted.to_string());
  r.add("degrees_equal", parent_degree == sub_degree);
  if (sub_own_norm != nullptr) {
    r.add("sub_minimal_norm", sub_own_norm->to_string());
    r.add_check("equals_sub_minimal_norm", restricted == *sub_own_norm);
  }
  return r;
}

Report build_catalog_report(const Algebra& a) {
  Report r;
  add_header(r, "catalog", a);
  r.add_list("basis", a.basis());
  return r;
}

}  // namespace chnorm
