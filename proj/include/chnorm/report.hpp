#ifndef CHNORM_REPORT_HPP
#define CHNORM_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chnorm/algebra.hpp"
#include "chnorm/ch_norm.hpp"
#include "chnorm/rat_unipoly.hpp"
#include "chnorm/structure.hpp"

namespace chnorm {

// Ordered key/value document rendered either as "key: value" lines or as a
// JSON object with the same fields in the same order. One content path for
// both formats; golden tests compare the rendering byte-exactly (minus the
// timing line, which is appended last by the caller).
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, std::uint64_t value);
  void add(std::string key, bool value);
  // A boolean that records a verification outcome: the CLI refuses to exit
  // 0 when any check field is false. Descriptive booleans (for example
  // "semisimple") use add().
  void add_check(std::string key, bool value);
  void add_list(std::string key, std::vector<std::string> values);

  std::string render_text() const;
  std::string render_structured() const;

  bool verifications_ok() const;

 private:
  using Value =
      std::variant<std::string, std::uint64_t, bool, std::vector<std::string>>;
  std::vector<std::pair<std::string, Value>> fields_;
  bool checks_ok_ = true;
};

Report build_validation_report(const Algebra& a, const ValidationReport& v);
Report build_norm_report(const NormReport& r);
Report build_minpoly_report(const Algebra& a, const MinimalPolynomial& p);
Report build_degree_report(const Algebra& a, std::size_t degree);
Report build_charpoly_report(const Element& e, const RatUniPoly& chi);
Report build_verify_ch_report(const Algebra& a, bool ok);
Report build_verify_mult_report(const Algebra& a, const MultiPoly& norm,
                                const MultiplicativityVerdict& v);
Report build_radical_report(const Algebra& a, const RadicalBasis& rad);
Report build_decomposition_report(const DecompositionReport& r);
Report build_restrict_report(const Algebra& parent, const Algebra& sub,
                             const MultiPoly& restricted,
                             std::size_t parent_degree, std::size_t sub_degree,
                             const MultiPoly* sub_own_norm);
Report build_catalog_report(const Algebra& a);

std::string verify_mode_name(VerifyMode mode);

}  // namespace chnorm

#endif  // CHNORM_REPORT_HPP
