#ifndef CHNORM_ALGEBRA_IO_HPP
#define CHNORM_ALGEBRA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "chnorm/algebra.hpp"

namespace chnorm {

// Algebra file document: a JSON object with exactly the fields
//   name   (string)
//   field  (must be "Q")
//   dim    (integer)
//   basis  (list of strings, length dim)
//   unit   (list of rational strings, length dim)
//   table  (list of {i, j, k, c} records, 0-based indices, rational c)
// Unknown fields are rejected. emit -> parse -> emit is the identity.
std::string emit_algebra(const Algebra& a);

// Throws ParseError on malformed documents with a one-line diagnostic
// naming the offending field.
Algebra parse_algebra(std::string_view text);

Algebra load_algebra_file(const std::filesystem::path& path);

}  // namespace chnorm

#endif  // CHNORM_ALGEBRA_IO_HPP
