#ifndef CHNORM_CATALOG_HPP
#define CHNORM_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chnorm/algebra.hpp"

namespace chnorm {

// Named example algebras shipped with the tool.
const std::vector<std::string>& catalog_names();

bool is_catalog_name(std::string_view name);

// Throws DomainError for an unknown name.
Algebra catalog_algebra(std::string_view name);

}  // namespace chnorm

#endif  // CHNORM_CATALOG_HPP
