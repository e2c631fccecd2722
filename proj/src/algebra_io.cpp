#include "chnorm/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chnorm/error.hpp"

namespace chnorm {

using nlohmann::json;

std::string emit_algebra(const Algebra& a) {
  // The emitter writes fields in a fixed order with fixed layout so the
  // document is byte-reproducible.
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << json(a.name()).dump() << ",\n";
  out << "  \"field\": \"Q\",\n";
  out << "  \"dim\": " << a.dim() << ",\n";
  out << "  \"basis\": [";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out << ", ";
    out << json(a.basis()[i]).dump();
  }
  out << "],\n";
  out << "  \"unit\": [";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out << ", ";
    out << json(to_string(a.unit()[i])).dump();
  }
  out << "],\n";
  out << "  \"table\": [";
  const auto& table = a.table();
  for (std::size_t t = 0; t < table.size(); ++t) {
    out << (t ? ",\n    " : "\n    ");
    out << "{\"i\": " << table[t].i << ", \"j\": " << table[t].j
        << ", \"k\": " << table[t].k << ", \"c\": "
        << json(to_string(table[t].c)).dump() << "}";
  }
  out << (table.empty() ? "]" : "\n  ]") << "\n";
  out << "}\n";
  return out.str();
}

namespace {

void require_fields(const json& obj, std::initializer_list<const char*> keys,
                    const std::string& where) {
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw ParseError("missing field '" + std::string(key) + "' in " + where);
    }
  }
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError("unknown field '" + key + "' in " + where);
    }
  }
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid algebra document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("algebra document must be an object");
  }
  require_fields(doc, {"name", "field", "dim", "basis", "unit", "table"},
                 "algebra document");
  if (!doc["name"].is_string()) throw ParseError("field 'name' must be a string");
  if (!doc["field"].is_string() || doc["field"].get<std::string>() != "Q") {
    throw ParseError("field 'field' must be \"Q\"");
  }
  if (!doc["dim"].is_number_unsigned()) {
    throw ParseError("field 'dim' must be a nonnegative integer");
  }
  const std::size_t dim = doc["dim"].get<std::size_t>();
  if (!doc["basis"].is_array() || doc["basis"].size() != dim) {
    throw ParseError("field 'basis' must be a list of length dim");
  }
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw ParseError("field 'basis' must contain strings");
    basis.push_back(b.get<std::string>());
  }
  if (!doc["unit"].is_array() || doc["unit"].size() != dim) {
    throw ParseError("field 'unit' must be a list of length dim");
  }
  std::vector<Rational> unit;
  for (const auto& u : doc["unit"]) {
    if (!u.is_string()) {
      throw ParseError("field 'unit' must contain rational strings");
    }
    unit.push_back(rational_from_string(u.get<std::string>()));
  }
  if (!doc["table"].is_array()) {
    throw ParseError("field 'table' must be a list");
  }
  std::vector<StructureEntry> table;
  for (const auto& entry : doc["table"]) {
    if (!entry.is_object()) {
      throw ParseError("field 'table' must contain {i, j, k, c} records");
    }
    require_fields(entry, {"i", "j", "k", "c"}, "table entry");
    for (const char* key : {"i", "j", "k"}) {
      if (!entry[key].is_number_unsigned()) {
        throw ParseError("table index '" + std::string(key) +
                         "' must be a nonnegative integer");
      }
      if (entry[key].get<std::size_t>() >= dim) {
        throw ParseError("table index '" + std::string(key) +
                         "' out of range for dim");
      }
    }
    if (!entry["c"].is_string()) {
      throw ParseError("table coefficient 'c' must be a rational string");
    }
    table.push_back({entry["i"].get<std::size_t>(),
                     entry["j"].get<std::size_t>(),
                     entry["k"].get<std::size_t>(),
                     rational_from_string(entry["c"].get<std::string>())});
  }
  try {
    return Algebra(doc["name"].get<std::string>(), std::move(basis),
                   std::move(unit), std::move(table));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid algebra document: ") + e.what());
  }
}

Algebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open algebra file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

}  // namespace chnorm
