#include "gw/strata.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "gw/errors.hpp"
#include "gw/strata_tables.hpp"

namespace gw {

namespace {

using nlohmann::json;

size_t basis_index(const std::string& name) {
  for (size_t i = 0; i < kStrataCount; ++i)
    if (name == kStrataNames[i]) return i;
  throw DataError("strata table: unknown basis name '" + name + "'");
}

StrataVector parse_vector(const json& object) {
  StrataVector v{};
  for (const auto& [name, value] : object.items()) {
    if (!value.is_string())
      throw DataError("strata table: coordinate '" + name + "' must be a \"p/q\" string");
    v.coords[basis_index(name)] = Rational::from_string(value.get<std::string>());
  }
  return v;
}

std::map<std::string, Rational> parse_coefficients(const json& object) {
  std::map<std::string, Rational> out;
  for (const auto& [name, value] : object.items())
    out.emplace(name, Rational::from_string(value.get<std::string>()));
  return out;
}

const std::array<const char*, 7> kRLabels = {"R1", "R2", "R3", "R4", "R5", "R6", "R7"};
const std::array<const char*, 9> kSLabels = {"S1", "S2", "S3", "S4", "S5",
                                             "S6", "S7", "S8", "S9"};
const std::array<const char*, 4> kVanishing = {"S2", "S3", "S8", "S9"};

void validate(const PushforwardTable& table) {
  for (const char* label : kRLabels) {
    auto it = table.images.find(label);
    if (it == table.images.end())
      throw DataError(std::string("strata table: missing image for ") + label);
    for (size_t i = 4; i < kStrataCount; ++i)  // elliptic-component span only
      if (!it->second.coords[i].is_zero())
        throw DataError(std::string("strata table: ") + label + " leaves the R-span at " +
                        kStrataNames[i]);
    if (table.cover_lhs.find(label) == table.cover_lhs.end())
      throw DataError(std::string("strata table: missing relation coefficient for ") + label);
  }
  for (const char* label : kSLabels) {
    auto it = table.images.find(label);
    if (it == table.images.end())
      throw DataError(std::string("strata table: missing image for ") + label);
    for (size_t i = 0; i < 4; ++i)  // nodal boundary span only
      if (!it->second.coords[i].is_zero())
        throw DataError(std::string("strata table: ") + label + " leaves the S-span at " +
                        kStrataNames[i]);
    if (table.cover_rhs.find(label) == table.cover_rhs.end())
      throw DataError(std::string("strata table: missing relation coefficient for ") + label);
  }
  for (const char* label : kVanishing)
    if (!table.images.at(label).is_zero())
      throw DataError(std::string("strata table: image of ") + label + " must vanish");
  for (const auto& [label, size] : table.stabilizers) {
    if (table.images.find(label) == table.images.end())
      throw DataError("strata table: stabilizer for unknown stratum '" + label + "'");
    if (size < 1) throw DataError("strata table: stabilizer size must be positive");
  }
}

}  // namespace

bool StrataVector::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

StrataVector operator+(const StrataVector& a, const StrataVector& b) {
  StrataVector out{};
  for (size_t i = 0; i < kStrataCount; ++i) out.coords[i] = a.coords[i] + b.coords[i];
  return out;
}

StrataVector operator-(const StrataVector& a, const StrataVector& b) {
  StrataVector out{};
  for (size_t i = 0; i < kStrataCount; ++i) out.coords[i] = a.coords[i] - b.coords[i];
  return out;
}

StrataVector operator*(const Rational& c, const StrataVector& v) {
  StrataVector out{};
  for (size_t i = 0; i < kStrataCount; ++i) out.coords[i] = c * v.coords[i];
  return out;
}

std::string to_string(const StrataVector& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < kStrataCount; ++i) {
    if (v.coords[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << v.coords[i].str() << "*" << kStrataNames[i];
  }
  return first ? "0" : os.str();
}

PushforwardTable load_tables_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("strata table: invalid JSON: ") + e.what());
  }
  try {
    PushforwardTable table;
    for (const auto& [label, entry] : doc.at("pushforwards").items())
      table.images.emplace(label, parse_vector(entry));
    for (const auto& [label, size] : doc.at("stabilizers").items())
      table.stabilizers.emplace(label, size.get<int>());
    table.cover_lhs = parse_coefficients(doc.at("cover_relation").at("lhs"));
    table.cover_rhs = parse_coefficients(doc.at("cover_relation").at("rhs"));
    table.pushforward_relation = parse_vector(doc.at("pushforward_relation"));
    table.divisor_relation = parse_vector(doc.at("divisor_relation"));
    table.getzler_relation = parse_vector(doc.at("getzler_relation"));
    validate(table);
    return table;
  } catch (const json::exception& e) {
    throw DataError(std::string("strata table: malformed document: ") + e.what());
  }
}

PushforwardTable load_tables() { return load_tables_from_json(embedded_tables_json()); }

const char* embedded_tables_json() { return kStrataTablesJson; }

StrataVector relation_image(const PushforwardTable& table) {
  StrataVector image{};
  for (const auto& [label, coefficient] : table.cover_lhs)
    image = image + coefficient * table.images.at(label);
  for (const auto& [label, coefficient] : table.cover_rhs)
    image = image - coefficient * table.images.at(label);
  return image;
}

bool check_pushforward_relation(const PushforwardTable& table) {
  return relation_image(table) == Rational(-1) * table.pushforward_relation;
}

bool check_getzler_combination(const PushforwardTable& table) {
  return table.pushforward_relation - Rational(2) * table.divisor_relation ==
         Rational(4) * table.getzler_relation;
}

}  // namespace gw
