#pragma once

#include <array>
#include <map>
#include <string>

#include "gw/rational.hpp"

namespace gw {

/// Fixed basis order of the nine invariant dimension-2 boundary strata:
/// the four with a nonsingular elliptic component first, then the five
/// inside the nodal-rational boundary divisor.
inline constexpr std::size_t kStrataCount = 9;
inline constexpr std::array<const char*, kStrataCount> kStrataNames = {
    "D22", "D23", "D24", "D34", "D02", "D03", "D04", "Da", "Db"};

/// Exact coordinate vector over the invariant strata basis.
struct StrataVector {
  std::array<Rational, kStrataCount> coords;

  bool is_zero() const;
  friend bool operator==(const StrataVector&, const StrataVector&) = default;
  friend StrataVector operator+(const StrataVector& a, const StrataVector& b);
  friend StrataVector operator-(const StrataVector& a, const StrataVector& b);
  friend StrataVector operator*(const Rational& c, const StrataVector& v);
};

std::string to_string(const StrataVector& v);

/// Push-forward images of the sixteen cover-space strata (R1..R7, S1..S9)
/// plus the relation data combined by the checks. Loaded from the audited
/// JSON table shipped with the repository.
struct PushforwardTable {
  std::map<std::string, StrataVector> images;
  std::map<std::string, int> stabilizers;  // informational only
  std::map<std::string, Rational> cover_lhs;   // R-side coefficients
  std::map<std::string, Rational> cover_rhs;   // S-side coefficients
  StrataVector pushforward_relation;           // expected image relation
  StrataVector divisor_relation;               // boundary-divisor relation
  StrataVector getzler_relation;
};

/// Parses and validates a table document. Throws DataError when labels are
/// missing, an S2/S3/S8/S9 image fails to vanish, or an image leaves its
/// permitted span (R images: elliptic-component strata; S images: nodal
/// boundary strata).
PushforwardTable load_tables_from_json(const std::string& text);

/// The table embedded at build time from data/strata_pushforward.json.
PushforwardTable load_tables();

/// Verbatim JSON text the embedded table was built from.
const char* embedded_tables_json();

/// Image of the cover-space relation:  sum_i lhs_i * image(R_i)
/// - sum_j rhs_j * image(S_j), exact.
StrataVector relation_image(const PushforwardTable& table);

/// relation_image equals minus the nine-term push-forward relation; the sign
/// is a fixed, documented convention of how the source relation is oriented.
bool check_pushforward_relation(const PushforwardTable& table);

/// pushforward_relation - 2 * divisor_relation == 4 * getzler_relation.
bool check_getzler_combination(const PushforwardTable& table);

}  // namespace gw
