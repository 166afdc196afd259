#pragma once

#include <string>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

enum class InvariantKind { rational, elliptic };

const char* to_string(InvariantKind kind);

/// Sequence d -> N_d for 1 <= d <= d_max, with the producing route recorded.
struct InvariantTable {
  InvariantKind kind = InvariantKind::rational;
  std::vector<Rational> values;  // values[d-1] = N_d
  std::string route;

  int d_max() const { return static_cast<int>(values.size()); }

  /// 1-based degree access; throws std::out_of_range.
  const Rational& at(int d) const;
};

/// Checks the integrality constraints of a finished table: rational entries
/// are positive integers; elliptic entries are nonnegative integers with
/// N_1 = N_2 = 0. Throws SolverError naming the first offending degree.
void validate(const InvariantTable& table);

}  // namespace gw
