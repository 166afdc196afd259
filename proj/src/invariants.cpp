#include "gw/invariants.hpp"

#include <stdexcept>

#include "gw/errors.hpp"

namespace gw {

const char* to_string(InvariantKind kind) {
  return kind == InvariantKind::rational ? "rational" : "elliptic";
}

const Rational& InvariantTable::at(int d) const {
  if (d < 1 || d > d_max())
    throw std::out_of_range("InvariantTable: degree " + std::to_string(d) +
                            " outside 1.." + std::to_string(d_max()));
  return values[static_cast<size_t>(d - 1)];
}

void validate(const InvariantTable& table) {
  for (int d = 1; d <= table.d_max(); ++d) {
    const Rational& v = table.at(d);
    const bool ok = table.kind == InvariantKind::rational
                        ? (v.is_integer() && v.sign() > 0)
                        : (v.is_integer() && v.sign() >= 0 && (d > 2 || v.is_zero()));
    if (!ok)
      throw SolverError(std::string(to_string(table.kind)) + " table invalid at d = " +
                        std::to_string(d) + ": N_d = " + v.str());
  }
}

}  // namespace gw
