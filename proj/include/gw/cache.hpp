#pragma once

#include <optional>
#include <string>

#include "gw/invariants.hpp"

namespace gw {

inline constexpr int kCacheFormatVersion = 1;

/// On-disk invariant table: versioned JSON with values as decimal strings
/// (the counts overflow 64-bit integers quickly).
struct CachedTable {
  InvariantTable table;
  std::string seed_assumptions;
};

/// Missing file -> nullopt. Unreadable, unparsable, wrong version, or
/// malformed values -> DataError.
std::optional<CachedTable> read_cache(const std::string& path);

void write_cache(const std::string& path, const CachedTable& cached);

}  // namespace gw
