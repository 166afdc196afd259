#pragma once

#include <string>

#include "gw/elliptic_invariants.hpp"
#include "gw/invariants.hpp"
#include "gw/rational_invariants.hpp"

namespace gw {

/// Result of a table computation that may be served from a cache file.
struct CachedComputation {
  InvariantTable table;
  int fresh_degrees = 0;   // degrees actually recomputed this run
  bool used_cache = false;
  bool cache_error = false;  // cache was unreadable and ignored
  std::string cache_message;
};

/// Genus-0 table through d_max. A valid cache covering d_max serves the
/// result outright; a shorter one warm-starts the solver. cache_path may be
/// empty (no caching). A corrupt cache is ignored, reported in the result,
/// and left untouched.
CachedComputation rational_with_cache(int d_max, const std::string& cache_path);

/// Genus-1 table through d_max by the requested route ("ehx", "integral",
/// "pde", or "all"). Route "all" runs the three routes and throws
/// RouteMismatchError naming the first differing degree if they disagree.
CachedComputation elliptic_with_cache(const std::string& route, int d_max,
                                      const std::string& cache_path);

}  // namespace gw
