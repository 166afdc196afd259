#include "gw/pipeline.hpp"

#include <stdexcept>

#include "gw/cache.hpp"
#include "gw/errors.hpp"

namespace gw {

namespace {

constexpr const char* kSeedNote = "N1=1";

// Valid cache covering the request, if any; corrupt caches are reported and
// ignored, never overwritten.
std::optional<CachedTable> try_read(const std::string& path, InvariantKind kind,
                                    const std::string& route, CachedComputation& result) {
  if (path.empty()) return std::nullopt;
  try {
    auto cached = read_cache(path);
    if (!cached) return std::nullopt;
    if (cached->table.kind != kind || cached->table.route != route) {
      result.cache_message = "cache at " + path + " holds " +
                             to_string(cached->table.kind) + "/" + cached->table.route +
                             ", recomputing";
      return std::nullopt;
    }
    return cached;
  } catch (const DataError& e) {
    result.cache_error = true;
    result.cache_message = e.what();
    return std::nullopt;
  }
}

void maybe_write(const std::string& path, const CachedComputation& result) {
  if (path.empty() || result.cache_error) return;
  write_cache(path, CachedTable{result.table, kSeedNote});
}

InvariantTable truncated(const InvariantTable& table, int d_max) {
  InvariantTable out = table;
  out.values.resize(static_cast<size_t>(d_max));
  return out;
}

}  // namespace

CachedComputation rational_with_cache(int d_max, const std::string& cache_path) {
  if (d_max < 1) throw std::invalid_argument("rational_with_cache: d_max must be >= 1");
  CachedComputation result;
  const auto cached = try_read(cache_path, InvariantKind::rational, "wdvv", result);

  if (cached && cached->table.d_max() >= d_max) {
    result.table = truncated(cached->table, d_max);
    result.used_cache = true;
    return result;
  }

  SolveStats stats;
  const std::vector<Rational> warm = cached ? cached->table.values : std::vector<Rational>{};
  result.table = solve_wdvv(d_max, &stats, warm);
  result.fresh_degrees = stats.degrees_computed;
  result.used_cache = cached.has_value();
  maybe_write(cache_path, result);
  return result;
}

CachedComputation elliptic_with_cache(const std::string& route, int d_max,
                                      const std::string& cache_path) {
  if (d_max < 1) throw std::invalid_argument("elliptic_with_cache: d_max must be >= 1");
  if (route != "ehx" && route != "integral" && route != "pde" && route != "all")
    throw std::invalid_argument("elliptic_with_cache: unknown route '" + route + "'");

  CachedComputation result;
  const auto cached = try_read(cache_path, InvariantKind::elliptic, route, result);
  if (cached && cached->table.d_max() >= d_max) {
    result.table = truncated(cached->table, d_max);
    result.used_cache = true;
    return result;
  }

  const InvariantTable rational = solve_wdvv(d_max + 2);
  const BigradedSeries gamma = gamma_series(rational, d_max + 2);

  if (route == "ehx") {
    result.table = ehx_table(rational, d_max);
  } else if (route == "integral") {
    result.table = elliptic_via_integral(gamma, d_max);
  } else if (route == "pde") {
    result.table = elliptic_via_pde(gamma, d_max);
  } else {
    const InvariantTable via_ehx = ehx_table(rational, d_max);
    const InvariantTable via_integral = elliptic_via_integral(gamma, d_max);
    const InvariantTable via_pde = elliptic_via_pde(gamma, d_max);
    for (const auto* other : {&via_integral, &via_pde}) {
      if (auto diff = first_route_difference(via_ehx, *other))
        throw RouteMismatchError("elliptic routes disagree at d = " +
                                     std::to_string(diff->degree) + ": " + diff->route_a +
                                     " gives " + diff->value_a.str() + ", " + diff->route_b +
                                     " gives " + diff->value_b.str(),
                                 diff->degree);
    }
    result.table = via_ehx;
    result.table.route = "all";
  }
  result.fresh_degrees = d_max;
  maybe_write(cache_path, result);
  return result;
}

}  // namespace gw
