#include "gw/cache.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "gw/errors.hpp"

namespace gw {

namespace {
using nlohmann::json;
}

std::optional<CachedTable> read_cache(const std::string& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw DataError("cache: cannot open " + path);

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError("cache: invalid JSON in " + path + ": " + e.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kCacheFormatVersion)
      throw DataError("cache: unsupported format_version in " + path);
    CachedTable cached;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "rational")
      cached.table.kind = InvariantKind::rational;
    else if (kind == "elliptic")
      cached.table.kind = InvariantKind::elliptic;
    else
      throw DataError("cache: unknown kind '" + kind + "' in " + path);
    cached.table.route = doc.at("route").get<std::string>();
    cached.seed_assumptions = doc.at("seed_assumptions").get<std::string>();
    for (const auto& value : doc.at("values"))
      cached.table.values.push_back(Rational::from_string(value.get<std::string>()));
    return cached;
  } catch (const json::exception& e) {
    throw DataError("cache: malformed document in " + path + ": " + e.what());
  }
}

void write_cache(const std::string& path, const CachedTable& cached) {
  json values = json::array();
  for (const auto& v : cached.table.values) values.push_back(v.str());
  const json doc = {{"format_version", kCacheFormatVersion},
                    {"kind", to_string(cached.table.kind)},
                    {"route", cached.table.route},
                    {"seed_assumptions", cached.seed_assumptions},
                    {"values", values}};
  std::ofstream out(path);
  if (!out) throw DataError("cache: cannot write " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace gw
