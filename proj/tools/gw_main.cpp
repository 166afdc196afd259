#include <CLI11.hpp>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <vector>

#include "gw/errors.hpp"
#include "gw/identity.hpp"
#include "gw/pipeline.hpp"
#include "gw/strata.hpp"

namespace {

using namespace gw;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kSolverInconsistency = 2,
  kRouteDisagreement = 3,
  kCacheError = 4,
  kUsage = 64,
};

std::string first_term(const BigradedSeries& s) {
  const auto& [key, c] = *s.terms().begin();
  return c.str() + " at (d=" + std::to_string(key.d) + ", k=" + std::to_string(key.k) + ")";
}

void print_table(const InvariantTable& table, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (int d = 1; d <= table.d_max(); ++d)
      values.push_back({{"d", d}, {"N", table.at(d).str()}});
    const nlohmann::ordered_json doc = {{"kind", to_string(table.kind)},
                                        {"d_max", table.d_max()},
                                        {"values", values},
                                        {"route", table.route}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "d,N\n";
    for (int d = 1; d <= table.d_max(); ++d)
      std::cout << d << "," << table.at(d).str() << "\n";
  } else {
    std::cout << std::setw(3) << "d"
              << "  N_d\n";
    for (int d = 1; d <= table.d_max(); ++d)
      std::cout << std::setw(3) << d << "  " << table.at(d).str() << "\n";
  }
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> run_wdvv_checks(int d_max) {
  std::vector<CheckResult> checks;
  try {
    const InvariantTable table = solve_wdvv(d_max);
    const BigradedSeries gamma = gamma_series(table, d_max);
    const BigradedSeries residual = wdvv_residual(gamma);
    checks.push_back({"wdvv-residual",
                      residual.is_zero(),
                      residual.is_zero() ? "empty through d = " + std::to_string(d_max)
                                         : "first nonzero " + first_term(residual)});
    const bool scaling = check_gamma_scaling(gamma);
    checks.push_back({"gamma-scaling", scaling,
                      scaling ? "holds through d = " + std::to_string(d_max) : "violated"});
  } catch (const Error& e) {
    checks.push_back({"wdvv-residual", false, e.what()});
  }
  return checks;
}

std::vector<CheckResult> run_pde_checks(int d_max) {
  std::vector<CheckResult> checks;
  try {
    const InvariantTable rational = solve_wdvv(d_max);
    const InvariantTable elliptic = ehx_table(rational, d_max);
    const BigradedSeries gamma = gamma_series(rational, d_max);
    const EllipticPotential potential = EllipticPotential::from_table(elliptic, d_max);
    const BigradedSeries residual = getzler_pde_residual(gamma, potential);
    checks.push_back({"elliptic-pde-residual",
                      residual.is_zero(),
                      residual.is_zero() ? "empty through d = " + std::to_string(d_max)
                                         : "first nonzero " + first_term(residual)});
    const bool scaling = check_tilde_scaling(potential.tilde);
    checks.push_back({"elliptic-scaling", scaling,
                      scaling ? "holds through d = " + std::to_string(d_max) : "violated"});
  } catch (const Error& e) {
    checks.push_back({"elliptic-pde-residual", false, e.what()});
  }
  return checks;
}

std::vector<CheckResult> run_identity_checks(int trials, std::uint64_t seed) {
  std::vector<CheckResult> checks;
  const IdentityContext ctx = default_identity_context();
  const VerificationReport report = verify_fform(ctx);
  if (report.success) {
    checks.push_back({"jet-identity", true,
                      "kappa = " + report.kappa.str() + ", q = " + std::to_string(report.q_power) +
                          (report.q_on_required ? " (on required side)" : " (on rhs side)")});
    PointWitness witness;
    const bool points_ok = random_point_check(ctx, report, trials, seed, &witness);
    checks.push_back({"jet-identity-points", points_ok,
                      points_ok ? std::to_string(trials) + " seeded trials, seed " +
                                      std::to_string(seed)
                                : "witness at trial " + std::to_string(witness.trial) + ": lhs " +
                                      witness.lhs.str() + " != rhs " + witness.rhs.str()});
  } else {
    checks.push_back({"jet-identity", false, report.detail});
  }
  return checks;
}

std::vector<CheckResult> run_strata_checks() {
  std::vector<CheckResult> checks;
  try {
    const PushforwardTable table = load_tables();
    checks.push_back({"strata-tables", true, "16 images loaded and validated"});
    const bool relation = check_pushforward_relation(table);
    checks.push_back({"strata-pushforward-relation", relation,
                      relation ? "image + relation = 0"
                               : "image " + to_string(relation_image(table))});
    const bool getzler = check_getzler_combination(table);
    checks.push_back(
        {"strata-getzler-combination", getzler,
         getzler ? "relation - 2*divisor = 4*getzler"
                 : "difference " + to_string(table.pushforward_relation -
                                             Rational(2) * table.divisor_relation -
                                             Rational(4) * table.getzler_relation)});
  } catch (const DataError& e) {
    checks.push_back({"strata-tables", false, e.what()});
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for genus 0 and 1 curve counts in the plane"};
  app.require_subcommand(1);

  int d_max = 10;
  std::string format = "table";
  std::string cache_path;
  std::string route = "all";
  std::string target;
  int trials = 20;
  std::uint64_t seed = 12345;

  auto* rational_cmd =
      app.add_subcommand("rational", "genus-0 counts from the associativity equation");
  rational_cmd->add_option("--dmax", d_max, "largest degree computed")
      ->check(CLI::Range(1, 64));
  rational_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  rational_cmd->add_option("--cache", cache_path, "JSON cache file");

  auto* elliptic_cmd = app.add_subcommand("elliptic", "genus-1 counts by independent routes");
  elliptic_cmd->add_option("--route", route, "ehx, integral, pde, or all")
      ->check(CLI::IsMember({"ehx", "integral", "pde", "all"}));
  elliptic_cmd->add_option("--dmax", d_max, "largest degree computed")
      ->check(CLI::Range(1, 64));
  elliptic_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  elliptic_cmd->add_option("--cache", cache_path, "JSON cache file");

  auto* verify_cmd = app.add_subcommand("verify", "run consistency checks");
  verify_cmd->add_option("target", target, "wdvv, pde, identity, strata, or all")
      ->required()
      ->check(CLI::IsMember({"wdvv", "pde", "identity", "strata", "all"}));
  verify_cmd->add_option("--dmax", d_max, "largest degree checked")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--trials", trials, "random evaluation trials")
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--seed", seed, "master seed for the trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (rational_cmd->parsed() || elliptic_cmd->parsed()) {
      const CachedComputation result =
          rational_cmd->parsed() ? rational_with_cache(d_max, cache_path)
                                 : elliptic_with_cache(route, d_max, cache_path);
      if (!result.cache_message.empty())
        std::cerr << "warning: " << result.cache_message << "\n";
      print_table(result.table, format);
      return result.cache_error ? kCacheError : kOk;
    }

    std::vector<CheckResult> checks;
    auto extend = [&checks](std::vector<CheckResult> more) {
      for (auto& check : more) checks.push_back(std::move(check));
    };
    if (target == "wdvv" || target == "all") extend(run_wdvv_checks(d_max));
    if (target == "pde" || target == "all") extend(run_pde_checks(d_max));
    if (target == "identity" || target == "all") extend(run_identity_checks(trials, seed));
    if (target == "strata" || target == "all") extend(run_strata_checks());

    bool all_pass = true;
    for (const auto& check : checks) {
      all_pass = all_pass && check.pass;
      std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << ": " << check.detail
                << "\n";
    }
    return all_pass ? kOk : kVerificationFailure;
  } catch (const RouteMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRouteDisagreement;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverInconsistency;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverInconsistency;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverInconsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverInconsistency;
  }
}
