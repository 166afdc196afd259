#pragma once

#include "gw/invariants.hpp"
#include "gw/series.hpp"

namespace gw {

/// Degree-d curve counts contribute at key (d, 3d-1) in the genus-0 potential.
inline int gamma_key_k(int d) { return 3 * d - 1; }

/// Genus-0 potential of the table: coefficient N_d / (3d-1)! at (d, 3d-1).
/// Requires the table to cover 1..truncation.
BigradedSeries gamma_series(const InvariantTable& table, int truncation);

/// Associativity residual  Psi = G_222 - G_112^2 + G_111 * G_122.
/// Empty through the truncation exactly when the potential is consistent.
BigradedSeries wdvv_residual(const BigradedSeries& gamma);

/// Structural grading identity  G_1 = (y2/3) G_2 + G/3; holds for any series
/// supported only at keys (d, 3d-1).
bool check_gamma_scaling(const BigradedSeries& gamma);

struct SolveStats {
  int degrees_computed = 0;  // degrees solved fresh (not taken from warm start)
  int probes = 0;            // residual evaluations performed
};

/// Solves the associativity equation order-by-order from the seed N_1 = 1,
/// the single external input. Per degree the residual coefficient at
/// (d, 3d-4) is affine in the unknown N_d; it is probed at N_d in {0, 1} and
/// the linear equation solved exactly. A warm-start prefix of already-known
/// values may be supplied. Throws SolverError on a degenerate probe and
/// ShapeError if a residual ever has support off k = 3d-4.
InvariantTable solve_wdvv(int d_max, SolveStats* stats = nullptr,
                          const std::vector<Rational>& warm_start = {});

}  // namespace gw
