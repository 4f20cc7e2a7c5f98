#pragma once

#include "qslab/verify/verify.hpp"

namespace qslab::verify {

/// Canned transfer runs for the equivalence and obstruction fixtures; the
/// CLI and the acceptance suite share these definitions.

TransferPlan default_transfer_plan(int max_k = 3, int max_l = 3, int max_m = 3,
                                   std::uint64_t seed = 1);

/// Cusp domain -> one-sided strip along the blended diffeomorphism, both
/// directions, with a compact box bump and a super-decaying band profile
/// on each side.
TransferEvidence run_cusp_transfer(const std::vector<double>& poly, const TransferPlan& plan);

/// Unit intervals -> Cantor gaps at the given depth.
TransferEvidence run_cantor_transfer(int depth, const TransferPlan& plan);

/// N (unit intervals) -> N_b with b(n) = 1/n^2, prefix n <= n_max.
TransferEvidence run_interval_transfer(int n_max, const TransferPlan& plan);

/// log : (0, inf) -> R with the rapid-decay tail fixture; the forward
/// pullback breaks Schwartz decay and the run reports `refuted`.
TransferEvidence run_explog_transfer(const TransferPlan& plan);

}  // namespace qslab::verify
