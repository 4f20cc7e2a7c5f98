#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qslab/maps/cusp_map.hpp"
#include "qslab/maps/line_map.hpp"
#include "qslab/maps/plane_map.hpp"
#include "qslab/schwartz/sweep.hpp"

namespace qslab::verify {

using num::SignedLog;
using schwartz::SamplePlan;
using schwartz::Trend;

// ---------------------------------------------------------------------------
// Distance distortion (Holder) fits
// ---------------------------------------------------------------------------

struct HolderFit {
    double alpha = 0.0;  // fitted exponent, log-log OLS slope
    double C = 0.0;      // fitted envelope constant exp(intercept)
    double residual = 0.0;  // max log-excess over the fitted envelope
    double r2 = 0.0;
    std::size_t samples = 0;
    bool violation = false;  // residual beyond tolerance: no envelope fits
    std::string direction = "forward";
};

/// Log-log regression of d(phi(x), bd V) against d(x, bd U) over
/// boundary-layered samples with d <= d_cut (the lemma's content is
/// boundary-local; interior points pollute the exponent).
HolderFit fit_holder_pairs(const std::vector<std::array<double, 2>>& dist_pairs,
                           double violation_tol_log = 2.302585092994046 /* log 10 */);

HolderFit check_holder_distortion(const maps::PlaneMap& map, const geom::DomainSpec& u_domain,
                                  const geom::DistanceOracle& u_oracle,
                                  const geom::DistanceOracle& v_oracle, const SamplePlan& plan,
                                  double d_cut);

HolderFit check_holder_distortion_line(const maps::LineMap& map,
                                       const geom::DomainSpec& u_domain,
                                       const geom::DistanceOracle& u_oracle,
                                       const geom::DistanceOracle& v_oracle,
                                       const SamplePlan& plan, double d_cut);

// ---------------------------------------------------------------------------
// Conformal derivative growth at the boundary
// ---------------------------------------------------------------------------

struct BlowupReport {
    int order = 1;
    std::vector<SignedLog> trend;  // sup of |phi^(n)| d^n per refinement level
    SignedLog sup;
    geom::Point2 argmax{0.0, 0.0};
    Trend classification = Trend::Inconclusive;
    bool pass = false;  // stable trend
};

/// Sampled supremum of |phi^(n)(z)| * d(z, bd U)^n with refinement trend;
/// the map must provide exact complex derivatives (conformal families).
BlowupReport check_derivative_blowup(const maps::PlaneMap& map, const geom::DomainSpec& u_domain,
                                     const geom::DistanceOracle& u_oracle, int order,
                                     const SamplePlan& plan);

// ---------------------------------------------------------------------------
// Bi-Holder (Mori) exponent fits
// ---------------------------------------------------------------------------

struct MoriFit {
    double alpha_forward = 0.0;
    double alpha_inverse = 0.0;
    double r2_forward = 0.0;
    double r2_inverse = 0.0;
    double residual_forward = 0.0;
    double residual_inverse = 0.0;
    bool violation = false;
};

/// Fits |phi(x) - phi(y)| <= C |x - y|^alpha over the given sample pairs,
/// in both directions (inverse pairs are the mapped pairs).
MoriFit mori_exponent(const maps::PlaneMap& map,
                      const std::vector<std::array<geom::Complex, 2>>& pairs,
                      double violation_tol_log = 2.302585092994046);

// ---------------------------------------------------------------------------
// Transfer evidence
// ---------------------------------------------------------------------------

enum class Verdict { Supported, Refuted, Inconclusive };
std::string verdict_name(Verdict v);

struct TrendRecord {
    std::string function;
    std::string direction;  // "forward" (pullback onto U) or "inverse"
    std::string kind;       // "seminorm" or "decay"
    std::vector<int> k;     // derivative multi-index (empty for decay)
    std::vector<int> l;     // monomial multi-index (empty for decay)
    int m = -1;             // decay order (-1 for seminorm)
    std::vector<SignedLog> values;
    Trend trend = Trend::Inconclusive;
};

struct TransferEvidence {
    std::string map_id;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<TrendRecord> records;
    std::uint64_t seed = 0;
};

struct TransferPlan {
    SamplePlan grid;
    int max_k = 3;  // total derivative order
    int max_l = 3;  // total monomial order
    int max_m = 3;  // decay orders 0..max_m
};

/// Runs every (k, l) seminorm and every decay order over the pullbacks of
/// suite_v along the map (forward direction, functions live on V) и of
/// suite_u along the inverse, classifying each refinement trend. Supported
/// requires every trend stable; refuted requires a sustained geometric
/// growth witness.
TransferEvidence positive_transfer(maps::PlaneMapPtr map, const geom::DomainSpec& u_domain,
                                   const geom::DomainSpec& v_domain,
                                   const std::vector<schwartz::TestFunction2>& suite_v,
                                   const std::vector<schwartz::TestFunction2>& suite_u,
                                   const TransferPlan& plan, const std::string& map_id);

TransferEvidence positive_transfer_line(maps::LineMapPtr map, const geom::DomainSpec& u_domain,
                                        const geom::DomainSpec& v_domain,
                                        const std::vector<schwartz::TestFunction1>& suite_v,
                                        const std::vector<schwartz::TestFunction1>& suite_u,
                                        const TransferPlan& plan, const std::string& map_id);

// ---------------------------------------------------------------------------
// Obstruction certificates
// ---------------------------------------------------------------------------

struct ObstructionEntry {
    int n = 0;
    SignedLog margin;            // nazarov: log of bound ratio, as sign/log pair
    double log_ratio = 0.0;      // intervals: log(1/a(n)) along the subsequence
    double witness_x = 0.0;      // strip crossing x = n + 1/2, or m(n) + 1/2
    double log_disc_dist = 0.0;  // nazarov: log of C^-1 e^-n
    double log_gamma_bound = 0.0;   // nazarov: log of e^{-C e^{n+1}}
    double strip_loglog = 0.0;      // nazarov: log(-log strip height) = n^2
};

struct ObstructionCertificate {
    std::string scenario;  // "nazarov" or "intervals"
    // nazarov parameters
    double C = 0.0;
    int n_lo = 0, n_hi = 0;
    // interval parameters
    std::string a_name;
    std::vector<int> bijection;  // m(1..n_max), 1-based
    std::vector<ObstructionEntry> entries;
    int minimal_positive_n = -1;
    int first_ratio_above_1e6 = -1;
    std::string divergence;  // "superpolynomial" | "polynomial"
    bool margins_monotone = false;
};

/// Effective version of the chain-of-discs contradiction: for an assumed
/// seminorm bound C, the certified margin log(e^{-C e^{n+1}} / e^{-e^{n^2}})
/// = e^{n^2} - C e^{n+1} per index, the minimal index where it turns
/// positive, and monotonicity over the range. All arithmetic stays in log
/// space (the margins themselves are stored as sign + log of magnitude, so
/// the range reaches n = 40 with finite fields).
ObstructionCertificate nazarov_obstruction(double C, int n_lo, int n_hi);

/// Pigeonhole certificate for countable interval unions: indices with
/// m(n) <= n (never empty for a genuine permutation of the prefix),
/// witness ratios 1/a(n) in log scale, and the divergence verdict.
ObstructionCertificate interval_obstruction(const geom::LengthSpec& a,
                                            const std::vector<int>& bijection,
                                            const maps::LineMap* witness_map = nullptr);

/// Recompute a certificate from its own stored parameters (replay).
ObstructionCertificate replay(const ObstructionCertificate& cert);

}  // namespace qslab::verify
