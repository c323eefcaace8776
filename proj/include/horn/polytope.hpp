#pragma once

#include <vector>

#include "horn/rng.hpp"
#include "horn/spectrum.hpp"
#include "horn/triples.hpp"

namespace horn {

enum class PartitionKind { Interlaced, Custom };

/// Split of a 2p-spectrum into two p-spectra whose multisets union back to
/// the input.
struct PartitionPair {
    Spectrum sigma;
    Spectrum minus;
    Spectrum plus;
    PartitionKind kind = PartitionKind::Custom;

    /// minus = odd slots (sigma_1, sigma_3, ...), plus = even slots.
    static PartitionPair interlaced(const Spectrum& sigma);

    /// minus = entries at the given 1-based positions (p of them, strictly
    /// increasing), plus = the rest. Detects the interlaced pattern.
    static PartitionPair from_index_split(const Spectrum& sigma,
                                          const std::vector<int>& minus_indices);
};

struct PolytopeInequality {
    HornTriple triple;
    double alpha_sum = 0.0;
    double beta_sum = 0.0;
};

/// Half-space description of a Horn polytope: the trace hyperplane plus one
/// inequality per admissible triple of rank r < p.
struct PolytopeSpec {
    int p = 0;  // length of member spectra
    double trace_sum = 0.0;
    double scale = 1.0;  // combined one-norm of the generating spectra, floored at 1
    std::vector<PolytopeInequality> inequalities;
};

/// Default membership tolerances: 1e-9 * max(1, |trace sum|) on the trace
/// residual and 1e-9 * scale on inequality slack.
double default_trace_tolerance(const PolytopeSpec& spec);
double default_slack_tolerance(const PolytopeSpec& spec);

struct MembershipResult {
    double trace_residual = 0.0;
    double min_slack = 0.0;  // +infinity when there are no inequalities

    bool within(double trace_tol, double slack_tol) const;
};

/// Horn polytope of spectra of a + b with spec(a) = partition.minus,
/// spec(b) = partition.plus. Lives in dimension p = |sigma| / 2.
PolytopeSpec build_P1(const Spectrum& sigma, const PartitionPair& partition);

/// Horn polytope of spectra of A + B with spec(A) = spec(B) = sigma, in
/// dimension 2p.
PolytopeSpec build_P(const Spectrum& sigma);

MembershipResult membership_slack(const PolytopeSpec& spec, const Spectrum& nu);

/// Slack of every inequality in order (for tightness histograms).
std::vector<double> inequality_slacks(const PolytopeSpec& spec, const Spectrum& nu);

MembershipResult check_P_membership(const Spectrum& sigma, const Spectrum& gamma_hat);

/// Orthogonal projection onto the doubled diagonal: consecutive pair
/// averages.
Spectrum project_to_delta(const Spectrum& gamma_hat);

/// Sum_k (gamma_{2k-1} - gamma_{2k})^2 < 2 tol^2.
bool is_hermitian_spectrum(const Spectrum& gamma_hat, double tol);

struct PartitionComparison {
    long long samples = 0;
    long long inside = 0;
    double fraction_inside = 0.0;
    double max_violation = 0.0;  // max over samples of max(0, -min_slack)
    double worst_trace_residual = 0.0;
};

/// Samples spectra of a + rho^{-1} b rho with spec(a) = custom.minus,
/// spec(b) = custom.plus, rho uniform-ish in SO(p), and scores them against
/// the interlaced-partition polytope at default tolerances.
PartitionComparison compare_partitions(const Spectrum& sigma, const PartitionPair& custom,
                                       long long samples, Rng& rng);

}  // namespace horn
