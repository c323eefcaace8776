#include "horn/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "horn/eigen.hpp"
#include "horn/sampling.hpp"

namespace horn {

namespace {

void require_even(const Spectrum& sigma) {
    if (sigma.size() == 0 || sigma.size() % 2 != 0)
        throw std::invalid_argument("spectrum must have positive even length");
}

bool is_interlaced_split(const Spectrum& sigma, const Spectrum& minus, const Spectrum& plus) {
    const std::size_t p = sigma.size() / 2;
    for (std::size_t k = 0; k < p; ++k) {
        if (minus[k] != sigma[2 * k] || plus[k] != sigma[2 * k + 1]) return false;
    }
    return true;
}

void validate_partition(const Spectrum& sigma, const PartitionPair& partition) {
    require_even(sigma);
    const std::size_t p = sigma.size() / 2;
    if (partition.sigma != sigma) throw std::invalid_argument("partition built for a different spectrum");
    if (partition.minus.size() != p || partition.plus.size() != p)
        throw std::invalid_argument("partition halves must each have half the spectrum length");
    std::vector<double> merged;
    merged.reserve(sigma.size());
    merged.insert(merged.end(), partition.minus.values().begin(), partition.minus.values().end());
    merged.insert(merged.end(), partition.plus.values().begin(), partition.plus.values().end());
    std::sort(merged.begin(), merged.end(), std::greater<double>());
    if (merged != sigma.values())
        throw std::invalid_argument("partition halves do not recombine to the spectrum");
    if (partition.kind == PartitionKind::Interlaced &&
        !is_interlaced_split(sigma, partition.minus, partition.plus))
        throw std::invalid_argument("partition tagged interlaced but slots do not interlace");
}

PolytopeSpec build_from_halves(const Spectrum& trace_source, const Spectrum& minus,
                               const Spectrum& plus, int p, double trace_factor) {
    PolytopeSpec spec;
    spec.p = p;
    spec.trace_sum = trace_factor * trace_source.sum();
    spec.scale = std::max(1.0, minus.one_norm() + plus.one_norm());
    const TripleTable table = generate_T(p);
    for (int r = 1; r < p; ++r) {
        for (const HornTriple& t : table.rank(r)) {
            PolytopeInequality ineq;
            ineq.triple = t;
            for (int i : t.i.elements) ineq.alpha_sum += minus[static_cast<std::size_t>(i - 1)];
            for (int j : t.j.elements) ineq.beta_sum += plus[static_cast<std::size_t>(j - 1)];
            spec.inequalities.push_back(std::move(ineq));
        }
    }
    return spec;
}

}  // namespace

PartitionPair PartitionPair::interlaced(const Spectrum& sigma) {
    require_even(sigma);
    const std::size_t p = sigma.size() / 2;
    std::vector<double> minus(p), plus(p);
    for (std::size_t k = 0; k < p; ++k) {
        minus[k] = sigma[2 * k];
        plus[k] = sigma[2 * k + 1];
    }
    return PartitionPair{sigma, Spectrum(std::move(minus)), Spectrum(std::move(plus)),
                         PartitionKind::Interlaced};
}

PartitionPair PartitionPair::from_index_split(const Spectrum& sigma,
                                              const std::vector<int>& minus_indices) {
    require_even(sigma);
    const std::size_t p = sigma.size() / 2;
    if (minus_indices.size() != p)
        throw std::invalid_argument("index split must select exactly half the entries");
    std::vector<bool> taken(sigma.size(), false);
    std::vector<double> minus;
    minus.reserve(p);
    int prev = 0;
    for (int idx : minus_indices) {
        if (idx <= prev || idx > static_cast<int>(sigma.size()))
            throw std::invalid_argument("split indices must be strictly increasing and in range");
        prev = idx;
        taken[static_cast<std::size_t>(idx - 1)] = true;
        minus.push_back(sigma[static_cast<std::size_t>(idx - 1)]);
    }
    std::vector<double> plus;
    plus.reserve(p);
    for (std::size_t k = 0; k < sigma.size(); ++k)
        if (!taken[k]) plus.push_back(sigma[k]);

    PartitionPair pair{sigma, Spectrum(std::move(minus)), Spectrum(std::move(plus)),
                       PartitionKind::Custom};
    if (is_interlaced_split(sigma, pair.minus, pair.plus)) pair.kind = PartitionKind::Interlaced;
    return pair;
}

double default_trace_tolerance(const PolytopeSpec& spec) {
    return 1e-9 * std::max(1.0, std::abs(spec.trace_sum));
}

double default_slack_tolerance(const PolytopeSpec& spec) { return 1e-9 * spec.scale; }

bool MembershipResult::within(double trace_tol, double slack_tol) const {
    return std::abs(trace_residual) <= trace_tol && min_slack >= -slack_tol;
}

PolytopeSpec build_P1(const Spectrum& sigma, const PartitionPair& partition) {
    validate_partition(sigma, partition);
    return build_from_halves(sigma, partition.minus, partition.plus,
                             static_cast<int>(sigma.size()) / 2, 1.0);
}

PolytopeSpec build_P(const Spectrum& sigma) {
    require_even(sigma);
    return build_from_halves(sigma, sigma, sigma, static_cast<int>(sigma.size()), 2.0);
}

MembershipResult membership_slack(const PolytopeSpec& spec, const Spectrum& nu) {
    if (nu.size() != static_cast<std::size_t>(spec.p))
        throw std::invalid_argument("spectrum length does not match the polytope dimension");
    MembershipResult result;
    result.trace_residual = nu.sum() - spec.trace_sum;
    result.min_slack = std::numeric_limits<double>::infinity();
    for (const PolytopeInequality& ineq : spec.inequalities) {
        double gamma_sum = 0.0;
        for (int k : ineq.triple.k.elements) gamma_sum += nu[static_cast<std::size_t>(k - 1)];
        result.min_slack = std::min(result.min_slack, ineq.alpha_sum + ineq.beta_sum - gamma_sum);
    }
    return result;
}

std::vector<double> inequality_slacks(const PolytopeSpec& spec, const Spectrum& nu) {
    if (nu.size() != static_cast<std::size_t>(spec.p))
        throw std::invalid_argument("spectrum length does not match the polytope dimension");
    std::vector<double> slacks;
    slacks.reserve(spec.inequalities.size());
    for (const PolytopeInequality& ineq : spec.inequalities) {
        double gamma_sum = 0.0;
        for (int k : ineq.triple.k.elements) gamma_sum += nu[static_cast<std::size_t>(k - 1)];
        slacks.push_back(ineq.alpha_sum + ineq.beta_sum - gamma_sum);
    }
    return slacks;
}

MembershipResult check_P_membership(const Spectrum& sigma, const Spectrum& gamma_hat) {
    if (gamma_hat.size() != sigma.size())
        throw std::invalid_argument("candidate spectrum must match the generating spectrum length");
    return membership_slack(build_P(sigma), gamma_hat);
}

Spectrum project_to_delta(const Spectrum& gamma_hat) {
    if (gamma_hat.size() % 2 != 0)
        throw std::invalid_argument("projection requires an even-length spectrum");
    std::vector<double> nu(gamma_hat.size() / 2);
    for (std::size_t k = 0; k < nu.size(); ++k)
        nu[k] = 0.5 * (gamma_hat[2 * k] + gamma_hat[2 * k + 1]);
    return Spectrum(std::move(nu));
}

bool is_hermitian_spectrum(const Spectrum& gamma_hat, double tol) {
    if (gamma_hat.size() % 2 != 0)
        throw std::invalid_argument("pairing criterion requires an even-length spectrum");
    double sum = 0.0;
    for (std::size_t k = 0; 2 * k + 1 < gamma_hat.size(); ++k) {
        const double gap = gamma_hat[2 * k] - gamma_hat[2 * k + 1];
        sum += gap * gap;
    }
    return sum < 2.0 * tol * tol;
}

PartitionComparison compare_partitions(const Spectrum& sigma, const PartitionPair& custom,
                                       long long samples, Rng& rng) {
    validate_partition(sigma, custom);
    if (samples < 1) throw std::invalid_argument("at least one sample required");
    const PolytopeSpec interlaced = build_P1(sigma, PartitionPair::interlaced(sigma));
    const double trace_tol = default_trace_tolerance(interlaced);
    const double slack_tol = default_slack_tolerance(interlaced);
    const int p = static_cast<int>(sigma.size()) / 2;

    const SymMatrix a = SymMatrix::diagonal(custom.minus.values());
    const Matrix b = SymMatrix::diagonal(custom.plus.values()).matrix();

    PartitionComparison report;
    report.samples = samples;
    for (long long s = 0; s < samples; ++s) {
        const Rotation rho = random_rotation_product(p, rng);
        const Matrix conjugated = rho.matrix().transposed() * b * rho.matrix();
        const SymMatrix c = SymMatrix::from_matrix(a.matrix() + conjugated);
        const MembershipResult m = membership_slack(interlaced, eigenvalues_sym(c));
        if (m.within(trace_tol, slack_tol)) ++report.inside;
        report.max_violation = std::max(report.max_violation, std::max(0.0, -m.min_slack));
        report.worst_trace_residual =
            std::max(report.worst_trace_residual, std::abs(m.trace_residual));
    }
    report.fraction_inside =
        static_cast<double>(report.inside) / static_cast<double>(report.samples);
    return report;
}

}  // namespace horn
