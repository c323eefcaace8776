#include "horn/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "horn/eigen.hpp"
#include "horn/mechanics.hpp"
#include "horn/rng.hpp"

namespace horn {

double ExperimentConfig::resolved_epsilon() const {
    return epsilon > 0.0 ? epsilon : 1e-3 * sigma.one_norm();
}

double ExperimentConfig::resolved_trace_tolerance(const PolytopeSpec& spec) const {
    return trace_tol >= 0.0 ? trace_tol : default_trace_tolerance(spec);
}

double ExperimentConfig::resolved_slack_tolerance(const PolytopeSpec& spec) const {
    return slack_tol >= 0.0 ? slack_tol : default_slack_tolerance(spec);
}

void ExperimentConfig::validate() const {
    if (sigma.size() == 0 || sigma.size() % 2 != 0)
        throw std::invalid_argument("sigma must have positive even length");
    if (samples < 1) throw std::invalid_argument("at least one sample required");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    if (!(resolved_epsilon() > 0.0))
        throw std::invalid_argument("pairing threshold must resolve to a positive value");
}

const char* experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::ImF: return "imf";
        case ExperimentKind::Projection: return "projection";
        case ExperimentKind::Adapted: return "adapted";
    }
    return "unknown";
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

constexpr double kTightSlack = 1e-6;

// The spectrum a record was scored with.
const std::vector<double>& scored_values(ExperimentKind kind, const SampleRecord& rec) {
    return kind == ExperimentKind::Projection ? rec.projected : rec.spectrum;
}

void accumulate(RunReport& report, const PolytopeSpec& p1, double trace_tol, double slack_tol,
                ExperimentKind kind, const SampleRecord& rec) {
    if (std::abs(rec.trace_residual) <= trace_tol && rec.min_slack >= -slack_tol)
        ++report.count_inside;
    if (rec.hermitian_close) ++report.hermitian_close_count;
    report.worst_trace_residual =
        std::max(report.worst_trace_residual, std::abs(rec.trace_residual));
    report.worst_min_slack = std::min(report.worst_min_slack, rec.min_slack);
    const std::vector<double> slacks =
        inequality_slacks(p1, Spectrum(scored_values(kind, rec)));
    for (std::size_t q = 0; q < slacks.size(); ++q)
        if (slacks[q] < kTightSlack) ++report.tight_counts[q];
}

// Runs cfg.samples evaluations of per_sample in batches. Each sample draws
// from its own counter-derived generator, so record content is independent
// of the thread count; records are handed to the sink in index order.
template <typename PerSample>
RunReport run_batched(ExperimentKind kind, const ExperimentConfig& cfg, const PolytopeSpec& p1,
                      PerSample&& per_sample, const RecordSink& sink) {
    const auto start_time = std::chrono::steady_clock::now();
    RunReport report;
    report.kind = kind;
    report.config = cfg;
    report.worst_min_slack = std::numeric_limits<double>::infinity();
    report.tight_counts.assign(p1.inequalities.size(), 0);
    const double trace_tol = cfg.resolved_trace_tolerance(p1);
    const double slack_tol = cfg.resolved_slack_tolerance(p1);

    constexpr long long kBatch = 4096;
    const int workers =
        static_cast<int>(std::min<long long>(std::max(cfg.threads, 1), cfg.samples));
    std::vector<SampleRecord> batch;
    for (long long base = 0; base < cfg.samples; base += kBatch) {
        const long long count = std::min(kBatch, cfg.samples - base);
        batch.assign(static_cast<std::size_t>(count), SampleRecord{});
        if (workers <= 1) {
            for (long long i = 0; i < count; ++i) {
                Rng rng = Rng::for_sample(cfg.seed, static_cast<std::uint64_t>(base + i));
                batch[static_cast<std::size_t>(i)] = per_sample(base + i, rng);
            }
        } else {
            std::atomic<long long> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&]() {
                    try {
                        for (;;) {
                            const long long i = next.fetch_add(1);
                            if (i >= count) return;
                            Rng rng =
                                Rng::for_sample(cfg.seed, static_cast<std::uint64_t>(base + i));
                            batch[static_cast<std::size_t>(i)] = per_sample(base + i, rng);
                        }
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
            for (std::thread& t : pool) t.join();
            if (failure) std::rethrow_exception(failure);
        }
        for (const SampleRecord& rec : batch) {
            accumulate(report, p1, trace_tol, slack_tol, kind, rec);
            if (sink) sink(rec);
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

PolytopeSpec interlaced_polytope(const ExperimentConfig& cfg) {
    return build_P1(cfg.sigma, PartitionPair::interlaced(cfg.sigma));
}

}  // namespace

RunReport run_imF(const ExperimentConfig& cfg, const RecordSink& sink) {
    cfg.validate();
    PolytopeSpec p1 = interlaced_polytope(cfg);
    const SymMatrix s0 = SymMatrix::diagonal(cfg.sigma.values());
    const double eps = cfg.resolved_epsilon();
    const int dim = 2 * cfg.p();
    auto per_sample = [&, eps, dim](long long index, Rng& rng) {
        SampleRecord rec;
        rec.index = index;
        const Rotation r = sample_rotation(dim, rng, cfg.sampler);
        const Spectrum gamma_hat = eigenvalues_sym(frequency_matrix_conjugated(r, s0));
        rec.hermitian_close = is_hermitian_spectrum(gamma_hat, eps);
        const Spectrum nu = project_to_delta(gamma_hat);
        const MembershipResult m = membership_slack(p1, nu);
        rec.spectrum = nu.values();
        rec.trace_residual = m.trace_residual;
        rec.min_slack = m.min_slack;
        return rec;
    };
    return run_batched(ExperimentKind::ImF, cfg, p1, per_sample, sink);
}

RunReport run_projection(const ExperimentConfig& cfg, const RecordSink& sink) {
    cfg.validate();
    PolytopeSpec p1 = interlaced_polytope(cfg);
    const SymMatrix s0 = SymMatrix::diagonal(cfg.sigma.values());
    const double eps = cfg.resolved_epsilon();
    const int dim = 2 * cfg.p();
    auto per_sample = [&, eps, dim](long long index, Rng& rng) {
        SampleRecord rec;
        rec.index = index;
        const Rotation r = sample_rotation(dim, rng, cfg.sampler);
        const Matrix conjugated = r.matrix().transposed() * s0.matrix() * r.matrix();
        const Spectrum gamma_hat =
            eigenvalues_sym(SymMatrix::from_matrix(s0.matrix() + conjugated));
        rec.hermitian_close = is_hermitian_spectrum(gamma_hat, eps);
        const Spectrum nu = project_to_delta(gamma_hat);
        const MembershipResult m = membership_slack(p1, nu);
        rec.spectrum = gamma_hat.values();
        rec.projected = nu.values();
        rec.trace_residual = m.trace_residual;
        rec.min_slack = m.min_slack;
        return rec;
    };
    return run_batched(ExperimentKind::Projection, cfg, p1, per_sample, sink);
}

RunReport run_adapted(const ExperimentConfig& cfg, const RecordSink& sink) {
    cfg.validate();
    PolytopeSpec p1 = interlaced_polytope(cfg);
    const PartitionPair split = PartitionPair::interlaced(cfg.sigma);
    const Matrix minus = SymMatrix::diagonal(split.minus.values()).matrix();
    const Matrix plus = SymMatrix::diagonal(split.plus.values()).matrix();
    const int p = cfg.p();
    auto per_sample = [&, p](long long index, Rng& rng) {
        SampleRecord rec;
        rec.index = index;
        const Rotation rho = sample_rotation(p, rng, cfg.sampler);
        const Matrix conjugated = rho.matrix().transposed() * plus * rho.matrix();
        const Spectrum nu = eigenvalues_sym(SymMatrix::from_matrix(minus + conjugated));
        const MembershipResult m = membership_slack(p1, nu);
        rec.spectrum = nu.values();
        rec.trace_residual = m.trace_residual;
        rec.min_slack = m.min_slack;
        rec.hermitian_close = true;  // pairing is structural on this branch
        return rec;
    };
    return run_batched(ExperimentKind::Adapted, cfg, p1, per_sample, sink);
}

RunReport summarize(const std::vector<SampleRecord>& records, const ExperimentConfig& cfg,
                    ExperimentKind kind) {
    if (records.empty()) throw std::invalid_argument("cannot summarize an empty record list");
    cfg.validate();
    const PolytopeSpec p1 = interlaced_polytope(cfg);
    RunReport report;
    report.kind = kind;
    report.config = cfg;
    report.worst_min_slack = std::numeric_limits<double>::infinity();
    report.tight_counts.assign(p1.inequalities.size(), 0);
    const double trace_tol = cfg.resolved_trace_tolerance(p1);
    const double slack_tol = cfg.resolved_slack_tolerance(p1);
    for (const SampleRecord& rec : records)
        accumulate(report, p1, trace_tol, slack_tol, kind, rec);
    return report;
}

RecordSink csv_sink(std::ostream& out, ExperimentKind kind, int p) {
    out << "index";
    if (kind == ExperimentKind::Projection) {
        for (int k = 1; k <= 2 * p; ++k) out << ",gamma" << k;
    }
    for (int k = 1; k <= p; ++k) out << ",nu" << k;
    out << ",trace_residual,min_slack";
    if (kind != ExperimentKind::Adapted) out << ",hermitian_close";
    out << "\n";

    return [&out, kind](const SampleRecord& rec) {
        out << rec.index;
        if (kind == ExperimentKind::Projection) {
            for (double v : rec.spectrum) out << ',' << format_double(v);
            for (double v : rec.projected) out << ',' << format_double(v);
        } else {
            for (double v : rec.spectrum) out << ',' << format_double(v);
        }
        out << ',' << format_double(rec.trace_residual) << ',' << format_double(rec.min_slack);
        if (kind != ExperimentKind::Adapted) out << ',' << (rec.hermitian_close ? '1' : '0');
        out << '\n';
    };
}

}  // namespace horn
