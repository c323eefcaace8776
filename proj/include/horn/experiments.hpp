#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "horn/polytope.hpp"
#include "horn/sampling.hpp"
#include "horn/spectrum.hpp"

namespace horn {

struct ExperimentConfig {
    Spectrum sigma;  // length 2p, spectrum of the inertia matrix S0
    long long samples = 0;
    std::uint64_t seed = 0;
    double epsilon = -1.0;    // pairing threshold; <= 0 selects 1e-3 * ||sigma||_1
    SamplerKind sampler = SamplerKind::PaperProduct;
    double trace_tol = -1.0;  // < 0 selects the polytope default
    double slack_tol = -1.0;  // < 0 selects the polytope default
    int threads = 1;

    int p() const { return static_cast<int>(sigma.size()) / 2; }
    double resolved_epsilon() const;
    double resolved_trace_tolerance(const PolytopeSpec& spec) const;
    double resolved_slack_tolerance(const PolytopeSpec& spec) const;

    /// Throws std::invalid_argument on any malformed field.
    void validate() const;
};

enum class ExperimentKind { ImF, Projection, Adapted };

struct SampleRecord {
    long long index = 0;
    std::vector<double> spectrum;   // p values (imf, adapted) or 2p (projection)
    std::vector<double> projected;  // p values, projection runs only
    double trace_residual = 0.0;
    double min_slack = 0.0;
    bool hermitian_close = false;
};

struct RunReport {
    ExperimentKind kind = ExperimentKind::ImF;
    ExperimentConfig config;
    long long count_inside = 0;
    long long hermitian_close_count = 0;
    double worst_trace_residual = 0.0;      // max |trace residual|
    double worst_min_slack = 0.0;           // min over records
    double wall_seconds = 0.0;
    std::vector<long long> tight_counts;    // records with slack < 1e-6, per inequality
};

using RecordSink = std::function<void(const SampleRecord&)>;

/// Frequency-map experiment: spectra of S - J0 S J0 for S = R S0 R^{-1},
/// paired eigenvalues scored against the interlaced polytope.
RunReport run_imF(const ExperimentConfig& cfg, const RecordSink& sink = {});

/// Sum experiment: 2p-spectra of S0 + R^{-1} S0 R, projected onto the
/// diagonal and scored against the interlaced polytope.
RunReport run_projection(const ExperimentConfig& cfg, const RecordSink& sink = {});

/// Adapted-structure experiment: p-spectra of diag(sigma-) + rho^{-1}
/// diag(sigma+) rho, scored directly.
RunReport run_adapted(const ExperimentConfig& cfg, const RecordSink& sink = {});

/// Rebuilds the aggregate report from stored records (same scoring as the
/// runs). Throws on an empty record list.
RunReport summarize(const std::vector<SampleRecord>& records, const ExperimentConfig& cfg,
                    ExperimentKind kind);

/// Sink writing a CSV header plus one row per record with 17 significant
/// digits per value (locale-independent).
RecordSink csv_sink(std::ostream& out, ExperimentKind kind, int p);

std::string format_double(double v);

const char* experiment_kind_name(ExperimentKind kind);

}  // namespace horn
