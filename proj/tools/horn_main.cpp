#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horn/cli_support.hpp"
#include "horn/eigen.hpp"
#include "horn/experiments.hpp"
#include "horn/json_io.hpp"
#include "horn/polytope.hpp"
#include "horn/rng.hpp"
#include "horn/triples.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SpectrumArgs {
    std::string spectrum;
    std::string matrix_file;
    double scale = 1.0;
};

void add_spectrum_options(CLI::App& cmd, SpectrumArgs& args) {
    auto* spectrum = cmd.add_option("--spectrum", args.spectrum,
                                    "Comma-separated eigenvalues of the inertia matrix");
    auto* matrix = cmd.add_option("--matrix", args.matrix_file,
                                  "File with the inertia matrix (n*n whitespace-separated values)");
    cmd.add_option("--scale", args.scale, "Multiplier applied to the spectrum")
        ->capture_default_str();
    spectrum->excludes(matrix);
    matrix->excludes(spectrum);
}

horn::Spectrum resolve_sigma(const SpectrumArgs& args) {
    std::vector<double> values;
    if (!args.matrix_file.empty()) {
        values = horn::eigenvalues_sym(horn::load_symmetric_matrix(args.matrix_file)).values();
    } else if (!args.spectrum.empty()) {
        const horn::ParsedSpectrum parsed = horn::parse_spectrum(args.spectrum);
        if (!parsed.was_sorted)
            std::cerr << "note: spectrum was not descending; sorted it\n";
        values = parsed.spectrum.values();
    } else {
        throw std::invalid_argument("either --spectrum or --matrix is required");
    }
    for (double& v : values) v *= args.scale;
    return horn::Spectrum::sorted(std::move(values));
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

void write_report(const horn::RunReport& report, const std::string& path) {
    const nlohmann::json doc = horn::report_to_json(report);
    if (path.empty()) return;
    std::ofstream file;
    open_or_stdout(path, file) << doc.dump(2) << "\n";
}

int finish_run(const horn::RunReport& report, const std::string& report_path) {
    write_report(report, report_path);
    const long long samples = report.config.samples;
    std::cout << horn::experiment_kind_name(report.kind) << ": " << report.count_inside << "/"
              << samples << " inside, worst trace residual "
              << horn::format_double(report.worst_trace_residual) << ", worst slack "
              << horn::format_double(report.worst_min_slack) << ", "
              << horn::format_double(report.wall_seconds) << " s\n";
    if (report.count_inside != samples) {
        std::cout << "containment violated for " << (samples - report.count_inside)
                  << " sample(s)\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct RunArgs {
    SpectrumArgs sigma;
    long long samples = 25000;
    std::uint64_t seed = 42;
    double epsilon = -1.0;
    std::string sampler = "paper";
    int threads = 1;
    double tol = -1.0;
    std::string out;
    std::string report;
};

void add_run_options(CLI::App& cmd, RunArgs& args) {
    add_spectrum_options(cmd, args.sigma);
    cmd.add_option("--n", args.samples, "Number of samples")->capture_default_str();
    cmd.add_option("--seed", args.seed, "Master seed")->capture_default_str();
    cmd.add_option("--epsilon", args.epsilon,
                   "Pairing threshold (default: 1e-3 * spectrum one-norm)");
    cmd.add_option("--sampler", args.sampler, "Rotation sampler")
        ->check(CLI::IsMember({"paper", "haar"}))
        ->capture_default_str();
    cmd.add_option("--threads", args.threads, "Worker threads")->capture_default_str();
    cmd.add_option("--tol", args.tol,
                   "Absolute membership tolerance override (trace and slack)");
    cmd.add_option("--out", args.out, "CSV output path ('-' for stdout)");
    cmd.add_option("--report", args.report, "JSON report path ('-' for stdout)");
}

horn::ExperimentConfig to_config(const RunArgs& args) {
    horn::ExperimentConfig cfg;
    cfg.sigma = resolve_sigma(args.sigma);
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    cfg.epsilon = args.epsilon;
    cfg.sampler = args.sampler == "haar" ? horn::SamplerKind::Haar
                                         : horn::SamplerKind::PaperProduct;
    cfg.threads = args.threads;
    if (args.tol >= 0.0) {
        cfg.trace_tol = args.tol;
        cfg.slack_tol = args.tol;
    }
    return cfg;
}

int run_experiment(const RunArgs& args, horn::ExperimentKind kind) {
    const horn::ExperimentConfig cfg = to_config(args);
    std::ofstream csv_file;
    horn::RecordSink sink;
    if (!args.out.empty())
        sink = horn::csv_sink(open_or_stdout(args.out, csv_file), kind, cfg.p());
    horn::RunReport report;
    switch (kind) {
        case horn::ExperimentKind::ImF: report = horn::run_imF(cfg, sink); break;
        case horn::ExperimentKind::Projection: report = horn::run_projection(cfg, sink); break;
        case horn::ExperimentKind::Adapted: report = horn::run_adapted(cfg, sink); break;
    }
    return finish_run(report, args.report);
}

int run_gen_triples(int p, const std::string& out) {
    const nlohmann::json doc = horn::table_to_json(horn::generate_T(p));
    std::ofstream file;
    open_or_stdout(out, file) << doc.dump(2) << "\n";
    return kExitOk;
}

int run_verify_domino(int p) {
    const horn::DominoReport report = horn::verify_domino_theorem(p);
    std::cout << report.checked << " checked, " << report.failures.size() << " failures\n";
    return report.failures.empty() ? kExitOk : kExitViolation;
}

int run_check(const SpectrumArgs& sigma_args, const std::string& nu_text,
              const std::string& gamma_text, double tol, double epsilon) {
    const horn::Spectrum sigma = resolve_sigma(sigma_args);
    const horn::PolytopeSpec p1 = horn::build_P1(sigma, horn::PartitionPair::interlaced(sigma));
    const double trace_tol = tol >= 0.0 ? tol : horn::default_trace_tolerance(p1);
    const double slack_tol = tol >= 0.0 ? tol : horn::default_slack_tolerance(p1);

    if (!nu_text.empty()) {
        const horn::Spectrum nu = horn::parse_spectrum(nu_text).spectrum;
        const horn::MembershipResult m = horn::membership_slack(p1, nu);
        std::cout << "trace residual " << horn::format_double(m.trace_residual) << ", min slack "
                  << horn::format_double(m.min_slack) << "\n";
        const bool member = m.within(trace_tol, slack_tol);
        std::cout << (member ? "inside" : "outside") << "\n";
        return member ? kExitOk : kExitViolation;
    }

    const horn::Spectrum gamma_hat = horn::parse_spectrum(gamma_text).spectrum;
    const horn::MembershipResult big = horn::check_P_membership(sigma, gamma_hat);
    const double eps = epsilon > 0.0 ? epsilon : 1e-3 * sigma.one_norm();
    const bool paired = horn::is_hermitian_spectrum(gamma_hat, eps);
    const horn::Spectrum nu = horn::project_to_delta(gamma_hat);
    const horn::MembershipResult proj = horn::membership_slack(p1, nu);

    const horn::PolytopeSpec p_spec = horn::build_P(sigma);
    const bool in_p = big.within(tol >= 0.0 ? tol : horn::default_trace_tolerance(p_spec),
                                 tol >= 0.0 ? tol : horn::default_slack_tolerance(p_spec));
    const bool proj_member = proj.within(trace_tol, slack_tol);
    std::cout << "sum polytope: trace residual " << horn::format_double(big.trace_residual)
              << ", min slack " << horn::format_double(big.min_slack) << " -> "
              << (in_p ? "inside" : "outside") << "\n";
    std::cout << "pairing: " << (paired ? "close" : "far") << " (epsilon "
              << horn::format_double(eps) << ")\n";
    std::cout << "projection: trace residual " << horn::format_double(proj.trace_residual)
              << ", min slack " << horn::format_double(proj.min_slack) << " -> "
              << (proj_member ? "inside" : "outside") << "\n";
    return (in_p && proj_member) ? kExitOk : kExitViolation;
}

int run_compare_partitions(const SpectrumArgs& sigma_args, const std::string& minus_indices,
                           long long samples, std::uint64_t seed) {
    const horn::Spectrum sigma = resolve_sigma(sigma_args);
    const horn::PartitionPair custom =
        horn::PartitionPair::from_index_split(sigma, horn::parse_index_list(minus_indices));
    horn::Rng rng(seed);
    const horn::PartitionComparison report =
        horn::compare_partitions(sigma, custom, samples, rng);
    std::cout << report.inside << "/" << report.samples << " inside interlaced polytope, fraction "
              << horn::format_double(report.fraction_inside) << ", max violation "
              << horn::format_double(report.max_violation) << "\n";
    return report.inside == report.samples ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horn polytope experiments: admissible-triple tables, membership checks, "
                 "and seeded Monte Carlo runs over random rotations"};
    app.require_subcommand(1);
    app.fallthrough();
    // Config files expand to tokens ahead of the explicit flags, so with a
    // take-last policy the command line always wins.
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    int table_p = 3;
    std::string table_out;
    auto* gen = app.add_subcommand("gen-triples", "Generate the admissible-triple table as JSON");
    gen->add_option("--p", table_p, "Ambient size")->required()->check(CLI::Range(1, 8));
    gen->add_option("--out", table_out, "Output path ('-' for stdout)");

    int domino_p = 3;
    auto* domino = app.add_subcommand("verify-domino",
                                      "Check the doubling map into the rank-2r table");
    domino->add_option("--p", domino_p, "Ambient size")->required()->check(CLI::Range(1, 4));

    SpectrumArgs check_sigma;
    std::string check_nu, check_gamma;
    double check_tol = -1.0, check_epsilon = -1.0;
    auto* check = app.add_subcommand("check", "Test a spectrum for polytope membership");
    add_spectrum_options(*check, check_sigma);
    auto* nu_opt = check->add_option("--nu", check_nu, "Candidate p-spectrum for the polytope");
    auto* gamma_opt = check->add_option(
        "--gamma", check_gamma, "Candidate 2p-spectrum for the sum polytope plus projection");
    check->add_option("--tol", check_tol, "Absolute membership tolerance override");
    check->add_option("--epsilon", check_epsilon, "Pairing threshold for --gamma");
    nu_opt->excludes(gamma_opt);
    gamma_opt->excludes(nu_opt);

    RunArgs imf_args;
    auto* imf = app.add_subcommand("sample-imf",
                                   "Sample the frequency map over random hermitian structures");
    add_run_options(*imf, imf_args);

    RunArgs proj_args;
    proj_args.samples = 50000;
    auto* proj = app.add_subcommand(
        "sample-proj", "Sample sums of rotated inertia matrices and project the spectra");
    add_run_options(*proj, proj_args);

    RunArgs adapted_args;
    auto* adapted = app.add_subcommand("sample-adapted",
                                       "Sample the frequency map over adapted structures");
    add_run_options(*adapted, adapted_args);

    SpectrumArgs cmp_sigma;
    std::string cmp_indices;
    long long cmp_samples = 10000;
    std::uint64_t cmp_seed = 42;
    auto* cmp = app.add_subcommand(
        "compare-partitions", "Score a custom eigenvalue split against the interlaced polytope");
    add_spectrum_options(*cmp, cmp_sigma);
    cmp->add_option("--minus-indices", cmp_indices,
                    "1-based positions assigned to the first summand")
        ->required();
    cmp->add_option("--n", cmp_samples, "Number of samples")->capture_default_str();
    cmp->add_option("--seed", cmp_seed, "Master seed")->capture_default_str();

    std::string config_path;
    for (CLI::App* sub : {gen, domino, check, imf, proj, adapted, cmp})
        sub->add_option("--config", config_path,
                        "Read option defaults from a key=value file; explicit flags win");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::vector<std::string> names;
        for (const CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
            names.push_back(sub->get_name());
        args = horn::expand_config_args(args, names);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());

    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen_triples(table_p, table_out);
        if (domino->parsed()) return run_verify_domino(domino_p);
        if (check->parsed())
            return run_check(check_sigma, check_nu, check_gamma, check_tol, check_epsilon);
        if (imf->parsed()) return run_experiment(imf_args, horn::ExperimentKind::ImF);
        if (proj->parsed()) return run_experiment(proj_args, horn::ExperimentKind::Projection);
        if (adapted->parsed()) return run_experiment(adapted_args, horn::ExperimentKind::Adapted);
        if (cmp->parsed()) return run_compare_partitions(cmp_sigma, cmp_indices, cmp_samples, cmp_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
