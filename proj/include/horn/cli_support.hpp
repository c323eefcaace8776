#pragma once

#include <string>
#include <vector>

#include "horn/linalg.hpp"
#include "horn/spectrum.hpp"

namespace horn {

struct ParsedSpectrum {
    Spectrum spectrum;
    bool was_sorted = true;  // false when input had to be reordered
};

/// Parses a comma-separated list of decimals into a descending spectrum.
/// Throws std::invalid_argument on empty input or a non-numeric token.
ParsedSpectrum parse_spectrum(const std::string& text);

/// Comma-separated strictly positive integers.
std::vector<int> parse_index_list(const std::string& text);

/// Reads n*n whitespace-separated doubles and returns the symmetrized
/// matrix. Throws when the count is not a perfect square or the asymmetry
/// exceeds 1e-9 * max(1, largest entry magnitude).
SymMatrix load_symmetric_matrix(const std::string& path);

struct ConfigEntry {
    std::string key;
    std::string value;
};

/// key = value lines; '#' starts a comment, blank lines are skipped,
/// surrounding whitespace is trimmed. Throws std::invalid_argument on an
/// unreadable file or a line without '='.
std::vector<ConfigEntry> read_config_file(const std::string& path);

/// Splices every file named by --config into the argument list as
/// --key=value tokens placed directly after the subcommand name. Explicit
/// flags appear later and therefore win under a take-last option policy.
/// Arguments without a recognized subcommand pass through unchanged.
std::vector<std::string> expand_config_args(const std::vector<std::string>& args,
                                            const std::vector<std::string>& subcommands);

}  // namespace horn
