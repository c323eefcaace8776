#include "horn/cli_support.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace horn {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            tokens.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    tokens.push_back(current);
    return tokens;
}

double parse_double_token(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty value in list");
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("not a number: '" + token + "'");
    return value;
}

std::string trimmed(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

}  // namespace

ParsedSpectrum parse_spectrum(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("spectrum list is empty");
    std::vector<double> values;
    for (const std::string& token : split_commas(text)) values.push_back(parse_double_token(token));
    ParsedSpectrum out;
    out.was_sorted = std::is_sorted(values.begin(), values.end(), std::greater<double>());
    out.spectrum = Spectrum::sorted(std::move(values));
    return out;
}

std::vector<int> parse_index_list(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("index list is empty");
    std::vector<int> indices;
    for (const std::string& token : split_commas(text)) {
        if (token.empty()) throw std::invalid_argument("empty value in list");
        int value = 0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
        if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || value < 1)
            throw std::invalid_argument("not a positive integer: '" + token + "'");
        indices.push_back(value);
    }
    return indices;
}

std::vector<ConfigEntry> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::vector<ConfigEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string content = trimmed(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + content);
        ConfigEntry entry{trimmed(content.substr(0, eq)), trimmed(content.substr(eq + 1))};
        if (entry.key.empty()) throw std::invalid_argument("config line without key: " + content);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<std::string> expand_config_args(const std::vector<std::string>& args,
                                            const std::vector<std::string>& subcommands) {
    const auto sub = std::find_first_of(args.begin(), args.end(), subcommands.begin(),
                                        subcommands.end());
    if (sub == args.end()) return args;

    std::vector<std::string> defaults;
    for (auto it = sub + 1; it != args.end(); ++it) {
        std::string path;
        if (*it == "--config") {
            if (it + 1 == args.end())
                throw std::invalid_argument("--config requires a file path");
            path = *++it;
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(std::string("--config=").size());
        } else {
            continue;
        }
        for (const ConfigEntry& entry : read_config_file(path))
            defaults.push_back("--" + entry.key + "=" + entry.value);
    }
    if (defaults.empty()) return args;

    std::vector<std::string> out(args.begin(), sub + 1);
    out.insert(out.end(), defaults.begin(), defaults.end());
    out.insert(out.end(), sub + 1, args.end());
    return out;
}

SymMatrix load_symmetric_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::vector<double> entries;
    double v = 0.0;
    while (in >> v) entries.push_back(v);
    if (!in.eof()) throw std::invalid_argument("non-numeric content in matrix file: " + path);

    const auto count = entries.size();
    std::size_t n = 0;
    while (n * n < count) ++n;
    if (n == 0 || n * n != count)
        throw std::invalid_argument("matrix file must contain a square count of numbers");

    Matrix m(static_cast<int>(n), static_cast<int>(n));
    double max_entry = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<int>(i), static_cast<int>(j)) = entries[i * n + j];
            max_entry = std::max(max_entry, std::abs(entries[i * n + j]));
        }

    const double tol = 1e-9 * std::max(1.0, max_entry);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m(static_cast<int>(i), static_cast<int>(j)) -
                         m(static_cast<int>(j), static_cast<int>(i))) > tol)
                throw std::invalid_argument("matrix file is not symmetric");
    return SymMatrix::from_matrix(m);
}

}  // namespace horn
