// CSV helpers for the command-line tool.  Floats are printed with 17
// significant digits so emitted values round-trip exactly.
#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace csv {

inline std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

/// Collects output files and publishes them only when every computation has
/// finished: content is staged in "<path>.tmp" and renamed on commit, so a
/// failed run never leaves partial outputs behind.
class AtomicWriter {
public:
    ~AtomicWriter() {
        for (const auto& [temp, final] : pending_) {
            std::error_code ignored;
            std::filesystem::remove(temp, ignored);
        }
    }

    void stage(const std::filesystem::path& path, const std::string& content) {
        const std::filesystem::path temp = path.string() + ".tmp";
        std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
        if (!stream) throw std::runtime_error("cannot open " + temp.string());
        stream << content;
        stream.close();
        if (!stream) throw std::runtime_error("cannot write " + temp.string());
        pending_.emplace_back(temp, path);
    }

    void commit() {
        for (const auto& [temp, final] : pending_) {
            std::error_code error;
            std::filesystem::rename(temp, final, error);
            if (error)
                throw std::runtime_error("cannot publish " + final.string() + ": " +
                                         error.message());
        }
        pending_.clear();
    }

private:
    std::vector<std::pair<std::filesystem::path, std::filesystem::path>> pending_;
};

inline std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream splitter(line);
        std::string field;
        while (std::getline(splitter, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

/// Occupation word -> "site 1 leftmost" 0/1 string.
inline std::string format_config(std::uint32_t word, int n_sites) {
    std::string text(static_cast<std::size_t>(n_sites), '0');
    for (int site = 0; site < n_sites; ++site)
        if (word & (1u << site)) text[static_cast<std::size_t>(site)] = '1';
    return text;
}

inline std::uint32_t parse_config(const std::string& text, int n_sites) {
    if (static_cast<int>(text.size()) != n_sites)
        throw std::runtime_error("configuration '" + text + "' must have " +
                                 std::to_string(n_sites) + " characters");
    std::uint32_t word = 0;
    for (int site = 0; site < n_sites; ++site) {
        const char c = text[static_cast<std::size_t>(site)];
        if (c == '1')
            word |= 1u << site;
        else if (c != '0')
            throw std::runtime_error("configuration '" + text + "' must be 0/1 only");
    }
    return word;
}

/// Distribution file: header "config,probability", one row per configuration.
inline std::string format_distribution(const std::vector<double>& distribution,
                                       int n_sites) {
    std::string content = "config,probability\n";
    for (std::size_t word = 0; word < distribution.size(); ++word) {
        content += format_config(static_cast<std::uint32_t>(word), n_sites);
        content += ',';
        content += format_double(distribution[word]);
        content += '\n';
    }
    return content;
}

inline std::vector<double> parse_distribution(const std::filesystem::path& path,
                                              int n_sites) {
    const auto rows = read_rows(path);
    if (rows.empty() || rows.front().size() != 2 || rows.front()[0] != "config" ||
        rows.front()[1] != "probability")
        throw std::runtime_error(path.string() + ": expected header 'config,probability'");
    std::vector<double> distribution(std::size_t{1} << n_sites, 0.0);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].size() != 2)
            throw std::runtime_error(path.string() + ": malformed row " + std::to_string(k));
        const std::uint32_t word = parse_config(rows[k][0], n_sites);
        distribution[word] = std::stod(rows[k][1]);
    }
    double sum = 0.0;
    for (const double p : distribution) {
        if (p < -1e-14)
            throw std::runtime_error(path.string() + ": negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::runtime_error(path.string() + ": probabilities must sum to 1");
    return distribution;
}

}  // namespace csv
