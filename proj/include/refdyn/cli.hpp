#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "refdyn/algebraic.hpp"

namespace refdyn {

struct CliOptions {
    std::uint64_t seed = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> seed_range;
    int n = 0;
    int steps = -1;
    int horizon = -1;
    /// Decimal places of every printed enclosure bound: widths stay below 10^-precision.
    int precision = 9;
    std::string format = "json";
    /// Billiard orbits default to u + v on L.
    std::string start;
    std::string word;
    std::string system;
    std::string matrix_file;
    std::string config_file;
};

/// Parses "a..b" with a <= b.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<std::pair<std::string, bool>> certificates;
    std::optional<Table> table;

    void certify(const std::string& name, bool holds) { certificates.emplace_back(name, holds); }
    [[nodiscard]] bool passed() const;
    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string to_csv() const;
};

/// {"polynomial", "enclosure": [lo, hi], "width"} with bounds printed to
/// `precision` places after refining below 10^-precision.
nlohmann::json value_json(const AlgebraicReal& a, int precision);

RunReport cmd_reproduce(const std::string& target, const CliOptions& opt);
RunReport cmd_billiard(const std::string& sub, const CliOptions& opt);
RunReport cmd_germ(const std::string& sub, const CliOptions& opt);
RunReport cmd_elliptic(const std::string& sub, const CliOptions& opt);
RunReport cmd_transition(const std::string& sub, const CliOptions& opt);

/// Full command line without the program name. Exit status: 0 when every
/// certificate holds, 1 when one fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refdyn
