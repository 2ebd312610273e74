// Command-line frontend: point evaluation, (alpha, gamma) sweeps, sudden-
// death search and figure-surface export, with CSV/JSON serialization.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/experiments.hpp"

namespace qcorr::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct OutputRecord {
    double alpha;
    double gamma;
    double concurrence;
    double discord;
    double mutual_info;
    double classical_corr;
    double theta_opt;
    double phi_opt;
};

OutputRecord make_record(double alpha, double gamma, const CorrelationReport& report);

// Shortest decimal form capped at 15 significant digits; locale-independent.
std::string format_double(double v);

std::string csv_header();
std::string csv_row(const OutputRecord& r);

// Parses one emitted CSV line back into a record (used for round-trip
// checks). Throws Error on malformed input.
OutputRecord parse_csv_row(const std::string& line);

nlohmann::ordered_json record_json(const OutputRecord& r);

// Full argument parser and dispatcher; returns a process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli
