#pragma once

// Experiment configuration, q_n estimation, and the verifier registry behind
// the symsing command line.

#include "symsing/lemmalab.hpp"
#include "symsing/numeric.hpp"
#include "symsing/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symsing {

inline constexpr std::string_view kVersion = "1.0.0";

/// Environment variable holding the worker-thread count.
inline constexpr std::string_view kThreadsEnv = "SYMSING_THREADS";

/// Worker count from kThreadsEnv; 1 when unset or invalid.
unsigned workers_from_env();

struct ExperimentConfig {
    std::string command;   // qn | verify | badset | halasz | schedule
    std::string verifier;  // verify only
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;
    std::string out;       // empty writes to stdout
    ReportFormat format = ReportFormat::Csv;
    /// Subcommand parameters (n, p, k, s, t, ...), kept as text.
    std::map<std::string, std::string> params;

    /// Flat "key = value" lines in a fixed order.
    std::string serialize() const;
    /// Reads the serialize() format (also used for --config files); '#' starts
    /// a comment.
    static ExperimentConfig parse(std::string_view text);
    /// Overlays every key present in `text` onto this config.
    void merge_text(std::string_view text);
    void set(const std::string& key, const std::string& value);

    /// FNV-1a 64 of serialize() without the output path, as 16 hex digits.
    std::string hash() const;

    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    std::uint64_t require_uint(const std::string& key) const;
    Rational get_rational(const std::string& key, const Rational& fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<std::uint64_t> get_uint_list(const std::string& key, std::vector<std::uint64_t> fallback) const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::uint64_t fnv1a64(std::string_view bytes);

enum class QnMode { Exhaustive, MonteCarlo };

struct QnEstimate {
    std::size_t n = 0;
    QnMode mode = QnMode::Exhaustive;
    std::uint64_t singular = 0;
    std::uint64_t total = 0;
    Rational estimate;
    /// 95% Wilson interval; both ends equal the estimate in exhaustive mode.
    Interval wilson;
    Rational comparison;  // 2^{-n}
    double log2_target = 0;
};

/// Exhaustive mode needs n(n+1)/2 <= 30. Monte Carlo trial i draws from
/// stream (seed, i).
QnEstimate estimate_qn(std::size_t n, QnMode mode, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

struct VerifierOutput {
    std::vector<Row> rows;
    bool all_ok = true;
};

/// Names accepted by run_verifier, sorted.
std::vector<std::string> verifier_names();

/// Throws std::invalid_argument listing the registered names when `name` is
/// unknown.
VerifierOutput run_verifier(const std::string& name, const ExperimentConfig& config, unsigned workers = 1);

/// Runs any subcommand and wraps the rows with metadata.
struct RunResult {
    Report report;
    bool all_ok = true;
};

RunResult run_experiment(const ExperimentConfig& config, unsigned workers = 1);

}  // namespace symsing
