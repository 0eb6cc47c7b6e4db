#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/biideal.hpp"
#include "strata/charts.hpp"
#include "strata/field.hpp"

namespace strata::cli {

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | skip
    std::string expected, actual, witness;
    double duration_ms = 0;
};

class Report {
public:
    nlohmann::ordered_json config;

    void add(CheckRecord rec) { checks_.push_back(std::move(rec)); }
    void pass(const std::string& name, const std::string& expected, const std::string& actual,
              double ms = 0);
    void fail(const std::string& name, const std::string& expected, const std::string& actual,
              const std::string& witness, double ms = 0);
    void skip(const std::string& name, const std::string& witness, double ms = 0);

    const std::vector<CheckRecord>& checks() const { return checks_; }
    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
    std::size_t count(const std::string& status) const;

    void set_duration(double ms) { total_ms_ = ms; }

    // Durations are the only nondeterministic fields; strip them to compare.
    nlohmann::ordered_json to_json(bool with_durations = true) const;

private:
    std::vector<CheckRecord> checks_;
    double total_ms_ = 0;
};

struct SuiteConfig {
    std::string suite = "all";  // uni | charts | hilb | gm | poisson | all
    std::uint64_t seed = 7;
    int samples = 25;
    Field field = Field::rationals();
    charts::Recursion recursion = charts::Recursion::paper;

    // Single-instance parameters for the focused subcommands; empty means
    // the suite's built-in ranges.
    std::vector<int> shape, steps;
    int stratum = -1;
    std::vector<int> s, t;
    int r = 2, k = 2;
    std::string ideal_path;
    std::string params_path;

    nlohmann::ordered_json echo() const;
};

Report run_suite(const SuiteConfig& cfg);

// One generator per line in the polynomial text grammar; '#' starts a
// comment; empty files are an error. Parse errors carry line and column.
bi::BiIdeal parse_ideal_file(const std::string& path, const Field& field = Field::rationals());

// Writes the report as JSON with stable key order; numbers stay exact text.
void emit_report(const Report& r, const std::string& path);

}  // namespace strata::cli
