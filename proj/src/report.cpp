#include "strata/report.hpp"

#include <fstream>
#include <sstream>

#include "strata/parse.hpp"

namespace strata::cli {

void Report::pass(const std::string& name, const std::string& expected, const std::string& actual,
                  double ms) {
    add({name, "pass", expected, actual, "", ms});
}

void Report::fail(const std::string& name, const std::string& expected, const std::string& actual,
                  const std::string& witness, double ms) {
    add({name, "fail", expected, actual, witness, ms});
}

void Report::skip(const std::string& name, const std::string& witness, double ms) {
    add({name, "skip", "", "", witness, ms});
}

bool Report::all_pass() const {
    for (const auto& c : checks_)
        if (c.status == "fail") return false;
    return true;
}

std::size_t Report::count(const std::string& status) const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (c.status == status) ++n;
    return n;
}

nlohmann::ordered_json Report::to_json(bool with_durations) const {
    nlohmann::ordered_json j;
    j["tool"] = "strata";
    j["version"] = "0.1.0";
    j["config"] = config;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.status;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["witness"] = c.witness;
        if (with_durations) cj["duration_ms"] = c.duration_ms;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    nlohmann::ordered_json sum;
    sum["pass"] = count("pass");
    sum["fail"] = count("fail");
    sum["skip"] = count("skip");
    j["summary"] = std::move(sum);
    if (with_durations) j["duration_ms"] = total_ms_;
    return j;
}

nlohmann::ordered_json SuiteConfig::echo() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["samples"] = samples;
    j["field"] = field.str();
    j["recursion"] = charts::to_string(recursion);
    if (!shape.empty()) j["shape"] = shape;
    if (!steps.empty()) j["steps"] = steps;
    if (stratum >= 0) j["stratum"] = stratum;
    if (!s.empty()) j["s"] = s;
    if (!t.empty()) j["t"] = t;
    if (!ideal_path.empty()) j["ideal"] = ideal_path;
    if (suite == "poisson") {
        j["r"] = r;
        j["k"] = k;
    }
    return j;
}

bi::BiIdeal parse_ideal_file(const std::string& path, const Field& field) {
    std::ifstream in(path);
    if (!in) throw math_error("cannot open ideal file '" + path + "'");
    std::vector<MPoly> gens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        gens.push_back(parse_mpoly(line, field, {"x", "y"}, lineno));
    }
    if (gens.empty()) throw math_error("ideal file '" + path + "' has no generators");
    return bi::BiIdeal(std::move(gens));
}

void emit_report(const Report& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report path '" + path + "'");
    out << r.to_json().dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing report to '" + path + "'");
}

}  // namespace strata::cli
