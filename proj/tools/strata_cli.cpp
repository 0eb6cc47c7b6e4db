#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strata/parse.hpp"
#include "strata/report.hpp"

namespace {

using strata::cli::Report;
using strata::cli::SuiteConfig;

strata::Field parse_field_flag(const std::string& s) {
    if (s == "rat") return strata::Field::rationals();
    if (s.rfind("fp:", 0) == 0) return strata::Field::prime(std::stoull(s.substr(3)));
    throw CLI::ValidationError("--field", "expected rat or fp:<p>");
}

int finish(const Report& rep, const std::string& json_path, bool quiet = false) {
    if (!json_path.empty()) strata::cli::emit_report(rep, json_path);
    if (!quiet) {
        for (const auto& c : rep.checks()) {
            std::printf("%-4s %s", c.status == "pass" ? "ok" : c.status.c_str(), c.name.c_str());
            if (!c.actual.empty()) std::printf("  [%s]", c.actual.c_str());
            if (c.status != "pass" && !c.witness.empty()) std::printf("  %s", c.witness.c_str());
            std::printf("\n");
        }
        std::printf("%zu pass, %zu fail, %zu skip\n", rep.count("pass"), rep.count("fail"),
                    rep.count("skip"));
    }
    return rep.exit_code();
}

void add_common(CLI::App* cmd, SuiteConfig& cfg, std::string& field_flag, std::string& json_path,
                std::string& recursion_flag) {
    cmd->add_option("--seed", cfg.seed, "RNG seed (determines all sampling)");
    cmd->add_option("--samples", cfg.samples, "sample count per check");
    cmd->add_option("--field", field_flag, "coefficient field: rat or fp:<p>");
    cmd->add_option("--json", json_path, "write the machine-readable report here");
    cmd->add_option("--recursion", recursion_flag, "remainder recursion: paper or euclid")
        ->check(CLI::IsMember({"paper", "euclid"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strata: exact engine for incidence stratifications of planar Hilbert schemes"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string field_flag = "rat", json_path, recursion_flag = "paper";

    auto* uni = app.add_subcommand("uni", "univariate stratification checks");
    uni->add_option("--shape", cfg.shape, "tuple sizes m_1,...,m_n")->delimiter(',');
    add_common(uni, cfg, field_flag, json_path, recursion_flag);

    auto* charts = app.add_subcommand("charts", "stratified blowup chart checks");
    charts->add_option("--shape", cfg.shape, "tuple sizes m_1,...,m_n")->delimiter(',');
    charts->add_option("--steps", cfg.steps, "blowup indices i_1,i_2,...")->delimiter(',');
    charts->add_option("--stratum", cfg.stratum, "stratum j to certify (default: next)");
    add_common(charts, cfg, field_flag, json_path, recursion_flag);

    auto* hilb = app.add_subcommand("hilb", "monomial-ideal local model checks");
    hilb->add_option("--s", cfg.s, "exponent sequence s_1,...,s_n")->delimiter(',');
    hilb->add_option("--t", cfg.t, "exponent sequence t_1,...,t_n")->delimiter(',');
    hilb->add_option("--params", cfg.params_path, "JSON file with deformation parameters a, b");
    add_common(hilb, cfg, field_flag, json_path, recursion_flag);

    auto* gm = app.add_subcommand("gm-limit", "flat limit of the G_m action on an ideal");
    gm->add_option("--ideal", cfg.ideal_path, "file with one generator per line")->required();
    add_common(gm, cfg, field_flag, json_path, recursion_flag);

    auto* poisson = app.add_subcommand("poisson-check", "local Poisson bivector lift");
    poisson->add_option("--r", cfg.r, "number of points");
    poisson->add_option("--k", cfg.k, "points on the curve");
    add_common(poisson, cfg, field_flag, json_path, recursion_flag);

    auto* suite = app.add_subcommand("suite", "acceptance suites");
    bool run_all = false;
    std::string suite_name;
    suite->add_flag("--all", run_all, "run every suite plus the determinism check");
    suite->add_option("--name", suite_name, "one of uni, charts, hilb, gm, poisson");
    add_common(suite, cfg, field_flag, json_path, recursion_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.field = parse_field_flag(field_flag);
        cfg.recursion = recursion_flag == "euclid" ? strata::charts::Recursion::euclid
                                                   : strata::charts::Recursion::paper;
        if (uni->parsed()) cfg.suite = "uni";
        if (charts->parsed()) cfg.suite = "charts";
        if (hilb->parsed()) cfg.suite = "hilb";
        if (gm->parsed()) cfg.suite = "gm";
        if (poisson->parsed()) cfg.suite = "poisson";
        if (suite->parsed()) {
            if (run_all || suite_name.empty())
                cfg.suite = "all";
            else
                cfg.suite = suite_name;
        }
        if (charts->parsed() && !cfg.steps.empty() && cfg.stratum >= 0) {
            // The tower presents exactly one stratum; validate the request.
            int m = 0;
            for (int v : cfg.shape) m += v;
            if (cfg.stratum != m - static_cast<int>(cfg.steps.size()))
                throw std::invalid_argument(
                    "--stratum must equal m minus the number of steps for this tower");
        }
        Report rep = strata::cli::run_suite(cfg);
        return finish(rep, json_path);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const strata::parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
