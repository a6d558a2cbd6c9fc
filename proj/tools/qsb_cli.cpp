// qsb command-line front end: verification suites over parameter grids,
// polynomial/operator/measure tables, and the coefficient transform on
// JSON files.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsb/cli.hpp"

namespace {

using qsb::cli::RunConfig;

void add_param_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--q", cfg.params.q, "deformation parameter in [0,1)");
    cmd->add_option("--beta", cfg.params.beta, "scale parameter > 0");
}

void add_tol_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tail-tol", cfg.tail_tol, "series/measure truncation tolerance");
    cmd->add_option("--rel-tol", cfg.rel_tol, "identity-check tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string suite_name = "all";
    std::string family_name = "charlier";

    CLI::App app{"q-deformed Segal-Bargmann numerics"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify", "run identity suites; exit 0 iff every report passed");
    add_param_flags(verify, cfg);
    verify->add_option("--degree", cfg.degree, "operator truncation degree");
    add_tol_flags(verify, cfg);
    verify->add_option("--suite", suite_name, "all|ortho|unitary|operators|hermite|qcore");
    verify->add_option("--out", cfg.output_path, "write the JSON-lines report to a file");

    auto* poly = app.add_subcommand("poly", "monomial coefficients of C_n or H_n");
    add_param_flags(poly, cfg);
    poly->add_option("--family", family_name, "charlier|hermite");
    poly->add_option("--n", cfg.poly_index, "polynomial degree");
    poly->add_option("--out", cfg.output_path, "output file");

    auto* gram = app.add_subcommand("gram", "CSV Gram matrix of the monomials under nu_q");
    add_param_flags(gram, cfg);
    gram->add_option("--degree", cfg.degree, "max monomial degree");
    add_tol_flags(gram, cfg);
    gram->add_option("--out", cfg.output_path, "output file");

    auto* measure = app.add_subcommand("measure", "CSV atom table of nu_q");
    add_param_flags(measure, cfg);
    measure->add_option("--tail-tol", cfg.tail_tol, "radial truncation tolerance");
    measure->add_option("--out", cfg.output_path, "output file");

    auto* transform = app.add_subcommand(
        "transform", "apply the transform (or its inverse) to a coefficient-vector JSON file");
    transform->add_option("input", cfg.input_path, "input JSON path (stdin when omitted)");
    transform->add_flag("--invert", cfg.invert, "apply the inverse transform");
    transform->add_option("--out", cfg.output_path, "output file");

    auto* opmat = app.add_subcommand("opmat", "CSV matrix of a chosen operator");
    add_param_flags(opmat, cfg);
    opmat->add_option("--degree", cfg.degree, "truncation degree");
    opmat->add_option("--op", cfg.op_name, "Z|D|number|alpha|Q");
    opmat->add_option("--family", family_name, "family for Q: charlier|hermite");
    opmat->add_option("--out", cfg.output_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qsb::cli::kExitBadInput;
    }

    try {
        cfg.suite = qsb::cli::suite_from_name(suite_name);
        cfg.family = qsb::io::parse_family(family_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qsb::cli::kExitBadInput;
    }

    if (verify->parsed()) {
        cfg.command = qsb::cli::Command::Verify;
        cfg.params_explicit = verify->count("--q") > 0 || verify->count("--beta") > 0;
    } else if (poly->parsed()) {
        cfg.command = qsb::cli::Command::Poly;
    } else if (gram->parsed()) {
        cfg.command = qsb::cli::Command::Gram;
    } else if (measure->parsed()) {
        cfg.command = qsb::cli::Command::Measure;
    } else if (transform->parsed()) {
        cfg.command = qsb::cli::Command::Transform;
    } else if (opmat->parsed()) {
        cfg.command = qsb::cli::Command::Opmat;
    }

    return qsb::cli::run(cfg);
}
