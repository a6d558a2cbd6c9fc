#pragma once

// Command implementations behind the qsb executable. Each command takes
// a RunConfig and an output stream and returns a process exit status:
// 0 on success, 1 when a verification identity fails, 2 for invalid
// parameters or input (mapped from exceptions by dispatch).

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsb/io.hpp"
#include "qsb/measure.hpp"
#include "qsb/operators.hpp"
#include "qsb/orthopoly.hpp"
#include "qsb/sbt.hpp"
#include "qsb/verify.hpp"

namespace qsb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

enum class Command { Verify, Poly, Gram, Measure, Transform, Opmat };

struct RunConfig {
    Command command = Command::Verify;
    QParams params{0.5, 1.0};
    bool params_explicit = false;  // grid runs when q/beta were left at defaults
    int degree = 12;
    double tail_tol = 1e-12;
    double rel_tol = 1e-9;
    Suite suite = Suite::All;
    PolyFamily family = PolyFamily::Charlier;
    int poly_index = 0;        // --n
    std::string op_name = "Q";
    bool invert = false;
    std::string input_path;    // transform input; empty reads stdin
    std::string output_path;   // --out; empty writes stdout
};

inline Suite suite_from_name(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "ortho") return Suite::Ortho;
    if (name == "unitary") return Suite::Unitary;
    if (name == "operators") return Suite::Operators;
    if (name == "hermite") return Suite::Hermite;
    if (name == "qcore") return Suite::QCore;
    throw std::invalid_argument("qsb: unknown suite '" + name + "'");
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const VerifyOptions opt{cfg.degree, cfg.tail_tol, cfg.rel_tol};
    std::vector<QParams> cells;
    if (cfg.params_explicit) {
        check_params(cfg.params);
        cells.push_back(cfg.params);
    } else {
        cells = default_grid();
    }
    bool all_passed = true;
    for (const auto& cell : cells)
        for (const auto& rep : run_suite(cfg.suite, cell, opt)) {
            out << io::report_json(rep).dump() << '\n';
            all_passed = all_passed && rep.passed;
        }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

inline int cmd_poly(const RunConfig& cfg, std::ostream& out) {
    check_params(cfg.params);
    io::write_poly_row(out, poly_monomial(cfg.family, cfg.params, cfg.poly_index));
    return kExitOk;
}

inline int cmd_gram(const RunConfig& cfg, std::ostream& out) {
    check_params(cfg.params);
    const auto measure = nu_q_atoms(cfg.params, cfg.tail_tol);
    std::vector<std::vector<double>> rows;
    for (int n = 0; n <= cfg.degree; ++n) {
        std::vector<double> row;
        for (int m = 0; m <= cfg.degree; ++m)
            row.push_back(monomial_gram(measure, n, m, n + m + 2).real());
        rows.push_back(std::move(row));
    }
    io::write_matrix_csv(out, "n", rows);
    return kExitOk;
}

inline int cmd_measure(const RunConfig& cfg, std::ostream& out) {
    check_params(cfg.params);
    io::write_atoms_csv(out, nu_q_atoms(cfg.params, cfg.tail_tol));
    return kExitOk;
}

inline int cmd_opmat(const RunConfig& cfg, std::ostream& out) {
    check_params(cfg.params);
    BandedOperator op;
    if (cfg.op_name == "Z" || cfg.op_name == "z")
        op = op_Z(cfg.degree);
    else if (cfg.op_name == "D" || cfg.op_name == "d")
        op = op_D(cfg.params, cfg.degree);
    else if (cfg.op_name == "number")
        op = op_number(cfg.params, cfg.degree);
    else if (cfg.op_name == "alpha")
        op = op_alpha(cfg.params, cfg.degree);
    else if (cfg.op_name == "Q" || cfg.op_name == "q")
        op = op_Q(cfg.family, cfg.params, cfg.degree);
    else
        throw std::invalid_argument("qsb: unknown operator '" + cfg.op_name +
                                    "' (expected Z, D, number, alpha or Q)");
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= op.degree; ++i) {
        std::vector<double> row;
        for (int j = 0; j <= op.degree; ++j) row.push_back(op.at(i, j).real());
        rows.push_back(std::move(row));
    }
    io::write_matrix_csv(out, "i", rows);
    return kExitOk;
}

inline int cmd_transform(const RunConfig& cfg, std::ostream& out) {
    std::string text;
    if (cfg.input_path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(cfg.input_path);
        if (!in) throw std::invalid_argument("qsb: cannot open input file " + cfg.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const auto parsed = io::parse_coeff_vector(nlohmann::json::parse(text));
    std::vector<std::complex<double>> result;
    if (cfg.invert) {
        const auto f = sb_inverse(make_series(parsed.params, parsed.coeffs), parsed.family);
        result = f.coeffs;
    } else {
        const auto series = sb_transform({parsed.family, parsed.params, parsed.coeffs});
        result = series.coeffs;
    }
    out << io::coeff_vector_json(parsed.family, parsed.params, result).dump() << '\n';
    return kExitOk;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Verify: return cmd_verify(cfg, out);
            case Command::Poly: return cmd_poly(cfg, out);
            case Command::Gram: return cmd_gram(cfg, out);
            case Command::Measure: return cmd_measure(cfg, out);
            case Command::Transform: return cmd_transform(cfg, out);
            case Command::Opmat: return cmd_opmat(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

/// Run a command with --out handling: writes to the configured file or
/// to standard output.
inline int run(const RunConfig& cfg, std::ostream& err = std::cerr) {
    if (!cfg.output_path.empty()) {
        std::ofstream file(cfg.output_path);
        if (!file) {
            err << "error: cannot open output file " << cfg.output_path << '\n';
            return kExitBadInput;
        }
        return dispatch(cfg, file, err);
    }
    return dispatch(cfg, std::cout, err);
}

}  // namespace qsb::cli
