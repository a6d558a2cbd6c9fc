#pragma once

// Serialization: 17-significant-digit CSV tables, the coefficient-vector
// JSON schema {family, q, beta, coeffs}, and JSON-lines identity
// reports. All output is deterministic byte-for-byte for fixed inputs.

#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsb/measure.hpp"
#include "qsb/operators.hpp"
#include "qsb/orthopoly.hpp"

namespace qsb::io {

/// Shortest-faithful fixed formatting: 17 significant digits round-trip
/// any double exactly.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Atom table, header `j,radius,weight`.
inline void write_atoms_csv(std::ostream& os, const RadialAtomMeasure& measure) {
    os << "j,radius,weight\n";
    for (std::size_t j = 0; j < measure.atoms.size(); ++j)
        os << j << ',' << format_g17(measure.atoms[j].radius) << ','
           << format_g17(measure.atoms[j].weight) << '\n';
}

/// Square table of real values with an index header row and an index
/// first column.
inline void write_matrix_csv(std::ostream& os, const std::string& row_label,
                             const std::vector<std::vector<double>>& rows) {
    os << row_label;
    if (!rows.empty())
        for (std::size_t j = 0; j < rows[0].size(); ++j) os << ',' << j;
    os << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << i;
        for (double v : rows[i]) os << ',' << format_g17(v);
        os << '\n';
    }
}

/// One coefficient row, constant term first (monomial coefficients of a
/// basis polynomial are real, so only the real parts are printed).
inline void write_poly_row(std::ostream& os, const MonomialPoly& poly) {
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
        if (k) os << ',';
        os << format_g17(poly.coeffs[k].real());
    }
    os << '\n';
}

inline PolyFamily parse_family(const std::string& name) {
    if (name == "charlier") return PolyFamily::Charlier;
    if (name == "hermite") return PolyFamily::Hermite;
    throw std::invalid_argument("qsb: unknown polynomial family '" + name + "'");
}

/// Coefficient-vector JSON: {"family":..., "q":..., "beta":...,
/// "coeffs": [[re, im], ...]}. The same schema carries both sides of the
/// transform; `family` names the orthogonal basis the vector transforms
/// back into.
inline nlohmann::ordered_json coeff_vector_json(PolyFamily family, const QParams& p,
                                                const std::vector<std::complex<double>>& coeffs) {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["q"] = p.q;
    j["beta"] = p.beta;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) arr.push_back({c.real(), c.imag()});
    j["coeffs"] = std::move(arr);
    return j;
}

struct ParsedCoeffVector {
    PolyFamily family;
    QParams params;
    std::vector<std::complex<double>> coeffs;
};

inline ParsedCoeffVector parse_coeff_vector(const nlohmann::json& j) {
    ParsedCoeffVector out;
    out.family = parse_family(j.at("family").get<std::string>());
    out.params = {j.at("q").get<double>(), j.at("beta").get<double>()};
    check_params(out.params);
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("qsb: coefficient entries must be [re, im] pairs");
        out.coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return out;
}

/// JSON-lines form of an identity report.
inline nlohmann::ordered_json report_json(const IdentityReport& rep) {
    nlohmann::ordered_json j;
    j["identity"] = rep.identity;
    j["q"] = rep.params.q;
    j["beta"] = rep.params.beta;
    j["N"] = rep.truncation;
    j["residual"] = rep.residual;
    j["passed"] = rep.passed;
    return j;
}

}  // namespace qsb::io
