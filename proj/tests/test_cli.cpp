#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsb/cli.hpp"

using namespace qsb;
using namespace qsb::cli;
using Catch::Matchers::WithinRel;

namespace {

RunConfig base_config(Command cmd) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.params = {0.5, 1.0};
    cfg.params_explicit = true;
    return cfg;
}

std::string temp_path(const char* name) {
    return std::string("qsb_test_") + name + ".json";
}

}  // namespace

TEST_CASE("format_g17 round-trips doubles exactly", "[cli]") {
    for (double x : {0.1, 1.0 / 3.0, 2.625, 1e300, 5e-324, -0.0, 123456.789}) {
        const auto s = io::format_g17(x);
        REQUIRE(std::strtod(s.c_str(), nullptr) == x);
    }
    REQUIRE(io::format_g17(1.0) == "1");
    REQUIRE(io::format_g17(-3.0) == "-3");
}

TEST_CASE("coefficient-vector JSON round-trip", "[cli]") {
    const QParams p{0.7, 1.3};
    std::vector<std::complex<double>> coeffs{{0.1, -0.2}, {1.0 / 3.0, 0.0}, {0.0, 2.625}};
    const auto j = io::coeff_vector_json(PolyFamily::Hermite, p, coeffs);
    const auto parsed = io::parse_coeff_vector(nlohmann::json::parse(j.dump()));
    REQUIRE(parsed.family == PolyFamily::Hermite);
    REQUIRE(parsed.params == p);
    REQUIRE(parsed.coeffs == coeffs);
}

TEST_CASE("coefficient-vector JSON rejects malformed input", "[cli]") {
    REQUIRE_THROWS(io::parse_coeff_vector(nlohmann::json::parse(
        R"({"family":"laguerre","q":0.5,"beta":1.0,"coeffs":[]})")));
    REQUIRE_THROWS(io::parse_coeff_vector(nlohmann::json::parse(
        R"({"family":"charlier","q":1.5,"beta":1.0,"coeffs":[]})")));
    REQUIRE_THROWS(io::parse_coeff_vector(nlohmann::json::parse(
        R"({"family":"charlier","q":0.5,"beta":1.0,"coeffs":[[1.0]]})")));
    REQUIRE_THROWS(io::parse_coeff_vector(nlohmann::json::parse(
        R"({"family":"charlier","q":0.5,"beta":1.0})")));
}

TEST_CASE("report JSON keeps the documented key order", "[cli]") {
    const auto rep = verify_commutation({0.5, 1.0}, 8, 1e-12);
    const auto line = io::report_json(rep).dump();
    REQUIRE(line.find("{\"identity\":") == 0);
    REQUIRE(line.find("\"q\":") != std::string::npos);
    REQUIRE(line.find("\"beta\":") != std::string::npos);
    REQUIRE(line.find("\"N\":8") != std::string::npos);
    REQUIRE(line.find("\"residual\":") != std::string::npos);
    REQUIRE(line.find("\"passed\":true") != std::string::npos);
}

TEST_CASE("poly command prints monomial rows", "[cli]") {
    auto cfg = base_config(Command::Poly);
    cfg.poly_index = 2;
    std::ostringstream out;
    REQUIRE(cmd_poly(cfg, out) == kExitOk);
    REQUIRE(out.str() == "1,-3,1\n");

    cfg.family = PolyFamily::Hermite;
    cfg.poly_index = 0;
    std::ostringstream out2;
    cmd_poly(cfg, out2);
    REQUIRE(out2.str() == "1\n");

    cfg.family = PolyFamily::Charlier;
    cfg.poly_index = 1;
    cfg.params = {0.5, 1.25};
    std::ostringstream out3;
    cmd_poly(cfg, out3);
    REQUIRE(out3.str() == "-1.25,1\n");
}

TEST_CASE("measure command emits the atom table", "[cli]") {
    auto cfg = base_config(Command::Measure);
    cfg.params = {0.0, 1.0};
    std::ostringstream out;
    REQUIRE(cmd_measure(cfg, out) == kExitOk);
    REQUIRE(out.str() == "j,radius,weight\n0,1,1\n");
}

TEST_CASE("opmat command prints the annihilation superdiagonal", "[cli]") {
    auto cfg = base_config(Command::Opmat);
    cfg.op_name = "D";
    cfg.params = {0.5, 2.0};
    cfg.degree = 3;
    std::ostringstream out;
    REQUIRE(cmd_opmat(cfg, out) == kExitOk);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "i,0,1,2,3");
    std::getline(in, line);
    REQUIRE(line == "0,0,2,0,0");
    std::getline(in, line);
    REQUIRE(line == "1,0,0,3,0");
    std::getline(in, line);
    REQUIRE(line == "2,0,0,0,3.5");

    cfg.op_name = "bogus";
    std::ostringstream devnull;
    REQUIRE_THROWS_AS(cmd_opmat(cfg, devnull), std::invalid_argument);
}

TEST_CASE("gram command has the weight diagonal", "[cli]") {
    auto cfg = base_config(Command::Gram);
    cfg.degree = 4;
    std::ostringstream out;
    REQUIRE(cmd_gram(cfg, out) == kExitOk);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "n,0,1,2,3,4");
    const auto w = weight_sequence(cfg.params, 4);
    for (int n = 0; n <= 4; ++n) {
        REQUIRE(std::getline(in, line));
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        REQUIRE(std::stoi(cell) == n);
        for (int m = 0; m <= 4; ++m) {
            REQUIRE(std::getline(row, cell, ','));
            const double v = std::strtod(cell.c_str(), nullptr);
            if (m == n)
                REQUIRE_THAT(v, WithinRel(w[static_cast<std::size_t>(n)], 1e-8));
            else
                REQUIRE(std::abs(v) < 1e-12);
        }
    }
}

TEST_CASE("verify command reports and exit codes", "[cli]") {
    auto cfg = base_config(Command::Verify);
    cfg.degree = 8;
    cfg.suite = Suite::Operators;
    std::ostringstream out;
    REQUIRE(cmd_verify(cfg, out) == kExitOk);

    int lines = 0;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) {
        ++lines;
        const auto j = nlohmann::json::parse(line);
        REQUIRE(j.at("passed").get<bool>());
        REQUIRE(j.at("q").get<double>() == 0.5);
        REQUIRE(j.at("N").get<int>() == 8);
    }
    REQUIRE(lines == 7);

    // Determinism: identical bytes on a second run.
    std::ostringstream out2;
    cmd_verify(cfg, out2);
    REQUIRE(out.str() == out2.str());
}

TEST_CASE("verify runs the default grid when no cell is given", "[cli]") {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.suite = Suite::QCore;
    cfg.degree = 8;
    std::ostringstream out;
    REQUIRE(cmd_verify(cfg, out) == kExitOk);
    int lines = 0;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) ++lines;
    REQUIRE(lines == 3 * 18);  // three qcore checks, 6 x 3 grid cells
}

TEST_CASE("dispatch maps bad parameters to exit 2", "[cli]") {
    auto cfg = base_config(Command::Verify);
    cfg.params = {1.0, 1.0};  // q outside [0,1)
    std::ostringstream out, err;
    REQUIRE(dispatch(cfg, out, err) == kExitBadInput);
    REQUIRE(err.str().find("error:") == 0);

    cfg.params = {0.5, -1.0};
    std::ostringstream err2;
    REQUIRE(dispatch(cfg, out, err2) == kExitBadInput);

    REQUIRE_THROWS_AS(suite_from_name("bogus"), std::invalid_argument);
    REQUIRE(suite_from_name("hermite") == Suite::Hermite);
}

TEST_CASE("transform command round-trips through a file", "[cli]") {
    const auto in_path = temp_path("in");
    const auto fwd_path = temp_path("fwd");
    {
        std::ofstream f(in_path);
        f << R"({"family":"charlier","q":0.5,"beta":1.0,)"
          << R"("coeffs":[[0.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]]})";
    }

    auto cfg = base_config(Command::Transform);
    cfg.input_path = in_path;
    std::ostringstream fwd;
    REQUIRE(cmd_transform(cfg, fwd) == kExitOk);

    // C_3 goes to z^3: same coefficients on the monomial side.
    const auto parsed = io::parse_coeff_vector(nlohmann::json::parse(fwd.str()));
    REQUIRE(parsed.coeffs.size() == 4);
    REQUIRE(parsed.coeffs[3] == std::complex<double>{1.0, 0.0});
    REQUIRE(parsed.family == PolyFamily::Charlier);

    {
        std::ofstream f(fwd_path);
        f << fwd.str();
    }
    auto inv_cfg = base_config(Command::Transform);
    inv_cfg.input_path = fwd_path;
    inv_cfg.invert = true;
    std::ostringstream back;
    REQUIRE(cmd_transform(inv_cfg, back) == kExitOk);
    // Numerically exact round-trip; with a canonical input the bytes match too.
    REQUIRE(back.str() == fwd.str());

    auto missing = base_config(Command::Transform);
    missing.input_path = "does_not_exist.json";
    std::ostringstream devnull, err;
    REQUIRE(dispatch(missing, devnull, err) == kExitBadInput);

    std::remove(in_path.c_str());
    std::remove(fwd_path.c_str());
}

TEST_CASE("run writes to the configured output file", "[cli]") {
    auto cfg = base_config(Command::Poly);
    cfg.poly_index = 2;
    cfg.output_path = "qsb_test_out.csv";
    std::ostringstream err;
    REQUIRE(qsb::cli::run(cfg, err) == kExitOk);
    std::ifstream in(cfg.output_path);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "1,-3,1");
    in.close();
    std::remove(cfg.output_path.c_str());
}
