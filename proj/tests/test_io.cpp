#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "heckalg/errors.hpp"
#include "heckalg/io.hpp"

using namespace heckalg;

namespace {

std::string data_path(const std::string& name) { return std::string(HECKALG_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("parsing the shipped inputs") {
    InputBundle m2 = io::parse_input_file(data_path("m2_nilpotent.json"));
    CHECK(m2.algebra->dim() == 4);
    CHECK(m2.subalgebra);
    CHECK(m2.subalgebra->dim() == 2);
    CHECK(m2.action);
    CHECK(m2.modules.count("reg") == 1);
    CHECK(m2.subspaces.count("N_good") == 1);

    InputBundle dual = io::parse_input_file(data_path("dual_numbers.json"));
    CHECK(dual.algebra->dim() == 2);
    CHECK(dual.algebra->is_commutative());

    InputBundle a8 = io::parse_input_file(data_path("a8_advisory.json"));
    CHECK(a8.algebra->dim() == 8);
    CHECK(a8.subalgebra->dim() == 3);
}

TEST_CASE("rational literals: strings and integers only") {
    CHECK(io::json_rational(io::json::parse("\"3/4\"")) == Scalar(3, 4));
    CHECK(io::json_rational(io::json::parse("-2")) == Scalar(-2));
    CHECK_THROWS_AS(io::json_rational(io::json::parse("0.5")), ParseError);
}

TEST_CASE("validation errors name the axiom and indices") {
    // antisymmetry violation in the Lie bracket is impossible to state in the
    // [i,j,k,c] input (it is symmetrized); a Jacobi violation is reported
    std::string bad_jacobi = R"({
      "algebra": {"dim": 1, "unit": ["1"], "structure": [[0,0,0,"1"]]},
      "lie": {"dim": 3, "bracket": [[0,1,1,"2"],[0,2,2,"-2"],[1,2,0,"-1"]]}
    })";
    try {
        io::parse_input(bad_jacobi);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.axiom == "jacobi");
        CHECK(std::string(e.what()).find("i=") != std::string::npos);
    }

    std::string bad_eps = R"({
      "algebra": {"dim": 2, "unit": ["1","0"],
                  "structure": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]]},
      "subalgebra": {"inclusion": [["1","0"],["0","1"]], "eps": ["0","1"]}
    })";
    try {
        io::parse_input(bad_eps);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.axiom == "augmentation-unit");
    }

    std::string bad_assoc = R"({
      "algebra": {"dim": 3, "unit": ["1","0","0"],
        "structure": [[0,0,0,"1"],[0,1,1,"1"],[0,2,2,"1"],[1,0,1,"1"],[2,0,2,"1"],
                      [1,1,2,"1"],[2,1,1,"1"]]}
    })";
    try {
        io::parse_input(bad_assoc);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.axiom == "associativity");
    }
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
    InputBundle in = io::parse_input_file(data_path("dual_numbers.json"));
    io::RunOptions opts;
    opts.command = "hecke";
    opts.L = 3;
    opts.max_degree = 2;
    io::RunResult a = io::run(in, opts);
    io::RunResult b = io::run(in, opts);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.exit_code == 0);

    io::json reparsed = io::json::parse(a.report.dump());
    CHECK(reparsed == a.report);
    CHECK(reparsed["dims"]["0"] == 1);
    CHECK(reparsed["dims"]["1"] == 1);

    std::string text1 = io::render_text(a.report);
    std::string text2 = io::render_text(b.report);
    CHECK(text1 == text2);
}

TEST_CASE("file resolutions parse and validate") {
    InputBundle in = io::parse_input_file(data_path("dual_numbers.json"));
    std::ifstream f(data_path("koszul_dual.json"));
    std::stringstream ss;
    ss << f.rdbuf();
    io::FileResolution fr = io::parse_resolution(ss.str(), *in.subalgebra);
    CHECK(fr.complex.length() == 4);
    CHECK(fr.aug == Vec{1});

    io::RunOptions opts;
    opts.command = "hecke";
    opts.resolution = "file";
    opts.resolution_file_text = ss.str();
    opts.L = 3;
    opts.max_degree = 2;
    io::RunResult r = io::run(in, opts);
    CHECK(r.report["dims"]["0"] == 1);
    CHECK(r.report["dims"]["1"] == 1);
    CHECK(r.report["dims"]["2"] == 1);
}

TEST_CASE("every subcommand runs on its natural input") {
    InputBundle m2 = io::parse_input_file(data_path("m2_nilpotent.json"));
    InputBundle rank2 = io::parse_input_file(data_path("m2_rank2_lie.json"));

    auto run_cmd = [&](InputBundle& in, const std::string& cmd, const std::string& module_name = "",
                       const std::string& basis = "") {
        io::RunOptions opts;
        opts.command = cmd;
        opts.L = 3;
        opts.max_degree = 1;
        opts.module_name = module_name;
        opts.basis_name = basis;
        return io::run(in, opts);
    };
    CHECK(run_cmd(m2, "hecke").exit_code == 0);
    CHECK(run_cmd(m2, "hk0").report["dim"] == 1);
    CHECK(run_cmd(m2, "tor").report["vanishing_above_zero"] == true);
    CHECK(run_cmd(m2, "ext").report["shapiro_agrees"] == true);
    CHECK(run_cmd(m2, "free-cert", "", "N_good").report["pass"] == true);
    CHECK(run_cmd(m2, "free-cert", "", "N_bad").report["pass"] == false);
    CHECK(run_cmd(m2, "thm3").report["identical"] == true);
    CHECK(run_cmd(m2, "reduce").report["universal_reduction"]["pass"] == true);
    CHECK(run_cmd(m2, "observables").report["observables"]["dim"] == 3);
    CHECK(run_cmd(m2, "act", "reg").exit_code == 0);
    CHECK(run_cmd(rank2, "brst").report["theorem6"]["pass"] == true);

    CHECK_THROWS_AS(run_cmd(m2, "nonsense"), ValidationError);
    CHECK_THROWS_AS(run_cmd(m2, "ext", "missing"), ValidationError);
    CHECK_THROWS_AS(run_cmd(rank2, "hk0"), ValidationError);   // no subalgebra in that file
}
