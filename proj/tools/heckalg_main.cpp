#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "heckalg/errors.hpp"
#include "heckalg/io.hpp"

using heckalg::io::RunOptions;

int main(int argc, char** argv) {
    CLI::App app{"hecke algebras, BRST cohomology and Dirac reduction for finite-dimensional "
                 "algebras over the rationals"};
    app.require_subcommand(1);

    RunOptions opts;
    std::string input_path;
    std::string resolution_flag = "bar";

    auto add_common = [&](CLI::App* sub, bool with_resolution = false) {
        sub->add_option("input", input_path, "input JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("-L,--truncation", opts.L, "bar-window truncation length");
        sub->add_option("--max-degree", opts.max_degree, "highest reported degree");
        sub->add_option("--min-degree", opts.min_degree, "lowest reported degree");
        sub->add_option("--stability-passes", opts.stability_passes,
                        "windows compared when deciding stability");
        sub->add_option("--format", opts.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_resolution)
            sub->add_option("--resolution", resolution_flag, "bar | ce | file:<path>");
        return sub;
    };

    auto* hecke = add_common(app.add_subcommand("hecke", "graded Hecke algebra Hk^*(A,B)"), true);
    hecke->add_option("--shifts", opts.shift_checks, "coboundary shifts per product check");
    add_common(app.add_subcommand("hk0", "direct degree-0 model: invariants of A/J"));
    add_common(app.add_subcommand("tor", "Tor_n^B(A,K) dims"));
    auto* ext = add_common(app.add_subcommand("ext", "Ext dims over B (and over A for the induced module)"));
    ext->add_option("--module", opts.module_name, "module name; defaults to the induced module");
    auto* fc = add_common(app.add_subcommand("free-cert", "freeness certificate for a candidate basis"));
    fc->add_option("--basis", opts.basis_name, "name of the candidate subspace")->required();
    add_common(app.add_subcommand("thm3", "compare the two bar-model constructions"));
    auto* red = add_common(app.add_subcommand("reduce", "Dirac reduction summary"));
    red->add_option("--module", opts.module_name, "module name; defaults to the induced module");
    auto* act = add_common(app.add_subcommand("act", "Hecke action on module cohomology"));
    act->add_option("--module", opts.module_name, "module name; defaults to the induced module");
    auto* obs = add_common(app.add_subcommand("observables", "Dirac observables A^B_V"));
    obs->add_option("--module", opts.module_name, "module name; defaults to the induced module");
    add_common(app.add_subcommand("brst", "BRST complex, cohomology and the End-complex comparison"));

    CLI11_PARSE(app, argc, argv);

    opts.command = app.get_subcommands().front()->get_name();
    if (resolution_flag.rfind("file:", 0) == 0) {
        opts.resolution = "file";
        std::ifstream f(resolution_flag.substr(5));
        if (!f) {
            std::cerr << "error: cannot open resolution file '" << resolution_flag.substr(5) << "'\n";
            return 1;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        opts.resolution_file_text = ss.str();
    } else {
        opts.resolution = resolution_flag;
    }

    try {
        heckalg::InputBundle input = heckalg::io::parse_input_file(input_path);
        heckalg::io::RunResult result = heckalg::io::run(input, opts);
        if (opts.format == "json")
            std::cout << result.report.dump(2) << "\n";
        else
            std::cout << heckalg::io::render_text(result.report);
        if (result.exit_code == 2)
            std::cerr << "warning: some reported degrees are not stable; raise -L\n";
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
