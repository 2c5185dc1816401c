#pragma once

#include <json.hpp>

#include "heckalg/brst.hpp"
#include "heckalg/hecke.hpp"

namespace heckalg {

struct InputBundle {
    AlgebraPtr algebra;
    std::optional<AugmentedSubalgebra> subalgebra;
    LiePtr lie;
    std::optional<LieAction> action;
    std::map<std::string, LeftModule> modules;
    std::map<std::string, Subspace> subspaces;
};

namespace io {

using json = nlohmann::ordered_json;

// Strings "p/q" or plain JSON integers; floats are rejected.
Scalar json_rational(const json& v);

InputBundle parse_input(const std::string& text);
InputBundle parse_input_file(const std::string& path);

// Free resolution of K over B in fiber format: {"fiber_dims": [..],
// "d": [null, rows x cols of B-coordinate vectors, ..], "aug": [..]}.
struct FileResolution {
    FreeAComplex complex;   // over B
    Vec aug;                // functional on the degree-0 fiber
};
FileResolution parse_resolution(const std::string& text, const AugmentedSubalgebra& b);

struct RunOptions {
    std::string command;
    std::string resolution = "bar";            // bar | ce | file:<path>
    std::string resolution_file_text;          // contents when resolution is a file
    int L = 4;
    int min_degree = 0;
    int max_degree = 2;
    int stability_passes = 2;
    int shift_checks = 1;
    std::string module_name;                   // ext/reduce/act/observables; empty = induced A/J
    std::string basis_name;                    // free-cert candidate
    std::string format = "text";               // text | json
};

struct RunResult {
    json report;
    int exit_code = 0;   // 0 ok, 2 unstable truncation
};

RunResult run(const InputBundle& input, const RunOptions& opts);

std::string render_text(const json& report);

}  // namespace io
}  // namespace heckalg
