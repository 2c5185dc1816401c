#include "heckalg/io.hpp"

#include <fstream>
#include <sstream>

#include "heckalg/errors.hpp"

namespace heckalg {
namespace io {

Scalar json_rational(const json& v) {
    if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("rational literals must be strings \"p/q\" or integers, got " + v.dump());
}

namespace {

Vec json_vec(const json& v, int expect = -1) {
    if (!v.is_array()) throw ParseError("expected an array of rationals, got " + v.dump());
    Vec out;
    for (const auto& x : v) out.push_back(json_rational(x));
    if (expect >= 0 && static_cast<int>(out.size()) != expect)
        throw ParseError("expected a vector of length " + std::to_string(expect));
    return out;
}

json vec_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_string(x));
    return out;
}

json dims_json(const std::map<int, int>& dims) {
    json out = json::object();
    for (const auto& [n, d] : dims) out[std::to_string(n)] = d;
    return out;
}

json int_vec_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

json table_json(const GradedAlgebraTable& t) {
    json out = json::object();
    out["convention"] = t.convention;
    out["dims"] = dims_json(t.dims);
    json prods = json::object();
    for (const auto& [nm, tab] : t.products) {
        json rows = json::array();
        for (const auto& row : tab) {
            json r = json::array();
            for (const auto& coords : row) r.push_back(vec_json(coords));
            rows.push_back(r);
        }
        prods[std::to_string(nm.first) + "," + std::to_string(nm.second)] = rows;
    }
    out["products"] = prods;
    return out;
}

json subspace_json(const Subspace& s) {
    json out = json::object();
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    json rows = json::array();
    for (int i = 0; i < s.dim(); ++i) rows.push_back(vec_json(s.basis_vector(i)));
    out["basis"] = rows;
    return out;
}

json matrix_json(const SparseMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row_dense(r)));
    return rows;
}

}  // namespace

InputBundle parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.contains("algebra")) throw ParseError("missing required field 'algebra'");
    InputBundle in;

    {
        const json& a = doc["algebra"];
        if (!a.contains("dim")) throw ParseError("algebra needs 'dim'");
        int dim = a["dim"].get<int>();
        std::vector<std::string> labels;
        if (a.contains("labels"))
            for (const auto& l : a["labels"]) labels.push_back(l.get<std::string>());
        Vec unit = json_vec(a.at("unit"), dim);
        std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, zero_vec(dim)));
        for (const auto& t : a.at("structure")) {
            if (!t.is_array() || t.size() != 4)
                throw ParseError("structure entries are [i, j, k, coeff] quadruples");
            int i = t[0].get<int>(), j = t[1].get<int>(), k = t[2].get<int>();
            if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
                throw ParseError("structure index out of range in " + t.dump());
            table[i][j][k] += json_rational(t[3]);
        }
        in.algebra = std::make_shared<FinAlgebra>(dim, labels, unit, table);
    }

    if (doc.contains("subalgebra")) {
        const json& s = doc["subalgebra"];
        std::vector<Vec> cols;
        for (const auto& c : s.at("inclusion")) cols.push_back(json_vec(c, in.algebra->dim()));
        Vec eps = json_vec(s.at("eps"), static_cast<int>(cols.size()));
        in.subalgebra = AugmentedSubalgebra(in.algebra, cols, eps);
    }

    if (doc.contains("lie")) {
        const json& l = doc["lie"];
        int dim = l.at("dim").get<int>();
        std::vector<std::vector<Vec>> bracket(dim, std::vector<Vec>(dim, zero_vec(dim)));
        for (const auto& t : l.at("bracket")) {
            if (!t.is_array() || t.size() != 4)
                throw ParseError("bracket entries are [i, j, k, coeff] quadruples");
            int i = t[0].get<int>(), j = t[1].get<int>(), k = t[2].get<int>();
            if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
                throw ParseError("bracket index out of range in " + t.dump());
            Scalar c = json_rational(t[3]);
            bracket[i][j][k] += c;
            bracket[j][i][k] -= c;
        }
        in.lie = std::make_shared<LieAlgebra>(dim, bracket);
    }

    if (doc.contains("action")) {
        if (!in.lie) throw ParseError("'action' requires 'lie'");
        std::vector<Vec> rho;
        for (const auto& c : doc["action"].at("rho")) rho.push_back(json_vec(c, in.algebra->dim()));
        in.action = LieAction(in.lie, in.algebra, rho);
    }

    if (doc.contains("modules")) {
        for (const auto& [name, mats] : doc["modules"].items()) {
            if (!mats.is_array() || mats.size() != static_cast<std::size_t>(in.algebra->dim()))
                throw ParseError("module '" + name + "' needs one matrix per algebra basis element");
            int dim = -1;
            std::vector<SparseMatrix> action;
            for (const auto& mat : mats) {
                std::vector<Vec> rows;
                for (const auto& row : mat) rows.push_back(json_vec(row));
                if (dim < 0) dim = static_cast<int>(rows.size());
                for (const auto& r : rows)
                    if (static_cast<int>(r.size()) != dim)
                        throw ParseError("module '" + name + "' has a non-square action matrix");
                if (static_cast<int>(rows.size()) != dim)
                    throw ParseError("module '" + name + "' has inconsistent matrix sizes");
                action.push_back(SparseMatrix::from_rows(rows, dim));
            }
            in.modules.emplace(name, LeftModule(in.algebra, dim, action, name));
        }
    }

    if (doc.contains("subspaces")) {
        for (const auto& [name, vecs] : doc["subspaces"].items()) {
            std::vector<Vec> gens;
            for (const auto& v : vecs) gens.push_back(json_vec(v, in.algebra->dim()));
            in.subspaces.emplace(name, Subspace::from_vectors(in.algebra->dim(), gens));
        }
    }
    return in;
}

InputBundle parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_input(ss.str());
}

FileResolution parse_resolution(const std::string& text, const AugmentedSubalgebra& b) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    std::vector<int> fibers;
    for (const auto& d : doc.at("fiber_dims")) fibers.push_back(d.get<int>());
    if (fibers.empty()) throw ParseError("resolution needs at least the degree-0 fiber");
    std::vector<AMat> d;
    d.emplace_back();
    const json& dj = doc.at("d");
    if (dj.size() != fibers.size()) throw ParseError("resolution needs one 'd' entry per degree");
    for (std::size_t s = 1; s < fibers.size(); ++s) {
        AMat m(fibers[s - 1], fibers[s]);
        const json& mat = dj[s];
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(fibers[s - 1]))
            throw ParseError("d[" + std::to_string(s) + "] must have fiber_dims[" + std::to_string(s - 1) +
                             "] rows");
        for (int r = 0; r < fibers[s - 1]; ++r) {
            const json& row = mat[r];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(fibers[s]))
                throw ParseError("d[" + std::to_string(s) + "] row length mismatch");
            for (int c = 0; c < fibers[s]; ++c) m.set(r, c, json_vec(row[c], b.dim()));
        }
        d.push_back(std::move(m));
    }
    FileResolution out{FreeAComplex(b.algebra_ptr(), fibers, d), zero_vec(fibers[0])};
    if (doc.contains("aug"))
        out.aug = json_vec(doc.at("aug"), fibers[0]);
    else if (fibers[0] == 1)
        out.aug[0] = 1;
    else
        throw ParseError("resolution with a multi-dimensional degree-0 fiber needs 'aug'");
    out.complex.validate();
    return out;
}

namespace {

const LeftModule& pick_module(const InputBundle& in, const std::string& name,
                              std::optional<LeftModule>& storage) {
    if (name.empty() || name == "induced") {
        if (!in.subalgebra) throw ValidationError("cli", "the induced module needs a subalgebra");
        storage = induced_module(in.algebra, *in.subalgebra).module;
        return *storage;
    }
    auto it = in.modules.find(name);
    if (it == in.modules.end()) throw ValidationError("cli", "unknown module '" + name + "'");
    return it->second;
}

HeckeResult run_hecke(const InputBundle& in, const RunOptions& opts) {
    HeckeOptions h;
    h.L = opts.L;
    h.min_degree = opts.min_degree;
    h.max_degree = opts.max_degree;
    h.stability_passes = opts.stability_passes;
    h.shift_checks = opts.shift_checks;
    if (opts.resolution == "bar") {
        if (!in.subalgebra) throw ValidationError("cli", "bar resolution needs a subalgebra");
        return hecke_algebra_bar(in.algebra, *in.subalgebra, h);
    }
    if (opts.resolution == "ce") {
        if (!in.action) throw ValidationError("cli", "ce resolution needs a Lie action");
        return hecke_algebra_ce(*in.action, h);
    }
    if (opts.resolution == "file") {
        if (!in.subalgebra) throw ValidationError("cli", "file resolution needs a subalgebra");
        FileResolution fr = parse_resolution(opts.resolution_file_text, *in.subalgebra);
        return hecke_algebra_file(in.algebra, *in.subalgebra, fr.complex, fr.aug, h);
    }
    throw ValidationError("cli", "unknown resolution '" + opts.resolution + "'");
}

json hecke_json(const HeckeResult& r) {
    json out = json::object();
    out["resolution"] = r.resolution_tag;
    out["window"] = r.window;
    out["dims"] = dims_json(r.algebra.table.dims);
    json stable = json::object();
    for (const auto& [n, s] : r.stable) stable[std::to_string(n)] = s;
    out["stable"] = stable;
    json wd = json::object();
    for (const auto& [n, dims] : r.window_dims) wd[std::to_string(n)] = int_vec_json(dims);
    out["window_dims"] = wd;
    out["table"] = table_json(r.algebra.table);
    out["table_opposite"] = table_json(r.table_opposite);
    if (r.tor_checked) {
        out["tor"] = int_vec_json(r.tor);
        out["tor_vanishing"] = r.tor_vanishing;
        out["advisory"] = r.advisory;
    }
    out["note"] = "table products use composition (f o g); Hk^0 with this product is the opposite "
                  "of the invariants algebra of hk0";
    return out;
}

}  // namespace

RunResult run(const InputBundle& in, const RunOptions& opts) {
    RunResult rr;
    json& out = rr.report;
    out["command"] = opts.command;

    if (opts.command == "hecke") {
        HeckeResult r = run_hecke(in, opts);
        out.update(hecke_json(r));
        if (!r.all_stable()) rr.exit_code = 2;

    } else if (opts.command == "hk0") {
        if (!in.subalgebra) throw ValidationError("cli", "hk0 needs a subalgebra");
        Hk0Direct r = hk0_direct(in.algebra, *in.subalgebra);
        out["dim"] = r.inv.dim();
        out["unit_class"] = r.unit_class;
        out["representative_lifts"] = [&] {
            json lifts = json::array();
            for (const auto& v : r.rep_lifts) lifts.push_back(vec_json(v));
            return lifts;
        }();
        out["table"] = table_json(r.table);
        out["note"] = "product [a1][a2] = [a1 a2] on invariants of A/J; the degree-0 Hecke table is "
                      "its opposite";

    } else if (opts.command == "tor") {
        if (!in.subalgebra) throw ValidationError("cli", "tor needs a subalgebra");
        std::vector<int> dims = tor_dims(in.algebra, *in.subalgebra, opts.L);
        out["L"] = opts.L;
        out["dims"] = int_vec_json(dims);
        bool vanishing = true;
        for (std::size_t n = 1; n < dims.size(); ++n) vanishing = vanishing && dims[n] == 0;
        out["vanishing_above_zero"] = vanishing;

    } else if (opts.command == "ext") {
        if (!in.subalgebra) throw ValidationError("cli", "ext needs a subalgebra");
        const AugmentedSubalgebra& b = *in.subalgebra;
        if (opts.module_name.empty() || opts.module_name == "induced") {
            SelfExtReport r = ext_A_selfext(in.algebra, b, opts.L);
            InducedModule v = induced_module(in.algebra, b);
            std::vector<int> ext_b = ext_B_dims(b, restrict_to_subalgebra(v.module, b), opts.L);
            out["module"] = "induced";
            out["ext_B_dims"] = int_vec_json(ext_b);
            out["ext_A_dims"] = int_vec_json(r.dims);
            out["tor"] = int_vec_json(r.tor);
            out["advisory"] = r.advisory;
            out["shapiro_agrees"] = ext_b == r.dims;
        } else {
            std::optional<LeftModule> storage;
            const LeftModule& v = pick_module(in, opts.module_name, storage);
            std::vector<int> dims = ext_B_dims(b, restrict_to_subalgebra(v, b), opts.L);
            out["module"] = opts.module_name;
            out["ext_B_dims"] = int_vec_json(dims);
        }

    } else if (opts.command == "free-cert") {
        if (!in.subalgebra) throw ValidationError("cli", "free-cert needs a subalgebra");
        if (opts.basis_name.empty()) throw ValidationError("cli", "free-cert needs --basis <name>");
        auto it = in.subspaces.find(opts.basis_name);
        if (it == in.subspaces.end())
            throw ValidationError("cli", "unknown subspace '" + opts.basis_name + "'");
        bool pass = freeness_certificate(in.algebra, *in.subalgebra, it->second);
        out["basis"] = opts.basis_name;
        out["pass"] = pass;

    } else if (opts.command == "thm3") {
        if (!in.subalgebra) throw ValidationError("cli", "thm3 needs a subalgebra");
        Thm3Report r = theorem3_consistency(in.algebra, *in.subalgebra, opts.L);
        out["L"] = opts.L;
        out["identical"] = r.identical;
        out["detail"] = r.detail;

    } else if (opts.command == "observables") {
        if (!in.subalgebra) throw ValidationError("cli", "observables needs a subalgebra");
        std::optional<LeftModule> storage;
        const LeftModule& v = pick_module(in, opts.module_name, storage);
        DiracReport r = dirac_observables(in.algebra, *in.subalgebra, v);
        out["module"] = v.name();
        out["invariants"] = subspace_json(r.invariant_subspace);
        out["observables"] = subspace_json(r.observables);
        out["closed_under_multiplication"] = r.closed_under_multiplication;
        json ops = json::array();
        for (const auto& op : r.induced_ops) ops.push_back(matrix_json(op));
        out["induced_operators"] = ops;
        out["operator_span_dim"] = r.operator_span.dim();

    } else if (opts.command == "reduce") {
        if (!in.subalgebra) throw ValidationError("cli", "reduce needs a subalgebra");
        const AugmentedSubalgebra& b = *in.subalgebra;
        std::optional<LeftModule> storage;
        const LeftModule& v = pick_module(in, opts.module_name, storage);
        DiracReport dr = dirac_observables(in.algebra, b, v);
        HeckeOptions h;
        h.L = opts.L;
        h.min_degree = 0;
        h.max_degree = 0;
        h.stability_passes = opts.stability_passes;
        HeckeResult hk = hecke_algebra_bar(in.algebra, b, h);
        UniversalReductionReport ur = universal_reduction_check(in.algebra, b, v, hk.algebra.reps.at(0));
        Hk0Direct direct = hk0_direct(in.algebra, b);
        out["module"] = v.name();
        out["physical_states_dim"] = dr.invariant_subspace.dim();
        out["observables_dim"] = dr.observables.dim();
        out["observables_closed"] = dr.closed_under_multiplication;
        out["hk0_dim"] = hk.algebra.table.dims.at(0);
        out["hk0_stable"] = hk.stable.at(0);
        out["hk0_direct_dim"] = direct.inv.dim();
        json u = json::object();
        u["pass"] = ur.pass;
        u["components_are_observables"] = ur.components_are_observables;
        u["operators_contained"] = ur.operators_contained;
        u["action_matches_component"] = ur.action_matches_component;
        u["detail"] = ur.detail;
        out["universal_reduction"] = u;
        if (!hk.stable.at(0)) rr.exit_code = 2;

    } else if (opts.command == "act") {
        if (!in.subalgebra) throw ValidationError("cli", "act needs a subalgebra");
        const AugmentedSubalgebra& b = *in.subalgebra;
        std::optional<LeftModule> storage;
        const LeftModule& v = pick_module(in, opts.module_name, storage);
        HeckeOptions h;
        h.L = opts.L;
        h.min_degree = 0;
        h.max_degree = opts.max_degree;
        h.stability_passes = opts.stability_passes;
        HeckeResult hk = hecke_algebra_bar(in.algebra, b, h);
        ModuleCohomology mc = module_cohomology(v, b, opts.L);
        out["module"] = v.name();
        out["hecke_dims"] = dims_json(hk.algebra.table.dims);
        out["module_cohomology_dims"] = int_vec_json(mc.dims);
        json actions = json::object();
        for (int m = 0; m <= opts.max_degree; ++m) {
            for (int n = 0; n + m <= static_cast<int>(mc.dims.size()) - 1; ++n) {
                const auto& hreps = hk.algebra.reps.at(m);
                auto hn = mc.seq.cohomology(n);
                if (hreps.empty() || hn.dim == 0) continue;
                json block = json::array();
                for (std::size_t j = 0; j < hreps.size(); ++j) {
                    json per_class = json::array();
                    for (int i = 0; i < hn.dim; ++i) {
                        Vec coords = act_on_cohomology(v, mc.seq, n, hn.reps[i], hreps[j]);
                        per_class.push_back(vec_json(coords));
                    }
                    block.push_back(per_class);
                }
                actions[std::to_string(n) + "," + std::to_string(m)] = block;
            }
        }
        out["action"] = actions;
        out["note"] = "action[n,m][j][i] = coordinates of [phi_i o f_j] in H^{n+m}(V)";
        if (!hk.all_stable()) rr.exit_code = 2;

    } else if (opts.command == "brst") {
        if (!in.action) throw ValidationError("cli", "brst needs a Lie action");
        BrstComplex bc = build_brst_complex(*in.action);
        Thm6Report t6 = theorem6_isomorphism(*in.action);
        out["rank"] = bc.rank;
        json sd = json::object();
        for (const auto& [deg, d] : bc.space_dims) sd[std::to_string(deg)] = d;
        out["space_dims"] = sd;
        out["cohomology_dims"] = dims_json(bc.cohomology_dims);
        json norm = json::object();
        norm["literal_matches_wedge"] = bc.element.literal_matches;
        norm["quadratic_normalization"] = bc.element.quadratic_normalization
                                              ? rational_string(*bc.element.quadratic_normalization)
                                              : "n/a";
        out["normalization"] = norm;
        json t = json::object();
        t["pass"] = t6.pass;
        t["intertwines"] = t6.intertwines;
        t["algebra_map"] = t6.algebra_map;
        t["gradings_match"] = t6.gradings_match;
        t["cohomology_dims_match"] = t6.dims_match;
        if (!t6.first_failure.empty()) t["first_failure"] = t6.first_failure;
        out["theorem6"] = t;

    } else {
        throw ValidationError("cli", "unknown command '" + opts.command + "'");
    }
    return rr;
}

namespace {

void render(const json& v, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [k, val] : v.items()) {
            if (val.is_object()) {
                os << pad << k << ":\n";
                render(val, os, indent + 2);
            } else if (val.is_array() && !val.empty() && (val[0].is_array() || val[0].is_object())) {
                os << pad << k << ":\n";
                render(val, os, indent + 2);
            } else {
                os << pad << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render(item, os, indent + 2);
            } else {
                os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(report, os, 0);
    return os.str();
}

}  // namespace io
}  // namespace heckalg
