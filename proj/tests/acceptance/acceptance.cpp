// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is pinned to exact values and tolerances here; the
// shipped inputs under data/ are the test corpus.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../checks.hpp"
#include "../oracles.hpp"
#include "heckalg/brst.hpp"
#include "heckalg/io.hpp"

using namespace heckalg;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "PASS criterion " << number << ": " << what << " (" << ms << " ms)\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << what << " -- " << e.what() << "\n";
    }
}

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failure(msg);
}

std::string data_path(const std::string& name) { return std::string(HECKALG_DATA_DIR) + "/" + name; }

InputBundle load(const std::string& name) { return io::parse_input_file(data_path(name)); }

struct BarPair {
    std::string name;
    AlgebraPtr a;
    AugmentedSubalgebra b;
    int L;   // shipped window for the structural checks
};

std::vector<BarPair> shipped_pairs() {
    std::vector<BarPair> out;
    InputBundle dual = load("dual_numbers.json");
    out.push_back({"dual_numbers", dual.algebra, *dual.subalgebra, 5});
    InputBundle m2 = load("m2_nilpotent.json");
    out.push_back({"m2_nilpotent", m2.algebra, *m2.subalgebra, 5});
    InputBundle triv = load("m2_trivial_b.json");
    out.push_back({"m2_trivial_b", triv.algebra, *triv.subalgebra, 5});
    InputBundle a8 = load("a8_advisory.json");
    out.push_back({"a8_advisory", a8.algebra, *a8.subalgebra, 5});
    return out;
}

std::vector<std::pair<std::string, LieAction>> shipped_actions() {
    std::vector<std::pair<std::string, LieAction>> out;
    InputBundle m2 = load("m2_nilpotent.json");
    out.emplace_back("m2_rank1", *m2.action);
    InputBundle rank2 = load("m2_rank2_lie.json");
    out.emplace_back("m2_rank2", *rank2.action);
    InputBundle dual = load("dual_numbers.json");
    out.emplace_back("dual_rank1", *dual.action);
    return out;
}

void check_structural(const std::string& name, ComplexPtr x) {
    // scalar d^2 = 0, entrywise
    x->scalar_complex().validate();
    // fiber-level d^2 = 0, entrywise
    x->validate();
    EndWindow w(x);
    // total differential squares to zero as matrices, entrywise
    for (int n = -1; n <= 1; ++n) {
        SparseMatrix dd = w.differential_matrix(n + 1).multiply(w.differential_matrix(n));
        require(dd.is_zero(), name + ": total differential fails d^2 = 0 at degree " +
                                  std::to_string(n));
    }
    // Eq-7 identities on random homogeneous cochains, exact
    std::mt19937 rng(2024);
    for (int n = -1; n <= 2; ++n)
        for (int t = 0; t < 20; ++t) {
            HomCochain f = random_end_cochain(x, n, rng);
            auto [dp, ds] = partial_differentials(f);
            require(cochains_equal(dp.plus(ds), end_differential(f)), name + ": d' + d'' != d");
            require(partial_differentials(dp).first.is_zero(), name + ": d'^2 != 0");
            require(partial_differentials(ds).second.is_zero(), name + ": d''^2 != 0");
            require(partial_differentials(dp).second.plus(partial_differentials(ds).first).is_zero(),
                    name + ": d'd'' + d''d' != 0");
        }
}

}  // namespace

int main() {
    std::cout << "acceptance suite over " << data_path("") << "\n";

    criterion(1, "structural axioms: d^2 = 0 exactly, per-example runtime < 10 s", [] {
        for (const auto& p : shipped_pairs()) {
            auto t0 = std::chrono::steady_clock::now();
            int L = p.name == "a8_advisory" ? 4 : p.L;
            auto x = std::make_shared<FreeAComplex>(induced_bar_complex(p.a, p.b, L));
            check_structural(p.name + "/bar", x);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            require(secs < 10.0, p.name + " exceeded 10 s (" + std::to_string(secs) + ")");
        }
        for (const auto& [name, act] : shipped_actions()) {
            auto t0 = std::chrono::steady_clock::now();
            auto x = std::make_shared<FreeAComplex>(ce_complex(act));
            check_structural(name + "/ce", x);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            require(secs < 10.0, name + " exceeded 10 s");
        }
    });

    criterion(2, "Lemma 1: superderivation identity on 100 random pairs per complex", [] {
        std::mt19937 rng(4096);
        auto check_pairs = [&](const std::string& name, ComplexPtr x) {
            for (int t = 0; t < 100; ++t) {
                int n = static_cast<int>(rng() % 4) - 1;
                int m = static_cast<int>(rng() % 4) - 1;
                HomCochain f = random_end_cochain(x, n, rng);
                HomCochain g = random_end_cochain(x, m, rng);
                HomCochain lhs = end_differential(compose_cochains(f, g));
                HomCochain rhs =
                    compose_cochains(end_differential(f), g)
                        .plus(compose_cochains(f, end_differential(g)).scaled(n % 2 == 0 ? 1 : -1));
                require(cochains_equal(lhs, rhs), name + ": superderivation identity failed");
            }
        };
        for (const auto& p : shipped_pairs()) {
            int L = p.name == "a8_advisory" ? 3 : 4;
            check_pairs(p.name, std::make_shared<FreeAComplex>(induced_bar_complex(p.a, p.b, L)));
        }
        for (const auto& [name, act] : shipped_actions())
            check_pairs(name, std::make_shared<FreeAComplex>(ce_complex(act)));
    });

    criterion(3, "Theorem 1: product tables invariant under 20 coboundary shifts", [] {
        CohomologyAlgebraOptions opts;
        opts.shift_checks = 20;
        for (const auto& p : shipped_pairs()) {
            if (p.name == "a8_advisory") continue;   // covered below at its own window
            FreeAComplex big = induced_bar_complex(p.a, p.b, 5);
            EndWindow w(std::make_shared<FreeAComplex>(big), 4);
            cohomology_algebra(w, 0, 2, opts);   // throws on any shifted mismatch
        }
        {
            InputBundle a8 = load("a8_advisory.json");
            FreeAComplex big = induced_bar_complex(a8.algebra, *a8.subalgebra, 3);
            EndWindow w(std::make_shared<FreeAComplex>(big), 2);
            cohomology_algebra(w, 0, 1, opts);
        }
        for (const auto& [name, act] : shipped_actions()) {
            EndWindow w(std::make_shared<FreeAComplex>(ce_complex(act)));
            cohomology_algebra(w, 0, act.lie().dim(), opts);
        }
    });

    criterion(4, "Theorem 2: bar vs Koszul agree; acyclic padding leaves tables unchanged", [] {
        InputBundle dual = load("dual_numbers.json");
        AlgebraPtr d = dual.algebra;
        const AugmentedSubalgebra& b = *dual.subalgebra;

        io::RunOptions bar_opts;
        bar_opts.command = "hecke";
        bar_opts.L = 4;
        bar_opts.max_degree = 2;
        io::RunResult via_bar = io::run(dual, bar_opts);
        io::RunOptions file_opts = bar_opts;
        file_opts.resolution = "file";
        {
            std::ifstream f(data_path("koszul_dual.json"));
            std::stringstream ss;
            ss << f.rdbuf();
            file_opts.resolution_file_text = ss.str();
        }
        io::RunResult via_file = io::run(dual, file_opts);
        require(via_bar.report["dims"] == via_file.report["dims"],
                "bar and Koszul dims differ");
        require(via_bar.report["table"]["products"] == via_file.report["table"]["products"],
                "bar and Koszul product tables differ");
        require(via_bar.report["dims"]["0"] == 1 && via_bar.report["dims"]["1"] == 1 &&
                    via_bar.report["dims"]["2"] == 1,
                "dual-numbers Hecke dims are not (1,1,1)");

        // explicit comparison data between the two resolutions, then transport
        auto bar_b5 = std::make_shared<FreeAComplex>(bar_resolution_B(b, 5));
        auto bar_b4 = std::make_shared<FreeAComplex>(bar_b5->truncated(4));
        std::vector<AMat> dk;
        dk.emplace_back();
        for (int s = 1; s <= 5; ++s) {
            AMat m(1, 1);
            m.set(0, 0, Vec{0, 1});
            dk.push_back(std::move(m));
        }
        auto kos_b5 = std::make_shared<FreeAComplex>(FreeAComplex(b.algebra_ptr(), {1, 1, 1, 1, 1, 1}, dk));
        auto kos_b4 = std::make_shared<FreeAComplex>(kos_b5->truncated(4));
        Comparison cmp = lift_comparison(b, bar_b4, kos_b4, Vec{1}, Vec{1});

        auto bar_a5 = std::make_shared<FreeAComplex>(tensor_up(d, b, *bar_b5));
        auto bar_a4 = std::make_shared<FreeAComplex>(bar_a5->truncated(4));
        auto kos_a5 = std::make_shared<FreeAComplex>(tensor_up(d, b, *kos_b5));
        auto kos_a4 = std::make_shared<FreeAComplex>(kos_a5->truncated(4));
        EndWindow wx(bar_a4, bar_a5), wy(kos_a4, kos_a5);
        HomCochain F = tensor_up_map(b, cmp.F, bar_a4, kos_a4);
        HomCochain Fp = tensor_up_map(b, cmp.Fp, kos_a4, bar_a4);
        HomCochain h = tensor_up_map(b, cmp.h, bar_a4, bar_a4);
        HomCochain hp = tensor_up_map(b, cmp.hp, kos_a4, kos_a4);
        TransportReport tr = chain_map_transport(wx, wy, F, Fp, h, hp, 0, 2);
        require(tr.pass, "bar <-> Koszul transport failed: " + tr.detail);

        // acyclic padding
        PaddedComplex pad4 = pad_with_acyclic(bar_a4, 2);
        PaddedComplex pad5 = pad_with_acyclic(bar_a5, 2);
        EndWindow wp(pad4.padded, pad5.padded);
        TransportReport tp =
            chain_map_transport(wx, wp, pad4.include, pad4.project, pad4.h_x, pad4.h_padded, 0, 2);
        require(tp.pass, "padding transport failed: " + tp.detail);
        CohomologyAlgebra padded_alg = cohomology_algebra(wp, 0, 2);
        CohomologyAlgebra plain_alg = cohomology_algebra(wx, 0, 2);
        require(padded_alg.table.dims == plain_alg.table.dims, "padding changed the dims");
    });

    criterion(5, "Theorem 3: both bar-model constructions literally identical", [] {
        for (const auto& p : shipped_pairs()) {
            int L = p.name == "a8_advisory" ? 3 : 4;
            Thm3Report r = theorem3_consistency(p.a, p.b, L);
            require(r.identical, p.name + ": " + r.detail);
        }
    });

    criterion(6, "Theorem 5: dims triangle and the Hk0 table on certified-free pairs", [] {
        struct Case {
            std::string file;
            std::string basis;
            std::vector<int> expected;   // frozen from the independent oracles
        };
        // dual numbers: Koszul oracle with x acting by zero on K gives
        // (1,1,1,1); m2: the oracle with the nilpotent action on A/J gives
        // (1,0,0,0) -- both recomputed here rather than trusted
        for (const Case& c : {Case{"dual_numbers.json", "", {1, 1, 1, 1}},
                              Case{"m2_nilpotent.json", "N_good", {1, 0, 0, 0}}}) {
            InputBundle in = load(c.file);
            AlgebraPtr a = in.algebra;
            const AugmentedSubalgebra& b = *in.subalgebra;

            Subspace candidate = c.basis.empty()
                                     ? Subspace::from_vectors(a->dim(), {a->unit()})
                                     : in.subspaces.at(c.basis);
            require(freeness_certificate(a, b, candidate), c.file + ": freeness certificate failed");

            // oracle recomputation
            std::vector<int> oracle;
            if (c.file == "dual_numbers.json") {
                SparseMatrix x_on_k(1, 1);
                oracle = oracles::koszul_ext_dims(x_on_k, 4);
            } else {
                SparseMatrix n_action(2, 2);
                n_action.set(0, 1, 1);
                oracle = oracles::koszul_ext_dims(n_action, 4);
            }
            require(oracle == c.expected, c.file + ": oracle disagrees with the frozen values");

            HeckeOptions opts;
            opts.L = 5;
            opts.max_degree = 3;
            HeckeResult hk = hecke_algebra_bar(a, b, opts);
            require(hk.tor_vanishing, c.file + ": Tor did not vanish");
            SelfExtReport ext_a = ext_A_selfext(a, b, 4);
            InducedModule v = induced_module(a, b);
            std::vector<int> ext_b = ext_B_dims(b, restrict_to_subalgebra(v.module, b), 4);
            for (int n = 0; n <= 3; ++n) {
                require(hk.algebra.table.dims.at(n) == c.expected[n],
                        c.file + ": Hecke dim differs from the frozen oracle value at degree " +
                            std::to_string(n));
                require(ext_a.dims[n] == c.expected[n], c.file + ": Ext_A dim mismatch");
                require(ext_b[n] == c.expected[n], c.file + ": Ext_B dim mismatch");
            }
            require(checks::hk0_tables_opposite(hk, hk0_direct(a, b), a, b),
                    c.file + ": Hk0 table does not match the direct model");
        }
    });

    criterion(7, "Theorem 4: action axioms on cohomology and homology", [] {
        InputBundle dual = load("dual_numbers.json");
        AlgebraPtr d = dual.algebra;
        const AugmentedSubalgebra& db = *dual.subalgebra;
        HeckeOptions opts;
        opts.L = 5;
        opts.max_degree = 2;
        HeckeResult hk = hecke_algebra_bar(d, db, opts);
        const HomCochain& one = hk.algebra.reps.at(0)[0];
        const HomCochain& t = hk.algebra.reps.at(1)[0];

        InducedModule k = induced_module(d, db);
        ModuleCohomology mc = module_cohomology(k.module, db, 5);
        for (int n = 0; n <= 2; ++n) {
            Vec phi = mc.seq.cohomology(n).reps[0];
            require(act_on_cohomology(k.module, mc.seq, n, phi, one) == Vec{1},
                    "unit does not act as the identity on H^" + std::to_string(n));
            Vec up = act_on_cohomology(k.module, mc.seq, n, phi, t);
            require(up.size() == 1 && !heckalg::is_zero(up[0]),
                    "degree-1 action degenerates on H^" + std::to_string(n));
        }
        // associativity (phi . f) . g = phi . (f g) through class coords
        {
            Vec phi = mc.seq.cohomology(0).reps[0];
            Vec mid = act_on_cohomology(k.module, mc.seq, 0, phi, t);
            Vec lhs = act_on_cohomology(k.module, mc.seq, 1,
                                        scale(mid[0], mc.seq.cohomology(1).reps[0]), t);
            Vec rhs = act_on_cohomology(k.module, mc.seq, 0, phi, compose_cochains(t, t));
            require(lhs == rhs, "right-action associativity failed");
        }
        // homology analogue on W = K and on W = A over the nilpotent pair
        auto dop = std::make_shared<FinAlgebra>(d->opposite());
        LeftModule k_right(dop, 1, {SparseMatrix::identity(1), SparseMatrix(1, 1)}, "K");
        ModuleHomology mh = module_homology(k_right, db, 5);
        for (int m = 0; m <= 3; ++m) {
            require(act_on_homology(k_right, mh, m, mh.reps[m][0], one) == Vec{1},
                    "unit does not act as the identity on H_" + std::to_string(m));
            Vec down = act_on_homology(k_right, mh, m, mh.reps[m][0], t);
            if (m == 0)
                require(down.empty(), "degree bookkeeping failed at H_0");
            else
                require(down.size() == 1 && !heckalg::is_zero(down[0]),
                        "homology action degenerates at H_" + std::to_string(m));
        }
        InputBundle m2 = load("m2_nilpotent.json");
        HeckeResult hk2 = hecke_algebra_bar(m2.algebra, *m2.subalgebra, opts);
        ModuleHomology wm = module_homology(regular_right_module(m2.algebra), *m2.subalgebra, 4);
        require(act_on_homology(regular_right_module(m2.algebra), wm, 0, wm.reps[0][0],
                                hk2.algebra.reps.at(0)[0])
                        .size() == 2,
                "m2 homology action has wrong target dimension");
    });

    criterion(8, "Theorem 6: explicit isomorphism with the BRST complex", [] {
        for (const auto& [name, act] : shipped_actions()) {
            Thm6Report r = theorem6_isomorphism(act);
            require(r.pass, name + ": " + r.first_failure);
            require(r.brst_dims == r.end_dims, name + ": cohomology dims differ");
        }
    });

    criterion(9, "Dirac reduction: universality and observable closure", [] {
        struct Case {
            std::string file;
            std::string module;   // empty = induced
        };
        for (const Case& c : {Case{"m2_nilpotent.json", ""}, Case{"m2_nilpotent.json", "reg"},
                              Case{"dual_numbers.json", ""}, Case{"dual_numbers.json", "reg"},
                              Case{"m2_trivial_b.json", "reg"}, Case{"a8_advisory.json", ""}}) {
            InputBundle in = load(c.file);
            AlgebraPtr a = in.algebra;
            const AugmentedSubalgebra& b = *in.subalgebra;
            std::optional<LeftModule> storage;
            const LeftModule* v = nullptr;
            if (c.module.empty()) {
                storage = induced_module(a, b).module;
                v = &*storage;
            } else {
                v = &in.modules.at(c.module);
            }
            DiracReport dr = dirac_observables(a, b, *v);
            require(dr.closed_under_multiplication,
                    c.file + "/" + v->name() + ": observables not closed");
            HeckeOptions opts;
            opts.L = 3;
            opts.max_degree = 0;
            HeckeResult hk = hecke_algebra_bar(a, b, opts);
            UniversalReductionReport ur = universal_reduction_check(a, b, *v, hk.algebra.reps.at(0));
            require(ur.pass, c.file + "/" + v->name() + ": " + ur.detail);
        }
    });

    criterion(10, "truncation honesty: stable degrees never move when L grows", [] {
        for (const auto& p : shipped_pairs()) {
            int l_max = p.name == "a8_advisory" ? 2 : 4;
            for (int L = 2; L <= l_max; ++L) {
                HeckeOptions opts;
                opts.L = L;
                opts.max_degree = 2;
                opts.stability_passes = 2;
                HeckeResult at_l = hecke_algebra_bar(p.a, p.b, opts);
                opts.L = L + 1;
                HeckeResult at_l1 = hecke_algebra_bar(p.a, p.b, opts);
                for (int n = 0; n <= 2; ++n) {
                    // every unstable degree is flagged
                    const auto& dims = at_l.window_dims.at(n);
                    bool moved = false;
                    for (int dd : dims) moved = moved || dd != dims[0];
                    require(at_l.stable.at(n) == !moved, p.name + ": stability flag wrong");
                    if (at_l.stable.at(n))
                        require(at_l1.algebra.table.dims.at(n) == at_l.algebra.table.dims.at(n),
                                p.name + ": stable degree " + std::to_string(n) +
                                    " changed between L = " + std::to_string(L) + " and L + 1");
                }
            }
        }
    });

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
