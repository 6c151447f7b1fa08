// Acceptance suite: drives the production CLI and library paths end to end
// and prints one PASS/FAIL line per criterion.

#include "extricat/shell.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace extricat;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int passed = 0, failed = 0;

    void report(int n, const std::string& desc, bool ok, const std::string& extra = "") {
        std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n, desc.c_str(),
                    extra.empty() ? "" : " -- ", extra.c_str());
        std::fflush(stdout);
        (ok ? passed : failed) += 1;
    }
};

fs::path scratch_dir() {
    fs::path p = fs::temp_directory_path() / "extricat-acceptance";
    fs::create_directories(p);
    return p;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream os(p);
    os << text;
    return p.string();
}

std::set<std::string> name_set(const Json& arr) {
    std::set<std::string> out;
    for (const auto& v : arr) out.insert(v.get<std::string>());
    return out;
}

std::set<std::string> all11() {
    return {"S2|0", "P1|0", "S1|0", "0|S2", "0|P1", "0|S1", "S2|S2_1", "P1|P1_1", "S1|S1_1",
            "P1|S2_phi", "S1|P1_psi"};
}

std::set<std::string> minus(std::set<std::string> base, std::initializer_list<std::string> removed) {
    for (const auto& r : removed) base.erase(r);
    return base;
}

// ---- property-suite helpers (criterion 8) ----

// comparison map between the canonical presentations over a morphism
RepMap omega_comparison(const ExtBasis& eb_src, const ExtBasis& eb_tgt, const RepMap& g) {
    // g : B -> C, eb_src presents B, eb_tgt presents C; chi lifts g over the
    // covers and rho restricts it to the syzygies
    HomSpace hs_pp = hom_space(eb_src.pres.cover, eb_tgt.pres.cover);
    HomSpace hs_pc = hom_space(eb_src.pres.cover, g.tgt);
    Mat sys(hs_pc.dim(), hs_pp.dim(), g.src.p());
    for (int j = 0; j < hs_pp.dim(); ++j) {
        Vec col = hs_pc.coords_of(compose(eb_tgt.pres.epi, hs_pp.basis[j]));
        for (int i = 0; i < hs_pc.dim(); ++i) sys.set(i, j, col[i]);
    }
    auto x = solve(sys, hs_pc.coords_of(compose(g, eb_src.pres.epi)));
    if (!x) throw std::logic_error("projective comparison lift failed");
    RepMap chi = hs_pp.from_coords(*x);
    std::vector<Mat> rho;
    for (size_t v = 0; v < chi.comps.size(); ++v) {
        auto s = solve_matrix(eb_tgt.pres.incl.comps[v], mul(chi.comps[v], eb_src.pres.incl.comps[v]));
        if (!s) throw std::logic_error("syzygy comparison failed");
        rho.push_back(*s);
    }
    return RepMap{eb_src.pres.omega, eb_tgt.pres.omega, rho};
}

bool exact_at(const Mat& into, const Mat& outof, int space_dim) {
    if (!mul(outof, into).is_zero()) return false;
    return rank(into) + rank(outof) == space_dim;
}

Mat columns_from(const std::vector<Vec>& cols, int rows, unsigned p) {
    Mat m(rows, static_cast<int>(cols.size()), p);
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m.set(i, static_cast<int>(j), cols[j][i]);
    return m;
}

// the five-term hom/ext sequences attached to one conflation and one object
bool prop24_holds(const Conflation& conf, const Vec& delta_coords, const Rep& x, ExtCache& cache,
                  std::string& why) {
    const Rep& a = conf.A();
    const Rep& b = conf.B();
    const Rep& c = conf.C();
    unsigned p = a.p();

    // contravariant: Hom(C,X) -> Hom(B,X) -> Hom(A,X) -> E(C,X) -> E(B,X)
    {
        HomSpace cx = hom_space(c, x), bx = hom_space(b, x), ax = hom_space(a, x);
        const ExtBasis& ecx = cache.get(c, x);
        const ExtBasis& ebx = cache.get(b, x);
        const ExtBasis& eca = cache.get(c, a);
        RepMap omega_delta = eca.omega_map_of(delta_coords);

        std::vector<Vec> m1c, m2c, m3c, m4c;
        for (const RepMap& h : cx.basis) m1c.push_back(bx.coords_of(compose(h, conf.proj)));
        for (const RepMap& h : bx.basis) m2c.push_back(ax.coords_of(compose(h, conf.incl)));
        for (const RepMap& h : ax.basis)
            m3c.push_back(ecx.coords_of_omega_map(compose(h, omega_delta)));
        RepMap rho = omega_comparison(ebx, ecx, conf.proj);
        for (const RepMap& rep : ecx.class_reps) m4c.push_back(ebx.coords_of_omega_map(compose(rep, rho)));

        Mat m1 = columns_from(m1c, bx.dim(), p), m2 = columns_from(m2c, ax.dim(), p);
        Mat m3 = columns_from(m3c, ecx.dim(), p), m4 = columns_from(m4c, ebx.dim(), p);
        if (!exact_at(m1, m2, bx.dim())) {
            why = "contravariant sequence fails at Hom(B, X)";
            return false;
        }
        if (!exact_at(m2, m3, ax.dim())) {
            why = "contravariant sequence fails at Hom(A, X)";
            return false;
        }
        if (!exact_at(m3, m4, ecx.dim())) {
            why = "contravariant sequence fails at Ext(C, X)";
            return false;
        }
    }

    // covariant: Hom(X,A) -> Hom(X,B) -> Hom(X,C) -> E(X,A) -> E(X,B)
    {
        HomSpace xa = hom_space(x, a), xb = hom_space(x, b), xc = hom_space(x, c);
        const ExtBasis& exa = cache.get(x, a);
        const ExtBasis& exb = cache.get(x, b);

        std::vector<Vec> n1c, n2c, n3c, n4c;
        for (const RepMap& h : xa.basis) n1c.push_back(xb.coords_of(compose(conf.incl, h)));
        for (const RepMap& h : xb.basis) n2c.push_back(xc.coords_of(compose(conf.proj, h)));
        // connecting map: lift through the deflation and pull back to the kernel
        HomSpace pb = hom_space(exa.pres.cover, b);
        HomSpace pc = hom_space(exa.pres.cover, c);
        Mat lift_sys(pc.dim(), pb.dim(), p);
        for (int j = 0; j < pb.dim(); ++j) {
            Vec col = pc.coords_of(compose(conf.proj, pb.basis[j]));
            for (int i = 0; i < pc.dim(); ++i) lift_sys.set(i, j, col[i]);
        }
        for (const RepMap& h : xc.basis) {
            auto sol = solve(lift_sys, pc.coords_of(compose(h, exa.pres.epi)));
            if (!sol) {
                why = "covariant connecting lift failed";
                return false;
            }
            RepMap lambda = pb.from_coords(*sol);
            RepMap edge = compose(lambda, exa.pres.incl);
            std::vector<Mat> wc;
            for (size_t v = 0; v < edge.comps.size(); ++v) {
                auto s = solve_matrix(conf.incl.comps[v], edge.comps[v]);
                if (!s) {
                    why = "covariant boundary does not factor";
                    return false;
                }
                wc.push_back(*s);
            }
            n3c.push_back(exa.coords_of_omega_map(RepMap{exa.pres.omega, a, wc}));
        }
        for (const RepMap& rep : exa.class_reps) n4c.push_back(exb.coords_of_omega_map(compose(conf.incl, rep)));

        Mat n1 = columns_from(n1c, xb.dim(), p), n2 = columns_from(n2c, xc.dim(), p);
        Mat n3 = columns_from(n3c, exa.dim(), p), n4 = columns_from(n4c, exb.dim(), p);
        if (!exact_at(n1, n2, xb.dim())) {
            why = "covariant sequence fails at Hom(X, B)";
            return false;
        }
        if (!exact_at(n2, n3, xc.dim())) {
            why = "covariant sequence fails at Hom(X, C)";
            return false;
        }
        if (!exact_at(n3, n4, exa.dim())) {
            why = "covariant sequence fails at Ext(X, A)";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    setenv("EXTRICAT_CACHE_DIR", (scratch_dir() / "cache").c_str(), 1);
    Harness h;

    LoadedScenario ab = load_scenario(builtin_scenario("paper-abelian"), ShellOptions{});
    LoadedScenario ex = load_scenario(builtin_scenario("paper-extriangulated"), ShellOptions{});
    const RecollementScenario& rs_ab = *ab.recollement;
    const RecollementScenario& rs_ex = *ex.recollement;
    const Caps caps = ab.spec.caps;

    const std::string mod_a_scn = write_file("mod-a.scn", R"([algebra]
field = 2
vertices = 1, 2
arrow = alpha: 1 -> 2
[category]
construction = modules
)");

    // 1. catalog fidelity -------------------------------------------------
    {
        bool ok = true;
        std::string why;
        CliResult r = run_cli({"catalog", "paper-abelian", "--json"});
        ok = ok && r.exit_code == 0;
        Report rep = parse_report(r.out);
        ok = ok && rep.results["catalog"]["count"] == 11;

        ok = ok && ab.cat_base->size() == 3;
        std::multiset<std::vector<int>> adims, expect_a = {{0, 1}, {1, 0}, {1, 1}};
        for (const auto& o : ab.cat_base->objects) adims.insert(o.dims);
        ok = ok && adims == expect_a;

        std::multiset<std::vector<int>> bdims, expect_b = {
            {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 0},
            {0, 1, 0, 1}, {1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}};
        for (const auto& o : ab.cat_tri->objects) bdims.insert(o.dims);
        ok = ok && bdims == expect_b;

        for (const auto& name : all11())
            try {
                ab.cat_tri->index_of_name(name);
            } catch (...) {
                ok = false;
                why = "alias " + name + " does not resolve";
            }
        for (const char* name : {"S1", "S2", "P1"})
            try {
                ab.cat_base->index_of_name(name);
            } catch (...) {
                ok = false;
            }
        h.report(1, "catalog fidelity: 3 objects for the base, 11 for the middle, aliases resolve", ok, why);
    }

    // 2. projectives and injectives ---------------------------------------
    {
        ExCat moda = rs_ab.side_a;
        ExCat modb = rs_ab.middle;
        auto to_names = [&](const ExCat& x, const std::vector<int>& idx) {
            std::set<std::string> out;
            for (int i : idx) out.insert(x.catalog().display_name(i));
            return out;
        };
        bool ok = to_names(moda, projectives_in(moda)) == std::set<std::string>{"P1", "S2"};
        ok = ok && to_names(moda, injectives_in(moda)) == std::set<std::string>{"P1", "S1"};
        ok = ok && to_names(modb, projectives_in(modb)) ==
                       std::set<std::string>{"S2|0", "P1|0", "S2|S2_1", "P1|P1_1"};
        ok = ok && to_names(modb, injectives_in(modb)) ==
                       std::set<std::string>{"P1|P1_1", "S1|S1_1", "0|P1", "0|S1"};
        h.report(2, "projective and injective classes match in both categories", ok);
    }

    // 3. cotorsion enumeration over the base category ----------------------
    {
        CliResult r = run_cli({"cotorsion", "enumerate", mod_a_scn, "--json"});
        bool ok = r.exit_code == 0;
        Report rep = parse_report(r.out);
        ok = ok && rep.results["count"] == 2;
        bool has_h1 = false, has_h2 = false;
        for (const auto& p : rep.results["pairs"]) {
            if (name_set(p["T"]) == std::set<std::string>{"S2", "P1"} &&
                name_set(p["F"]) == std::set<std::string>{"S1", "S2", "P1"})
                has_h1 = true;
            if (name_set(p["T"]) == std::set<std::string>{"S1", "S2", "P1"} &&
                name_set(p["F"]) == std::set<std::string>{"S1", "P1"})
                has_h2 = true;
        }
        ok = ok && has_h1 && has_h2;
        h.report(3, "base category has exactly the two expected cotorsion pairs", ok);
    }

    // 4. recollement verification ------------------------------------------
    {
        bool ok = true;
        std::string why;
        for (const char* scn : {"paper-abelian", "paper-extriangulated"}) {
            CliResult r = run_cli({"recollement", "verify", scn, "--json"});
            if (r.exit_code != 0) {
                ok = false;
                why = std::string(scn) + " exited with " + std::to_string(r.exit_code);
                continue;
            }
            Report rep = parse_report(r.out);
            for (auto it = rep.results.begin(); it != rep.results.end(); ++it) {
                std::string st = it.value()["status"];
                if (st != "HOLDS" && st != "SKIPPED") {
                    ok = false;
                    why = std::string(scn) + ": " + it.key() + " is " + st;
                }
            }
            if (rep.results["canonical_triangle.left"]["status"] != "HOLDS") ok = false;
            if (rep.results["canonical_triangle.right"]["status"] != "SKIPPED") ok = false;
            if (!rep.results["canonical_triangle.right"]["detail"].contains("witness")) ok = false;
            for (const char* key : {"R2", "R3.i_*", "R4", "R5"})
                if (rep.results[key]["status"] != "HOLDS") ok = false;
        }
        h.report(4, "recollement axioms, property suite and unit-counit conflations verify", ok, why);
    }

    // 5. gluing tables ------------------------------------------------------
    {
        struct Case {
            std::vector<std::string> args;
            std::set<std::string> t, f;
        };
        std::vector<Case> cases = {
            {{"--T1", "S2,P1", "--F1", "all", "--T2", "S2,P1", "--F2", "all"},
             {"S2|0", "P1|0", "0|S2", "0|P1", "S2|S2_1", "P1|P1_1", "S1|P1_psi"},
             all11()},
            {{"--T1", "S2,P1", "--F1", "all", "--T2", "all", "--F2", "S1,P1"},
             minus(all11(), {"S1|0", "P1|S2_phi"}),
             minus(all11(), {"0|S2", "S2|S2_1", "P1|S2_phi"})},
            {{"--T1", "all", "--F1", "S1,P1", "--T2", "all", "--F2", "S1,P1"},
             all11(),
             minus(all11(), {"S2|0", "0|S2", "S2|S2_1", "P1|S2_phi"})},
            {{"--T1", "all", "--F1", "S1,P1", "--T2", "S2,P1", "--F2", "all"},
             minus(all11(), {"S1|S1_1", "0|S1"}),
             minus(all11(), {"S2|0", "S2|S2_1"})},
        };
        bool ok = true;
        std::string why;
        for (size_t i = 0; i < cases.size(); ++i) {
            std::vector<std::string> args = {"glue", "paper-abelian"};
            for (const auto& a : cases[i].args) args.push_back(a);
            args.push_back("--conditions");
            args.push_back("--json");
            CliResult r = run_cli(args);
            Report rep = parse_report(r.out);
            if (name_set(rep.results["glued_T"]) != cases[i].t) {
                ok = false;
                why = "glued T mismatch in case " + std::to_string(i + 1);
            }
            if (name_set(rep.results["glued_F"]) != cases[i].f) {
                ok = false;
                why = "glued F mismatch in case " + std::to_string(i + 1);
            }
            const Json& ci = rep.results["theorem"]["conditions"]["(i) Ext(T, F) = 0"];
            if (ci["status"] != "FAILS" || !ci["detail"]["witness"].contains("ext_dim")) {
                ok = false;
                why = "condition (i) witness missing in case " + std::to_string(i + 1);
            }
            if (rep.results["theorem"]["consistent"] != true) ok = false;
        }
        h.report(5, "the four glued pairs match and fail orthogonality with witnesses", ok, why);
    }

    // 6. the constructive approximations, 4 x 11 x 2 ------------------------
    {
        std::vector<std::vector<std::string>> pairs = {
            {"--T1", "S2,P1", "--F1", "all", "--T2", "S2,P1", "--F2", "all"},
            {"--T1", "S2,P1", "--F1", "all", "--T2", "all", "--F2", "S1,P1"},
            {"--T1", "all", "--F1", "S1,P1", "--T2", "all", "--F2", "S1,P1"},
            {"--T1", "all", "--F1", "S1,P1", "--T2", "S2,P1", "--F2", "all"},
        };
        int successes = 0, runs = 0;
        std::string why;
        for (const auto& pair_args : pairs)
            for (const auto& object : all11())
                for (const char* dir : {"b", "c"}) {
                    std::vector<std::string> args = {"approx",     "paper-abelian", "--object", object,
                                                     "--direction", dir,            "--glued",  "--json"};
                    for (const auto& a : pair_args) args.push_back(a);
                    CliResult r = run_cli(args);
                    ++runs;
                    if (r.exit_code == 0) {
                        Report rep = parse_report(r.out);
                        if (rep.results["status"] == "HOLDS" && rep.results.contains("conflation"))
                            ++successes;
                        else
                            why = "no certified conflation for " + object + " direction " + dir;
                    } else {
                        why = "exit " + std::to_string(r.exit_code) + " for " + object + " direction " + dir;
                    }
                }
        h.report(6, "all 88 glued approximation constructions return certified conflations",
                 successes == 88 && runs == 88, why);
    }

    // 7. restrictions --------------------------------------------------------
    {
        bool ok = true;
        std::string why;
        for (const char* via : {"i", "j"}) {
            CliResult r = run_cli({"restrict", "paper-abelian", "--U", "S2|0,P1|0,S2|S2_1,P1|P1_1", "--V",
                                   "all", "--via", via, "--json"});
            Report rep = parse_report(r.out);
            if (r.exit_code != 0) ok = false;
            if (name_set(rep.results["restricted_T"]) != std::set<std::string>{"S2", "P1"}) ok = false;
            if (name_set(rep.results["restricted_F"]) != std::set<std::string>{"S1", "S2", "P1"}) ok = false;
            if (rep.results["preconditions"]["status"] != "HOLDS") ok = false;
            if (rep.results["restricted_check"]["orthogonality"]["status"] != "HOLDS") ok = false;
        }
        const std::string tp = "S2|0,P1|0,S2|S2_1,P1|P1_1,0|S1";
        const std::string fp = "P1|P1_1,S1|S1_1,0|P1,0|S1,P1|0,S2|S2_1,S2|0";
        CliResult ri = run_cli({"restrict", "paper-abelian", "--U", tp, "--V", fp, "--via", "i", "--json"});
        Report repi = parse_report(ri.out);
        if (ri.exit_code != 0 || repi.results["preconditions"]["status"] != "HOLDS") {
            ok = false;
            why = "restriction of the second pair along i";
        }
        if (name_set(repi.results["restricted_T"]) != std::set<std::string>{"S2", "P1"}) ok = false;
        CliResult rj = run_cli({"restrict", "paper-abelian", "--U", tp, "--V", fp, "--via", "j", "--json"});
        Report repj = parse_report(rj.out);
        if (rj.exit_code != 1) {
            ok = false;
            why = "restriction along j should fail orthogonality";
        }
        if (repj.results["restricted_check"]["orthogonality"]["status"] != "FAILS") ok = false;
        if (!repj.results["restricted_check"]["orthogonality"]["detail"]["witness"].contains("T_object"))
            ok = false;
        h.report(7, "restrictions along both sides behave as stated, with witnesses", ok, why);
    }

    // 8. property suites ------------------------------------------------------
    {
        bool ok = true;
        std::string why;

        // hom-ext five-term exactness over every realized conflation and object
        for (const RecollementScenario* rs : {&rs_ab, &rs_ex}) {
            for (const ExCat* cat : {&rs->side_a, &rs->middle, &rs->side_c}) {
                ExtCache cache;
                bool full = for_each_conflation(*cat, caps, true,
                                                [&](const Conflation& conf, int, int, const Vec& coords) {
                    for (int xi : cat->carrier.members) {
                        std::string local;
                        if (!prop24_holds(conf, coords, cat->catalog().objects[xi], cache, local)) {
                            ok = false;
                            why = local;
                            return true;
                        }
                    }
                    return false;
                });
                ok = ok && full;
            }
        }

        // round trip on every class, both directions of the identification
        for (const ExCat* cat : {&rs_ab.middle, &rs_ab.side_a, &rs_ex.middle, &rs_ex.side_c}) {
            ExtCache cache;
            for (int ci : cat->carrier.members)
                for (int ai : cat->carrier.members) {
                    const Rep& c = cat->catalog().objects[ci];
                    const Rep& a = cat->catalog().objects[ai];
                    const ExtBasis& eb = cache.get(c, a);
                    for_each_coeff_vector(eb.dim(), 2, 1u << 12, [&](const Vec& coords) {
                        Conflation conf = ext_to_conflation(ExtClass{c, a, coords}, eb);
                        if (conflation_to_ext(conf, eb).coords != coords) {
                            ok = false;
                            why = "ext round trip mismatch";
                        }
                        bool zero = true;
                        for (uint8_t v : coords) zero &= v == 0;
                        if (zero && !is_isomorphic(conf.B(), direct_sum(a, c), caps).witness) {
                            ok = false;
                            why = "zero class did not split";
                        }
                        return false;
                    });
                }
        }

        // composition diagrams on all composable pairs of realized conflations
        for (const ExCat* cat : {&rs_ab.side_a, &rs_ab.middle, &rs_ex.middle}) {
            ExtCache cache;
            int checked = 0;
            for_each_conflation(*cat, caps, true, [&](const Conflation& first, int, int, const Vec&) {
                const Rep b = first.B();
                for (int fi : cat->carrier.members) {
                    const Rep& fobj = cat->catalog().objects[fi];
                    const ExtBasis& eb = cache.get(fobj, b);
                    for_each_coeff_vector(eb.dim(), 2, 1u << 12, [&](const Vec& coords) {
                        Et4Result r =
                            et4_compose(first, ext_to_conflation(ExtClass{fobj, b, coords}, eb), cache);
                        ++checked;
                        if (r.aggregate() != Status::HOLDS) {
                            ok = false;
                            why = "composition certificate failed";
                            return true;
                        }
                        return false;
                    });
                }
                return !ok;
            });
            ok = ok && checked > 0;
        }

        // weak idempotent completeness spot checks
        for (const RecollementScenario* rs : {&rs_ab, &rs_ex}) {
            const ExCat& cat = rs->middle;
            uint64_t budget = caps.sample_cap;
            for (int i : cat.carrier.members)
                for (int j : cat.carrier.members)
                    for (int k : cat.carrier.members) {
                        if (!budget) break;
                        for (const RepMap& f : hom_basis(cat.catalog().objects[i], cat.catalog().objects[j]))
                            for (const RepMap& g :
                                 hom_basis(cat.catalog().objects[j], cat.catalog().objects[k])) {
                                if (!budget) break;
                                --budget;
                                MorphismClass cgf = classify_morphism(compose(g, f), cat, caps);
                                if (cgf.inflation && !classify_morphism(f, cat, caps).inflation) {
                                    ok = false;
                                    why = "left factor of an inflation is not an inflation";
                                }
                                if (cgf.deflation && !classify_morphism(g, cat, caps).deflation) {
                                    ok = false;
                                    why = "right factor of a deflation is not a deflation";
                                }
                            }
                    }
        }

        // triangle identities at every catalog object, all four adjunctions
        for (const RecollementScenario* rs : {&rs_ab, &rs_ex}) {
            auto left_tag = [](AdjPair adj) {
                switch (adj) {
                    case AdjPair::i_upper_lower: return FunctorTag::i_star_upper;
                    case AdjPair::i_lower_shriek: return FunctorTag::i_star_lower;
                    case AdjPair::j_shriek_star: return FunctorTag::j_lower_shriek;
                    case AdjPair::j_star_lower: return FunctorTag::j_star;
                }
                return FunctorTag::i_star_upper;
            };
            auto right_tag = [](AdjPair adj) {
                switch (adj) {
                    case AdjPair::i_upper_lower: return FunctorTag::i_star_lower;
                    case AdjPair::i_lower_shriek: return FunctorTag::i_shriek;
                    case AdjPair::j_shriek_star: return FunctorTag::j_star;
                    case AdjPair::j_star_lower: return FunctorTag::j_lower_star;
                }
                return FunctorTag::i_star_lower;
            };
            for (AdjPair adj : {AdjPair::i_upper_lower, AdjPair::i_lower_shriek, AdjPair::j_shriek_star,
                                AdjPair::j_star_lower}) {
                const ExCat& fsrc = functor_source_is_middle(left_tag(adj))
                                        ? rs->middle
                                        : (adj == AdjPair::i_lower_shriek ? rs->side_a : rs->side_c);
                const ExCat& gsrc = functor_source_is_middle(right_tag(adj))
                                        ? rs->middle
                                        : (adj == AdjPair::i_upper_lower ? rs->side_a : rs->side_c);
                for (int xi : fsrc.carrier.members) {
                    const Rep& x = fsrc.catalog().objects[xi];
                    RepMap lhs = compose(
                        adjunction_counit(rs->ctx, adj, apply_functor(rs->ctx, left_tag(adj), x)),
                        apply_functor_map(rs->ctx, left_tag(adj), adjunction_unit(rs->ctx, adj, x)));
                    if (!lhs.same_data(RepMap::identity(lhs.src))) {
                        ok = false;
                        why = "first triangle identity failed";
                    }
                }
                for (int mi : gsrc.carrier.members) {
                    const Rep& m = gsrc.catalog().objects[mi];
                    RepMap lhs = compose(
                        apply_functor_map(rs->ctx, right_tag(adj), adjunction_counit(rs->ctx, adj, m)),
                        adjunction_unit(rs->ctx, adj, apply_functor(rs->ctx, right_tag(adj), m)));
                    if (!lhs.same_data(RepMap::identity(lhs.src))) {
                        ok = false;
                        why = "second triangle identity failed";
                    }
                }
            }
        }

        // extension-group isomorphisms through the embeddings, full sweeps
        for (const RecollementScenario* rs : {&rs_ab, &rs_ex}) {
            ExtCache cache;
            for (int ai : rs->side_a.carrier.members)
                for (int mi : rs->middle.carrier.members) {
                    const Rep& x = rs->side_a.catalog().objects[ai];
                    const Rep& y = rs->middle.catalog().objects[mi];
                    int lhs = cache.get(apply_functor(rs->ctx, FunctorTag::i_star_lower, x), y).dim();
                    int rhs = cache.get(x, apply_functor(rs->ctx, FunctorTag::i_shriek, y)).dim();
                    if (lhs != rhs) {
                        ok = false;
                        why = "embedding ext isomorphism failed for i";
                    }
                }
            for (int ci : rs->side_c.carrier.members)
                for (int mi : rs->middle.carrier.members) {
                    const Rep& z = rs->side_c.catalog().objects[ci];
                    const Rep& y = rs->middle.catalog().objects[mi];
                    int lhs = cache.get(apply_functor(rs->ctx, FunctorTag::j_lower_shriek, z), y).dim();
                    int rhs = cache.get(z, apply_functor(rs->ctx, FunctorTag::j_star, y)).dim();
                    if (lhs != rhs) {
                        ok = false;
                        why = "embedding ext isomorphism failed for j";
                    }
                }
        }

        // the INCONSISTENT signal is wired to exit code 4: corrupt a cache
        // entry and ask the comparison mode to vouch for it
        {
            fs::path dir = scratch_dir() / "badcache";
            fs::create_directories(dir);
            setenv("EXTRICAT_CACHE_DIR", dir.c_str(), 1);
            CliResult warm = run_cli({"catalog", mod_a_scn, "--json"});
            bool plumbing = warm.exit_code == 0;
            // truncate the object list of the cached catalog
            for (const auto& entry : fs::directory_iterator(dir)) {
                std::ifstream in(entry.path());
                std::stringstream buf;
                buf << in.rdbuf();
                std::string text = buf.str();
                size_t pos = text.find("objects 3");
                if (pos != std::string::npos) {
                    text.replace(pos, 9, "objects 2");
                    size_t dims = text.find("dims", pos);
                    size_t next = text.find("dims", dims + 1);
                    std::ofstream os(entry.path(), std::ios::trunc);
                    os << text.substr(0, dims) << text.substr(next);
                }
            }
            CliResult bad = run_cli({"catalog", mod_a_scn, "--json", "--no-cache"});
            plumbing = plumbing && bad.exit_code == 4;
            setenv("EXTRICAT_CACHE_DIR", (scratch_dir() / "cache").c_str(), 1);
            if (!plumbing) {
                ok = false;
                why = "internal-inconsistency exit code is not wired";
            }
        }

        h.report(8, "hom-ext exactness, round trips, composition certificates and identities", ok, why);
    }

    // 9. extension closure ----------------------------------------------------
    {
        bool ok = check_extension_closed(rs_ex.middle.carrier, caps).status == Status::HOLDS;
        ok = ok && check_extension_closed(rs_ex.side_c.carrier, caps).status == Status::HOLDS;
        Subcat bad = Subcat::of_names(ab.cat_base, {"S2", "S1"});
        Verdict v = check_extension_closed(bad, caps);
        ok = ok && v.status == Status::FAILS;
        ok = ok && v.detail["witness"]["middle_dims"] == Json::array({1, 1});
        h.report(9, "extension closure holds for the two carriers and fails for add(S2+S1)", ok);
    }

    // 10. determinism ----------------------------------------------------------
    {
        bool ok = true;
        std::string why;
        std::vector<std::vector<std::string>> commands = {
            {"catalog", "paper-abelian", "--json"},
            {"recollement", "verify", "paper-extriangulated", "--json"},
            {"glue", "paper-abelian", "--T1", "S2,P1", "--F1", "all", "--T2", "all", "--F2", "S1,P1",
             "--conditions", "--json"},
            {"cotorsion", "enumerate", mod_a_scn, "--json"},
            {"approx", "paper-abelian", "--object", "P1|S2_phi", "--direction", "b", "--glued", "--T1",
             "S2,P1", "--F1", "all", "--T2", "S2,P1", "--F2", "all", "--json"},
        };
        for (const auto& cmd : commands) {
            CliResult a = run_cli(cmd);
            CliResult b = run_cli(cmd);
            if (a.out != b.out || a.exit_code != b.exit_code) {
                ok = false;
                why = "nondeterministic output for " + cmd[0];
            }
        }
        h.report(10, "consecutive runs emit byte-identical reports", ok, why);
    }

    std::printf("%d passed, %d failed\n", h.passed, h.failed);
    return h.failed == 0 ? 0 : 1;
}
