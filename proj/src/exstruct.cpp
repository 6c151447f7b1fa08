#include "extricat/exstruct.hpp"

#include <cmath>
#include <stdexcept>

namespace extricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Json name_list(const Catalog& cat, const std::vector<int>& idx) {
    Json arr = Json::array();
    for (int i : idx) arr.push_back(i >= 0 ? cat.display_name(i) : "?");
    return arr;
}

} // namespace

Subcat Subcat::full(std::shared_ptr<const Catalog> cat) {
    Subcat s;
    s.catalog = cat;
    for (int i = 0; i < cat->size(); ++i) s.members.insert(i);
    return s;
}

Subcat Subcat::of_names(std::shared_ptr<const Catalog> cat, const std::vector<std::string>& names) {
    Subcat s;
    s.catalog = cat;
    for (const auto& n : names) s.members.insert(cat->index_of_name(n));
    return s;
}

Subcat Subcat::of_indices(std::shared_ptr<const Catalog> cat, const std::vector<int>& idx) {
    Subcat s;
    s.catalog = cat;
    for (int i : idx) {
        require(i >= 0 && i < cat->size(), "subcategory index out of range");
        s.members.insert(i);
    }
    return s;
}

std::vector<std::string> Subcat::member_names() const {
    std::vector<std::string> out;
    for (int i : members) out.push_back(catalog->display_name(i));
    return out;
}

Json Subcat::to_json() const {
    Json arr = Json::array();
    for (const auto& n : member_names()) arr.push_back(n);
    return arr;
}

std::vector<int> catalog_summands(const Rep& m, const Catalog& cat, const Caps& caps, bool* complete) {
    Decomposition dec = decompose(m, caps);
    if (complete) *complete = dec.complete;
    std::vector<int> out;
    for (const auto& [obj, mult] : dec.summands) {
        int idx = cat.find_iso(obj, caps);
        for (int k = 0; k < mult; ++k) out.push_back(idx);
    }
    return out;
}

MembershipResult membership(const Rep& m, const Subcat& s, const Caps& caps) {
    MembershipResult r;
    if (m.total_dim() == 0) {
        r.status = Status::HOLDS;
        return r;
    }
    bool complete = true;
    std::vector<int> idx = catalog_summands(m, *s.catalog, caps, &complete);
    if (!complete) {
        r.status = Status::UNKNOWN;
        r.detail["cap_hit"] = "decomposition";
        return r;
    }
    r.summand_indices = idx;
    for (int i : idx) {
        if (i < 0) {
            r.status = Status::FAILS;
            r.detail["reason"] = "summand outside catalog";
            r.detail["dims"] = m.dims;
            return r;
        }
        if (!s.contains_index(i)) {
            r.status = Status::FAILS;
            r.detail["reason"] = "summand outside subcategory";
            r.detail["summand"] = s.catalog->display_name(i);
            return r;
        }
    }
    r.status = Status::HOLDS;
    r.detail["summands"] = name_list(*s.catalog, idx);
    return r;
}

ExCat make_excat(Subcat carrier) { return ExCat{std::move(carrier), std::make_shared<ExtCache>()}; }

Verdict check_extension_closed(const Subcat& s, const Caps& caps) {
    ExtCache cache;
    unsigned p = s.catalog->alg->field().p;
    bool full_sweep = true;
    for (int ci : s.members)
        for (int ai : s.members) {
            const Rep& c = s.catalog->objects[ci];
            const Rep& a = s.catalog->objects[ai];
            const ExtBasis& eb = cache.get(c, a);
            int d = eb.dim();
            if (d == 0) continue;
            std::vector<Vec> coords_list;
            if (std::pow(static_cast<double>(p), d) <= static_cast<double>(caps.hom_enum_cap)) {
                for_each_coeff_vector(d, p, caps.hom_enum_cap, [&](const Vec& v) {
                    coords_list.push_back(v);
                    return false;
                });
            } else {
                full_sweep = false;
                for (int i = 0; i < d; ++i) {
                    Vec v(static_cast<size_t>(d), 0);
                    v[i] = 1;
                    coords_list.push_back(v);
                    for (int j = i + 1; j < d; ++j) {
                        Vec w = v;
                        w[j] = 1;
                        coords_list.push_back(w);
                    }
                }
            }
            for (const Vec& coords : coords_list) {
                Conflation conf = ext_to_conflation(ExtClass{c, a, coords}, eb);
                MembershipResult mr = membership(conf.B(), s, caps);
                if (mr.status == Status::UNKNOWN) return Verdict::unknown("decomposition of a middle term");
                if (mr.status == Status::FAILS) {
                    Json w = Json::object();
                    w["end"] = s.catalog->display_name(ci);
                    w["start"] = s.catalog->display_name(ai);
                    w["class"] = coords;
                    w["middle_dims"] = conf.B().dims;
                    w["middle"] = mr.detail;
                    return Verdict::fails(w);
                }
            }
        }
    if (!full_sweep)
        return Verdict::unknown("extension sweep truncated to basis classes and pairwise sums");
    return Verdict::holds();
}

MorphismClass classify_morphism(const RepMap& f, const ExCat& x, const Caps& caps) {
    MorphismClass c;
    c.iso = f.is_iso();
    auto kc = kernel_cokernel(f);
    if (f.is_injective()) {
        MembershipResult mr = membership(kc.coker, x.carrier, caps);
        if (mr.status == Status::UNKNOWN) c.status = Status::UNKNOWN;
        c.inflation = mr.status == Status::HOLDS;
    }
    if (f.is_surjective()) {
        MembershipResult mr = membership(kc.ker, x.carrier, caps);
        if (mr.status == Status::UNKNOWN) c.status = Status::UNKNOWN;
        c.deflation = mr.status == Status::HOLDS;
    }
    c.compatible = !(c.inflation && c.deflation) || c.iso;
    return c;
}

Verdict conflation_in(const Conflation& c, const ExCat& x, const Caps& caps) {
    if (!c.is_exact()) {
        Json w = Json::object();
        w["reason"] = "sequence is not short exact";
        w["A_dims"] = c.A().dims;
        w["B_dims"] = c.B().dims;
        w["C_dims"] = c.C().dims;
        return Verdict::fails(w);
    }
    for (const Rep* obj : {&c.A(), &c.B(), &c.C()}) {
        MembershipResult mr = membership(*obj, x.carrier, caps);
        if (mr.status == Status::UNKNOWN) return Verdict::unknown("membership decomposition");
        if (mr.status == Status::FAILS) {
            Json w = Json::object();
            w["reason"] = "term outside carrier";
            w["dims"] = obj->dims;
            w["membership"] = mr.detail;
            return Verdict::fails(w);
        }
    }
    return Verdict::holds();
}

std::string to_string(ExactMode m) {
    switch (m) {
        case ExactMode::exact_mode: return "exact";
        case ExactMode::left_mode: return "left";
        case ExactMode::right_mode: return "right";
    }
    return "?";
}

ExactMode exact_mode_from_string(const std::string& s) {
    if (s == "exact") return ExactMode::exact_mode;
    if (s == "left") return ExactMode::left_mode;
    if (s == "right") return ExactMode::right_mode;
    throw std::invalid_argument("unknown exactness mode '" + s + "'");
}

Verdict exact_sequence_check3(const RepMap& f, const RepMap& g, Side side, const ExCat& x, const Caps& caps) {
    require(f.tgt.same_data(g.src), "sequence maps are not composable");
    if (!compose(g, f).is_zero()) return Verdict::fails({{"reason", "composite is nonzero"}});
    if (side == Side::right_side) {
        MorphismClass gc = classify_morphism(g, x, caps);
        if (gc.status == Status::UNKNOWN) return Verdict::unknown("membership during deflation check");
        if (!gc.deflation) return Verdict::fails({{"reason", "second map is not a deflation"}});
        auto kc = kernel_cokernel(g);
        std::vector<Mat> comps;
        for (size_t v = 0; v < f.comps.size(); ++v) {
            auto s = solve_matrix(kc.ker_incl.comps[v], f.comps[v]);
            if (!s) return Verdict::fails({{"reason", "first map does not factor through ker"}});
            comps.push_back(*s);
        }
        RepMap h1{f.src, kc.ker, comps};
        MorphismClass hc = classify_morphism(h1, x, caps);
        if (hc.status == Status::UNKNOWN) return Verdict::unknown("membership during factor check");
        if (!hc.deflation) return Verdict::fails({{"reason", "kernel factor is not a deflation"}});
        if (!hc.compatible) return Verdict::fails({{"reason", "kernel factor is not compatible"}});
        return Verdict::holds();
    }
    MorphismClass fc = classify_morphism(f, x, caps);
    if (fc.status == Status::UNKNOWN) return Verdict::unknown("membership during inflation check");
    if (!fc.inflation) return Verdict::fails({{"reason", "first map is not an inflation"}});
    auto kc = kernel_cokernel(f);
    std::vector<Mat> comps;
    for (size_t v = 0; v < g.comps.size(); ++v) {
        auto s = solve_matrix_left(kc.coker_proj.comps[v], g.comps[v]);
        if (!s) return Verdict::fails({{"reason", "second map does not factor through coker"}});
        comps.push_back(*s);
    }
    RepMap h1{kc.coker, g.tgt, comps};
    MorphismClass hc = classify_morphism(h1, x, caps);
    if (hc.status == Status::UNKNOWN) return Verdict::unknown("membership during factor check");
    if (!hc.inflation) return Verdict::fails({{"reason", "cokernel factor is not an inflation"}});
    if (!hc.compatible) return Verdict::fails({{"reason", "cokernel factor is not compatible"}});
    return Verdict::holds();
}

Verdict exact_sequence_check4(const RepMap& f, const RepMap& g, const RepMap& h, Side side, const ExCat& x,
                              const Caps& caps) {
    require(f.tgt.same_data(g.src) && g.tgt.same_data(h.src), "sequence maps are not composable");
    MorphismClass fc = classify_morphism(f, x, caps);
    if (fc.status == Status::UNKNOWN) return Verdict::unknown("membership during inflation check");
    if (!fc.inflation) return Verdict::fails({{"reason", "first map is not an inflation"}});
    if (!compose(g, f).is_zero()) return Verdict::fails({{"reason", "g f is nonzero"}});
    auto kc = kernel_cokernel(f);
    // the middle object K of the two triangles is coker(f)
    MembershipResult mk = membership(kc.coker, x.carrier, caps);
    if (mk.status == Status::UNKNOWN) return Verdict::unknown("membership of the factor object");
    if (mk.status != Status::HOLDS) return Verdict::fails({{"reason", "factor object outside carrier"}});
    std::vector<Mat> comps;
    for (size_t v = 0; v < g.comps.size(); ++v) {
        auto s = solve_matrix_left(kc.coker_proj.comps[v], g.comps[v]);
        if (!s) return Verdict::fails({{"reason", "middle map does not factor through coker"}});
        comps.push_back(*s);
    }
    RepMap g2{kc.coker, g.tgt, comps};
    Conflation tail{g2, h};
    Verdict tv = conflation_in(tail, x, caps);
    if (tv.status != Status::HOLDS) {
        Json w = Json::object();
        w["reason"] = "tail is not a conflation in the carrier";
        w["tail"] = tv.detail;
        return Verdict::fails(w);
    }
    // compatibility of g1 (right) or g2 (left)
    RepMap g1 = kc.coker_proj;
    const RepMap& probe = side == Side::right_side ? g1 : g2;
    MorphismClass pc = classify_morphism(probe, x, caps);
    if (pc.status == Status::UNKNOWN) return Verdict::unknown("membership during compatibility check");
    if (!pc.compatible) return Verdict::fails({{"reason", "factor morphism is not compatible"}});
    return Verdict::holds();
}

Et3Fill et3_fill(const Conflation& d1, const Conflation& d2, const RepMap& a, const RepMap& b) {
    ExtCache cache;
    return et3_fill(d1, d2, a, b, cache);
}

Et3Fill et3_fill(const Conflation& d1, const Conflation& d2, const RepMap& a, const RepMap& b,
                 ExtCache& cache) {
    require(compose(b, d1.incl).same_data(compose(d2.incl, a)), "left square does not commute");
    std::vector<Mat> comps;
    for (size_t v = 0; v < b.comps.size(); ++v) {
        auto s = solve_matrix_left(d1.proj.comps[v], mul(d2.proj.comps[v], b.comps[v]));
        if (!s) throw std::logic_error("cone fill failed");
        comps.push_back(*s);
    }
    RepMap c{d1.C(), d2.C(), comps};
    ExtClass lhs = push_ext(conflation_to_ext(d1, cache), a, cache);
    ExtClass rhs = pull_ext(conflation_to_ext(d2, cache), c, cache);
    Et3Fill out{c, Verdict::holds()};
    if (lhs.coords != rhs.coords) {
        Json w = Json::object();
        w["pushed"] = lhs.coords;
        w["pulled"] = rhs.coords;
        out.verdict = Verdict::fails(w);
    }
    return out;
}

Status Et4Result::aggregate() const {
    Status s = cert_i.status;
    s = combine(s, cert_ii.status);
    s = combine(s, cert_iii.status);
    return s;
}

Et4Result et4_compose(const Conflation& d1, const Conflation& d2) {
    ExtCache cache;
    return et4_compose(d1, d2, cache);
}

Et4Result et4_compose(const Conflation& d1, const Conflation& d2, ExtCache& cache) {
    require(d1.B().same_data(d2.A()), "conflations do not share the middle object");
    Et4Result out;
    RepMap h = compose(d2.incl, d1.incl); // A -> C
    auto kc = kernel_cokernel(h);
    out.e = kc.coker;
    out.composite = Conflation{h, kc.coker_proj};
    if (!out.composite.is_exact()) throw std::logic_error("composite inflation conflation is not exact");

    std::vector<Mat> dcomps, ecomps;
    for (size_t v = 0; v < h.comps.size(); ++v) {
        auto d = solve_matrix_left(d1.proj.comps[v], mul(kc.coker_proj.comps[v], d2.incl.comps[v]));
        if (!d) throw std::logic_error("induced map D -> E failed");
        dcomps.push_back(*d);
        auto e = solve_matrix_left(kc.coker_proj.comps[v], d2.proj.comps[v]);
        if (!e) throw std::logic_error("induced map E -> F failed");
        ecomps.push_back(*e);
    }
    RepMap dmap{d1.C(), out.e, dcomps};
    RepMap emap{out.e, d2.C(), ecomps};
    out.quotient = Conflation{dmap, emap};
    if (!out.quotient.is_exact()) throw std::logic_error("quotient conflation is not exact");

    ExtClass delta = conflation_to_ext(d1, cache);
    ExtClass delta_p = conflation_to_ext(d2, cache);
    ExtClass delta_pp = conflation_to_ext(out.composite, cache);

    auto compare = [](const ExtClass& l, const ExtClass& r, const char* tag) {
        if (l.coords == r.coords) return Verdict::holds();
        Json w = Json::object();
        w["certificate"] = tag;
        w["lhs"] = l.coords;
        w["rhs"] = r.coords;
        return Verdict::fails(w);
    };

    // (i) D -> E -> F realizes the pushout of delta' along d1.proj
    out.cert_i = compare(conflation_to_ext(out.quotient, cache), push_ext(delta_p, d1.proj, cache), "i");
    // (ii) pulling delta'' back along d recovers delta
    out.cert_ii = compare(pull_ext(delta_pp, dmap, cache), delta, "ii");
    // (iii) pushing delta'' along f agrees with pulling delta' along e
    out.cert_iii = compare(push_ext(delta_pp, d1.incl, cache), pull_ext(delta_p, emap, cache), "iii");
    return out;
}

bool for_each_conflation(const ExCat& x, const Caps& caps, bool include_split,
                         const std::function<bool(const Conflation&, int, int, const Vec&)>& fn) {
    unsigned p = x.catalog().alg->field().p;
    bool full = true;
    for (int ci : x.carrier.members)
        for (int ai : x.carrier.members) {
            const Rep& c = x.catalog().objects[ci];
            const Rep& a = x.catalog().objects[ai];
            const ExtBasis& eb = x.ext->get(c, a);
            int d = eb.dim();
            std::vector<Vec> coords_list;
            if (std::pow(static_cast<double>(p), d) <= static_cast<double>(caps.hom_enum_cap)) {
                for_each_coeff_vector(d, p, caps.hom_enum_cap, [&](const Vec& v) {
                    coords_list.push_back(v);
                    return false;
                });
            } else {
                full = false;
                coords_list.push_back(Vec(static_cast<size_t>(d), 0));
                for (int i = 0; i < d; ++i) {
                    Vec v(static_cast<size_t>(d), 0);
                    v[i] = 1;
                    coords_list.push_back(v);
                    for (int j = i + 1; j < d; ++j) {
                        Vec w = v;
                        w[j] = 1;
                        coords_list.push_back(w);
                    }
                }
            }
            for (const Vec& coords : coords_list) {
                bool zero = true;
                for (uint8_t cc : coords) zero &= (cc == 0);
                if (zero && !include_split) continue;
                Conflation conf = ext_to_conflation(ExtClass{c, a, coords}, eb);
                if (fn(conf, ci, ai, coords)) return full;
            }
        }
    return full;
}

Verdict functor_exactness(const RecContext& ctx, const FunctorHandle& f, ExactMode mode, const ExCat& src,
                          const ExCat& tgt, const Caps& caps) {
    // carrier preservation comes first
    for (int i : src.carrier.members) {
        Rep img = apply_functor(ctx, f, src.catalog().objects[i]);
        MembershipResult mr = membership(img, tgt.carrier, caps);
        if (mr.status == Status::UNKNOWN) return Verdict::unknown("membership of functor image");
        if (mr.status == Status::FAILS) {
            Json w = Json::object();
            w["reason"] = "functor image leaves the target carrier";
            w["object"] = src.catalog().display_name(i);
            w["image"] = mr.detail;
            return Verdict::fails(w);
        }
    }
    // compatible morphisms stay compatible (capped sample over hom bases)
    uint64_t budget = caps.sample_cap;
    for (int i : src.carrier.members) {
        for (int j : src.carrier.members) {
            if (!budget) break;
            for (const RepMap& g : hom_basis(src.catalog().objects[i], src.catalog().objects[j])) {
                if (!budget) break;
                --budget;
                MorphismClass mc = classify_morphism(g, src, caps);
                if (mc.status != Status::HOLDS || !mc.compatible) continue;
                MorphismClass ic = classify_morphism(apply_functor_map(ctx, f, g), tgt, caps);
                if (ic.status == Status::HOLDS && !ic.compatible) {
                    Json w = Json::object();
                    w["reason"] = "image of a compatible morphism is incompatible";
                    w["src"] = src.catalog().display_name(i);
                    w["tgt"] = src.catalog().display_name(j);
                    return Verdict::fails(w);
                }
            }
        }
    }
    // the conflation sweep
    Verdict bad = Verdict::holds();
    bool failed = false, unknown = false;
    bool full = for_each_conflation(src, caps, true, [&](const Conflation& conf, int ci, int ai, const Vec& coords) {
        RepMap fi = apply_functor_map(ctx, f, conf.incl);
        RepMap fp = apply_functor_map(ctx, f, conf.proj);
        Verdict v;
        switch (mode) {
            case ExactMode::exact_mode: v = conflation_in(Conflation{fi, fp}, tgt, caps); break;
            case ExactMode::left_mode: v = exact_sequence_check3(fi, fp, Side::left_side, tgt, caps); break;
            case ExactMode::right_mode: v = exact_sequence_check3(fi, fp, Side::right_side, tgt, caps); break;
        }
        if (v.status == Status::UNKNOWN) {
            unknown = true;
            bad = v;
            return true;
        }
        if (v.status == Status::FAILS) {
            Json w = Json::object();
            w["end"] = src.catalog().display_name(ci);
            w["start"] = src.catalog().display_name(ai);
            w["class"] = coords;
            w["inner"] = v.detail;
            bad = Verdict::fails(w);
            failed = true;
            return true;
        }
        return false;
    });
    if (failed || unknown) return bad;
    if (!full) return Verdict::unknown("conflation sweep truncated");
    return Verdict::holds();
}

std::vector<int> projectives_in(const ExCat& x) {
    std::vector<int> out;
    for (int i : x.carrier.members) {
        bool proj = true;
        for (int j : x.carrier.members)
            if (x.catalog().ext_dim[i][j] != 0) {
                proj = false;
                break;
            }
        if (proj) out.push_back(i);
    }
    return out;
}

std::vector<int> injectives_in(const ExCat& x) {
    std::vector<int> out;
    for (int j : x.carrier.members) {
        bool inj = true;
        for (int i : x.carrier.members)
            if (x.catalog().ext_dim[i][j] != 0) {
                inj = false;
                break;
            }
        if (inj) out.push_back(j);
    }
    return out;
}

EvalMap eval_sum_map(const Catalog& cat, const std::set<int>& gens, const Rep& m) {
    EvalMap out;
    out.sum = Rep::zero(cat.alg);
    std::vector<RepMap> blocks;
    for (int g : gens) {
        for (const RepMap& b : hom_basis(cat.objects[g], m)) {
            blocks.push_back(b);
            out.used.push_back(g);
            out.sum = direct_sum(out.sum, cat.objects[g]);
        }
    }
    RepMap map = RepMap::zero(out.sum, m);
    std::vector<int> off(m.dims.size(), 0);
    for (const RepMap& b : blocks) {
        for (size_t v = 0; v < map.comps.size(); ++v) {
            for (int r = 0; r < b.comps[v].rows(); ++r)
                for (int c = 0; c < b.comps[v].cols(); ++c) map.comps[v].set(r, off[v] + c, b.comps[v].at(r, c));
        }
        for (size_t v = 0; v < map.comps.size(); ++v) off[v] += b.src.dims[v];
    }
    out.map = map;
    return out;
}

EvalMap coeval_sum_map(const Catalog& cat, const std::set<int>& gens, const Rep& m) {
    EvalMap out;
    out.sum = Rep::zero(cat.alg);
    std::vector<RepMap> blocks;
    for (int g : gens) {
        for (const RepMap& b : hom_basis(m, cat.objects[g])) {
            blocks.push_back(b);
            out.used.push_back(g);
            out.sum = direct_sum(out.sum, cat.objects[g]);
        }
    }
    RepMap map = RepMap::zero(m, out.sum);
    std::vector<int> off(m.dims.size(), 0);
    for (const RepMap& b : blocks) {
        for (size_t v = 0; v < map.comps.size(); ++v) {
            for (int r = 0; r < b.comps[v].rows(); ++r)
                for (int c = 0; c < b.comps[v].cols(); ++c) map.comps[v].set(off[v] + r, c, b.comps[v].at(r, c));
        }
        for (size_t v = 0; v < map.comps.size(); ++v) off[v] += b.tgt.dims[v];
    }
    out.map = map;
    return out;
}

Verdict has_enough_projectives(const ExCat& x, const Caps& caps) {
    std::vector<int> projs = projectives_in(x);
    std::set<int> gens(projs.begin(), projs.end());
    for (int i : x.carrier.members) {
        EvalMap em = eval_sum_map(x.catalog(), gens, x.catalog().objects[i]);
        if (!em.map.is_surjective()) {
            Json w = Json::object();
            w["object"] = x.catalog().display_name(i);
            w["reason"] = "no projective deflation onto the object";
            return Verdict::fails(w);
        }
        MembershipResult mr = membership(kernel_cokernel(em.map).ker, x.carrier, caps);
        if (mr.status == Status::UNKNOWN) return Verdict::unknown("membership of the syzygy");
        if (mr.status == Status::FAILS) {
            Json w = Json::object();
            w["object"] = x.catalog().display_name(i);
            w["reason"] = "kernel of the canonical deflation leaves the carrier";
            return Verdict::fails(w);
        }
    }
    return Verdict::holds();
}

Verdict has_enough_injectives(const ExCat& x, const Caps& caps) {
    std::vector<int> injs = injectives_in(x);
    std::set<int> gens(injs.begin(), injs.end());
    for (int i : x.carrier.members) {
        EvalMap em = coeval_sum_map(x.catalog(), gens, x.catalog().objects[i]);
        if (!em.map.is_injective()) {
            Json w = Json::object();
            w["object"] = x.catalog().display_name(i);
            w["reason"] = "no injective inflation from the object";
            return Verdict::fails(w);
        }
        MembershipResult mr = membership(kernel_cokernel(em.map).coker, x.carrier, caps);
        if (mr.status == Status::UNKNOWN) return Verdict::unknown("membership of the cosyzygy");
        if (mr.status == Status::FAILS) {
            Json w = Json::object();
            w["object"] = x.catalog().display_name(i);
            w["reason"] = "cokernel of the canonical inflation leaves the carrier";
            return Verdict::fails(w);
        }
    }
    return Verdict::holds();
}

} // namespace extricat
