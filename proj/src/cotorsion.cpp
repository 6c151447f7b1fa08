#include "extricat/cotorsion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Json names_of(const Catalog& cat, const std::vector<int>& idx) {
    Json arr = Json::array();
    for (int i : idx) arr.push_back(i >= 0 ? cat.display_name(i) : "?");
    return arr;
}

Json summand_names(const Rep& m, const Catalog& cat, const Caps& caps) {
    bool complete = true;
    return names_of(cat, catalog_summands(m, cat, caps, &complete));
}

// membership of a functor image in a side subcategory, with names
MembershipResult side_membership(const Rep& img, const Subcat& side, const Caps& caps) {
    return membership(img, side, caps);
}

} // namespace

Verdict ext_orthogonal(const Subcat& t, const Subcat& f) {
    require(t.catalog == f.catalog, "subcategories live in different catalogs");
    for (int ti : t.members)
        for (int fi : f.members) {
            int d = t.catalog->ext_dim[ti][fi];
            if (d != 0) {
                Json w = Json::object();
                w["T_object"] = t.catalog->display_name(ti);
                w["F_object"] = t.catalog->display_name(fi);
                w["ext_dim"] = d;
                return Verdict::fails(w);
            }
        }
    return Verdict::holds();
}

namespace {

// bounded deterministic search over multiplicity-capped sums of generators
struct SumSearch {
    const Catalog& cat;
    std::vector<int> gens;
    int mult_bound;
    int dim_limit;

    template <typename F>
    bool run(F&& fn) const { // fn(sum rep) -> bool stop
        std::vector<int> mult(gens.size(), 0);
        while (true) {
            int i = 0;
            for (; i < static_cast<int>(gens.size()); ++i) {
                if (mult[i] < mult_bound) {
                    ++mult[i];
                    for (int j = 0; j < i; ++j) mult[j] = 0;
                    break;
                }
            }
            if (i == static_cast<int>(gens.size())) return false;
            int total = 0;
            for (size_t k = 0; k < gens.size(); ++k) total += mult[k] * cat.objects[gens[k]].total_dim();
            if (total > dim_limit) continue;
            Rep sum = Rep::zero(cat.alg);
            for (size_t k = 0; k < gens.size(); ++k)
                for (int c = 0; c < mult[k]; ++c) sum = direct_sum(sum, cat.objects[gens[k]]);
            if (fn(sum)) return true;
        }
    }
};

} // namespace

ApproxResult right_approximation(const Rep& c, const Subcat& t, const Subcat& f, const ExCat& x,
                                 const Caps& caps) {
    ApproxResult out;
    const Catalog& cat = *t.catalog;
    Rep zero = Rep::zero(cat.alg);

    // stage 0: members get the trivial conflation 0 -> C -> C
    MembershipResult in_t = membership(c, t, caps);
    if (in_t.status == Status::HOLDS) {
        out.kind = ApproxResult::Kind::FOUND;
        out.conflation = Conflation{RepMap::zero(zero, c), RepMap::identity(c)};
        out.trace["stage"] = "member";
        return out;
    }

    // stage 1: canonical evaluation map from the T-generator sum
    EvalMap em = eval_sum_map(cat, t.members, c);
    if (em.map.is_surjective()) {
        Rep k = kernel_cokernel(em.map).ker;
        MembershipResult mk = membership(k, f, caps);
        MembershipResult mc = membership(k, x.carrier, caps);
        if (mk.status == Status::HOLDS && mc.status == Status::HOLDS) {
            out.kind = ApproxResult::Kind::FOUND;
            out.conflation = Conflation{kernel_cokernel(em.map).ker_incl, em.map};
            out.trace["stage"] = "canonical";
            out.trace["middle"] = summand_names(em.sum, cat, caps);
            out.trace["kernel"] = summand_names(k, cat, caps);
            return out;
        }
        if (mk.status == Status::UNKNOWN || mc.status == Status::UNKNOWN) {
            out.kind = ApproxResult::Kind::UNKNOWN;
            out.trace["cap_hit"] = "membership during the canonical stage";
            return out;
        }
    }

    // stage 2: bounded search
    bool cap_hit = false;
    SumSearch search{cat, std::vector<int>(t.members.begin(), t.members.end()), caps.approx_mult_bound,
                     c.total_dim() + caps.approx_dim_slack};
    bool found = search.run([&](const Rep& sum) {
        // quick reject: need at least the dimensions of c everywhere
        for (size_t v = 0; v < sum.dims.size(); ++v)
            if (sum.dims[v] < c.dims[v]) return false;
        HomSpace hs = hom_space(sum, c);
        int d = hs.dim();
        if (std::pow(static_cast<double>(c.p()), d) > static_cast<double>(caps.hom_enum_cap)) {
            cap_hit = true;
            return false;
        }
        bool hit = false;
        for_each_coeff_vector(d, c.p(), caps.hom_enum_cap, [&](const Vec& coords) {
            RepMap phi = hs.from_coords(coords);
            if (!phi.is_surjective()) return false;
            Rep k = kernel_cokernel(phi).ker;
            MembershipResult mk = membership(k, f, caps);
            MembershipResult mc = membership(k, x.carrier, caps);
            if (mk.status == Status::UNKNOWN || mc.status == Status::UNKNOWN) {
                cap_hit = true;
                return false;
            }
            if (mk.status == Status::HOLDS && mc.status == Status::HOLDS) {
                out.kind = ApproxResult::Kind::FOUND;
                out.conflation = Conflation{kernel_cokernel(phi).ker_incl, phi};
                out.trace["stage"] = "search";
                out.trace["middle"] = summand_names(sum, cat, caps);
                out.trace["kernel"] = summand_names(k, cat, caps);
                hit = true;
                return true;
            }
            return false;
        });
        return hit;
    });
    if (found) return out;
    out.kind = cap_hit ? ApproxResult::Kind::UNKNOWN : ApproxResult::Kind::NO;
    out.trace["stage"] = cap_hit ? "search capped" : "search exhausted";
    out.trace["mult_bound"] = caps.approx_mult_bound;
    out.trace["dim_limit"] = c.total_dim() + caps.approx_dim_slack;
    return out;
}

ApproxResult left_approximation(const Rep& c, const Subcat& t, const Subcat& f, const ExCat& x,
                                const Caps& caps) {
    ApproxResult out;
    const Catalog& cat = *f.catalog;
    Rep zero = Rep::zero(cat.alg);

    MembershipResult in_f = membership(c, f, caps);
    if (in_f.status == Status::HOLDS) {
        out.kind = ApproxResult::Kind::FOUND;
        out.conflation = Conflation{RepMap::identity(c), RepMap::zero(c, zero)};
        out.trace["stage"] = "member";
        return out;
    }

    EvalMap em = coeval_sum_map(cat, f.members, c);
    if (em.map.is_injective()) {
        Rep q = kernel_cokernel(em.map).coker;
        MembershipResult mq = membership(q, t, caps);
        MembershipResult mc = membership(q, x.carrier, caps);
        if (mq.status == Status::HOLDS && mc.status == Status::HOLDS) {
            out.kind = ApproxResult::Kind::FOUND;
            out.conflation = Conflation{em.map, kernel_cokernel(em.map).coker_proj};
            out.trace["stage"] = "canonical";
            out.trace["middle"] = summand_names(em.sum, cat, caps);
            out.trace["cokernel"] = summand_names(q, cat, caps);
            return out;
        }
        if (mq.status == Status::UNKNOWN || mc.status == Status::UNKNOWN) {
            out.kind = ApproxResult::Kind::UNKNOWN;
            out.trace["cap_hit"] = "membership during the canonical stage";
            return out;
        }
    }

    bool cap_hit = false;
    SumSearch search{cat, std::vector<int>(f.members.begin(), f.members.end()), caps.approx_mult_bound,
                     c.total_dim() + caps.approx_dim_slack};
    bool found = search.run([&](const Rep& sum) {
        for (size_t v = 0; v < sum.dims.size(); ++v)
            if (sum.dims[v] < c.dims[v]) return false;
        HomSpace hs = hom_space(c, sum);
        int d = hs.dim();
        if (std::pow(static_cast<double>(c.p()), d) > static_cast<double>(caps.hom_enum_cap)) {
            cap_hit = true;
            return false;
        }
        bool hit = false;
        for_each_coeff_vector(d, c.p(), caps.hom_enum_cap, [&](const Vec& coords) {
            RepMap phi = hs.from_coords(coords);
            if (!phi.is_injective()) return false;
            Rep q = kernel_cokernel(phi).coker;
            MembershipResult mq = membership(q, t, caps);
            MembershipResult mc = membership(q, x.carrier, caps);
            if (mq.status == Status::UNKNOWN || mc.status == Status::UNKNOWN) {
                cap_hit = true;
                return false;
            }
            if (mq.status == Status::HOLDS && mc.status == Status::HOLDS) {
                out.kind = ApproxResult::Kind::FOUND;
                out.conflation = Conflation{phi, kernel_cokernel(phi).coker_proj};
                out.trace["stage"] = "search";
                out.trace["middle"] = summand_names(sum, cat, caps);
                out.trace["cokernel"] = summand_names(q, cat, caps);
                hit = true;
                return true;
            }
            return false;
        });
        return hit;
    });
    if (found) return out;
    out.kind = cap_hit ? ApproxResult::Kind::UNKNOWN : ApproxResult::Kind::NO;
    out.trace["stage"] = cap_hit ? "search capped" : "search exhausted";
    out.trace["mult_bound"] = caps.approx_mult_bound;
    out.trace["dim_limit"] = c.total_dim() + caps.approx_dim_slack;
    return out;
}

bool CotorsionReport::is_cotorsion() const {
    return orthogonality.status == Status::HOLDS && right_side.status == Status::HOLDS &&
           left_side.status == Status::HOLDS;
}

Status CotorsionReport::aggregate() const {
    return combine(orthogonality.status, combine(right_side.status, left_side.status));
}

Json CotorsionReport::to_json() const {
    Json j = Json::object();
    j["orthogonality"] = orthogonality.to_json();
    j["right_approximations"] = right_side.to_json();
    j["left_approximations"] = left_side.to_json();
    if (!per_object.empty()) j["objects"] = per_object;
    return j;
}

CotorsionReport check_cotorsion_pair(const Subcat& t, const Subcat& f, const ExCat& x, const Caps& caps) {
    CotorsionReport rep;
    rep.orthogonality = ext_orthogonal(t, f);

    auto run_side = [&](bool right) -> Verdict {
        for (int mi : x.carrier.members) {
            const Rep& m = x.catalog().objects[mi];
            ApproxResult ar = right ? right_approximation(m, t, f, x, caps)
                                    : left_approximation(m, t, f, x, caps);
            Json row = Json::object();
            row["result"] = ar.kind == ApproxResult::Kind::FOUND
                                ? "found"
                                : (ar.kind == ApproxResult::Kind::NO ? "no(bound)" : "unknown");
            row["trace"] = ar.trace;
            rep.per_object[x.catalog().display_name(mi)][right ? "right" : "left"] = row;
            if (ar.kind == ApproxResult::Kind::UNKNOWN)
                return Verdict::unknown("approximation search", {{"object", x.catalog().display_name(mi)}});
            if (ar.kind == ApproxResult::Kind::NO)
                return Verdict::fails({{"object", x.catalog().display_name(mi)}, {"trace", ar.trace}});
        }
        return Verdict::holds();
    };
    rep.right_side = run_side(true);
    rep.left_side = run_side(false);
    return rep;
}

Json EnumerationResult::to_json() const {
    Json j = Json::object();
    j["count"] = pairs.size();
    j["candidates_after_filter"] = candidates_after_filter;
    Json arr = Json::array();
    for (const auto& p : pairs) {
        Json e = Json::object();
        e["T"] = p.t.to_json();
        e["F"] = p.f.to_json();
        e["report"] = p.report.to_json();
        arr.push_back(e);
    }
    j["pairs"] = arr;
    return j;
}

EnumerationResult enumerate_cotorsion_pairs(const ExCat& x, const Caps& caps) {
    int n = static_cast<int>(x.carrier.members.size());
    if (n > caps.subset_limit)
        throw std::invalid_argument("carrier has " + std::to_string(n) +
                                    " indecomposables, above the enumeration limit " +
                                    std::to_string(caps.subset_limit));
    std::vector<int> members(x.carrier.members.begin(), x.carrier.members.end());
    std::vector<int> pos(x.catalog().size(), -1);
    for (int i = 0; i < n; ++i) pos[members[i]] = i;

    // bit i set <=> members[i] kills / is killed via a nonzero ext group
    std::vector<uint32_t> kills(n, 0), killed_by(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (x.catalog().ext_dim[members[i]][members[j]] != 0) {
                kills[i] |= 1u << j;
                killed_by[j] |= 1u << i;
            }

    uint32_t proj_mask = 0, inj_mask = 0;
    for (int i : projectives_in(x)) proj_mask |= 1u << pos[i];
    for (int i : injectives_in(x)) inj_mask |= 1u << pos[i];

    std::vector<int> free_t, free_f;
    for (int i = 0; i < n; ++i) {
        if (!(proj_mask & (1u << i))) free_t.push_back(i);
        if (!(inj_mask & (1u << i))) free_f.push_back(i);
    }

    EnumerationResult out;
    for (uint64_t bt = 0; bt < (1ull << free_t.size()); ++bt) {
        uint32_t tmask = proj_mask;
        for (size_t k = 0; k < free_t.size(); ++k)
            if (bt & (1ull << k)) tmask |= 1u << free_t[k];
        for (uint64_t bf = 0; bf < (1ull << free_f.size()); ++bf) {
            uint32_t fmask = inj_mask;
            for (size_t k = 0; k < free_f.size(); ++k)
                if (bf & (1ull << k)) fmask |= 1u << free_f[k];
            // necessary conditions: mutual orthogonality and maximality on
            // both sides (each class is the full perpendicular of the other)
            uint32_t left_perp = 0, right_perp = 0;
            for (int i = 0; i < n; ++i) {
                if (!(kills[i] & fmask)) left_perp |= 1u << i;
                if (!(killed_by[i] & tmask)) right_perp |= 1u << i;
            }
            if (left_perp != tmask || right_perp != fmask) continue;
            ++out.candidates_after_filter;
            std::vector<int> tidx, fidx;
            for (int i = 0; i < n; ++i) {
                if (tmask & (1u << i)) tidx.push_back(members[i]);
                if (fmask & (1u << i)) fidx.push_back(members[i]);
            }
            Subcat t = Subcat::of_indices(x.carrier.catalog, tidx);
            Subcat f = Subcat::of_indices(x.carrier.catalog, fidx);
            CotorsionReport rep = check_cotorsion_pair(t, f, x, caps);
            if (rep.aggregate() == Status::UNKNOWN) out.any_unknown = true;
            if (rep.is_cotorsion()) out.pairs.push_back({t, f, rep});
        }
    }
    return out;
}

GlueResult glue(const RecollementScenario& s, const GluePairInput& input) {
    GlueResult out;
    std::vector<int> tidx, fidx;
    Json trace = Json::array();
    for (int mi : s.middle.carrier.members) {
        const Rep& m = s.middle.catalog().objects[mi];
        Rep istar = apply_functor(s.ctx, FunctorTag::i_star_upper, m);
        Rep jstar = apply_functor(s.ctx, FunctorTag::j_star, m);
        Rep ishriek = apply_functor(s.ctx, FunctorTag::i_shriek, m);
        MembershipResult t1 = side_membership(istar, input.t1, s.caps);
        MembershipResult t2 = side_membership(jstar, input.t2, s.caps);
        MembershipResult f1 = side_membership(ishriek, input.f1, s.caps);
        MembershipResult f2 = side_membership(jstar, input.f2, s.caps);
        for (const MembershipResult* r : {&t1, &t2, &f1, &f2})
            if (r->status == Status::UNKNOWN) out.status = Status::UNKNOWN;
        bool in_t = t1.status == Status::HOLDS && t2.status == Status::HOLDS;
        bool in_f = f1.status == Status::HOLDS && f2.status == Status::HOLDS;
        if (in_t) tidx.push_back(mi);
        if (in_f) fidx.push_back(mi);
        Json row = Json::object();
        row["object"] = s.middle.catalog().display_name(mi);
        row["i*"] = summand_names(istar, *input.t1.catalog, s.caps);
        row["j^*"] = summand_names(jstar, *input.t2.catalog, s.caps);
        row["i^!"] = summand_names(ishriek, *input.f1.catalog, s.caps);
        row["in_T"] = in_t;
        row["in_F"] = in_f;
        trace.push_back(row);
    }
    out.glued_t = Subcat::of_indices(s.middle.carrier.catalog, tidx);
    out.glued_f = Subcat::of_indices(s.middle.carrier.catalog, fidx);
    out.trace = trace;
    return out;
}

Status TheoremReport::aggregate() const {
    Status st = final_check.aggregate();
    if (inconsistent) st = combine(st, Status::INCONSISTENT);
    return st;
}

Json TheoremReport::to_json() const {
    Json j = Json::object();
    Json h = Json::object();
    for (const auto& e : hypotheses) h[e.key] = e.verdict.to_json();
    j["hypotheses"] = h;
    Json c = Json::object();
    for (const auto& e : conditions) c[e.key] = e.verdict.to_json();
    j["conditions"] = c;
    j["glued_pair_check"] = final_check.to_json();
    j["consistent"] = !inconsistent;
    return j;
}

TheoremReport theorem44_conditions(const RecollementScenario& s, const GluePairInput& input,
                                   const GlueResult& glued) {
    TheoremReport rep;
    const RecContext& ctx = s.ctx;

    Verdict h_proj = has_enough_projectives(s.middle, s.caps);
    Verdict h_ishriek = functor_exactness(ctx, FunctorHandle::single(FunctorTag::i_shriek),
                                          ExactMode::exact_mode, s.middle, s.side_a, s.caps);
    Verdict h_jshriek = functor_exactness(ctx, FunctorHandle::single(FunctorTag::j_lower_shriek),
                                          ExactMode::exact_mode, s.side_c, s.middle, s.caps);
    rep.hypotheses.push_back({"middle has enough projectives", h_proj});
    rep.hypotheses.push_back({"i^! exact", h_ishriek});
    rep.hypotheses.push_back({"j_! exact", h_jshriek});

    // (i) orthogonality of the glued pair
    rep.conditions.push_back({"(i) Ext(T, F) = 0", ext_orthogonal(glued.glued_t, glued.glued_f)});

    // (ii) exactness of i*
    rep.conditions.push_back({"(ii) i* exact",
                              functor_exactness(ctx, FunctorHandle::single(FunctorTag::i_star_upper),
                                                ExactMode::exact_mode, s.middle, s.side_a, s.caps)});

    // (iii) surjectivity of the induced hom maps for every f : i_* A -> j_! T
    {
        Verdict v = Verdict::holds();
        bool done = false;
        for (int ai : s.side_a.carrier.members) {
            if (done) break;
            Rep ia = apply_functor(ctx, FunctorTag::i_star_lower, s.side_a.catalog().objects[ai]);
            for (int ti : input.t2.members) {
                if (done) break;
                Rep jt = apply_functor(ctx, FunctorTag::j_lower_shriek, input.t2.catalog->objects[ti]);
                HomSpace hs = hom_space(ia, jt);
                int d = hs.dim();
                if (std::pow(2.0, d) > static_cast<double>(s.caps.hom_enum_cap)) {
                    v = Verdict::unknown("hom space enumeration");
                    done = true;
                    break;
                }
                for_each_coeff_vector(d, ia.p(), s.caps.hom_enum_cap, [&](const Vec& coords) {
                    RepMap fmap = hs.from_coords(coords);
                    for (int fi : glued.glued_f.members) {
                        const Rep& fobj = s.middle.catalog().objects[fi];
                        HomSpace from_jt = hom_space(jt, fobj);
                        HomSpace from_ia = hom_space(ia, fobj);
                        Mat induced(from_ia.dim(), from_jt.dim(), ia.p());
                        for (int col = 0; col < from_jt.dim(); ++col) {
                            Vec cc = from_ia.coords_of(compose(from_jt.basis[col], fmap));
                            for (int r = 0; r < from_ia.dim(); ++r) induced.set(r, col, cc[r]);
                        }
                        if (rank(induced) != from_ia.dim()) {
                            Json w = Json::object();
                            w["A"] = s.side_a.catalog().display_name(ai);
                            w["T"] = input.t2.catalog->display_name(ti);
                            w["f_coords"] = coords;
                            w["F"] = s.middle.catalog().display_name(fi);
                            v = Verdict::fails(w);
                            return true;
                        }
                    }
                    return false;
                });
                if (v.status != Status::HOLDS) done = true;
            }
        }
        rep.conditions.push_back({"(iii) induced hom maps surjective", v});
    }

    // (iv) T c j_!(T2), or i_*(F1) orthogonal to T from the right
    {
        Verdict branch1 = Verdict::holds();
        for (int ti : glued.glued_t.members) {
            const Rep& b = s.middle.catalog().objects[ti];
            Rep jb = apply_functor(ctx, FunctorTag::j_star, b);
            MembershipResult ms = membership(jb, input.t2, s.caps);
            bool iso = false;
            if (ms.status == Status::HOLDS) {
                Rep back = apply_functor(ctx, FunctorTag::j_lower_shriek, jb);
                iso = is_isomorphic(b, back, s.caps).status == Status::HOLDS;
            }
            if (!iso) {
                branch1 = Verdict::fails({{"object", s.middle.catalog().display_name(ti)}});
                break;
            }
        }
        Verdict branch2 = Verdict::holds();
        std::set<int> t_perp;
        for (int mi : s.middle.carrier.members) {
            bool orth = true;
            for (int ti : glued.glued_t.members)
                if (s.middle.catalog().ext_dim[ti][mi] != 0) orth = false;
            if (orth) t_perp.insert(mi);
        }
        Subcat perp = Subcat::of_indices(s.middle.carrier.catalog,
                                         std::vector<int>(t_perp.begin(), t_perp.end()));
        for (int fi : input.f1.members) {
            Rep img = apply_functor(ctx, FunctorTag::i_star_lower, input.f1.catalog->objects[fi]);
            MembershipResult mr = membership(img, perp, s.caps);
            if (mr.status != Status::HOLDS) {
                branch2 = Verdict::fails({{"object", input.f1.catalog->display_name(fi)}, {"membership", mr.detail}});
                break;
            }
        }
        if (branch1.status == Status::HOLDS || branch2.status == Status::HOLDS)
            rep.conditions.push_back({"(iv) T c j_! T2 or i_* F1 c right-perp of T",
                                      Verdict::holds({{"branch", branch1.status == Status::HOLDS ? 1 : 2}})});
        else {
            Json w = Json::object();
            w["T_in_j_image"] = branch1.detail;
            w["i_F1_orthogonal"] = branch2.detail;
            rep.conditions.push_back({"(iv) T c j_! T2 or i_* F1 c right-perp of T", Verdict::fails(w)});
        }
    }

    // (v) both the left side and the middle are Frobenius
    {
        auto frobenius = [&](const ExCat& x, const char* /*name*/) -> Verdict {
            Verdict ep = has_enough_projectives(x, s.caps);
            if (ep.status != Status::HOLDS) return ep;
            Verdict ei = has_enough_injectives(x, s.caps);
            if (ei.status != Status::HOLDS) return ei;
            std::vector<int> p = projectives_in(x), i = injectives_in(x);
            if (p == i) return Verdict::holds();
            Json w = Json::object();
            w["projectives"] = names_of(x.catalog(), p);
            w["injectives"] = names_of(x.catalog(), i);
            return Verdict::fails(w);
        };
        Verdict fa = frobenius(s.side_a, "left");
        Verdict fb = frobenius(s.middle, "middle");
        Verdict v = fa.status == Status::HOLDS ? fb : fa;
        rep.conditions.push_back({"(v) left side and middle Frobenius", v});
    }

    rep.final_check = check_cotorsion_pair(glued.glued_t, glued.glued_f, s.middle, s.caps);

    bool hyps = true;
    for (const auto& e : rep.hypotheses) hyps = hyps && e.verdict.status == Status::HOLDS;
    bool any_condition = false;
    for (const auto& e : rep.conditions) any_condition = any_condition || e.verdict.status == Status::HOLDS;
    if (hyps && any_condition && !rep.final_check.is_cotorsion()) rep.inconsistent = true;
    return rep;
}

namespace {

Json stage_row(const RecollementScenario& s, const char* label, const Rep& obj) {
    Json j = Json::object();
    j["stage"] = label;
    j["dims"] = obj.dims;
    j["summands"] = summand_names(obj, s.middle.catalog(), s.caps);
    return j;
}

Json side_stage_row(const RecollementScenario& s, const char* label, const Rep& obj) {
    Json j = Json::object();
    j["stage"] = label;
    j["dims"] = obj.dims;
    j["summands"] = summand_names(obj, s.side_a.catalog(), s.caps);
    return j;
}

} // namespace

GluedApproxResult glued_approximation(const RecollementScenario& s, const GluePairInput& input, const Rep& m,
                                      char direction) {
    require(direction == 'b' || direction == 'c', "direction must be 'b' or 'c'");
    GluedApproxResult out;
    Json trace = Json::array();
    const RecContext& ctx = s.ctx;

    auto fail = [&](int stage, const char* why) {
        out.status = Status::FAILS;
        out.failed_stage = stage;
        Json j = Json::object();
        j["stage"] = stage;
        j["reason"] = why;
        trace.push_back(j);
        out.trace = trace;
        return out;
    };

    if (direction == 'b') {
        // 1: right approximation of j^* M in the right side
        Rep y = apply_functor(ctx, FunctorTag::j_star, m);
        ApproxResult ra = right_approximation(y, input.t2, input.f2, s.side_c, s.caps);
        if (ra.kind != ApproxResult::Kind::FOUND) return fail(1, "no right approximation of j^* M");
        trace.push_back(side_stage_row(s, "right approximation of j^* M", ra.conflation->B()));

        // 2: push through j_*, exact here
        Conflation jc{apply_functor_map(ctx, FunctorTag::j_lower_star, ra.conflation->incl),
                      apply_functor_map(ctx, FunctorTag::j_lower_star, ra.conflation->proj)};
        if (!jc.is_exact()) return fail(2, "j_* image of the approximation is not exact");

        // 3: pull back along the unit M -> j_* j^* M
        RepMap eta = adjunction_unit(ctx, AdjPair::j_star_lower, m);
        if (!eta.tgt.same_data(jc.proj.tgt)) return fail(3, "unit target mismatch");
        PullbackData pb = pullback(jc.proj, eta);
        Rep h = pb.obj;
        RepMap h_to_m = pb.to_y;
        RepMap kappa = pb.mediate(jc.incl, RepMap::zero(jc.incl.src, m));
        Conflation c1{kappa, h_to_m};
        if (!c1.is_exact()) return fail(3, "pullback row is not exact");
        trace.push_back(stage_row(s, "pullback H", h));

        // 4: right approximation of i^* H in the left side
        Rep g = apply_functor(ctx, FunctorTag::i_star_upper, h);
        ApproxResult ra1 = right_approximation(g, input.t1, input.f1, s.side_a, s.caps);
        if (ra1.kind != ApproxResult::Kind::FOUND) return fail(4, "no right approximation of i^* H");
        trace.push_back(side_stage_row(s, "right approximation of i^* H", ra1.conflation->B()));

        // 5: push through i_* and pull back along H -> i_* i^* H
        Conflation ic{apply_functor_map(ctx, FunctorTag::i_star_lower, ra1.conflation->incl),
                      apply_functor_map(ctx, FunctorTag::i_star_lower, ra1.conflation->proj)};
        if (!ic.is_exact()) return fail(5, "i_* image of the approximation is not exact");
        RepMap nu = adjunction_unit(ctx, AdjPair::i_upper_lower, h);
        if (!nu.tgt.same_data(ic.proj.tgt)) return fail(5, "unit target mismatch");
        PullbackData pb2 = pullback(ic.proj, nu);
        Rep t = pb2.obj;
        RepMap t_to_h = pb2.to_y;
        RepMap kappa2 = pb2.mediate(ic.incl, RepMap::zero(ic.incl.src, h));
        Conflation c2{kappa2, t_to_h};
        if (!c2.is_exact()) return fail(5, "second pullback row is not exact");
        trace.push_back(stage_row(s, "pullback T", t));

        // 6: kernel of the composite deflation T -> M
        RepMap w = compose(h_to_m, t_to_h);
        auto kc = kernel_cokernel(w);
        Conflation result{kc.ker_incl, w};
        if (!result.is_exact()) return fail(6, "assembled sequence is not exact");
        trace.push_back(stage_row(s, "kernel F", kc.ker));

        // certificates
        auto check_side = [&](const Rep& obj, FunctorTag tag, const Subcat& side, int stage, const char* why) {
            MembershipResult mr = membership(apply_functor(ctx, tag, obj), side, s.caps);
            return mr.status == Status::HOLDS ? true : (fail(stage, why), false);
        };
        if (!check_side(t, FunctorTag::i_star_upper, input.t1, 7, "i^* T leaves T1")) return out;
        if (!check_side(t, FunctorTag::j_star, input.t2, 7, "j^* T leaves T2")) return out;
        if (!check_side(kc.ker, FunctorTag::i_shriek, input.f1, 7, "i^! F leaves F1")) return out;
        if (!check_side(kc.ker, FunctorTag::j_star, input.f2, 7, "j^* F leaves F2")) return out;
        Verdict cv = conflation_in(result, s.middle, s.caps);
        if (cv.status != Status::HOLDS) return fail(8, "result is not a conflation in the middle carrier");

        out.status = Status::HOLDS;
        out.conflation = result;
        out.trace = trace;
        return out;
    }

    // direction 'c'
    Rep y = apply_functor(ctx, FunctorTag::j_star, m);
    ApproxResult la = left_approximation(y, input.t2, input.f2, s.side_c, s.caps);
    if (la.kind != ApproxResult::Kind::FOUND) return fail(1, "no left approximation of j^* M");
    trace.push_back(side_stage_row(s, "left approximation of j^* M", la.conflation->B()));

    Conflation jc{apply_functor_map(ctx, FunctorTag::j_lower_shriek, la.conflation->incl),
                  apply_functor_map(ctx, FunctorTag::j_lower_shriek, la.conflation->proj)};
    if (!jc.is_exact()) return fail(2, "j_! image of the approximation is not exact");

    RepMap eps = adjunction_counit(ctx, AdjPair::j_shriek_star, m);
    if (!eps.src.same_data(jc.incl.src)) return fail(3, "counit source mismatch");
    PushoutData po = pushout(jc.incl, eps);
    Rep h = po.obj;
    RepMap m_to_h = po.from_y;
    RepMap rho = po.mediate(jc.proj, RepMap::zero(m, jc.proj.tgt));
    Conflation c1{m_to_h, rho};
    if (!c1.is_exact()) return fail(3, "pushout row is not exact");
    trace.push_back(stage_row(s, "pushout H", h));

    Rep g = apply_functor(ctx, FunctorTag::i_shriek, h);
    ApproxResult la1 = left_approximation(g, input.t1, input.f1, s.side_a, s.caps);
    if (la1.kind != ApproxResult::Kind::FOUND) return fail(4, "no left approximation of i^! H");
    trace.push_back(side_stage_row(s, "left approximation of i^! H", la1.conflation->B()));

    Conflation ic{apply_functor_map(ctx, FunctorTag::i_star_lower, la1.conflation->incl),
                  apply_functor_map(ctx, FunctorTag::i_star_lower, la1.conflation->proj)};
    if (!ic.is_exact()) return fail(5, "i_* image of the approximation is not exact");
    RepMap eps2 = adjunction_counit(ctx, AdjPair::i_lower_shriek, h);
    if (!eps2.src.same_data(ic.incl.src)) return fail(5, "counit source mismatch");
    PushoutData po2 = pushout(ic.incl, eps2);
    Rep f = po2.obj;
    RepMap h_to_f = po2.from_y;
    RepMap rho2 = po2.mediate(ic.proj, RepMap::zero(h, ic.proj.tgt));
    Conflation c2{h_to_f, rho2};
    if (!c2.is_exact()) return fail(5, "second pushout row is not exact");
    trace.push_back(stage_row(s, "pushout F", f));

    RepMap w = compose(h_to_f, m_to_h);
    auto kc = kernel_cokernel(w);
    Conflation result{w, kc.coker_proj};
    if (!result.is_exact()) return fail(6, "assembled sequence is not exact");
    trace.push_back(stage_row(s, "cokernel T", kc.coker));

    auto check_side = [&](const Rep& obj, FunctorTag tag, const Subcat& side, int stage, const char* why) {
        MembershipResult mr = membership(apply_functor(ctx, tag, obj), side, s.caps);
        return mr.status == Status::HOLDS ? true : (fail(stage, why), false);
    };
    if (!check_side(f, FunctorTag::i_shriek, input.f1, 7, "i^! F leaves F1")) return out;
    if (!check_side(f, FunctorTag::j_star, input.f2, 7, "j^* F leaves F2")) return out;
    if (!check_side(kc.coker, FunctorTag::i_star_upper, input.t1, 7, "i^* T leaves T1")) return out;
    if (!check_side(kc.coker, FunctorTag::j_star, input.t2, 7, "j^* T leaves T2")) return out;
    Verdict cv = conflation_in(result, s.middle, s.caps);
    if (cv.status != Status::HOLDS) return fail(8, "result is not a conflation in the middle carrier");

    out.status = Status::HOLDS;
    out.conflation = result;
    out.trace = trace;
    return out;
}

Json RestrictionResult::to_json() const {
    Json j = Json::object();
    j["input_pair"] = input_check.to_json();
    j["preconditions"] = preconditions.to_json();
    j["restricted_T"] = restricted_t.to_json();
    j["restricted_F"] = restricted_f.to_json();
    j["restricted_check"] = restricted_check.to_json();
    return j;
}

RestrictionResult restrict_pair(const RecollementScenario& s, const Subcat& u, const Subcat& v, char via) {
    require(via == 'i' || via == 'j', "restriction side must be 'i' or 'j'");
    RestrictionResult out;
    out.input_check = check_cotorsion_pair(u, v, s.middle, s.caps);

    auto image_set = [&](FunctorTag tag, const Subcat& src, const ExCat& tgt) -> std::vector<int> {
        std::set<int> got;
        for (int i : src.members) {
            Rep img = apply_functor(s.ctx, tag, src.catalog->objects[i]);
            bool complete = true;
            for (int k : catalog_summands(img, tgt.catalog(), s.caps, &complete))
                if (k >= 0) got.insert(k);
        }
        return {got.begin(), got.end()};
    };
    auto stays_inside = [&](FunctorTag outer, FunctorTag inner, const Subcat& src) -> Verdict {
        for (int i : src.members) {
            Rep img = apply_functor(s.ctx, outer, apply_functor(s.ctx, inner, src.catalog->objects[i]));
            MembershipResult mr = membership(img, src, s.caps);
            if (mr.status == Status::UNKNOWN) return Verdict::unknown("membership");
            if (mr.status == Status::FAILS)
                return Verdict::fails({{"object", src.catalog->display_name(i)}, {"inner", mr.detail}});
        }
        return Verdict::holds();
    };

    if (via == 'i') {
        Verdict pre1 = stays_inside(FunctorTag::i_star_lower, FunctorTag::i_shriek, u);
        Verdict pre2 = stays_inside(FunctorTag::i_star_lower, FunctorTag::i_star_upper, u);
        Json d = Json::object();
        d["i_* i^! U c U"] = pre1.to_json();
        d["i_* i* U c U"] = pre2.to_json();
        Status st = combine(pre1.status, pre2.status);
        out.preconditions = Verdict{st == Status::HOLDS ? Status::HOLDS : st, d};
        out.restricted_t = Subcat::of_indices(s.side_a.carrier.catalog,
                                              image_set(FunctorTag::i_star_upper, u, s.side_a));
        out.restricted_f = Subcat::of_indices(s.side_a.carrier.catalog,
                                              image_set(FunctorTag::i_shriek, v, s.side_a));
        out.restricted_check = check_cotorsion_pair(out.restricted_t, out.restricted_f, s.side_a, s.caps);
    } else {
        Verdict pre1 = stays_inside(FunctorTag::j_lower_star, FunctorTag::j_star, v);
        Verdict pre2 = stays_inside(FunctorTag::j_lower_shriek, FunctorTag::j_star, u);
        Json d = Json::object();
        d["j_* j^* V c V"] = pre1.to_json();
        d["j_! j^* U c U"] = pre2.to_json();
        Status st = (pre1.status == Status::HOLDS || pre2.status == Status::HOLDS) ? Status::HOLDS
                                                                                   : Status::FAILS;
        out.preconditions = Verdict{st, d};
        out.restricted_t = Subcat::of_indices(s.side_c.carrier.catalog,
                                              image_set(FunctorTag::j_star, u, s.side_c));
        out.restricted_f = Subcat::of_indices(s.side_c.carrier.catalog,
                                              image_set(FunctorTag::j_star, v, s.side_c));
        out.restricted_check = check_cotorsion_pair(out.restricted_t, out.restricted_f, s.side_c, s.caps);
    }
    return out;
}

} // namespace extricat
