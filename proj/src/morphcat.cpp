#include "extricat/morphcat.hpp"

#include <cmath>
#include <stdexcept>

namespace extricat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_logic(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

} // namespace

std::string to_string(FunctorTag t) {
    switch (t) {
        case FunctorTag::i_star_upper: return "i*";
        case FunctorTag::i_star_lower: return "i_*";
        case FunctorTag::i_shriek: return "i^!";
        case FunctorTag::j_lower_shriek: return "j_!";
        case FunctorTag::j_star: return "j^*";
        case FunctorTag::j_lower_star: return "j_*";
    }
    return "?";
}

FunctorTag functor_tag_from_string(const std::string& s) {
    if (s == "i*" || s == "i_star" || s == "i^*") return FunctorTag::i_star_upper;
    if (s == "i_*" || s == "i_lower") return FunctorTag::i_star_lower;
    if (s == "i^!" || s == "i_shriek" || s == "i!") return FunctorTag::i_shriek;
    if (s == "j_!" || s == "j_shriek" || s == "j!") return FunctorTag::j_lower_shriek;
    if (s == "j^*" || s == "j_star" || s == "j*") return FunctorTag::j_star;
    if (s == "j_*" || s == "j_lower_star") return FunctorTag::j_lower_star;
    throw std::invalid_argument("unknown functor tag '" + s + "'");
}

bool functor_source_is_middle(FunctorTag t) {
    return t == FunctorTag::i_star_upper || t == FunctorTag::i_shriek || t == FunctorTag::j_star;
}

std::string FunctorHandle::name() const {
    std::string s;
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i) s += " ";
        s += to_string(tags[i]);
    }
    return s;
}

std::shared_ptr<const Algebra> triangular_matrix_algebra(std::shared_ptr<const Algebra> a) {
    const Quiver& q = a->quiver();
    int n = static_cast<int>(q.vertices.size());
    int m = static_cast<int>(q.arrows.size());
    unsigned p = a->field().p;

    Quiver tq;
    for (const auto& v : q.vertices) tq.vertices.push_back(v);
    for (const auto& v : q.vertices) tq.vertices.push_back(v + "'");
    for (const auto& ar : q.arrows) tq.arrows.push_back(ar); // top copy keeps indices
    for (const auto& ar : q.arrows) tq.arrows.push_back({ar.name + "'", ar.src + n, ar.tgt + n});
    for (int v = 0; v < n; ++v) tq.arrows.push_back({"c_" + q.vertices[v], v + n, v});

    std::vector<Relation> rels;
    for (const auto& r : a->relations()) {
        rels.push_back(r); // top copy
        Relation bot;
        for (const auto& [c, path] : r.terms) {
            Path sh{path.src_vertex + n, {}};
            for (int arr : path.arrows) sh.arrows.push_back(arr + m);
            bot.terms.emplace_back(c, sh);
        }
        rels.push_back(bot);
    }
    // commutativity a . c_src = c_tgt . a' for every base arrow a
    for (int arr = 0; arr < m; ++arr) {
        int v = q.arrows[arr].src, w = q.arrows[arr].tgt;
        Relation r;
        r.terms.emplace_back(1, Path{v + n, {2 * m + v, arr}});
        r.terms.emplace_back(p - 1, Path{v + n, {m + arr, 2 * m + w}});
        rels.push_back(r);
    }
    return build_algebra(tq, rels, a->field());
}

RecContext make_rec_context(std::shared_ptr<const Algebra> a) {
    return RecContext{a, triangular_matrix_algebra(a)};
}

Rep triple_to_rep(const RecContext& ctx, const TripleObj& t) {
    int n = ctx.n(), m = ctx.m();
    Rep r;
    r.alg = ctx.tri;
    r.dims.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        r.dims[v] = t.x.dims[v];
        r.dims[v + n] = t.y.dims[v];
    }
    r.mats.resize(2 * m + n);
    for (int a = 0; a < m; ++a) {
        r.mats[a] = t.x.mats[a];
        r.mats[m + a] = t.y.mats[a];
    }
    for (int v = 0; v < n; ++v) r.mats[2 * m + v] = t.f.comps[v];
    return r;
}

TripleObj rep_to_triple(const RecContext& ctx, const Rep& rep) {
    int n = ctx.n(), m = ctx.m();
    require(static_cast<int>(rep.dims.size()) == 2 * n, "not a module over the triangular algebra");
    TripleObj t;
    t.x.alg = ctx.base;
    t.y.alg = ctx.base;
    for (int v = 0; v < n; ++v) {
        t.x.dims.push_back(rep.dims[v]);
        t.y.dims.push_back(rep.dims[v + n]);
    }
    for (int a = 0; a < m; ++a) {
        t.x.mats.push_back(rep.mats[a]);
        t.y.mats.push_back(rep.mats[m + a]);
    }
    t.f.src = t.y;
    t.f.tgt = t.x;
    for (int v = 0; v < n; ++v) t.f.comps.push_back(rep.mats[2 * m + v]);
    return t;
}

RepMap triple_map_to_repmap(const RecContext& ctx, const TripleMap& t) {
    RepMap f;
    f.src = triple_to_rep(ctx, t.src);
    f.tgt = triple_to_rep(ctx, t.tgt);
    int n = ctx.n();
    f.comps.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        f.comps[v] = t.u.comps[v];
        f.comps[v + n] = t.v.comps[v];
    }
    return f;
}

TripleMap repmap_to_triple_map(const RecContext& ctx, const RepMap& f) {
    TripleMap t;
    t.src = rep_to_triple(ctx, f.src);
    t.tgt = rep_to_triple(ctx, f.tgt);
    int n = ctx.n();
    t.u = RepMap{t.src.x, t.tgt.x, {f.comps.begin(), f.comps.begin() + n}};
    t.v = RepMap{t.src.y, t.tgt.y, {f.comps.begin() + n, f.comps.end()}};
    return t;
}

Rep apply_functor(const RecContext& ctx, FunctorTag t, const Rep& obj) {
    switch (t) {
        case FunctorTag::i_star_lower: {
            Rep z = Rep::zero(ctx.base);
            return triple_to_rep(ctx, TripleObj{obj, z, RepMap::zero(z, obj)});
        }
        case FunctorTag::j_lower_star: {
            Rep z = Rep::zero(ctx.base);
            return triple_to_rep(ctx, TripleObj{z, obj, RepMap::zero(obj, z)});
        }
        case FunctorTag::j_lower_shriek:
            return triple_to_rep(ctx, TripleObj{obj, obj, RepMap::identity(obj)});
        case FunctorTag::i_shriek:
            return rep_to_triple(ctx, obj).x;
        case FunctorTag::j_star:
            return rep_to_triple(ctx, obj).y;
        case FunctorTag::i_star_upper:
            return kernel_cokernel(rep_to_triple(ctx, obj).f).coker;
    }
    throw std::logic_error("unreachable");
}

RepMap apply_functor_map(const RecContext& ctx, FunctorTag t, const RepMap& f) {
    switch (t) {
        case FunctorTag::i_star_lower: {
            Rep z = Rep::zero(ctx.base);
            TripleMap tm{TripleObj{f.src, z, RepMap::zero(z, f.src)}, TripleObj{f.tgt, z, RepMap::zero(z, f.tgt)},
                         f, RepMap::identity(z)};
            return triple_map_to_repmap(ctx, tm);
        }
        case FunctorTag::j_lower_star: {
            Rep z = Rep::zero(ctx.base);
            TripleMap tm{TripleObj{z, f.src, RepMap::zero(f.src, z)}, TripleObj{z, f.tgt, RepMap::zero(f.tgt, z)},
                         RepMap::identity(z), f};
            return triple_map_to_repmap(ctx, tm);
        }
        case FunctorTag::j_lower_shriek: {
            TripleMap tm{TripleObj{f.src, f.src, RepMap::identity(f.src)},
                         TripleObj{f.tgt, f.tgt, RepMap::identity(f.tgt)}, f, f};
            return triple_map_to_repmap(ctx, tm);
        }
        case FunctorTag::i_shriek:
            return repmap_to_triple_map(ctx, f).u;
        case FunctorTag::j_star:
            return repmap_to_triple_map(ctx, f).v;
        case FunctorTag::i_star_upper: {
            TripleMap tm = repmap_to_triple_map(ctx, f);
            auto src_kc = kernel_cokernel(tm.src.f);
            auto tgt_kc = kernel_cokernel(tm.tgt.f);
            std::vector<Mat> comps;
            for (size_t v = 0; v < tm.u.comps.size(); ++v) {
                auto c = solve_matrix_left(src_kc.coker_proj.comps[v],
                                           mul(tgt_kc.coker_proj.comps[v], tm.u.comps[v]));
                require_logic(c.has_value(), "cokernel functor map failed");
                comps.push_back(*c);
            }
            return RepMap{src_kc.coker, tgt_kc.coker, comps};
        }
    }
    throw std::logic_error("unreachable");
}

Rep apply_functor(const RecContext& ctx, const FunctorHandle& h, const Rep& obj) {
    Rep cur = obj;
    for (auto it = h.tags.rbegin(); it != h.tags.rend(); ++it) cur = apply_functor(ctx, *it, cur);
    return cur;
}

RepMap apply_functor_map(const RecContext& ctx, const FunctorHandle& h, const RepMap& f) {
    RepMap cur = f;
    for (auto it = h.tags.rbegin(); it != h.tags.rend(); ++it) cur = apply_functor_map(ctx, *it, cur);
    return cur;
}

std::string to_string(AdjPair a) {
    switch (a) {
        case AdjPair::i_upper_lower: return "(i*, i_*)";
        case AdjPair::i_lower_shriek: return "(i_*, i^!)";
        case AdjPair::j_shriek_star: return "(j_!, j^*)";
        case AdjPair::j_star_lower: return "(j^*, j_*)";
    }
    return "?";
}

RepMap adjunction_unit(const RecContext& ctx, AdjPair adj, const Rep& obj) {
    int n = ctx.n();
    switch (adj) {
        case AdjPair::i_upper_lower: {
            TripleObj t = rep_to_triple(ctx, obj);
            auto kc = kernel_cokernel(t.f);
            Rep tgt = apply_functor(ctx, FunctorTag::i_star_lower, kc.coker);
            RepMap u = RepMap::zero(obj, tgt);
            for (int v = 0; v < n; ++v) u.comps[v] = kc.coker_proj.comps[v];
            return u;
        }
        case AdjPair::i_lower_shriek:
            return RepMap::identity(obj); // X -> i^! i_* X on the nose
        case AdjPair::j_shriek_star:
            return RepMap::identity(obj); // Y -> j^* j_! Y on the nose
        case AdjPair::j_star_lower: {
            TripleObj t = rep_to_triple(ctx, obj);
            Rep tgt = apply_functor(ctx, FunctorTag::j_lower_star, t.y);
            RepMap u = RepMap::zero(obj, tgt);
            for (int v = 0; v < n; ++v) u.comps[v + n] = Mat::identity(t.y.dims[v], obj.p());
            return u;
        }
    }
    throw std::logic_error("unreachable");
}

RepMap adjunction_counit(const RecContext& ctx, AdjPair adj, const Rep& obj) {
    int n = ctx.n();
    switch (adj) {
        case AdjPair::i_upper_lower: {
            Rep ix = apply_functor(ctx, FunctorTag::i_star_lower, obj);
            TripleObj t = rep_to_triple(ctx, ix);
            auto kc = kernel_cokernel(t.f);
            std::vector<Mat> comps;
            for (size_t v = 0; v < kc.coker_proj.comps.size(); ++v) {
                auto inv = inverse(kc.coker_proj.comps[v]);
                require_logic(inv.has_value(), "counit projection is not invertible");
                comps.push_back(*inv);
            }
            return RepMap{kc.coker, obj, comps};
        }
        case AdjPair::i_lower_shriek: {
            TripleObj t = rep_to_triple(ctx, obj);
            Rep src = apply_functor(ctx, FunctorTag::i_star_lower, t.x);
            RepMap e = RepMap::zero(src, obj);
            for (int v = 0; v < n; ++v) e.comps[v] = Mat::identity(t.x.dims[v], obj.p());
            return e;
        }
        case AdjPair::j_shriek_star: {
            TripleObj t = rep_to_triple(ctx, obj);
            Rep src = apply_functor(ctx, FunctorTag::j_lower_shriek, t.y);
            RepMap e = RepMap::zero(src, obj);
            for (int v = 0; v < n; ++v) {
                e.comps[v] = t.f.comps[v];
                e.comps[v + n] = Mat::identity(t.y.dims[v], obj.p());
            }
            return e;
        }
        case AdjPair::j_star_lower:
            return RepMap::identity(obj); // j^* j_* Y -> Y on the nose
    }
    throw std::logic_error("unreachable");
}

RepMap adjunction_forward(const RecContext& ctx, AdjPair adj, const Rep& x, const Rep& m, const RepMap& f) {
    int n = ctx.n();
    switch (adj) {
        case AdjPair::i_upper_lower: {
            TripleObj t = rep_to_triple(ctx, x);
            auto kc = kernel_cokernel(t.f);
            require(f.src.same_data(kc.coker), "adjunction argument mismatch");
            Rep tgt = apply_functor(ctx, FunctorTag::i_star_lower, m);
            RepMap g = RepMap::zero(x, tgt);
            for (int v = 0; v < n; ++v) g.comps[v] = mul(f.comps[v], kc.coker_proj.comps[v]);
            return g;
        }
        case AdjPair::i_lower_shriek: {
            TripleObj tm = rep_to_triple(ctx, m);
            return RepMap{x, tm.x, {f.comps.begin(), f.comps.begin() + n}};
        }
        case AdjPair::j_shriek_star: {
            TripleObj tm = rep_to_triple(ctx, m);
            return RepMap{x, tm.y, {f.comps.begin() + n, f.comps.end()}};
        }
        case AdjPair::j_star_lower: {
            Rep tgt = apply_functor(ctx, FunctorTag::j_lower_star, m);
            RepMap g = RepMap::zero(x, tgt);
            for (int v = 0; v < n; ++v) g.comps[v + n] = f.comps[v];
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

RepMap adjunction_backward(const RecContext& ctx, AdjPair adj, const Rep& x, const Rep& m, const RepMap& g) {
    int n = ctx.n();
    switch (adj) {
        case AdjPair::i_upper_lower: {
            TripleObj t = rep_to_triple(ctx, x);
            auto kc = kernel_cokernel(t.f);
            std::vector<Mat> comps;
            for (int v = 0; v < n; ++v) {
                auto a = solve_matrix_left(kc.coker_proj.comps[v], g.comps[v]);
                require_logic(a.has_value(), "adjunction inverse failed");
                comps.push_back(*a);
            }
            return RepMap{kc.coker, m, comps};
        }
        case AdjPair::i_lower_shriek: {
            Rep src = apply_functor(ctx, FunctorTag::i_star_lower, x);
            RepMap f = RepMap::zero(src, m);
            for (int v = 0; v < n; ++v) f.comps[v] = g.comps[v];
            return f;
        }
        case AdjPair::j_shriek_star: {
            TripleObj tm = rep_to_triple(ctx, m);
            Rep src = apply_functor(ctx, FunctorTag::j_lower_shriek, x);
            RepMap f = RepMap::zero(src, m);
            for (int v = 0; v < n; ++v) {
                f.comps[v] = mul(tm.f.comps[v], g.comps[v]);
                f.comps[v + n] = g.comps[v];
            }
            return f;
        }
        case AdjPair::j_star_lower: {
            TripleObj tx = rep_to_triple(ctx, x);
            return RepMap{tx.y, m, {g.comps.begin() + n, g.comps.end()}};
        }
    }
    throw std::logic_error("unreachable");
}

ExtClass transport_ext(const RecContext& ctx, const FunctorHandle& h, const ExtClass& cls) {
    Conflation conf = ext_to_conflation(cls);
    Conflation image{apply_functor_map(ctx, h, conf.incl), apply_functor_map(ctx, h, conf.proj)};
    if (!image.is_exact()) throw std::invalid_argument("functor image of conflation is not exact");
    return conflation_to_ext(image);
}

RightTransport transport_right(const RecContext& ctx, const FunctorHandle& h, const Conflation& conf) {
    RepMap fi = apply_functor_map(ctx, h, conf.incl);
    RepMap fp = apply_functor_map(ctx, h, conf.proj);
    if (!fp.is_surjective()) throw std::invalid_argument("image of deflation is not surjective");
    auto kc = kernel_cokernel(fp);
    std::vector<Mat> factor;
    for (size_t v = 0; v < fi.comps.size(); ++v) {
        auto s = solve_matrix(kc.ker_incl.comps[v], fi.comps[v]);
        require_logic(s.has_value(), "right transport factorization failed");
        factor.push_back(*s);
    }
    Conflation tri{kc.ker_incl, fp};
    require_logic(tri.is_exact(), "right transport triangle is not exact");
    return RightTransport{kc.ker, tri, RepMap{fi.src, kc.ker, factor}};
}

namespace {

// radical part of Hom(from, to): everything when the objects differ, the
// non-invertible elements when they coincide (local endomorphism ring)
std::vector<RepMap> radical_hom_basis(const Rep& from, const Rep& to, bool same_object, const Caps& caps) {
    HomSpace hs = hom_space(from, to);
    if (!same_object) return hs.basis;
    int d = hs.dim();
    double space = std::pow(static_cast<double>(from.p()), d);
    require(space <= static_cast<double>(caps.hom_enum_cap), "endomorphism space too large for radical scan");
    std::vector<Vec> rad_coords;
    for_each_coeff_vector(d, from.p(), caps.hom_enum_cap, [&](const Vec& coords) {
        if (!hs.from_coords(coords).is_iso()) rad_coords.push_back(coords);
        return false;
    });
    Mat cols(d, static_cast<int>(rad_coords.size()), from.p());
    for (size_t j = 0; j < rad_coords.size(); ++j)
        for (int i = 0; i < d; ++i) cols.set(i, static_cast<int>(j), rad_coords[j][i]);
    Mat basis = image_basis(cols);
    std::vector<RepMap> out;
    for (int j = 0; j < basis.cols(); ++j) {
        Vec c(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) c[i] = basis.at(i, j);
        out.push_back(hs.from_coords(c));
    }
    return out;
}

} // namespace

Catalog enumerate_indecomposables_morphism(const RecContext& ctx, const Catalog& base_catalog,
                                           int mult_bound, const Caps& caps) {
    Catalog cat;
    cat.alg = ctx.tri;
    cat.strategy = "morphism";
    cat.bounds = {mult_bound};
    unsigned p = ctx.base->field().p;
    int nb = base_catalog.size();
    Rep zero_base = Rep::zero(ctx.base);

    // seeds: (c; 0), (0; c), (c; c)_1 are indecomposable when c is
    for (int i = 0; i < nb; ++i)
        cat.objects.push_back(apply_functor(ctx, FunctorTag::i_star_lower, base_catalog.objects[i]));
    for (int i = 0; i < nb; ++i)
        cat.objects.push_back(apply_functor(ctx, FunctorTag::j_lower_star, base_catalog.objects[i]));
    for (int i = 0; i < nb; ++i)
        cat.objects.push_back(apply_functor(ctx, FunctorTag::j_lower_shriek, base_catalog.objects[i]));

    std::vector<std::vector<std::vector<RepMap>>> rad(nb, std::vector<std::vector<RepMap>>(nb));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            rad[i][j] = radical_hom_basis(base_catalog.objects[j], base_catalog.objects[i], i == j, caps);

    std::vector<int> mx(nb, 0);
    auto next_vec = [&](std::vector<int>& v) -> bool {
        for (int i = 0; i < nb; ++i) {
            if (v[i] < mult_bound) {
                ++v[i];
                for (int j = 0; j < i; ++j) v[j] = 0;
                return true;
            }
        }
        return false;
    };

    // summands with no radical morphisms in (resp. out) at all can never
    // sit in a reduced triple; prune those multiplicity vectors outright
    std::vector<int> in_gen(nb, 0), out_gen(nb, 0);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            in_gen[i] += static_cast<int>(rad[i][j].size());
            out_gen[j] += static_cast<int>(rad[i][j].size());
        }
    uint64_t budget = caps.sweep_budget;
    bool budget_noted = false;

    // any indecomposable with both parts nonzero is, up to iso, a
    // radical-block morphism with no zero row or column: a zero column
    // splits off (0; c), a zero row (c; 0), an invertible block (c; c)_1
    while (next_vec(mx)) {
        if (budget_noted) break;
        bool mx_viable = true;
        for (int i = 0; i < nb; ++i)
            if (mx[i] > 0 && in_gen[i] == 0) mx_viable = false;
        if (!mx_viable) continue;
        std::vector<int> xs;
        for (int i = 0; i < nb; ++i)
            for (int k = 0; k < mx[i]; ++k) xs.push_back(i);
        std::vector<int> my(nb, 0);
        while (next_vec(my)) {
            if (budget_noted) break;
            bool my_viable = true;
            for (int j = 0; j < nb; ++j)
                if (my[j] > 0 && out_gen[j] == 0) my_viable = false;
            if (!my_viable) continue;
            std::vector<int> ys;
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < my[j]; ++k) ys.push_back(j);

            bool viable = true;
            for (size_t si = 0; si < xs.size() && viable; ++si) {
                int total = 0;
                for (size_t sj = 0; sj < ys.size(); ++sj) total += static_cast<int>(rad[xs[si]][ys[sj]].size());
                viable = total > 0;
            }
            for (size_t sj = 0; sj < ys.size() && viable; ++sj) {
                int total = 0;
                for (size_t si = 0; si < xs.size(); ++si) total += static_cast<int>(rad[xs[si]][ys[sj]].size());
                viable = total > 0;
            }
            if (!viable) continue;

            Rep X = zero_base, Y = zero_base;
            for (int idx : xs) X = direct_sum(X, base_catalog.objects[idx]);
            for (int idx : ys) Y = direct_sum(Y, base_catalog.objects[idx]);

            int D = 0;
            for (size_t si = 0; si < xs.size(); ++si)
                for (size_t sj = 0; sj < ys.size(); ++sj) D += static_cast<int>(rad[xs[si]][ys[sj]].size());
            if (std::pow(static_cast<double>(p), D) > static_cast<double>(caps.hom_enum_cap)) {
                cat.complete = false;
                cat.notes.push_back("skipped a morphism block beyond the enumeration cap");
                continue;
            }

            if (budget == 0) {
                if (!budget_noted) {
                    cat.complete = false;
                    cat.notes.push_back("sweep budget exhausted; catalog truncated");
                    budget_noted = true;
                }
                break;
            }
            for_each_coeff_vector(D, p, caps.hom_enum_cap, [&](const Vec& coeffs) {
                if (budget == 0) return true;
                --budget;
                int pos = 0;
                std::vector<std::vector<RepMap>> block(xs.size());
                std::vector<bool> row_nonzero(xs.size(), false), col_nonzero(ys.size(), false);
                for (size_t si = 0; si < xs.size(); ++si)
                    for (size_t sj = 0; sj < ys.size(); ++sj) {
                        const auto& basis = rad[xs[si]][ys[sj]];
                        RepMap b = RepMap::zero(base_catalog.objects[ys[sj]], base_catalog.objects[xs[si]]);
                        for (const RepMap& e : basis) {
                            if (coeffs[pos]) b = add_maps(b, scalar_map(coeffs[pos], e));
                            ++pos;
                        }
                        if (!b.is_zero()) {
                            row_nonzero[si] = true;
                            col_nonzero[sj] = true;
                        }
                        block[si].push_back(b);
                    }
                for (bool r : row_nonzero)
                    if (!r) return false;
                for (bool c : col_nonzero)
                    if (!c) return false;

                RepMap F = RepMap::zero(Y, X);
                std::vector<int> roff(X.dims.size(), 0);
                for (size_t si = 0; si < xs.size(); ++si) {
                    std::vector<int> coff(Y.dims.size(), 0);
                    for (size_t sj = 0; sj < ys.size(); ++sj) {
                        const RepMap& b = block[si][sj];
                        for (size_t v = 0; v < F.comps.size(); ++v)
                            for (int r = 0; r < b.comps[v].rows(); ++r)
                                for (int cix = 0; cix < b.comps[v].cols(); ++cix)
                                    F.comps[v].set(roff[v] + r, coff[v] + cix, b.comps[v].at(r, cix));
                        for (size_t v = 0; v < F.comps.size(); ++v)
                            coff[v] += base_catalog.objects[ys[sj]].dims[v];
                    }
                    for (size_t v = 0; v < F.comps.size(); ++v) roff[v] += base_catalog.objects[xs[si]].dims[v];
                }

                Rep candidate = triple_to_rep(ctx, TripleObj{X, Y, F});
                Decomposition dec = decompose(candidate, caps);
                if (!dec.complete) {
                    cat.complete = false;
                    cat.notes.push_back("decomposition hit cap during morphism sweep");
                    return false;
                }
                if (dec.summands.size() == 1 && dec.summands[0].second == 1) {
                    if (cat.find_iso(candidate, caps) < 0) cat.objects.push_back(candidate);
                }
                return false;
            });
        }
    }
    finalize_catalog(cat, caps);
    return cat;
}

} // namespace extricat
