#include "extricat/repcat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
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

Rep Rep::zero(std::shared_ptr<const Algebra> a) {
    Rep m;
    m.alg = std::move(a);
    m.dims.assign(m.alg->num_vertices(), 0);
    unsigned p = m.alg->field().p;
    for (const auto& ar : m.alg->quiver().arrows) {
        (void)ar;
        m.mats.push_back(Mat(0, 0, p));
    }
    return m;
}

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void Rep::validate() const {
    require(alg != nullptr, "representation without algebra");
    require(static_cast<int>(dims.size()) == alg->num_vertices(), "dimension vector size mismatch");
    const auto& arrows = alg->quiver().arrows;
    require(mats.size() == arrows.size(), "arrow matrix count mismatch");
    for (size_t a = 0; a < arrows.size(); ++a) {
        require(mats[a].rows() == dims[arrows[a].tgt] && mats[a].cols() == dims[arrows[a].src],
                "arrow matrix shape mismatch");
        require(mats[a].p() == p(), "arrow matrix field mismatch");
    }
    for (const auto& rel : alg->relations()) {
        int s = rel.terms[0].second.src_vertex;
        int t = rel.terms[0].second.target(alg->quiver());
        Mat acc = Mat::zero(dims[t], dims[s], p());
        for (const auto& [c, path] : rel.terms) acc = add(acc, scalar_mul(c, path_action(*this, path)));
        require(acc.is_zero(), "relation does not vanish on representation");
    }
}

std::string Rep::content_key() const {
    std::ostringstream os;
    for (int d : dims) os << d << ",";
    os << "|";
    for (const auto& m : mats) {
        for (uint8_t v : m.entries()) os << static_cast<int>(v);
        os << ";";
    }
    return os.str();
}

Rep direct_sum(const Rep& a, const Rep& b) {
    require(a.alg == b.alg || a.alg->content_key() == b.alg->content_key(), "algebra mismatch in direct sum");
    Rep r;
    r.alg = a.alg;
    r.dims.resize(a.dims.size());
    for (size_t v = 0; v < a.dims.size(); ++v) r.dims[v] = a.dims[v] + b.dims[v];
    for (size_t i = 0; i < a.mats.size(); ++i) r.mats.push_back(direct_sum(a.mats[i], b.mats[i]));
    return r;
}

Rep simple_of_vertex(std::shared_ptr<const Algebra> alg, int v) {
    require(v >= 0 && v < alg->num_vertices(), "unknown vertex");
    Rep m = Rep::zero(alg);
    m.dims[v] = 1;
    unsigned p = alg->field().p;
    const auto& arrows = alg->quiver().arrows;
    for (size_t a = 0; a < arrows.size(); ++a) m.mats[a] = Mat(m.dims[arrows[a].tgt], m.dims[arrows[a].src], p);
    return m;
}

Rep projective_of_vertex(std::shared_ptr<const Algebra> alg, int v) {
    require(v >= 0 && v < alg->num_vertices(), "unknown vertex");
    Rep m;
    m.alg = alg;
    unsigned p = alg->field().p;
    int n = alg->num_vertices();
    m.dims.resize(n);
    for (int w = 0; w < n; ++w) m.dims[w] = static_cast<int>(alg->basis_paths(v, w).size());
    const auto& arrows = alg->quiver().arrows;
    m.mats.resize(arrows.size());
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        Mat ma(m.dims[y], m.dims[x], p);
        for (int j = 0; j < m.dims[x]; ++j) {
            Vec col = alg->compose_with_arrow(v, j, static_cast<int>(a));
            for (int i = 0; i < m.dims[y]; ++i) ma.set(i, j, col[i]);
        }
        m.mats[a] = ma;
        (void)x;
    }
    return m;
}

Rep injective_of_vertex(std::shared_ptr<const Algebra> alg, int v) {
    require(v >= 0 && v < alg->num_vertices(), "unknown vertex");
    Rep m;
    m.alg = alg;
    unsigned p = alg->field().p;
    int n = alg->num_vertices();
    m.dims.resize(n);
    for (int w = 0; w < n; ++w) m.dims[w] = static_cast<int>(alg->basis_paths(w, v).size());
    const auto& arrows = alg->quiver().arrows;
    m.mats.resize(arrows.size());
    // arrow a: x -> y acts as the dual of precomposition
    // paths(y -> v) -> paths(x -> v), q |-> q * a   (first a, then q)
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src;
        const auto& ypaths = alg->basis_paths(arrows[a].tgt, v);
        const auto& xpaths = alg->basis_paths(x, v);
        Mat pre(static_cast<int>(xpaths.size()), static_cast<int>(ypaths.size()), p);
        for (size_t j = 0; j < ypaths.size(); ++j) {
            // reduce the extended path step by step; the state is a
            // coordinate vector in basis(x, cur)
            const auto& triv = alg->basis_paths(x, x);
            int ti = -1;
            for (size_t k = 0; k < triv.size(); ++k)
                if (triv[k].length() == 0) ti = static_cast<int>(k);
            require_logic(ti >= 0, "trivial path missing from basis");
            Vec cur_coords = alg->compose_with_arrow(x, ti, static_cast<int>(a));
            int cur = arrows[a].tgt;
            for (int step : ypaths[j].arrows) {
                const auto& basis_here = alg->basis_paths(x, cur);
                Vec next(alg->basis_paths(x, alg->quiver().arrows[step].tgt).size(), 0);
                for (size_t k = 0; k < basis_here.size(); ++k) {
                    if (!cur_coords[k]) continue;
                    Vec ext = alg->compose_with_arrow(x, static_cast<int>(k), step);
                    for (size_t t2 = 0; t2 < next.size(); ++t2)
                        next[t2] = static_cast<uint8_t>((next[t2] + cur_coords[k] * ext[t2]) % p);
                }
                cur_coords = next;
                cur = alg->quiver().arrows[step].tgt;
            }
            require_logic(cur == v, "path reduction ended at wrong vertex");
            for (size_t i = 0; i < xpaths.size(); ++i) pre.set(static_cast<int>(i), static_cast<int>(j), cur_coords[i]);
        }
        m.mats[a] = transpose(pre);
    }
    return m;
}

Mat path_action(const Rep& m, const Path& path) {
    unsigned p = m.p();
    Mat acc = Mat::identity(m.dims[path.src_vertex], p);
    for (int a : path.arrows) acc = mul(m.mats[a], acc);
    return acc;
}

RepMap RepMap::zero(const Rep& src, const Rep& tgt) {
    RepMap f;
    f.src = src;
    f.tgt = tgt;
    for (size_t v = 0; v < src.dims.size(); ++v) f.comps.push_back(Mat(tgt.dims[v], src.dims[v], src.p()));
    return f;
}

RepMap RepMap::identity(const Rep& m) {
    RepMap f;
    f.src = m;
    f.tgt = m;
    for (size_t v = 0; v < m.dims.size(); ++v) f.comps.push_back(Mat::identity(m.dims[v], m.p()));
    return f;
}

void RepMap::validate() const {
    require(src.dims.size() == tgt.dims.size(), "endpoint algebra mismatch");
    require(comps.size() == src.dims.size(), "component count mismatch");
    for (size_t v = 0; v < comps.size(); ++v)
        require(comps[v].rows() == tgt.dims[v] && comps[v].cols() == src.dims[v], "component shape mismatch");
    const auto& arrows = src.alg->quiver().arrows;
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        if (!sub(mul(comps[y], src.mats[a]), mul(tgt.mats[a], comps[x])).is_zero())
            throw std::invalid_argument("morphism squares do not commute");
    }
}

bool RepMap::is_injective() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (rank(comps[v]) != src.dims[v]) return false;
    return true;
}

bool RepMap::is_surjective() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (rank(comps[v]) != tgt.dims[v]) return false;
    return true;
}

bool RepMap::is_iso() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (src.dims[v] != tgt.dims[v] || rank(comps[v]) != src.dims[v]) return false;
    return true;
}

bool RepMap::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap r;
    r.src = f.src;
    r.tgt = g.tgt;
    for (size_t v = 0; v < f.comps.size(); ++v) r.comps.push_back(mul(g.comps[v], f.comps[v]));
    return r;
}

RepMap add_maps(const RepMap& a, const RepMap& b) {
    RepMap r = a;
    for (size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = add(a.comps[v], b.comps[v]);
    return r;
}

RepMap sub_maps(const RepMap& a, const RepMap& b) {
    RepMap r = a;
    for (size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = sub(a.comps[v], b.comps[v]);
    return r;
}

RepMap scalar_map(unsigned c, const RepMap& a) {
    RepMap r = a;
    for (size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = scalar_mul(c, a.comps[v]);
    return r;
}

RepMap direct_sum_map(const RepMap& a, const RepMap& b) {
    RepMap r;
    r.src = direct_sum(a.src, b.src);
    r.tgt = direct_sum(a.tgt, b.tgt);
    for (size_t v = 0; v < a.comps.size(); ++v) r.comps.push_back(direct_sum(a.comps[v], b.comps[v]));
    return r;
}

namespace {

// unknown layout for Hom(M, N): vertex blocks in order, row-major inside
struct HomLayout {
    std::vector<int> offset;
    int total = 0;
    HomLayout(const Rep& m, const Rep& n) {
        offset.resize(m.dims.size());
        for (size_t v = 0; v < m.dims.size(); ++v) {
            offset[v] = total;
            total += n.dims[v] * m.dims[v];
        }
    }
    int idx(size_t v, int i, int j, const Rep& m) const { return offset[v] + i * m.dims[v] + j; }
};

Vec vectorize(const RepMap& f, const HomLayout& L) {
    Vec v(static_cast<size_t>(L.total), 0);
    for (size_t w = 0; w < f.comps.size(); ++w)
        for (int i = 0; i < f.comps[w].rows(); ++i)
            for (int j = 0; j < f.comps[w].cols(); ++j) v[L.idx(w, i, j, f.src)] = f.comps[w].at(i, j);
    return v;
}

RepMap unvectorize(const Rep& m, const Rep& n, const HomLayout& L, const Vec& v) {
    RepMap f = RepMap::zero(m, n);
    for (size_t w = 0; w < f.comps.size(); ++w)
        for (int i = 0; i < f.comps[w].rows(); ++i)
            for (int j = 0; j < f.comps[w].cols(); ++j) f.comps[w].set(i, j, v[L.idx(w, i, j, m)]);
    return f;
}

} // namespace

HomSpace hom_space(const Rep& m, const Rep& n) {
    require(m.alg == n.alg || m.alg->content_key() == n.alg->content_key(), "algebra mismatch in hom");
    unsigned p = m.p();
    HomLayout L(m, n);
    // one equation block per arrow: f_y M_a - N_a f_x = 0
    const auto& arrows = m.alg->quiver().arrows;
    int eqs = 0;
    for (const auto& a : arrows) eqs += n.dims[a.tgt] * m.dims[a.src];
    Mat sys(eqs, L.total, p);
    int row = 0;
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        for (int i = 0; i < n.dims[y]; ++i)
            for (int j = 0; j < m.dims[x]; ++j) {
                for (int k = 0; k < m.dims[y]; ++k)
                    sys.set(row, L.idx(static_cast<size_t>(y), i, k, m),
                            sys.at(row, L.idx(static_cast<size_t>(y), i, k, m)) + m.mats[a].at(k, j));
                for (int l = 0; l < n.dims[x]; ++l)
                    sys.set(row, L.idx(static_cast<size_t>(x), l, j, m),
                            sys.at(row, L.idx(static_cast<size_t>(x), l, j, m)) + (p - 1) * n.mats[a].at(i, l));
                ++row;
            }
    }
    Mat k = kernel_basis(sys);
    HomSpace hs;
    hs.src = m;
    hs.tgt = n;
    hs.basis_cols = k;
    for (int c = 0; c < k.cols(); ++c) {
        Vec col(static_cast<size_t>(k.rows()));
        for (int r = 0; r < k.rows(); ++r) col[r] = k.at(r, c);
        hs.basis.push_back(unvectorize(m, n, L, col));
    }
    return hs;
}

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) { return hom_space(m, n).basis; }

Vec HomSpace::coords_of(const RepMap& f) const {
    HomLayout L(src, tgt);
    auto x = solve(basis_cols, vectorize(f, L));
    require_logic(x.has_value(), "map is not in the hom space");
    return *x;
}

RepMap HomSpace::from_coords(const Vec& coords) const {
    require(static_cast<int>(coords.size()) == dim(), "hom coordinate size mismatch");
    HomLayout L(src, tgt);
    Vec v = apply_vec(basis_cols, coords);
    return unvectorize(src, tgt, L, v);
}

SubquotientData kernel_cokernel(const RepMap& f) {
    unsigned p = f.src.p();
    const auto& arrows = f.src.alg->quiver().arrows;
    SubquotientData r;

    // kernel
    r.ker.alg = f.src.alg;
    std::vector<Mat> kbasis;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        kbasis.push_back(kernel_basis(f.comps[v]));
        r.ker.dims.push_back(kbasis.back().cols());
    }
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        auto ka = solve_matrix(kbasis[y], mul(f.src.mats[a], kbasis[x]));
        require_logic(ka.has_value(), "kernel is not a subrepresentation");
        r.ker.mats.push_back(*ka);
    }
    r.ker_incl = RepMap{r.ker, f.src, kbasis};

    // cokernel
    r.coker.alg = f.src.alg;
    std::vector<Mat> qs;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        auto cd = cokernel_data(f.comps[v]);
        qs.push_back(cd.projection);
        r.coker.dims.push_back(cd.dim);
    }
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        auto ca = solve_matrix_left(qs[x], mul(qs[y], f.tgt.mats[a]));
        require_logic(ca.has_value(), "cokernel structure map failed");
        r.coker.mats.push_back(*ca);
    }
    r.coker_proj = RepMap{f.tgt, r.coker, qs};

    // image
    r.image.alg = f.src.alg;
    std::vector<Mat> ibasis;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        ibasis.push_back(image_basis(f.comps[v]));
        r.image.dims.push_back(ibasis.back().cols());
    }
    for (size_t a = 0; a < arrows.size(); ++a) {
        int x = arrows[a].src, y = arrows[a].tgt;
        auto ia = solve_matrix(ibasis[y], mul(f.tgt.mats[a], ibasis[x]));
        require_logic(ia.has_value(), "image is not a subrepresentation");
        r.image.mats.push_back(*ia);
    }
    r.image_incl = RepMap{r.image, f.tgt, ibasis};
    std::vector<Mat> onto;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        auto g = solve_matrix(ibasis[v], f.comps[v]);
        require_logic(g.has_value(), "image factorization failed");
        onto.push_back(*g);
    }
    r.onto_image = RepMap{f.src, r.image, onto};
    (void)p;
    return r;
}

RepMap PullbackData::mediate(const RepMap& u, const RepMap& v) const {
    std::vector<Mat> comps;
    for (size_t w = 0; w < u.comps.size(); ++w) {
        Mat rhs = vstack(u.comps[w], v.comps[w]);
        auto m = solve_matrix(incl.comps[w], rhs);
        require_logic(m.has_value(), "pullback mediator failed");
        comps.push_back(*m);
    }
    return RepMap{u.src, obj, comps};
}

PullbackData pullback(const RepMap& f, const RepMap& g) {
    require(f.tgt.same_data(g.tgt), "pullback codomain mismatch");
    Rep sum = direct_sum(f.src, g.src);
    RepMap h = RepMap::zero(sum, f.tgt);
    for (size_t v = 0; v < h.comps.size(); ++v) h.comps[v] = hstack(f.comps[v], neg(g.comps[v]));
    SubquotientData kc = kernel_cokernel(h);
    PullbackData r;
    r.obj = kc.ker;
    r.incl = kc.ker_incl;
    std::vector<Mat> px, py;
    for (size_t v = 0; v < h.comps.size(); ++v) {
        const Mat& K = kc.ker_incl.comps[v];
        Mat top(f.src.dims[v], K.cols(), K.p());
        Mat bot(g.src.dims[v], K.cols(), K.p());
        for (int c = 0; c < K.cols(); ++c) {
            for (int i = 0; i < f.src.dims[v]; ++i) top.set(i, c, K.at(i, c));
            for (int i = 0; i < g.src.dims[v]; ++i) bot.set(i, c, K.at(f.src.dims[v] + i, c));
        }
        px.push_back(top);
        py.push_back(bot);
    }
    r.to_x = RepMap{r.obj, f.src, px};
    r.to_y = RepMap{r.obj, g.src, py};
    return r;
}

RepMap PushoutData::mediate(const RepMap& u, const RepMap& v) const {
    std::vector<Mat> comps;
    for (size_t w = 0; w < u.comps.size(); ++w) {
        Mat rhs = hstack(u.comps[w], v.comps[w]);
        auto m = solve_matrix_left(proj.comps[w], rhs);
        require_logic(m.has_value(), "pushout mediator failed");
        comps.push_back(*m);
    }
    return RepMap{obj, u.tgt, comps};
}

PushoutData pushout(const RepMap& f, const RepMap& g) {
    require(f.src.same_data(g.src), "pushout domain mismatch");
    Rep sum = direct_sum(f.tgt, g.tgt);
    RepMap h = RepMap::zero(f.src, sum);
    for (size_t v = 0; v < h.comps.size(); ++v) h.comps[v] = vstack(f.comps[v], neg(g.comps[v]));
    SubquotientData kc = kernel_cokernel(h);
    PushoutData r;
    r.obj = kc.coker;
    r.proj = kc.coker_proj;
    std::vector<Mat> fx, fy;
    for (size_t v = 0; v < h.comps.size(); ++v) {
        const Mat& Q = kc.coker_proj.comps[v];
        Mat left(Q.rows(), f.tgt.dims[v], Q.p());
        Mat right(Q.rows(), g.tgt.dims[v], Q.p());
        for (int r2 = 0; r2 < Q.rows(); ++r2) {
            for (int j = 0; j < f.tgt.dims[v]; ++j) left.set(r2, j, Q.at(r2, j));
            for (int j = 0; j < g.tgt.dims[v]; ++j) right.set(r2, j, Q.at(r2, f.tgt.dims[v] + j));
        }
        fx.push_back(left);
        fy.push_back(right);
    }
    r.from_x = RepMap{f.tgt, r.obj, fx};
    r.from_y = RepMap{g.tgt, r.obj, fy};
    return r;
}

namespace {

bool is_identity_map(const RepMap& f) {
    for (const auto& c : f.comps)
        if (!c.is_identity()) return false;
    return true;
}

// At a stable power, kernel and image of an endomorphism split the module.
std::optional<std::pair<Rep, Rep>> fitting_split(const Rep& m, const RepMap& e) {
    int n = m.total_dim();
    RepMap power = e;
    int steps = 1;
    while ((1 << steps) < std::max(n, 2)) ++steps;
    for (int i = 0; i < steps; ++i) power = compose(power, power);
    SubquotientData kc = kernel_cokernel(power);
    if (kc.ker.total_dim() == 0 || kc.image.total_dim() == 0) return std::nullopt;
    // direct-sum certificate: [ker | image] invertible at every vertex
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Mat both = hstack(kc.ker_incl.comps[v], kc.image_incl.comps[v]);
        if (both.rows() != both.cols() || rank(both) != both.rows()) return std::nullopt;
    }
    return std::make_pair(kc.ker, kc.image);
}

void decompose_into(const Rep& m, const Caps& caps, Decomposition& out);

void merge_summand(const Rep& r, const Caps& caps, Decomposition& out) {
    for (auto& [obj, mult] : out.summands) {
        IsoResult ir = is_isomorphic(obj, r, caps);
        if (ir.status == Status::HOLDS) {
            ++mult;
            return;
        }
        if (ir.status == Status::UNKNOWN) {
            out.complete = false;
            out.cap_note = "iso test hit cap while merging summands";
        }
    }
    out.summands.emplace_back(r, 1);
}

void decompose_into(const Rep& m, const Caps& caps, Decomposition& out) {
    if (m.total_dim() == 0) return;
    if (m.total_dim() == 1) {
        merge_summand(m, caps, out);
        return;
    }
    HomSpace endo = hom_space(m, m);
    int d = endo.dim();
    require_logic(d >= 1, "endomorphism space without identity");
    if (d == 1) {
        merge_summand(m, caps, out);
        return;
    }

    auto try_split = [&](const RepMap& e) -> bool {
        if (e.is_zero() || is_identity_map(e)) return false;
        auto s = fitting_split(m, e);
        if (!s) return false;
        decompose_into(s->first, caps, out);
        decompose_into(s->second, caps, out);
        return true;
    };

    // Fitting over basis endomorphisms, then over pairwise sums; both are
    // cheap and settle almost everything before the exhaustive fallback.
    for (const RepMap& b : endo.basis)
        if (try_split(b)) return;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (try_split(add_maps(endo.basis[i], endo.basis[j]))) return;

    unsigned p = m.p();
    double space = std::pow(static_cast<double>(p), d);
    if (space <= static_cast<double>(caps.idempotent_cap)) {
        bool split_found = false;
        for_each_coeff_vector(d, p, caps.idempotent_cap, [&](const Vec& coeffs) {
            bool nonzero = false;
            for (uint8_t c : coeffs) nonzero |= (c != 0);
            if (!nonzero) return false;
            RepMap e = endo.from_coords(coeffs);
            if (!compose(e, e).same_data(e)) return false;
            if (e.is_zero() || is_identity_map(e)) return false;
            SubquotientData kc = kernel_cokernel(e);
            if (kc.ker.total_dim() == 0 || kc.image.total_dim() == 0) return false;
            decompose_into(kc.ker, caps, out);
            decompose_into(kc.image, caps, out);
            split_found = true;
            return true;
        });
        if (split_found) return;
        merge_summand(m, caps, out); // no nontrivial idempotent: indecomposable
        return;
    }
    out.complete = false;
    out.cap_note = "idempotent search space exceeds cap";
    merge_summand(m, caps, out);
}

} // namespace

Decomposition decompose(const Rep& m, const Caps& caps) {
    Decomposition out;
    decompose_into(m, caps, out);
    std::stable_sort(out.summands.begin(), out.summands.end(), [](const auto& a, const auto& b) {
        if (a.first.total_dim() != b.first.total_dim()) return a.first.total_dim() < b.first.total_dim();
        return a.first.dims < b.first.dims;
    });
    return out;
}

IsoResult is_isomorphic(const Rep& m, const Rep& n, const Caps& caps) {
    if (m.dims != n.dims) return {Status::FAILS, std::nullopt};
    if (m.total_dim() == 0) return {Status::HOLDS, RepMap::zero(m, n)};
    HomSpace hs = hom_space(m, n);
    int d = hs.dim();
    if (d == 0) return {Status::FAILS, std::nullopt};
    // cheap asymmetry rejects before the search
    if (hom_space(m, m).dim() != hom_space(n, n).dim()) return {Status::FAILS, std::nullopt};
    IsoResult res{Status::FAILS, std::nullopt};
    EnumResult er = for_each_coeff_vector(d, m.p(), caps.iso_cap, [&](const Vec& coeffs) {
        RepMap f = hs.from_coords(coeffs);
        if (f.is_iso()) {
            res = {Status::HOLDS, f};
            return true;
        }
        return false;
    });
    if (res.status == Status::HOLDS) return res;
    if (!er.exhausted) return {Status::UNKNOWN, std::nullopt};
    return {Status::FAILS, std::nullopt};
}

ProjectiveCover projective_cover(const Rep& m) {
    ProjectiveCover pc;
    unsigned p = m.p();
    auto alg = m.alg;
    int nv = alg->num_vertices();
    const auto& arrows = alg->quiver().arrows;

    pc.cover = Rep::zero(alg);
    pc.top_mults.assign(nv, 0);
    std::vector<std::vector<Vec>> gens(nv); // canonical top representatives per vertex

    for (int v = 0; v < nv; ++v) {
        // radical at v: sum of images of arrows into v
        Mat rad(m.dims[v], 0, p);
        for (size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].tgt == v) rad = hstack(rad, m.mats[a]);
        QuotientSpace q = quotient_by_columns(rad, m.dims[v], p);
        pc.top_mults[v] = q.dim;
        for (int i = 0; i < q.dim; ++i) {
            Vec x(static_cast<size_t>(m.dims[v]));
            for (int r = 0; r < m.dims[v]; ++r) x[r] = q.section.at(r, i);
            gens[v].push_back(x);
        }
    }

    // cover = (+)_v P_v^{top_v}, copies consecutive in vertex order
    std::vector<Rep> blocks;
    for (int v = 0; v < nv; ++v) {
        Rep pv = projective_of_vertex(alg, v);
        for (int i = 0; i < pc.top_mults[v]; ++i) blocks.push_back(pv);
    }
    Rep cover = Rep::zero(alg);
    for (const Rep& b : blocks) cover = direct_sum(cover, b);
    pc.cover = cover;

    // epi: basis path q of P_v copy i goes to (action of q) generator_i
    std::vector<Mat> comps;
    for (int w = 0; w < nv; ++w) comps.push_back(Mat(m.dims[w], pc.cover.dims[w], p));
    std::vector<int> col_offset(nv, 0); // running column offset per vertex w
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < pc.top_mults[v]; ++i)
            for (int w = 0; w < nv; ++w) {
                const auto& paths = alg->basis_paths(v, w);
                for (size_t k = 0; k < paths.size(); ++k) {
                    Mat act = path_action(m, paths[k]);
                    Vec img = apply_vec(act, gens[v][i]);
                    for (int r = 0; r < m.dims[w]; ++r)
                        comps[w].set(r, col_offset[w] + static_cast<int>(k), img[r]);
                }
                col_offset[w] += static_cast<int>(paths.size());
            }
    pc.epi = RepMap{pc.cover, m, comps};
    if (!pc.epi.is_surjective()) throw std::logic_error("projective cover is not surjective");

    SubquotientData kc = kernel_cokernel(pc.epi);
    pc.omega = kc.ker;
    pc.incl = kc.ker_incl;
    return pc;
}

bool Conflation::is_exact() const {
    if (!incl.tgt.same_data(proj.src)) return false;
    if (!incl.is_injective() || !proj.is_surjective()) return false;
    if (!compose(proj, incl).is_zero()) return false;
    for (size_t v = 0; v < incl.comps.size(); ++v)
        if (rank(incl.comps[v]) != incl.tgt.dims[v] - rank(proj.comps[v])) return false;
    return true;
}

bool ExtClass::is_zero() const {
    for (uint8_t c : coords)
        if (c) return false;
    return true;
}

Vec ExtBasis::coords_of_omega_map(const RepMap& w) const {
    return apply_vec(quot.projection, hom_omega_a.coords_of(w));
}

RepMap ExtBasis::omega_map_of(const Vec& coords) const {
    require(static_cast<int>(coords.size()) == quot.dim, "ext coordinate size mismatch");
    return hom_omega_a.from_coords(apply_vec(quot.section, coords));
}

ExtBasis ext_basis(const Rep& c, const Rep& a) {
    ExtBasis eb;
    eb.C = c;
    eb.A = a;
    eb.pres = projective_cover(c);
    eb.hom_omega_a = hom_space(eb.pres.omega, a);
    // restriction image: Hom(P0, A) -> Hom(omega, A)
    HomSpace hom_p0_a = hom_space(eb.pres.cover, a);
    Mat restr(eb.hom_omega_a.dim(), hom_p0_a.dim(), c.p());
    for (int j = 0; j < hom_p0_a.dim(); ++j) {
        Vec col = eb.hom_omega_a.coords_of(compose(hom_p0_a.basis[j], eb.pres.incl));
        for (int i = 0; i < eb.hom_omega_a.dim(); ++i) restr.set(i, j, col[i]);
    }
    eb.quot = quotient_by_columns(restr, eb.hom_omega_a.dim(), c.p());
    for (int i = 0; i < eb.quot.dim; ++i) {
        Vec unit(static_cast<size_t>(eb.quot.dim), 0);
        unit[i] = 1;
        eb.class_reps.push_back(eb.omega_map_of(unit));
    }
    return eb;
}

const ExtBasis& ExtCache::get(const Rep& c, const Rep& a) {
    auto key = std::make_pair(c.content_key(), a.content_key());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, ext_basis(c, a)).first;
    return it->second;
}

int ExtCache::ext_dim(const Rep& c, const Rep& a) { return get(c, a).dim(); }

Conflation ext_to_conflation(const ExtClass& cls, const ExtBasis& basis) {
    require(cls.C.same_data(basis.C) && cls.A.same_data(basis.A), "ext basis endpoint mismatch");
    RepMap w = basis.omega_map_of(cls.coords);
    PushoutData po = pushout(basis.pres.incl, w);
    RepMap proj = po.mediate(basis.pres.epi, RepMap::zero(cls.A, cls.C));
    Conflation conf{po.from_y, proj};
    require_logic(conf.is_exact(), "realization is not exact");
    return conf;
}

Conflation ext_to_conflation(const ExtClass& cls) { return ext_to_conflation(cls, ext_basis(cls.C, cls.A)); }

Conflation ext_to_conflation(const ExtClass& cls, ExtCache& cache) {
    return ext_to_conflation(cls, cache.get(cls.C, cls.A));
}

ExtClass conflation_to_ext(const Conflation& c, const ExtBasis& basis) {
    require(c.is_exact(), "input sequence is not exact");
    require(c.A().same_data(basis.A) && c.C().same_data(basis.C), "ext basis endpoint mismatch");
    // lift the cover through the deflation
    HomSpace hom_pb = hom_space(basis.pres.cover, c.B());
    HomSpace hom_pc = hom_space(basis.pres.cover, c.C());
    Mat sys(hom_pc.dim(), hom_pb.dim(), c.A().p());
    for (int j = 0; j < hom_pb.dim(); ++j) {
        Vec col = hom_pc.coords_of(compose(c.proj, hom_pb.basis[j]));
        for (int i = 0; i < hom_pc.dim(); ++i) sys.set(i, j, col[i]);
    }
    auto x = solve(sys, hom_pc.coords_of(basis.pres.epi));
    require_logic(x.has_value(), "projective lift failed");
    RepMap lift = hom_pb.from_coords(*x);
    RepMap edge = compose(lift, basis.pres.incl); // omega -> B, lands in the image of incl
    std::vector<Mat> wcomps;
    for (size_t v = 0; v < edge.comps.size(); ++v) {
        auto s = solve_matrix(c.incl.comps[v], edge.comps[v]);
        require_logic(s.has_value(), "boundary map does not factor through the kernel");
        wcomps.push_back(*s);
    }
    RepMap w{basis.pres.omega, c.A(), wcomps};
    return ExtClass{c.C(), c.A(), basis.coords_of_omega_map(w)};
}

ExtClass conflation_to_ext(const Conflation& c) { return conflation_to_ext(c, ext_basis(c.C(), c.A())); }

ExtClass conflation_to_ext(const Conflation& c, ExtCache& cache) {
    return conflation_to_ext(c, cache.get(c.C(), c.A()));
}

ExtClass push_ext(const ExtClass& cls, const RepMap& a, ExtCache& cache) {
    require(a.src.same_data(cls.A), "push endpoint mismatch");
    Conflation conf = ext_to_conflation(cls, cache.get(cls.C, cls.A));
    PushoutData po = pushout(conf.incl, a);
    RepMap proj = po.mediate(conf.proj, RepMap::zero(a.tgt, cls.C));
    Conflation out{po.from_y, proj};
    require_logic(out.is_exact(), "pushout of conflation is not exact");
    return conflation_to_ext(out, cache.get(cls.C, a.tgt));
}

ExtClass pull_ext(const ExtClass& cls, const RepMap& c, ExtCache& cache) {
    require(c.tgt.same_data(cls.C), "pull endpoint mismatch");
    Conflation conf = ext_to_conflation(cls, cache.get(cls.C, cls.A));
    PullbackData pb = pullback(conf.proj, c);
    RepMap incl = pb.mediate(conf.incl, RepMap::zero(cls.A, c.src));
    Conflation out{incl, pb.to_y};
    require_logic(out.is_exact(), "pullback of conflation is not exact");
    return conflation_to_ext(out, cache.get(c.src, cls.A));
}

ExtClass push_ext(const ExtClass& cls, const RepMap& a) {
    ExtCache cache;
    return push_ext(cls, a, cache);
}

ExtClass pull_ext(const ExtClass& cls, const RepMap& c) {
    ExtCache cache;
    return pull_ext(cls, c, cache);
}

int Catalog::find_iso(const Rep& m, const Caps& caps) const {
    for (int i = 0; i < size(); ++i) {
        if (objects[i].dims != m.dims) continue;
        IsoResult ir = is_isomorphic(objects[i], m, caps);
        if (ir.status == Status::HOLDS) return i;
    }
    return -1;
}

void Catalog::add_alias(const std::string& alias, int index) {
    require(index >= 0 && index < size(), "alias index out of range");
    name_index[alias] = index;
}

int Catalog::index_of_name(const std::string& name) const {
    auto it = name_index.find(name);
    if (it == name_index.end()) throw std::invalid_argument("unknown object name '" + name + "'");
    return it->second;
}

const Rep& Catalog::by_name(const std::string& name) const { return objects[index_of_name(name)]; }

std::string Catalog::display_name(int index) const {
    auto it = display_alias.find(index);
    if (it != display_alias.end()) return it->second;
    // otherwise the shortest alias, canonical name as fallback
    std::string best = names[index];
    for (const auto& [n, i] : name_index)
        if (i == index && n != names[index]) {
            if (best == names[index] || n.size() < best.size()) best = n;
        }
    return best;
}

void finalize_catalog(Catalog& cat, const Caps& caps) {
    std::vector<int> order(cat.objects.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (cat.objects[a].total_dim() != cat.objects[b].total_dim())
            return cat.objects[a].total_dim() < cat.objects[b].total_dim();
        if (cat.objects[a].dims != cat.objects[b].dims) return cat.objects[a].dims < cat.objects[b].dims;
        return a < b;
    });
    std::vector<Rep> sorted;
    for (int i : order) sorted.push_back(cat.objects[i]);
    cat.objects = std::move(sorted);
    cat.names.clear();
    cat.name_index.clear();
    for (int i = 0; i < cat.size(); ++i) {
        cat.names.push_back("M" + std::to_string(i + 1));
        cat.name_index[cat.names.back()] = i;
    }
    int n = cat.size();
    cat.hom_dim.assign(n, std::vector<int>(n, 0));
    cat.ext_dim.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cat.hom_dim[i][j] = hom_space(cat.objects[i], cat.objects[j]).dim();
            cat.ext_dim[i][j] = ext_basis(cat.objects[i], cat.objects[j]).dim();
        }
    (void)caps;
}

Catalog enumerate_indecomposables_modules(std::shared_ptr<const Algebra> alg,
                                          const std::vector<int>& dim_bound, const Caps& caps) {
    Catalog cat;
    cat.alg = alg;
    cat.strategy = "modules";
    cat.bounds = dim_bound;
    int nv = alg->num_vertices();
    require(static_cast<int>(dim_bound.size()) == nv, "dimension bound size mismatch");
    unsigned p = alg->field().p;
    const auto& arrows = alg->quiver().arrows;

    std::vector<int> d(nv, 0);
    auto next_dimvec = [&]() -> bool {
        for (int v = 0; v < nv; ++v) {
            if (d[v] < dim_bound[v]) {
                ++d[v];
                for (int w = 0; w < v; ++w) d[w] = 0;
                return true;
            }
        }
        return false;
    };

    while (next_dimvec()) {
        int entries = 0;
        for (const auto& a : arrows) entries += d[a.tgt] * d[a.src];
        double space = std::pow(static_cast<double>(p), entries);
        if (space > static_cast<double>(caps.hom_enum_cap)) {
            cat.complete = false;
            cat.notes.push_back("skipped dimension vector beyond enumeration cap");
            continue;
        }
        for_each_coeff_vector(entries, p, caps.hom_enum_cap, [&](const Vec& coeffs) {
            Rep m;
            m.alg = alg;
            m.dims = d;
            int pos = 0;
            for (size_t a = 0; a < arrows.size(); ++a) {
                Mat ma(d[arrows[a].tgt], d[arrows[a].src], p);
                for (int i = 0; i < ma.rows(); ++i)
                    for (int j = 0; j < ma.cols(); ++j) ma.set(i, j, coeffs[pos++]);
                m.mats.push_back(ma);
            }
            // relations must vanish
            bool ok = true;
            for (const auto& rel : alg->relations()) {
                int s = rel.terms[0].second.src_vertex;
                int t = rel.terms[0].second.target(alg->quiver());
                Mat acc = Mat::zero(d[t], d[s], p);
                for (const auto& [cf, path] : rel.terms) acc = add(acc, scalar_mul(cf, path_action(m, path)));
                if (!acc.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) return false;
            Decomposition dec = decompose(m, caps);
            if (!dec.complete) {
                cat.complete = false;
                cat.notes.push_back("decomposition hit cap during enumeration");
                return false;
            }
            for (const auto& [summand, mult] : dec.summands) {
                (void)mult;
                if (cat.find_iso(summand, caps) < 0) cat.objects.push_back(summand);
            }
            return false;
        });
    }
    finalize_catalog(cat, caps);
    return cat;
}

Json rep_to_json(const Rep& m) {
    Json j = Json::object();
    j["dims"] = m.dims;
    Json mats = Json::array();
    for (const auto& mat : m.mats) {
        Json rows = Json::array();
        for (int i = 0; i < mat.rows(); ++i) {
            Json row = Json::array();
            for (int c = 0; c < mat.cols(); ++c) row.push_back(static_cast<int>(mat.at(i, c)));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    j["mats"] = mats;
    return j;
}

Json repmap_to_json(const RepMap& f) {
    Json j = Json::object();
    j["src_dims"] = f.src.dims;
    j["tgt_dims"] = f.tgt.dims;
    Json comps = Json::array();
    for (const auto& mat : f.comps) {
        Json rows = Json::array();
        for (int i = 0; i < mat.rows(); ++i) {
            Json row = Json::array();
            for (int c = 0; c < mat.cols(); ++c) row.push_back(static_cast<int>(mat.at(i, c)));
            rows.push_back(row);
        }
        comps.push_back(rows);
    }
    j["comps"] = comps;
    return j;
}

} // namespace extricat
