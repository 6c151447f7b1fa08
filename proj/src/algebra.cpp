#include "extricat/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace extricat {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow '" + label + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex label '" + v + "'");
    std::set<std::string> aseen;
    for (const auto& a : arrows) {
        if (!aseen.insert(a.name).second) throw std::invalid_argument("duplicate arrow label '" + a.name + "'");
        if (a.src < 0 || a.src >= static_cast<int>(vertices.size()) || a.tgt < 0 ||
            a.tgt >= static_cast<int>(vertices.size()))
            throw std::invalid_argument("arrow endpoint out of range");
    }
    // Kahn topological check; oriented cycles are rejected
    int n = static_cast<int>(vertices.size());
    std::vector<int> indeg(n, 0);
    for (const auto& a : arrows) ++indeg[a.tgt];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        for (const auto& a : arrows)
            if (a.src == v && --indeg[a.tgt] == 0) queue.push_back(a.tgt);
    }
    if (removed != n) throw std::invalid_argument("quiver has an oriented cycle");
}

int Path::target(const Quiver& q) const {
    int v = src_vertex;
    for (int a : arrows) {
        if (q.arrows[a].src != v) throw std::invalid_argument("non-composable path");
        v = q.arrows[a].tgt;
    }
    return v;
}

bool Path::operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (src_vertex != o.src_vertex) return src_vertex < o.src_vertex;
    return arrows < o.arrows;
}

namespace {

// All paths of the acyclic quiver, grouped later by endpoints. Finite since
// a path visits each vertex at most once.
std::vector<Path> all_paths(const Quiver& q) {
    std::vector<Path> out;
    int n = static_cast<int>(q.vertices.size());
    std::function<void(Path&)> extend = [&](Path& p) {
        out.push_back(p);
        int end = p.target(q);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != end) continue;
            p.arrows.push_back(static_cast<int>(a));
            extend(p);
            p.arrows.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        Path p{v, {}};
        extend(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const Algebra::PairData& Algebra::pair(int s, int t) const {
    return pairs_[static_cast<size_t>(s) * num_vertices() + t];
}

const std::vector<Path>& Algebra::basis_paths(int s, int t) const { return pair(s, t).basis; }

int Algebra::dim() const {
    int d = 0;
    for (const auto& pd : pairs_) d += static_cast<int>(pd.basis.size());
    return d;
}

Vec Algebra::reduce(int s, int t, const std::map<Path, unsigned>& combo) const {
    const PairData& pd = pair(s, t);
    unsigned p = field_.p;
    Vec coords(pd.all_paths.size(), 0);
    for (const auto& [path, c] : combo) {
        auto it = pd.path_index.find(path);
        if (it == pd.path_index.end()) throw std::logic_error("path not in pair table");
        coords[it->second] = static_cast<uint8_t>((coords[it->second] + c) % p);
    }
    // eliminate ideal pivots, then read the residue coordinates
    for (size_t r = 0; r < pd.ideal_pivots.size(); ++r) {
        unsigned f = coords[pd.ideal_pivots[r]];
        if (!f) continue;
        for (size_t j = 0; j < coords.size(); ++j)
            coords[j] =
                static_cast<uint8_t>((coords[j] + (p - f) * pd.ideal_rref.at(static_cast<int>(r), static_cast<int>(j))) % p);
    }
    Vec out(pd.basis.size(), 0);
    for (size_t i = 0; i < pd.basis.size(); ++i) out[i] = coords[pd.basis_coords[i]];
    return out;
}

Vec Algebra::compose_with_arrow(int s, int idx, int a) const {
    const Arrow& ar = quiver_.arrows[a];
    const PairData& src_pd = pair(s, ar.src);
    Path ext = src_pd.basis[idx];
    ext.arrows.push_back(a);
    return reduce(s, ar.tgt, {{ext, 1}});
}

std::string Algebra::content_key() const {
    std::ostringstream os;
    os << "p=" << field_.p << ";V=";
    for (const auto& v : quiver_.vertices) os << v << ",";
    os << ";A=";
    for (const auto& a : quiver_.arrows) os << a.name << ":" << a.src << ">" << a.tgt << ",";
    os << ";R=";
    for (const auto& r : relations_) {
        for (const auto& [c, path] : r.terms) {
            os << c << "*" << path.src_vertex << ":";
            for (int x : path.arrows) os << x << ".";
            os << "+";
        }
        os << "|";
    }
    return os.str();
}

std::shared_ptr<const Algebra> build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                             const FieldSpec& f) {
    validate_field(f);
    q.validate();
    for (const auto& r : rels) {
        if (r.terms.empty()) throw std::invalid_argument("empty relation");
        int s = r.terms[0].second.src_vertex;
        int t = r.terms[0].second.target(q);
        for (const auto& [c, path] : r.terms) {
            (void)c;
            if (path.length() < 2) throw std::invalid_argument("relation path of length < 2");
            if (path.src_vertex != s || path.target(q) != t)
                throw std::invalid_argument("relation paths are not parallel");
        }
    }

    auto alg = std::make_shared<Algebra>();
    alg->quiver_ = q;
    alg->field_ = f;
    alg->relations_ = rels;

    int n = static_cast<int>(q.vertices.size());
    std::vector<Path> paths = all_paths(q);
    alg->pairs_.assign(static_cast<size_t>(n) * n, {});
    for (const Path& p : paths) {
        auto& pd = alg->pairs_[static_cast<size_t>(p.src_vertex) * n + p.target(q)];
        pd.path_index[p] = static_cast<int>(pd.all_paths.size());
        pd.all_paths.push_back(p);
    }

    // The two-sided ideal: every pre/post composition u * rel * v lands in a
    // single (s, t) pair and is a vector over that pair's path list.
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            auto& pd = alg->pairs_[static_cast<size_t>(s) * n + t];
            std::vector<std::vector<int>> ideal_rows;
            for (const auto& rel : rels) {
                int rs = rel.terms[0].second.src_vertex;
                int rt = rel.terms[0].second.target(q);
                const auto& pre = alg->pairs_[static_cast<size_t>(s) * n + rs].all_paths;
                const auto& post = alg->pairs_[static_cast<size_t>(rt) * n + t].all_paths;
                for (const Path& u : pre)
                    for (const Path& v : post) {
                        std::vector<int> row(pd.all_paths.size(), 0);
                        for (const auto& [c, mid] : rel.terms) {
                            Path w{s, u.arrows};
                            w.arrows.insert(w.arrows.end(), mid.arrows.begin(), mid.arrows.end());
                            w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
                            row[pd.path_index.at(w)] = (row[pd.path_index.at(w)] + static_cast<int>(c)) %
                                                       static_cast<int>(f.p);
                        }
                        ideal_rows.push_back(std::move(row));
                    }
            }
            Mat m = ideal_rows.empty() ? Mat(0, static_cast<int>(pd.all_paths.size()), f.p)
                                       : Mat::from_rows(ideal_rows, f.p);
            pd.ideal_pivots = rref(m);
            // keep only the nonzero echelon rows
            Mat trimmed(static_cast<int>(pd.ideal_pivots.size()), m.cols(), f.p);
            for (size_t i = 0; i < pd.ideal_pivots.size(); ++i)
                for (int j = 0; j < m.cols(); ++j) trimmed.set(static_cast<int>(i), j, m.at(static_cast<int>(i), j));
            pd.ideal_rref = trimmed;
            std::vector<bool> is_pivot(pd.all_paths.size(), false);
            for (int c : pd.ideal_pivots) is_pivot[c] = true;
            for (size_t i = 0; i < pd.all_paths.size(); ++i)
                if (!is_pivot[i]) {
                    pd.basis_coords.push_back(static_cast<int>(i));
                    pd.basis.push_back(pd.all_paths[i]);
                }
        }
    return alg;
}

} // namespace extricat
