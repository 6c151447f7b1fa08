#include "extricat/shell.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace extricat {

const char* kToolVersion = "0.1.0";

namespace {

namespace fs = std::filesystem;

void fail_parse(int line, const std::string& msg) {
    throw std::invalid_argument("scenario parse error at line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// relation expression: signed '*'-composed arrow chains, rightmost applied
// first, e.g. "beta*alpha - gamma*delta"
Relation parse_relation_expr(const Quiver& q, unsigned p, const std::string& expr, int line) {
    Relation rel;
    std::string cur;
    std::vector<std::pair<int, std::string>> terms; // sign, chain
    int sign = 1;
    for (size_t i = 0; i <= expr.size(); ++i) {
        char c = i < expr.size() ? expr[i] : '+';
        if (c == '+' || c == '-') {
            std::string t = trim(cur);
            if (!t.empty()) terms.emplace_back(sign, t);
            sign = c == '-' ? -1 : 1;
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    for (auto& [sg, chain] : terms) {
        std::vector<std::string> parts = split_list(chain, '*');
        if (parts.empty()) fail_parse(line, "empty relation term");
        unsigned coeff = sg > 0 ? 1 : p - 1;
        size_t start = 0;
        if (!parts[0].empty() && (std::isdigit(static_cast<unsigned char>(parts[0][0])))) {
            coeff = static_cast<unsigned>((std::stoul(parts[0]) % p) * coeff % p);
            start = 1;
        }
        if (start >= parts.size()) fail_parse(line, "relation term has no arrows");
        // composition order: leftmost name acts last
        std::vector<int> arrows;
        for (size_t k = parts.size(); k > start; --k) arrows.push_back(q.arrow_index(parts[k - 1]));
        Path path{q.arrows[arrows.front()].src, arrows};
        rel.terms.emplace_back(coeff, path);
    }
    if (rel.terms.empty()) fail_parse(line, "empty relation");
    return rel;
}

} // namespace

std::string ScenarioSpec::content_key() const {
    std::ostringstream os;
    os << "p=" << field.p << ";V=";
    for (const auto& v : quiver.vertices) os << v << ",";
    os << ";A=";
    for (const auto& a : quiver.arrows) os << a.name << ":" << a.src << ">" << a.tgt << ",";
    os << ";R=";
    for (const auto& r : relations)
        for (const auto& [c, path] : r.terms) {
            os << c << "*" << path.src_vertex << ":";
            for (int x : path.arrows) os << x << ".";
            os << "+";
        }
    os << ";ctor=" << construction << ";amb=" << ambient << ";obj=";
    for (const auto& o : objects) os << o << ",";
    os << ";rec=" << has_recollement << rec_a_full << rec_b_full << rec_c_full << ";";
    for (const auto& o : rec_a) os << o << ",";
    os << "|";
    for (const auto& o : rec_b) os << o << ",";
    os << "|";
    for (const auto& o : rec_c) os << o << ",";
    os << ";caps=" << caps.to_json().dump();
    return os.str();
}

ScenarioSpec parse_scenario(const std::string& text) {
    ScenarioSpec spec;
    spec.quiver = Quiver{};
    std::istringstream is(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    bool saw_anything = false;
    // relations are parsed after the whole [algebra] section is read
    std::vector<std::pair<int, std::string>> relation_lines;

    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        saw_anything = true;
        if (line.front() == '[') {
            if (line.back() != ']') fail_parse(line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "algebra" && section != "category" && section != "recollement" && section != "caps")
                fail_parse(line_no, "unknown section '" + section + "'");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail_parse(line_no, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section == "algebra") {
            if (key == "field") {
                spec.field.p = static_cast<unsigned>(std::stoul(value));
            } else if (key == "vertices") {
                spec.quiver.vertices = split_list(value);
            } else if (key == "arrow") {
                size_t colon = value.find(':');
                size_t arrow = value.find("->");
                if (colon == std::string::npos || arrow == std::string::npos)
                    fail_parse(line_no, "arrow syntax is name: src -> tgt");
                std::string name = trim(value.substr(0, colon));
                std::string src = trim(value.substr(colon + 1, arrow - colon - 1));
                std::string tgt = trim(value.substr(arrow + 2));
                spec.quiver.arrows.push_back(
                    {name, spec.quiver.vertex_index(src), spec.quiver.vertex_index(tgt)});
            } else if (key == "relation") {
                relation_lines.emplace_back(line_no, value);
            } else {
                fail_parse(line_no, "unknown key '" + key + "' in [algebra]");
            }
        } else if (section == "category") {
            if (key == "construction") {
                if (value != "modules" && value != "morphism_category" && value != "subcategory")
                    fail_parse(line_no, "unknown construction '" + value + "'");
                spec.construction = value;
            } else if (key == "ambient") {
                if (value != "modules" && value != "morphism_category")
                    fail_parse(line_no, "unknown ambient '" + value + "'");
                spec.ambient = value;
            } else if (key == "objects") {
                spec.objects = split_list(value);
            } else {
                fail_parse(line_no, "unknown key '" + key + "' in [category]");
            }
        } else if (section == "recollement") {
            spec.has_recollement = true;
            auto parse_side = [&](std::vector<std::string>& names, bool& full) {
                if (value == "full" || value == "all" || value == "*") {
                    full = true;
                    names.clear();
                } else {
                    full = false;
                    names = split_list(value);
                }
            };
            if (key == "wiring") {
                if (value != "triangular") fail_parse(line_no, "only triangular wiring is supported");
            } else if (key == "A") {
                parse_side(spec.rec_a, spec.rec_a_full);
            } else if (key == "B") {
                parse_side(spec.rec_b, spec.rec_b_full);
            } else if (key == "C") {
                parse_side(spec.rec_c, spec.rec_c_full);
            } else {
                fail_parse(line_no, "unknown key '" + key + "' in [recollement]");
            }
        } else if (section == "caps") {
            if (key == "dim_bound")
                for (const auto& part : split_list(value)) spec.caps.dim_bound.push_back(std::stoi(part));
            else if (key == "default_dim_bound")
                spec.caps.default_dim_bound = std::stoi(value);
            else if (key == "mult_bound")
                spec.caps.mult_bound = std::stoi(value);
            else if (key == "idempotent_cap")
                spec.caps.idempotent_cap = std::stoull(value);
            else if (key == "iso_cap")
                spec.caps.iso_cap = std::stoull(value);
            else if (key == "hom_enum_cap")
                spec.caps.hom_enum_cap = std::stoull(value);
            else if (key == "sweep_budget")
                spec.caps.sweep_budget = std::stoull(value);
            else if (key == "subset_limit")
                spec.caps.subset_limit = std::stoi(value);
            else if (key == "approx_mult_bound")
                spec.caps.approx_mult_bound = std::stoi(value);
            else if (key == "approx_dim_slack")
                spec.caps.approx_dim_slack = std::stoi(value);
            else if (key == "sample_cap")
                spec.caps.sample_cap = std::stoull(value);
            else if (key == "seed")
                spec.caps.seed = std::stoull(value);
            else
                fail_parse(line_no, "unknown key '" + key + "' in [caps]");
        } else {
            fail_parse(line_no, "key outside of a section");
        }
    }
    if (!saw_anything) fail_parse(0, "empty scenario");
    if (spec.quiver.vertices.empty()) fail_parse(0, "no vertices declared");
    validate_field(spec.field);
    for (auto& [ln, expr] : relation_lines)
        spec.relations.push_back(parse_relation_expr(spec.quiver, spec.field.p, expr, ln));
    // caps sanity
    if (spec.caps.default_dim_bound <= 0 || spec.caps.mult_bound <= 0 || spec.caps.subset_limit <= 0)
        throw std::invalid_argument("caps must be positive");
    return spec;
}

bool is_builtin_scenario(const std::string& name) {
    return name == "paper-abelian" || name == "paper-extriangulated";
}

ScenarioSpec builtin_scenario(const std::string& name) {
    ScenarioSpec spec;
    spec.name = name;
    spec.field.p = 2;
    spec.quiver.vertices = {"1", "2"};
    spec.quiver.arrows = {{"alpha", 0, 1}};
    if (name == "paper-abelian") {
        spec.construction = "morphism_category";
        spec.has_recollement = true;
        return spec;
    }
    if (name == "paper-extriangulated") {
        spec.construction = "subcategory";
        spec.ambient = "morphism_category";
        spec.objects = {"S2|0", "P1|0", "S1|0", "P1|P1_1", "S1|P1_psi", "S1|S1_1", "0|P1", "0|S1"};
        spec.has_recollement = true;
        spec.rec_b_full = false;
        spec.rec_b = spec.objects;
        spec.rec_c_full = false;
        spec.rec_c = {"S1", "P1"};
        return spec;
    }
    throw std::invalid_argument("unknown built-in scenario '" + name + "'");
}

std::string catalog_cache_key(const Algebra& alg, const std::string& strategy, const std::vector<int>& bounds,
                              const Caps& caps) {
    std::ostringstream os;
    os << alg.content_key() << ";strategy=" << strategy << ";bounds=";
    for (int b : bounds) os << b << ",";
    os << ";caps=" << caps.idempotent_cap << "," << caps.iso_cap << "," << caps.hom_enum_cap;
    return hex64(fnv1a(os.str()));
}

std::string serialize_catalog(const Catalog& cat, const std::string& key) {
    std::ostringstream os;
    os << "extricat-catalog-cache v1\n";
    os << "key " << key << "\n";
    os << "strategy " << cat.strategy << "\n";
    os << "bounds";
    for (int b : cat.bounds) os << " " << b;
    os << "\n";
    os << "caps " << cat.caps_line << "\n";
    os << "complete " << (cat.complete ? 1 : 0) << "\n";
    os << "notes " << cat.notes.size() << "\n";
    for (const auto& n : cat.notes) os << n << "\n";
    os << "objects " << cat.size() << "\n";
    for (const Rep& m : cat.objects) {
        os << "dims";
        for (int d : m.dims) os << " " << d;
        os << "\n";
        for (const Mat& mat : m.mats) {
            os << "mat " << mat.rows() << " " << mat.cols();
            for (uint8_t e : mat.entries()) os << " " << static_cast<int>(e);
            os << "\n";
        }
    }
    auto table = [&](const char* tag, const std::vector<std::vector<int>>& t) {
        os << tag << "\n";
        for (const auto& row : t) {
            for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << "\n";
        }
    };
    table("hom", cat.hom_dim);
    table("ext", cat.ext_dim);
    os << "end\n";
    return os.str();
}

Catalog deserialize_catalog(const std::string& text, std::shared_ptr<const Algebra> alg,
                            const std::string& expected_key) {
    std::istringstream is(text);
    std::string line;
    auto next = [&]() {
        if (!std::getline(is, line)) throw std::invalid_argument("truncated catalog cache");
        return line;
    };
    if (next() != "extricat-catalog-cache v1") throw std::invalid_argument("bad catalog cache header");
    {
        std::istringstream ls(next());
        std::string tag, key;
        ls >> tag >> key;
        if (tag != "key" || key != expected_key) throw std::invalid_argument("catalog cache key mismatch");
    }
    Catalog cat;
    cat.alg = alg;
    {
        std::istringstream ls(next());
        std::string tag;
        ls >> tag >> cat.strategy;
    }
    {
        std::istringstream ls(next());
        std::string tag;
        ls >> tag;
        int b;
        while (ls >> b) cat.bounds.push_back(b);
    }
    {
        std::istringstream ls(next());
        std::string tag;
        ls >> tag;
        std::getline(ls, cat.caps_line);
        if (!cat.caps_line.empty() && cat.caps_line.front() == ' ') cat.caps_line.erase(0, 1);
    }
    {
        std::istringstream ls(next());
        std::string tag;
        int c;
        ls >> tag >> c;
        cat.complete = c != 0;
    }
    {
        std::istringstream ls(next());
        std::string tag;
        size_t n;
        ls >> tag >> n;
        for (size_t i = 0; i < n; ++i) cat.notes.push_back(next());
    }
    int nobj = 0;
    {
        std::istringstream ls(next());
        std::string tag;
        ls >> tag >> nobj;
    }
    unsigned p = alg->field().p;
    int narrows = static_cast<int>(alg->quiver().arrows.size());
    for (int i = 0; i < nobj; ++i) {
        Rep m;
        m.alg = alg;
        {
            std::istringstream ls(next());
            std::string tag;
            ls >> tag;
            int d;
            while (ls >> d) m.dims.push_back(d);
        }
        for (int a = 0; a < narrows; ++a) {
            std::istringstream ls(next());
            std::string tag;
            int r, c;
            ls >> tag >> r >> c;
            Mat mat(r, c, p);
            for (int rr = 0; rr < r; ++rr)
                for (int cc = 0; cc < c; ++cc) {
                    int e;
                    ls >> e;
                    mat.set(rr, cc, static_cast<unsigned>(e));
                }
            m.mats.push_back(mat);
        }
        m.validate();
        cat.objects.push_back(m);
    }
    auto table = [&](const char* tag) {
        if (next() != tag) throw std::invalid_argument("bad catalog cache table");
        std::vector<std::vector<int>> t;
        for (int i = 0; i < nobj; ++i) {
            std::istringstream ls(next());
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (static_cast<int>(row.size()) != nobj) throw std::invalid_argument("bad catalog cache row");
            t.push_back(row);
        }
        return t;
    };
    cat.hom_dim = table("hom");
    cat.ext_dim = table("ext");
    for (int i = 0; i < nobj; ++i) {
        cat.names.push_back("M" + std::to_string(i + 1));
        cat.name_index[cat.names.back()] = i;
    }
    return cat;
}

bool catalogs_equal(const Catalog& a, const Catalog& b) {
    if (a.size() != b.size() || a.strategy != b.strategy || a.bounds != b.bounds || a.complete != b.complete)
        return false;
    for (int i = 0; i < a.size(); ++i)
        if (!a.objects[i].same_data(b.objects[i])) return false;
    return a.hom_dim == b.hom_dim && a.ext_dim == b.ext_dim;
}

namespace {

std::string cache_directory(const ShellOptions& opts) {
    if (!opts.cache_dir.empty()) return opts.cache_dir;
    if (const char* env = std::getenv("EXTRICAT_CACHE_DIR")) return env;
    return ".extricat-cache";
}

void atomic_write(const fs::path& path, const std::string& contents) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os << contents;
    }
    fs::rename(tmp, path);
}

Catalog obtain_catalog(const std::function<Catalog()>& compute, std::shared_ptr<const Algebra> alg,
                       const std::string& strategy, const std::vector<int>& bounds, const Caps& caps,
                       const ShellOptions& opts, Json& notes) {
    std::string key = catalog_cache_key(*alg, strategy, bounds, caps);
    fs::path path = fs::path(cache_directory(opts)) / (key + ".cat");
    // notes stay independent of whether the cache was hit, so consecutive
    // runs emit byte-identical reports
    if (opts.use_cache && fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            Catalog cached = deserialize_catalog(buf.str(), alg, key);
            notes.push_back(Json{{"catalog", key}});
            return cached;
        } catch (const std::exception&) {
            // fall through and repair the cache entry
        }
    }
    Catalog fresh = compute();
    fresh.caps_line = caps.to_json().dump();
    if (opts.use_cache) {
        atomic_write(path, serialize_catalog(fresh, key));
        notes.push_back(Json{{"catalog", key}});
    } else if (fs::exists(path)) {
        // comparison mode: a fresh run must agree with the cached copy
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        bool same = false;
        try {
            Catalog cached = deserialize_catalog(buf.str(), alg, key);
            same = catalogs_equal(fresh, cached);
        } catch (const std::exception&) {
            same = false;
        }
        notes.push_back(Json{{"catalog", key}, {"cache_consistent", same}});
    } else {
        notes.push_back(Json{{"catalog", key}});
    }
    return fresh;
}

void assign_base_aliases(Catalog& cat, const Caps& caps) {
    auto alg = cat.alg;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        const std::string& label = alg->quiver().vertices[v];
        int si = cat.find_iso(simple_of_vertex(alg, v), caps);
        if (si >= 0) {
            cat.add_alias("S" + label, si);
            if (!cat.display_alias.count(si)) cat.display_alias[si] = "S" + label;
        }
        int pi = cat.find_iso(projective_of_vertex(alg, v), caps);
        if (pi >= 0) {
            cat.add_alias("P" + label, pi);
            if (!cat.display_alias.count(pi)) cat.display_alias[pi] = "P" + label;
        }
        int ii = cat.find_iso(injective_of_vertex(alg, v), caps);
        if (ii >= 0) {
            cat.add_alias("I" + label, ii);
            if (!cat.display_alias.count(ii)) cat.display_alias[ii] = "I" + label;
        }
    }
}

void assign_triple_aliases(Catalog& cat, const RecContext& ctx, const Catalog& base, const Caps& caps) {
    for (int i = 0; i < cat.size(); ++i) {
        TripleObj t = rep_to_triple(ctx, cat.objects[i]);
        auto part_name = [&](const Rep& r) -> std::string {
            if (r.total_dim() == 0) return "0";
            bool complete = true;
            std::vector<int> idx = catalog_summands(r, base, caps, &complete);
            if (!complete || idx.size() != 1 || idx[0] < 0) return "";
            return base.display_name(idx[0]);
        };
        std::string left = part_name(t.x), right = part_name(t.y);
        if (left.empty() || right.empty()) continue;
        std::string alias;
        if (t.f.is_zero()) {
            if (left == "0" && right == "0") continue;
            alias = left + "|" + right;
        } else if (t.f.is_iso()) {
            alias = left + "|" + right + "_1";
        } else {
            alias = left + "|" + right + "_f";
        }
        if (cat.name_index.count(alias)) continue;
        cat.add_alias(alias, i);
        if (!cat.display_alias.count(i)) cat.display_alias[i] = alias;
    }
}

void assign_builtin_aliases(Catalog& cat, const RecContext& ctx, const Catalog& base, const Caps& caps) {
    // conventional names for the two non-split non-diagonal triples; only
    // meaningful when the base catalog carries the S1/S2/P1 aliases
    for (const char* n : {"S1", "S2", "P1"})
        if (!base.name_index.count(n)) return;
    auto by_name = [&](const std::string& n) { return base.objects[base.index_of_name(n)]; };
    Rep s1 = by_name("S1"), s2 = by_name("S2"), p1 = by_name("P1");
    auto phis = hom_basis(s2, p1);
    auto psis = hom_basis(p1, s1);
    if (phis.size() == 1) {
        int idx = cat.find_iso(triple_to_rep(ctx, TripleObj{p1, s2, phis[0]}), caps);
        if (idx >= 0) {
            cat.add_alias("P1|S2_phi", idx);
            cat.display_alias[idx] = "P1|S2_phi";
        }
    }
    if (psis.size() == 1) {
        int idx = cat.find_iso(triple_to_rep(ctx, TripleObj{s1, p1, psis[0]}), caps);
        if (idx >= 0) {
            cat.add_alias("S1|P1_psi", idx);
            cat.display_alias[idx] = "S1|P1_psi";
        }
    }
}

} // namespace

Subcat LoadedScenario::parse_object_list(const std::string& list, bool middle) const {
    const ExCat* cat = nullptr;
    if (middle) {
        if (!recollement) throw std::invalid_argument("scenario has no recollement wiring");
        cat = &recollement->middle;
    } else {
        cat = &main;
    }
    std::string t = trim(list);
    if (t == "all" || t == "*" || t == "full" || t == "mod") return cat->carrier;
    Subcat out = Subcat::of_names(cat->carrier.catalog, split_list(t));
    for (int i : out.members)
        if (!cat->carrier.contains_index(i))
            throw std::invalid_argument("object '" + cat->carrier.catalog->display_name(i) +
                                        "' is outside the carrier");
    return out;
}

LoadedScenario load_scenario(const ScenarioSpec& spec, const ShellOptions& opts) {
    LoadedScenario out;
    out.spec = spec;
    out.spec.caps.seed = opts.seed ? opts.seed : spec.caps.seed;
    const Caps& caps = out.spec.caps;
    out.base = build_algebra(spec.quiver, spec.relations, spec.field);
    out.hash = hex64(fnv1a(out.spec.content_key()));

    std::vector<int> dim_bound;
    for (int v = 0; v < out.base->num_vertices(); ++v) dim_bound.push_back(caps.bound_for_vertex(v));

    auto base_catalog = std::make_shared<Catalog>(obtain_catalog(
        [&] { return enumerate_indecomposables_modules(out.base, dim_bound, caps); }, out.base, "modules",
        dim_bound, caps, opts, out.cache_notes));
    assign_base_aliases(*base_catalog, caps);
    out.cat_base = base_catalog;

    bool needs_tri = spec.construction == "morphism_category" ||
                     (spec.construction == "subcategory" && spec.ambient == "morphism_category") ||
                     spec.has_recollement;
    if (needs_tri) {
        out.ctx = make_rec_context(out.base);
        auto tri_catalog = std::make_shared<Catalog>(obtain_catalog(
            [&] { return enumerate_indecomposables_morphism(out.ctx, *base_catalog, caps.mult_bound, caps); },
            out.ctx.tri, "morphism", {caps.mult_bound}, caps, opts, out.cache_notes));
        assign_triple_aliases(*tri_catalog, out.ctx, *base_catalog, caps);
        assign_builtin_aliases(*tri_catalog, out.ctx, *base_catalog, caps);
        out.cat_tri = tri_catalog;
    } else {
        out.ctx = RecContext{out.base, nullptr};
    }

    if (spec.construction == "modules") {
        out.main = make_excat(Subcat::full(out.cat_base));
    } else if (spec.construction == "morphism_category") {
        out.main = make_excat(Subcat::full(out.cat_tri));
    } else {
        auto cat = spec.ambient == "modules" ? out.cat_base : out.cat_tri;
        out.main = make_excat(Subcat::of_names(cat, spec.objects));
    }

    if (spec.has_recollement) {
        Subcat a = spec.rec_a_full ? Subcat::full(out.cat_base) : Subcat::of_names(out.cat_base, spec.rec_a);
        Subcat b = spec.rec_b_full ? Subcat::full(out.cat_tri) : Subcat::of_names(out.cat_tri, spec.rec_b);
        Subcat c = spec.rec_c_full ? Subcat::full(out.cat_base) : Subcat::of_names(out.cat_base, spec.rec_c);
        out.recollement =
            RecollementScenario{out.ctx, make_excat(a), make_excat(b), make_excat(c), out.spec.caps};
    }
    return out;
}

Json Report::to_json() const {
    Json j = Json::object();
    j["schema"] = "extricat-report/1";
    j["version"] = tool_version;
    j["scenario"] = scenario_hash;
    j["command"] = command;
    j["caps"] = caps;
    j["status"] = to_string(status);
    j["results"] = results;
    return j;
}

namespace {

bool is_int_matrix(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) return false;
        if (cols == 0) cols = row.size();
        if (row.size() != cols) return false;
        for (const auto& v : row)
            if (!v.is_number_integer()) return false;
    }
    return true;
}

void render_json(std::ostringstream& os, const Json& j, int indent);

void render_matrix(std::ostringstream& os, const Json& rows, int indent, const Json* names) {
    size_t label_w = 0;
    if (names)
        for (const auto& n : *names) label_w = std::max(label_w, n.get<std::string>().size());
    std::vector<size_t> col_w(rows.empty() ? 0 : rows[0].size(), 1);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c)
            col_w[c] = std::max(col_w[c], std::to_string(row[c].get<long long>()).size());
    if (names)
        for (size_t c = 0; c < col_w.size() && c < names->size(); ++c)
            col_w[c] = std::max(col_w[c], (*names)[c].get<std::string>().size());
    std::string pad(indent, ' ');
    if (names) {
        os << pad << std::string(label_w, ' ');
        for (size_t c = 0; c < col_w.size(); ++c) {
            std::string n = c < names->size() ? (*names)[c].get<std::string>() : "";
            os << "  " << std::string(col_w[c] - n.size(), ' ') << n;
        }
        os << "\n";
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        os << pad;
        if (names) {
            std::string n = r < names->size() ? (*names)[r].get<std::string>() : "";
            os << n << std::string(label_w - n.size(), ' ');
        }
        for (size_t c = 0; c < rows[r].size(); ++c) {
            std::string v = std::to_string(rows[r][c].get<long long>());
            os << "  " << std::string(col_w[c] - v.size(), ' ') << v;
        }
        os << "\n";
    }
}

void render_json(std::ostringstream& os, const Json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        if (j.contains("names") && j.contains("rows") && is_int_matrix(j["rows"])) {
            render_matrix(os, j["rows"], indent, &j["names"]);
            return;
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value().front().is_object() || it.value().front().is_array()))) {
                os << pad << it.key() << ":\n";
                render_json(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        if (is_int_matrix(j)) {
            render_matrix(os, j, indent, nullptr);
            return;
        }
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_json(os, item, indent + 2);
            } else {
                os << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

std::string Report::human() const {
    std::ostringstream os;
    os << "extricat " << tool_version << "\n";
    os << "command: " << command << "\n";
    os << "scenario: " << scenario_hash << "\n";
    os << "status: " << to_string(status) << "\n";
    render_json(os, results, 0);
    os << "caps: " << caps.dump() << "\n";
    return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return r.to_json().dump(2) + "\n";
    if (format == "human") return r.human();
    throw std::invalid_argument("unknown report format '" + format + "'");
}

Report parse_report(const std::string& json_text) {
    Json j = Json::parse(json_text);
    Report r;
    r.tool_version = j.at("version").get<std::string>();
    r.scenario_hash = j.at("scenario").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.caps = j.at("caps");
    r.results = j.at("results");
    const std::string st = j.at("status").get<std::string>();
    for (Status s : {Status::HOLDS, Status::FAILS, Status::UNKNOWN, Status::SKIPPED, Status::INCONSISTENT})
        if (to_string(s) == st) r.status = s;
    return r;
}

namespace {

ScenarioSpec spec_for_name(const std::string& name) {
    if (is_builtin_scenario(name)) return builtin_scenario(name);
    std::ifstream in(name, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open scenario '" + name + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ScenarioSpec spec = parse_scenario(buf.str());
    spec.name = name;
    return spec;
}

Status cache_status(const LoadedScenario& sc) {
    for (const auto& note : sc.cache_notes)
        if (note.contains("cache_consistent") && note["cache_consistent"] == false) return Status::INCONSISTENT;
    return Status::HOLDS;
}

Json subcat_names(const Subcat& s) { return s.to_json(); }

struct CommandIo {
    std::string scenario;
    bool json = false;
    bool no_cache = false;
    uint64_t seed = 0;

    ShellOptions options() const {
        ShellOptions o;
        o.use_cache = !no_cache;
        o.seed = seed;
        return o;
    }
};

void add_common(CLI::App* cmd, CommandIo& io) {
    cmd->add_option("scenario", io.scenario, "built-in name or scenario file")->required();
    cmd->add_flag("--json", io.json, "machine-readable report");
    cmd->add_flag("--no-cache", io.no_cache, "recompute catalogs and compare against any cached copy");
    cmd->add_option("--seed", io.seed, "seed recorded for capped sampling");
}

Report base_report(const LoadedScenario& sc, const std::string& command) {
    Report r;
    r.tool_version = kToolVersion;
    r.scenario_hash = sc.hash;
    r.command = command;
    r.caps = sc.spec.caps.to_json();
    return r;
}

Json catalog_json(const Catalog& cat) {
    Json j = Json::object();
    j["strategy"] = cat.strategy;
    j["bounds"] = cat.bounds;
    j["complete"] = cat.complete;
    j["count"] = cat.size();
    Json objs = Json::array();
    for (int i = 0; i < cat.size(); ++i) {
        Json o = Json::object();
        o["name"] = cat.names[i];
        o["display"] = cat.display_name(i);
        Json aliases = Json::array();
        for (const auto& [n, k] : cat.name_index)
            if (k == i && n != cat.names[i]) aliases.push_back(n);
        o["aliases"] = aliases;
        o["dims"] = cat.objects[i].dims;
        objs.push_back(o);
    }
    j["objects"] = objs;
    Json names = Json::array();
    for (int i = 0; i < cat.size(); ++i) names.push_back(cat.display_name(i));
    j["hom_table"] = Json{{"names", names}, {"rows", cat.hom_dim}};
    j["ext_table"] = Json{{"names", names}, {"rows", cat.ext_dim}};
    if (!cat.notes.empty()) j["notes"] = cat.notes;
    return j;
}

const RecollementScenario& need_recollement(const LoadedScenario& sc) {
    if (!sc.recollement)
        throw std::invalid_argument("this command needs a scenario with recollement wiring");
    return *sc.recollement;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact verifier for recollements, extriangulated structure and cotorsion pairs"};
    app.require_subcommand(1);

    CommandIo io;
    std::string bounds_arg, t_arg, f_arg, t1_arg, f1_arg, t2_arg, f2_arg, u_arg, v_arg;
    std::string object_arg, direction_arg, functor_arg, mode_arg, via_arg;
    bool conditions = false, glued = false;

    CLI::App* cat_cmd = app.add_subcommand("catalog", "indecomposables and hom/ext tables");
    add_common(cat_cmd, io);
    cat_cmd->add_option("--bounds", bounds_arg, "per-vertex dimension bounds (modules) or multiplicity bound");

    CLI::App* cot_cmd = app.add_subcommand("cotorsion", "cotorsion pair operations");
    cot_cmd->require_subcommand(1);
    CLI::App* cot_enum = cot_cmd->add_subcommand("enumerate", "all cotorsion pairs of the carrier");
    add_common(cot_enum, io);
    CLI::App* cot_check = cot_cmd->add_subcommand("check", "check one pair");
    add_common(cot_check, io);
    cot_check->add_option("--T", t_arg)->required();
    cot_check->add_option("--F", f_arg)->required();

    CLI::App* glue_cmd = app.add_subcommand("glue", "glued pair from two side pairs");
    add_common(glue_cmd, io);
    glue_cmd->add_option("--T1", t1_arg)->required();
    glue_cmd->add_option("--F1", f1_arg)->required();
    glue_cmd->add_option("--T2", t2_arg)->required();
    glue_cmd->add_option("--F2", f2_arg)->required();
    glue_cmd->add_flag("--conditions", conditions, "also run the sufficiency conditions");

    CLI::App* approx_cmd = app.add_subcommand("approx", "approximation conflation for one object");
    add_common(approx_cmd, io);
    approx_cmd->add_option("--object", object_arg)->required();
    approx_cmd->add_option("--direction", direction_arg, "b (cover side) or c (envelope side)")->required();
    approx_cmd->add_option("--T", t_arg);
    approx_cmd->add_option("--F", f_arg);
    approx_cmd->add_flag("--glued", glued, "run the glued construction through the recollement");
    approx_cmd->add_option("--T1", t1_arg);
    approx_cmd->add_option("--F1", f1_arg);
    approx_cmd->add_option("--T2", t2_arg);
    approx_cmd->add_option("--F2", f2_arg);

    CLI::App* rec_cmd = app.add_subcommand("recollement", "recollement verification");
    rec_cmd->require_subcommand(1);
    CLI::App* rec_verify = rec_cmd->add_subcommand("verify", "axioms and property suite");
    add_common(rec_verify, io);

    CLI::App* fun_cmd = app.add_subcommand("functor", "functor exactness");
    fun_cmd->require_subcommand(1);
    CLI::App* fun_check = fun_cmd->add_subcommand("check", "exactness of one of the six functors");
    add_common(fun_check, io);
    fun_check->add_option("--functor", functor_arg)->required();
    fun_check->add_option("--mode", mode_arg, "exact | left | right")->required();

    CLI::App* res_cmd = app.add_subcommand("restrict", "restrict a middle pair to a side");
    add_common(res_cmd, io);
    res_cmd->add_option("--U", u_arg)->required();
    res_cmd->add_option("--V", v_arg)->required();
    res_cmd->add_option("--via", via_arg, "i or j")->required();

    CliResult result;
    std::vector<std::string> argv_store = args;
    std::vector<const char*> argv;
    argv.push_back("extricat");
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.out = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 3;
        return result;
    }

    try {
        LoadedScenario sc = load_scenario(spec_for_name(io.scenario), io.options());
        Report rep;
        if (cat_cmd->parsed()) {
            ScenarioSpec spec = sc.spec;
            if (!bounds_arg.empty()) {
                std::vector<int> bs;
                for (const auto& part : split_list(bounds_arg)) bs.push_back(std::stoi(part));
                spec.caps.dim_bound = bs;
                if (bs.size() == 1) spec.caps.mult_bound = bs[0];
                sc = load_scenario(spec, io.options());
            }
            rep = base_report(sc, "catalog");
            rep.results["catalog"] = catalog_json(sc.main_catalog());
            rep.results["cache"] = sc.cache_notes;
            rep.status = sc.main_catalog().complete ? Status::HOLDS : Status::UNKNOWN;
            rep.status = combine(rep.status, cache_status(sc));
        } else if (cot_enum->parsed()) {
            rep = base_report(sc, "cotorsion enumerate");
            EnumerationResult res = enumerate_cotorsion_pairs(sc.main, sc.spec.caps);
            rep.results = res.to_json();
            rep.status = res.any_unknown ? Status::UNKNOWN : Status::HOLDS;
            rep.status = combine(rep.status, cache_status(sc));
        } else if (cot_check->parsed()) {
            rep = base_report(sc, "cotorsion check");
            Subcat t = sc.parse_object_list(t_arg, false);
            Subcat f = sc.parse_object_list(f_arg, false);
            CotorsionReport res = check_cotorsion_pair(t, f, sc.main, sc.spec.caps);
            rep.results["T"] = subcat_names(t);
            rep.results["F"] = subcat_names(f);
            rep.results["report"] = res.to_json();
            rep.results["is_cotorsion_pair"] = res.is_cotorsion();
            rep.status = res.aggregate();
        } else if (glue_cmd->parsed()) {
            rep = base_report(sc, "glue");
            const RecollementScenario& rs = need_recollement(sc);
            auto side_list = [&](const std::string& arg, const ExCat& side) {
                if (arg == "all" || arg == "full" || arg == "mod") return side.carrier;
                return Subcat::of_names(side.carrier.catalog, split_list(arg));
            };
            GluePairInput input{side_list(t1_arg, rs.side_a), side_list(f1_arg, rs.side_a),
                                side_list(t2_arg, rs.side_c), side_list(f2_arg, rs.side_c)};
            GlueResult g = glue(rs, input);
            rep.results["glued_T"] = subcat_names(g.glued_t);
            rep.results["glued_F"] = subcat_names(g.glued_f);
            rep.results["trace"] = g.trace;
            rep.status = g.status;
            if (conditions) {
                TheoremReport tr = theorem44_conditions(rs, input, g);
                rep.results["theorem"] = tr.to_json();
                rep.status = combine(rep.status, tr.aggregate());
            }
        } else if (approx_cmd->parsed()) {
            const bool right_dir = direction_arg == "b";
            if (!right_dir && direction_arg != "c") throw std::invalid_argument("direction must be b or c");
            if (glued) {
                rep = base_report(sc, "approx --glued");
                const RecollementScenario& rs = need_recollement(sc);
                auto side_list = [&](const std::string& arg, const ExCat& side) {
                    if (arg == "all" || arg == "full" || arg == "mod") return side.carrier;
                    return Subcat::of_names(side.carrier.catalog, split_list(arg));
                };
                if (t1_arg.empty() || f1_arg.empty() || t2_arg.empty() || f2_arg.empty())
                    throw std::invalid_argument("--glued needs --T1 --F1 --T2 --F2");
                GluePairInput input{side_list(t1_arg, rs.side_a), side_list(f1_arg, rs.side_a),
                                    side_list(t2_arg, rs.side_c), side_list(f2_arg, rs.side_c)};
                const Rep& m = rs.middle.catalog().by_name(object_arg);
                GluedApproxResult res = glued_approximation(rs, input, m, right_dir ? 'b' : 'c');
                rep.results["object"] = object_arg;
                rep.results["direction"] = direction_arg;
                rep.results["status"] = to_string(res.status);
                rep.results["trace"] = res.trace;
                if (res.conflation) {
                    rep.results["conflation"] = Json{{"A_dims", res.conflation->A().dims},
                                                     {"B_dims", res.conflation->B().dims},
                                                     {"C_dims", res.conflation->C().dims}};
                }
                if (res.status != Status::HOLDS) rep.results["failed_stage"] = res.failed_stage;
                rep.status = res.status;
            } else {
                rep = base_report(sc, "approx");
                if (t_arg.empty() || f_arg.empty())
                    throw std::invalid_argument("approx needs --T and --F (or --glued)");
                Subcat t = sc.parse_object_list(t_arg, false);
                Subcat f = sc.parse_object_list(f_arg, false);
                const Rep& m = sc.main_catalog().by_name(object_arg);
                ApproxResult res = right_dir ? right_approximation(m, t, f, sc.main, sc.spec.caps)
                                             : left_approximation(m, t, f, sc.main, sc.spec.caps);
                rep.results["object"] = object_arg;
                rep.results["direction"] = direction_arg;
                rep.results["result"] = res.kind == ApproxResult::Kind::FOUND
                                            ? "found"
                                            : (res.kind == ApproxResult::Kind::NO ? "no(bound)" : "unknown");
                rep.results["trace"] = res.trace;
                rep.status = res.kind == ApproxResult::Kind::FOUND
                                 ? Status::HOLDS
                                 : (res.kind == ApproxResult::Kind::NO ? Status::FAILS : Status::UNKNOWN);
            }
        } else if (rec_verify->parsed()) {
            rep = base_report(sc, "recollement verify");
            const RecollementScenario& rs = need_recollement(sc);
            RecollementReport res = full_recollement_report(rs);
            rep.results = res.to_json();
            rep.status = res.aggregate();
            rep.status = combine(rep.status, cache_status(sc));
        } else if (fun_check->parsed()) {
            rep = base_report(sc, "functor check");
            const RecollementScenario& rs = need_recollement(sc);
            FunctorTag tag = functor_tag_from_string(functor_arg);
            ExactMode mode = exact_mode_from_string(mode_arg);
            const ExCat& src = functor_source_is_middle(tag)
                                   ? rs.middle
                                   : (tag == FunctorTag::i_star_lower ? rs.side_a : rs.side_c);
            const ExCat& tgt = functor_source_is_middle(tag)
                                   ? (tag == FunctorTag::j_star ? rs.side_c : rs.side_a)
                                   : rs.middle;
            Verdict v = functor_exactness(rs.ctx, FunctorHandle::single(tag), mode, src, tgt, rs.caps);
            rep.results["functor"] = to_string(tag);
            rep.results["mode"] = to_string(mode);
            rep.results["verdict"] = v.to_json();
            rep.status = v.status;
        } else if (res_cmd->parsed()) {
            rep = base_report(sc, "restrict");
            const RecollementScenario& rs = need_recollement(sc);
            auto mid_list = [&](const std::string& arg) {
                if (arg == "all" || arg == "full" || arg == "mod") return rs.middle.carrier;
                return Subcat::of_names(rs.middle.carrier.catalog, split_list(arg));
            };
            if (via_arg != "i" && via_arg != "j") throw std::invalid_argument("--via must be i or j");
            RestrictionResult res = restrict_pair(rs, mid_list(u_arg), mid_list(v_arg), via_arg[0]);
            rep.results = res.to_json();
            Status st = res.input_check.aggregate();
            st = combine(st, res.preconditions.status);
            st = combine(st, res.restricted_check.aggregate());
            rep.status = st;
        } else {
            throw std::invalid_argument("no command selected");
        }
        result.out = emit_report(rep, io.json ? "json" : "human");
        result.exit_code = exit_code_for(rep.status);
        return result;
    } catch (const std::invalid_argument& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 3;
        return result;
    } catch (const std::exception& e) {
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.exit_code = 4;
        return result;
    }
}

} // namespace extricat
