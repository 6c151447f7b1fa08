#pragma once

#include "extricat/algebra.hpp"
#include "extricat/exactlin.hpp"
#include "extricat/verdict.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace extricat {

// A quiver representation: one space per vertex, one matrix per arrow,
// relations of the algebra vanish on it.
struct Rep {
    std::shared_ptr<const Algebra> alg;
    std::vector<int> dims;
    std::vector<Mat> mats; // per arrow, dims[tgt] x dims[src]

    static Rep zero(std::shared_ptr<const Algebra> a);

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    unsigned p() const { return alg->field().p; }
    void validate() const;
    std::string content_key() const;
    bool same_data(const Rep& o) const { return dims == o.dims && mats == o.mats; }
};

Rep direct_sum(const Rep& a, const Rep& b);
Rep simple_of_vertex(std::shared_ptr<const Algebra> alg, int v);
Rep projective_of_vertex(std::shared_ptr<const Algebra> alg, int v);
Rep injective_of_vertex(std::shared_ptr<const Algebra> alg, int v);
Mat path_action(const Rep& m, const Path& path);

// Structure-preserving morphism: commuting square per arrow.
struct RepMap {
    Rep src, tgt;
    std::vector<Mat> comps; // per vertex, tgt.dims[v] x src.dims[v]

    static RepMap zero(const Rep& src, const Rep& tgt);
    static RepMap identity(const Rep& m);

    void validate() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_iso() const;
    bool is_zero() const;
    bool same_data(const RepMap& o) const { return comps == o.comps; }
};

RepMap compose(const RepMap& g, const RepMap& f); // g after f
RepMap add_maps(const RepMap& a, const RepMap& b);
RepMap sub_maps(const RepMap& a, const RepMap& b);
RepMap scalar_map(unsigned c, const RepMap& a);
RepMap direct_sum_map(const RepMap& a, const RepMap& b);

// Hom(M, N) with a canonical echelon basis and coordinate conversion.
struct HomSpace {
    Rep src, tgt;
    std::vector<RepMap> basis;
    Mat basis_cols; // unknown-space columns, one per basis element

    int dim() const { return static_cast<int>(basis.size()); }
    Vec coords_of(const RepMap& f) const;
    RepMap from_coords(const Vec& coords) const;
};
HomSpace hom_space(const Rep& m, const Rep& n);
std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);

struct SubquotientData {
    Rep ker;
    RepMap ker_incl; // ker -> src
    Rep coker;
    RepMap coker_proj; // tgt -> coker
    Rep image;
    RepMap image_incl;  // image -> tgt
    RepMap onto_image;  // src -> image
};
SubquotientData kernel_cokernel(const RepMap& f);

struct PullbackData {
    Rep obj;
    RepMap to_x, to_y;
    // mediator for (u: W -> X, v: W -> Y) with f u = g v
    RepMap mediate(const RepMap& u, const RepMap& v) const;
    RepMap incl; // obj -> X (+) Y
};
PullbackData pullback(const RepMap& f, const RepMap& g); // f: X->Z, g: Y->Z

struct PushoutData {
    Rep obj;
    RepMap from_x, from_y;
    RepMap mediate(const RepMap& u, const RepMap& v) const; // u f = v g
    RepMap proj; // X (+) Y -> obj
};
PushoutData pushout(const RepMap& f, const RepMap& g); // f: W->X, g: W->Y

// Direct-sum decomposition into indecomposables. `complete` is false when
// the idempotent search hit its cap without a decision; in that case the
// returned summands may still be decomposable.
struct Decomposition {
    std::vector<std::pair<Rep, int>> summands;
    bool complete = true;
    std::string cap_note;
};
Decomposition decompose(const Rep& m, const Caps& caps);

struct IsoResult {
    Status status = Status::FAILS;
    std::optional<RepMap> witness;
};
IsoResult is_isomorphic(const Rep& m, const Rep& n, const Caps& caps);

struct ProjectiveCover {
    Rep cover;      // P
    RepMap epi;     // P -> M
    Rep omega;      // kernel
    RepMap incl;    // omega -> P
    std::vector<int> top_mults;
};
ProjectiveCover projective_cover(const Rep& m);

// Short exact sequence A --incl--> B --proj--> C.
struct Conflation {
    RepMap incl;
    RepMap proj;

    const Rep& A() const { return incl.src; }
    const Rep& B() const { return incl.tgt; }
    const Rep& C() const { return proj.tgt; }
    bool is_exact() const;
};

struct ExtClass {
    Rep C, A;
    Vec coords;
    bool is_zero() const;
};

// Ext^1(C, A) presented as coker(Hom(P0, A) -> Hom(omega, A)) for the
// canonical projective presentation of C, with pivot-canonical coset
// representatives so coordinates are reproducible.
struct ExtBasis {
    Rep C, A;
    ProjectiveCover pres;
    HomSpace hom_omega_a;
    QuotientSpace quot;
    std::vector<RepMap> class_reps; // omega -> A

    int dim() const { return quot.dim; }
    Vec coords_of_omega_map(const RepMap& w) const;
    RepMap omega_map_of(const Vec& coords) const;
};
ExtBasis ext_basis(const Rep& c, const Rep& a);

// Memoizes ext/hom data keyed by object bytes; sweeps lean on this.
class ExtCache {
public:
    const ExtBasis& get(const Rep& c, const Rep& a);
    int ext_dim(const Rep& c, const Rep& a);

private:
    std::map<std::pair<std::string, std::string>, ExtBasis> cache_;
};

Conflation ext_to_conflation(const ExtClass& cls, const ExtBasis& basis);
Conflation ext_to_conflation(const ExtClass& cls);
Conflation ext_to_conflation(const ExtClass& cls, ExtCache& cache);
ExtClass conflation_to_ext(const Conflation& c, const ExtBasis& basis);
ExtClass conflation_to_ext(const Conflation& c);
ExtClass conflation_to_ext(const Conflation& c, ExtCache& cache);

ExtClass push_ext(const ExtClass& cls, const RepMap& a);  // a: A -> A'
ExtClass pull_ext(const ExtClass& cls, const RepMap& c);  // c: C' -> C
ExtClass push_ext(const ExtClass& cls, const RepMap& a, ExtCache& cache);
ExtClass pull_ext(const ExtClass& cls, const RepMap& c, ExtCache& cache);

// The finite list of indecomposables (up to iso, within bounds) standing in
// for a representation-finite category.
struct Catalog {
    std::shared_ptr<const Algebra> alg;
    std::vector<Rep> objects;
    std::vector<std::string> names;
    std::map<std::string, int> name_index; // canonical names and aliases
    std::map<int, std::string> display_alias;
    std::vector<std::vector<int>> hom_dim;
    std::vector<std::vector<int>> ext_dim;
    bool complete = true;
    std::vector<std::string> notes;
    std::string strategy;
    std::vector<int> bounds;
    std::string caps_line; // caps the catalog was computed under (cache metadata)

    int size() const { return static_cast<int>(objects.size()); }
    int find_iso(const Rep& m, const Caps& caps) const; // -1 when absent
    void add_alias(const std::string& alias, int index);
    int index_of_name(const std::string& name) const; // throws on miss
    const Rep& by_name(const std::string& name) const;
    std::string display_name(int index) const;
};

// Names and tables for a finished object list; order: total dim, then dim
// vector, then discovery order.
void finalize_catalog(Catalog& cat, const Caps& caps);

// Plain module-category strategy: sweep all arrow-matrix tuples within the
// per-vertex dimension bound and decompose.
Catalog enumerate_indecomposables_modules(std::shared_ptr<const Algebra> alg,
                                          const std::vector<int>& dim_bound, const Caps& caps);

// Enumerates coefficient vectors in lexicographic order (zero first) until
// `fn` asks to stop or `cap` vectors were visited.
struct EnumResult {
    bool stopped = false;
    bool exhausted = true;
};
template <typename F>
EnumResult for_each_coeff_vector(int len, unsigned p, uint64_t cap, F&& fn) {
    Vec v(static_cast<size_t>(len), 0);
    uint64_t count = 0;
    while (true) {
        if (count >= cap) return {false, false};
        ++count;
        if (fn(static_cast<const Vec&>(v))) return {true, true};
        int i = 0;
        for (; i < len; ++i) {
            if (v[i] + 1u < p) {
                ++v[i];
                for (int j = 0; j < i; ++j) v[j] = 0;
                break;
            }
        }
        if (i == len) return {false, true};
    }
}

Json rep_to_json(const Rep& m);
Json repmap_to_json(const RepMap& f);

} // namespace extricat
