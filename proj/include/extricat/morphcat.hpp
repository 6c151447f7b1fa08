#pragma once

#include "extricat/repcat.hpp"

namespace extricat {

// Object of the morphism category Mor(A): a base-algebra map f : Y -> X,
// identified with a module over the triangular matrix algebra T2(A).
struct TripleObj {
    Rep x; // top
    Rep y; // bottom
    RepMap f; // y -> x
};

struct TripleMap {
    TripleObj src, tgt;
    RepMap u; // top component
    RepMap v; // bottom component
};

// The six functors of the standard recollement around mod T2(A).
enum class FunctorTag {
    i_star_upper,   // B -> A, cokernel of the connecting map
    i_star_lower,   // A -> B, X |-> (X; 0)
    i_shriek,       // B -> A, top component
    j_lower_shriek, // C -> B, Y |-> (Y; Y)_1
    j_star,         // B -> C, bottom component
    j_lower_star    // C -> B, Y |-> (0; Y)
};

std::string to_string(FunctorTag t);
FunctorTag functor_tag_from_string(const std::string& s);
bool functor_source_is_middle(FunctorTag t);

// Base algebra A together with B = T2(A): two copies of the quiver joined
// by one connecting arrow per vertex, commutativity relations, plus the
// original relations in both copies.
struct RecContext {
    std::shared_ptr<const Algebra> base;
    std::shared_ptr<const Algebra> tri;

    int n() const { return base->num_vertices(); }
    int m() const { return static_cast<int>(base->quiver().arrows.size()); }
};

std::shared_ptr<const Algebra> triangular_matrix_algebra(std::shared_ptr<const Algebra> a);
RecContext make_rec_context(std::shared_ptr<const Algebra> a);

Rep triple_to_rep(const RecContext& ctx, const TripleObj& t);
TripleObj rep_to_triple(const RecContext& ctx, const Rep& m);
RepMap triple_map_to_repmap(const RecContext& ctx, const TripleMap& t);
TripleMap repmap_to_triple_map(const RecContext& ctx, const RepMap& f);

// Lazily composed functor; tags apply right to left.
struct FunctorHandle {
    std::vector<FunctorTag> tags;

    static FunctorHandle single(FunctorTag t) { return FunctorHandle{{t}}; }
    std::string name() const;
};

Rep apply_functor(const RecContext& ctx, FunctorTag t, const Rep& obj);
RepMap apply_functor_map(const RecContext& ctx, FunctorTag t, const RepMap& f);
Rep apply_functor(const RecContext& ctx, const FunctorHandle& h, const Rep& obj);
RepMap apply_functor_map(const RecContext& ctx, const FunctorHandle& h, const RepMap& f);

// The four adjoint pairs inside the two adjoint triples.
enum class AdjPair {
    i_upper_lower, // i^* -| i_*
    i_lower_shriek, // i_* -| i^!
    j_shriek_star, // j_! -| j^*
    j_star_lower   // j^* -| j_*
};

std::string to_string(AdjPair a);

// unit at X: X -> G F X; counit at Y: F G Y -> Y
RepMap adjunction_unit(const RecContext& ctx, AdjPair adj, const Rep& obj);
RepMap adjunction_counit(const RecContext& ctx, AdjPair adj, const Rep& obj);

// Hom(F X, M) -> Hom(X, G M) and back; X lives in the source of F.
RepMap adjunction_forward(const RecContext& ctx, AdjPair adj, const Rep& x, const Rep& m, const RepMap& f);
RepMap adjunction_backward(const RecContext& ctx, AdjPair adj, const Rep& x, const Rep& m, const RepMap& g);

// Transports an Ext class along an exact functor by realizing, applying and
// reading the class back. Throws if the image sequence is not exact.
ExtClass transport_ext(const RecContext& ctx, const FunctorHandle& h, const ExtClass& cls);

// One-sided transport per the right-exact factorization: the image of a
// conflation A -> B -> C under F yields an E-triangle K -> FB -> FC with
// K = ker(Fg); returns K and that conflation.
struct RightTransport {
    Rep a_prime;
    Conflation triangle;
    RepMap factor; // FA -> K with incl . factor = F(incl)
};
RightTransport transport_right(const RecContext& ctx, const FunctorHandle& h, const Conflation& conf);

// Catalog of mod T2(A) by the triple sweep: seeds (c;0), (0;c), (c;c)_1 and
// all radical-block morphisms between bounded sums of base indecomposables.
Catalog enumerate_indecomposables_morphism(const RecContext& ctx, const Catalog& base_catalog,
                                           int mult_bound, const Caps& caps);

} // namespace extricat
