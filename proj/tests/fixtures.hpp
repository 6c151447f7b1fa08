#pragma once

#include "extricat/exstruct.hpp"
#include "extricat/morphcat.hpp"

#include <memory>

namespace extricat::testing {

// The running example everywhere in the tests: the A2 quiver over F_2, its
// triangular matrix algebra, both catalogs and the usual named objects.
struct PaperWorld {
    Caps caps;
    RecContext ctx;
    std::shared_ptr<const Catalog> catA, catB;
    Rep s1, s2, p1;
    int iS1 = -1, iS2 = -1, iP1 = -1;
    int bS2_0 = -1, bP1_0 = -1, bS1_0 = -1;
    int b0_S2 = -1, b0_P1 = -1, b0_S1 = -1;
    int bS2S2 = -1, bP1P1 = -1, bS1S1 = -1;
    int bPhi = -1, bPsi = -1;

    PaperWorld() : ctx(make_context()) {
        s1 = simple_of_vertex(ctx.base, 0);
        s2 = simple_of_vertex(ctx.base, 1);
        p1 = projective_of_vertex(ctx.base, 0);
        auto ca = std::make_shared<Catalog>(enumerate_indecomposables_modules(ctx.base, {2, 2}, caps));
        auto cb = std::make_shared<Catalog>(enumerate_indecomposables_morphism(ctx, *ca, 2, caps));
        iS1 = ca->find_iso(s1, caps);
        iS2 = ca->find_iso(s2, caps);
        iP1 = ca->find_iso(p1, caps);
        ca->add_alias("S1", iS1);
        ca->add_alias("S2", iS2);
        ca->add_alias("P1", iP1);

        RepMap phi = hom_basis(s2, p1)[0];
        RepMap psi = hom_basis(p1, s1)[0];
        Rep zero = Rep::zero(ctx.base);
        auto bfind = [&](const Rep& r) { return cb->find_iso(r, caps); };
        bS2_0 = bfind(apply_functor(ctx, FunctorTag::i_star_lower, s2));
        bP1_0 = bfind(apply_functor(ctx, FunctorTag::i_star_lower, p1));
        bS1_0 = bfind(apply_functor(ctx, FunctorTag::i_star_lower, s1));
        b0_S2 = bfind(apply_functor(ctx, FunctorTag::j_lower_star, s2));
        b0_P1 = bfind(apply_functor(ctx, FunctorTag::j_lower_star, p1));
        b0_S1 = bfind(apply_functor(ctx, FunctorTag::j_lower_star, s1));
        bS2S2 = bfind(apply_functor(ctx, FunctorTag::j_lower_shriek, s2));
        bP1P1 = bfind(apply_functor(ctx, FunctorTag::j_lower_shriek, p1));
        bS1S1 = bfind(apply_functor(ctx, FunctorTag::j_lower_shriek, s1));
        bPhi = bfind(triple_to_rep(ctx, TripleObj{p1, s2, phi}));
        bPsi = bfind(triple_to_rep(ctx, TripleObj{s1, p1, psi}));
        (void)zero;
        cb->add_alias("S2|0", bS2_0);
        cb->add_alias("P1|0", bP1_0);
        cb->add_alias("S1|0", bS1_0);
        cb->add_alias("0|S2", b0_S2);
        cb->add_alias("0|P1", b0_P1);
        cb->add_alias("0|S1", b0_S1);
        cb->add_alias("S2|S2_1", bS2S2);
        cb->add_alias("P1|P1_1", bP1P1);
        cb->add_alias("S1|S1_1", bS1S1);
        cb->add_alias("P1|S2_phi", bPhi);
        cb->add_alias("S1|P1_psi", bPsi);
        catA = ca;
        catB = cb;
    }

    static RecContext make_context() {
        Quiver q;
        q.vertices = {"1", "2"};
        q.arrows = {{"alpha", 0, 1}};
        return make_rec_context(build_algebra(q, {}, FieldSpec{2}));
    }

    ExCat mod_a() const { return make_excat(Subcat::full(catA)); }
    ExCat mod_b() const { return make_excat(Subcat::full(catB)); }
    // the extension-closed middle carrier with eight indecomposables
    ExCat x_middle() const {
        return make_excat(Subcat::of_indices(
            catB, {bS2_0, bP1_0, bS1_0, bP1P1, bPsi, bS1S1, b0_P1, b0_S1}));
    }
    // the right-hand carrier add(S1 + P1) inside mod A
    ExCat x_right() const { return make_excat(Subcat::of_indices(catA, {iS1, iP1})); }
};

} // namespace extricat::testing
