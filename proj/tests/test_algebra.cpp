#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "extricat/algebra.hpp"
#include "extricat/repcat.hpp"

using namespace extricat;

namespace {

std::shared_ptr<const Algebra> make_a2(unsigned p = 2) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"alpha", 0, 1}};
    return build_algebra(q, {}, FieldSpec{p});
}

std::shared_ptr<const Algebra> make_diamond(unsigned p = 2) {
    Quiver q;
    q.vertices = {"1", "2", "1'", "2'"};
    q.arrows = {{"alpha", 0, 1}, {"alpha'", 2, 3}, {"c_1", 2, 0}, {"c_2", 3, 1}};
    Relation r;
    r.terms = {{1, Path{2, {2, 0}}}, {p - 1, Path{2, {1, 3}}}}; // alpha c_1 = c_2 alpha'
    return build_algebra(q, {r}, FieldSpec{p});
}

} // namespace

TEST_CASE("A2 path basis") {
    auto a = make_a2();
    CHECK(a->dim() == 3); // e1, e2, alpha
    CHECK(a->basis_paths(0, 0).size() == 1);
    CHECK(a->basis_paths(0, 1).size() == 1);
    CHECK(a->basis_paths(1, 0).size() == 0);
    CHECK(a->basis_paths(1, 1).size() == 1);
}

TEST_CASE("single vertex algebra") {
    Quiver q;
    q.vertices = {"*"};
    auto a = build_algebra(q, {}, FieldSpec{2});
    CHECK(a->dim() == 1);
    Rep s = projective_of_vertex(a, 0);
    CHECK(s.dims == std::vector<int>{1});
    Rep i = injective_of_vertex(a, 0);
    CHECK(i.dims == std::vector<int>{1});
}

TEST_CASE("diamond algebra with commutativity relation") {
    auto b = make_diamond();
    CHECK(b->dim() == 9); // 4 idempotents + 4 arrows + 1 length-2 class
    CHECK(b->basis_paths(2, 1).size() == 1);
}

TEST_CASE("cyclic quiver rejected") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    CHECK_THROWS(build_algebra(q, {}, FieldSpec{2}));
}

TEST_CASE("non-parallel relation rejected") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}};
    Relation r;
    r.terms = {{1, Path{0, {0, 1}}}, {1, Path{0, {2}}}}; // length-1 path not allowed
    CHECK_THROWS(build_algebra(q, {r}, FieldSpec{2}));
}

TEST_CASE("A2 projectives and injectives") {
    auto a = make_a2();
    Rep p1 = projective_of_vertex(a, 0);
    CHECK(p1.dims == std::vector<int>{1, 1});
    CHECK(p1.mats[0].at(0, 0) == 1);
    Rep p2 = projective_of_vertex(a, 1);
    CHECK(p2.dims == std::vector<int>{0, 1});
    Rep i1 = injective_of_vertex(a, 0);
    CHECK(i1.dims == std::vector<int>{1, 0});
    Rep i2 = injective_of_vertex(a, 1);
    CHECK(i2.dims == std::vector<int>{1, 1});
    CHECK(i2.mats[0].at(0, 0) == 1);
    p1.validate();
    i2.validate();
}

TEST_CASE("projectives sum to the regular representation") {
    for (auto alg : {make_a2(), make_diamond()}) {
        std::vector<int> total(alg->num_vertices(), 0);
        for (int v = 0; v < alg->num_vertices(); ++v) {
            Rep pv = projective_of_vertex(alg, v);
            pv.validate();
            for (int w = 0; w < alg->num_vertices(); ++w) total[w] += pv.dims[w];
        }
        int sum = 0;
        for (int t : total) sum += t;
        CHECK(sum == alg->dim());
    }
}

TEST_CASE("diamond projectives match the triple picture") {
    auto b = make_diamond();
    // vertex order: 1, 2, 1', 2'
    CHECK(projective_of_vertex(b, 0).dims == std::vector<int>{1, 1, 0, 0});
    CHECK(projective_of_vertex(b, 1).dims == std::vector<int>{0, 1, 0, 0});
    CHECK(projective_of_vertex(b, 2).dims == std::vector<int>{1, 1, 1, 1});
    CHECK(projective_of_vertex(b, 3).dims == std::vector<int>{0, 1, 0, 1});
    CHECK(injective_of_vertex(b, 0).dims == std::vector<int>{1, 0, 1, 0});
    CHECK(injective_of_vertex(b, 1).dims == std::vector<int>{1, 1, 1, 1});
    CHECK(injective_of_vertex(b, 2).dims == std::vector<int>{0, 0, 1, 0});
    CHECK(injective_of_vertex(b, 3).dims == std::vector<int>{0, 0, 1, 1});
    for (int v = 0; v < 4; ++v) {
        projective_of_vertex(b, v).validate();
        injective_of_vertex(b, v).validate();
    }
}
