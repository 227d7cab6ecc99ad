#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fano/projection.hpp"

using namespace fano;

TEST_CASE("type I node counts") {
    CHECK(nodes_type1_codim2(3, 3, 2, 1) == 9);
    CHECK(nodes_type1_codim2(5, 6, 3, 1) == 15);
    CHECK(nodes_type1_codim2(7, 8, 3, 1) == 28);
    CHECK_THROWS_AS(nodes_type1_codim2(5, 5, 3, 1), Error); // 25/2
    CHECK_THROWS_AS(nodes_type1_codim2(3, 3, 2, 2), Error); // a out of range
}

TEST_CASE("centre parameter recovered from the ambient shape") {
    CHECK(derive_type1_centre(WeightedSpace({1, 1, 1, 1, 1, 2}), {3, 3}, 2) == 1);
    CHECK(derive_type1_centre(WeightedSpace({1, 2, 2, 3, 5, 7}), {9, 10}, 7) == 2);
    CHECK(derive_type1_centre(WeightedSpace({1, 1, 1, 2, 3, 4}), {5, 6}, 4) == 1);
    CHECK_FALSE(derive_type1_centre(WeightedSpace({1, 1, 1, 1, 1, 2}), {3, 3}, 5).has_value());
}

TEST_CASE("conifold updates") {
    CHECK(conifold_euler_update(-56, 9) == -40);
    CHECK(conifold_euler_update(-17, 1) == -17);
    CHECK(conifold_euler_update(-124, 34) == -58);

    CHECK(conifold_h21_update(22, 6) == 17);
    CHECK(conifold_h21_update(9, 1) == 9);
    CHECK(conifold_h21_update(64, 34) == 31);
    CHECK_THROWS_AS(conifold_h21_update(3, 20), Error);
}

namespace {

Catalog toy_catalog(const std::string& extra = "") {
    std::string data = R"({"grdb": 20521, "codim": 1, "weights": [1,1,1,1,1], "model": {"type": "ci", "degrees": [4]}}
{"grdb": 20522, "codim": 2, "weights": [1,1,1,1,1,2], "model": {"type": "ci", "degrees": [3,3]}, "projections": [{"type": "I", "r": 2, "a": 1, "nodes": 9, "target": 20521}]}
{"grdb": 20523, "codim": 3, "weights": [1,1,1,1,1,2,3], "model": {"type": "pfaffian", "degrees": [3,3,4,4,4]}, "projections": [{"type": "I", "r": 3, "nodes": 6, "target": 20522}]}
)" + extra;
    std::istringstream in(data);
    return load_catalog(in);
}

} // namespace

TEST_CASE("staircase resolution down to the quartic") {
    Catalog cat = toy_catalog();
    CascadeResolver resolver(cat);
    CascadeResult res = resolver.resolve(20523);
    REQUIRE(res.path.size() == 3);
    CHECK(res.path[0].grdb == 20523);
    CHECK(res.path[1].grdb == 20522);
    CHECK(res.path[2].grdb == 20521);
    CHECK(res.base_kind == BaseKind::hypersurface);
    CHECK(res.e == -30);
    CHECK(res.h21 == 17);
    CHECK(res.h21_by_fold);

    CascadeResult mid = resolver.resolve(20522);
    CHECK(mid.e == -40);
    CHECK(mid.h21 == 22);
}

TEST_CASE("classical complete intersection is its own base") {
    std::string data =
        R"({"grdb": 24076, "codim": 2, "weights": [1,1,1,1,1,1], "model": {"type": "ci", "degrees": [2,3]}}
)";
    std::istringstream in(data);
    Catalog cat = load_catalog(in);
    CascadeResolver resolver(cat);
    CascadeResult res = resolver.resolve(24076);
    CHECK(res.base_kind == BaseKind::classical_ci);
    CHECK(res.e == -36);
    CHECK(res.h21 == 20);
}

TEST_CASE("missing target and cycles are reported") {
    Catalog cat = toy_catalog(
        R"({"grdb": 99, "codim": 2, "weights": [1,1,1,2,2,3], "model": {"type": "ci", "degrees": [4,5]}, "projections": [{"type": "I", "r": 3, "nodes": 10, "target": 98}]}
)");
    CHECK(cat.warnings().size() == 1); // dangling target noted at load time
    CascadeResolver resolver(cat);
    CHECK_THROWS_AS(resolver.resolve(99), Error);
    CHECK_THROWS_AS(resolver.resolve(12345), Error);
}

TEST_CASE("disagreeing multi-centre data is an inconsistency") {
    Catalog cat = toy_catalog(
        R"({"grdb": 77, "codim": 3, "weights": [1,1,1,1,2,2,3], "model": {"type": "external"}, "projections": [{"type": "I", "r": 3, "nodes": 6, "target": 20522}, {"type": "I", "r": 2, "nodes": 7, "target": 20522}]}
)");
    CascadeResolver resolver(cat);
    CHECK_THROWS_AS(resolver.resolve(77), Error);
}
