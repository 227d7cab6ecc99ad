#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fano/catalog.hpp"
#include "fano/verify.hpp"

using namespace fano;

#ifndef FANO_DATA_FILE
#define FANO_DATA_FILE "data/fano.jsonl"
#endif

TEST_CASE("shipped catalogue loads cleanly") {
    Catalog cat = load_catalog_file(FANO_DATA_FILE);
    CHECK(cat.rows().size() == 95 + 85 + 70 + 6);
    CHECK(cat.warnings().empty());

    auto codim1 = cat.query([](const FamilyRecord& r) { return r.codim == 1; });
    CHECK(codim1.size() == 95);
    auto codim2 = cat.query([](const FamilyRecord& r) { return r.codim == 2; });
    CHECK(codim2.size() == 85);
    auto codim3 = cat.query([](const FamilyRecord& r) { return r.codim == 3; });
    CHECK(codim3.size() == 70);

    // ten codimension-2 families carry a second-type projection
    auto ii1 = cat.query([](const FamilyRecord& r) {
        if (r.codim != 2)
            return false;
        for (const auto& p : r.projections)
            if (p.kind == ProjectionKind::type_II1)
                return true;
        return false;
    });
    CHECK(ii1.size() == 10);

    const FamilyRecord* x66 = cat.find(293);
    REQUIRE(x66);
    CHECK(x66->ambient.weights() == std::vector<int>{1, 5, 6, 22, 33});
    CHECK(x66->model.degrees == std::vector<int>{66});

    // families sharing one series id resolve through variants
    CHECK(cat.find_all(24097).size() == 3);
    CHECK(cat.find(24097) == nullptr);
    CHECK(cat.find(RowKey{24097, "Jer15"}) != nullptr);
}

TEST_CASE("empty stream loads an empty catalogue") {
    std::istringstream in("");
    Catalog cat = load_catalog(in);
    CHECK(cat.rows().empty());
}

TEST_CASE("schema violations fail the load atomically") {
    std::istringstream bad_index(
        R"({"grdb": 1, "codim": 1, "weights": [1,1,1,1,1], "model": {"type": "ci", "degrees": [3]}})");
    CHECK_THROWS_AS(load_catalog(bad_index), Error);

    std::istringstream dup(
        R"({"grdb": 1, "codim": 1, "weights": [1,1,1,1,1], "model": {"type": "ci", "degrees": [4]}}
{"grdb": 1, "codim": 1, "weights": [1,1,1,1,1], "model": {"type": "ci", "degrees": [4]}})");
    CHECK_THROWS_AS(load_catalog(dup), Error);

    std::istringstream garbage("not json at all");
    CHECK_THROWS_AS(load_catalog(garbage), Error);
}

TEST_CASE("round trip through the canonical serialization") {
    Catalog cat = load_catalog_file(FANO_DATA_FILE);
    std::string dumped = export_catalog(cat);
    std::istringstream in(dumped);
    Catalog again = load_catalog(in);
    REQUIRE(again.rows().size() == cat.rows().size());
    CHECK(export_catalog(again) == dumped);

    auto it1 = cat.rows().begin();
    auto it2 = again.rows().begin();
    for (; it1 != cat.rows().end(); ++it1, ++it2) {
        CHECK(it1->first == it2->first);
        CHECK(record_to_json(it1->second) == record_to_json(it2->second));
    }
}

TEST_CASE("verification output is deterministic across parallelism") {
    Catalog cat = load_catalog_file(FANO_DATA_FILE);
    VerifyOptions one;
    one.jobs = 1;
    VerifyOptions many;
    many.jobs = 8;
    auto r1 = verify_all(cat, one);
    auto r2 = verify_all(cat, many);
    CHECK(render_text(r1) == render_text(r2));
    CHECK(render_json(r1) == render_json(r2));
    auto r3 = verify_all(cat, many);
    CHECK(render_csv(r2) == render_csv(r3));
}

TEST_CASE("report covers every row") {
    Catalog cat = load_catalog_file(FANO_DATA_FILE);
    auto rep = verify_all(cat);
    std::set<RowKey> seen;
    for (const auto& e : rep.entries)
        seen.insert(e.key);
    CHECK(seen.size() == cat.rows().size());
    CHECK(rep.entries.size() >= cat.rows().size());
}
