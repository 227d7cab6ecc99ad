#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/hodge.hpp"

using namespace fano;

TEST_CASE("milnor series of the quartic 3-fold") {
    auto m = milnor_series({1, 1, 1, 1, 1}, 4, 10);
    // (1 + t + t^2)^5
    std::vector<long long> expect{1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1};
    for (int k = 0; k <= 10; ++k)
        CHECK(m.coefficient(k).to_int64() == expect[static_cast<size_t>(k)]);
}

TEST_CASE("milnor series rejects degenerate degrees") {
    CHECK_THROWS_AS(milnor_series({1, 1, 1, 2, 2}, 2, 5), Error);
}

TEST_CASE("truncation order covers the whole symmetric range") {
    CHECK(milnor_order({1, 5, 6, 22, 33}, 66) == 196);
    CHECK(milnor_order({1, 1, 1, 1, 1}, 4) == 10);
}

TEST_CASE("h21 of anchor hypersurfaces") {
    CHECK(h21_hypersurface({1, 5, 6, 22, 33}, 66) == 120);
    CHECK(h21_hypersurface({1, 1, 1, 1, 1}, 4) == 30);
    CHECK(h21_hypersurface({1, 1, 1, 2, 2}, 6) == 41);
    CHECK(h21_hypersurface({1, 4, 6, 7, 11}, 28) == 49);
}

TEST_CASE("primitive pieces and hodge symmetry") {
    CHECK(primitive_hodge({1, 1, 1, 1, 1}, 4, 1) == 0); // exponent -1
    CHECK(primitive_hodge({1, 1, 1, 1, 1}, 4, 3) == 30);
    CHECK(primitive_hodge({1, 4, 6, 7, 11}, 28, 2) == 49);
    CHECK(primitive_hodge({1, 4, 6, 7, 11}, 28, 3) ==
          primitive_hodge({1, 4, 6, 7, 11}, 28, 2));
}

TEST_CASE("diamond assembly") {
    CHECK(hodge_diamond(1, 120).euler() == -236);
    CHECK(hodge_diamond(1, 2).euler() == 0);
    CHECK(hodge_diamond(3, 9).euler() == -10);
    CHECK_THROWS_AS(hodge_diamond(0, 5), Error);
    auto d = hodge_diamond(1, 30);
    CHECK(d.str().find("30  30") != std::string::npos);
}
