#include <doctest.h>

#include <numeric>

#include "msnake/matchings.hpp"

using namespace msnake;

TEST_CASE("single tile has the two trivial matchings") {
    SnakeGraph g = build_snake(RationalIndex(1, 1));
    CHECK(numerator_dp(g) == TriPoly::x() + TriPoly::y());
    std::vector<Matching> all = enumerate_matchings(g);
    REQUIRE(all.size() == 2);
    for (const Matching& m : all) {
        CHECK(is_perfect(g, m));
        CHECK(m.size() == 2);
    }
}

TEST_CASE("numerator of 1/2") {
    TriPoly p = numerator_dp(build_snake(RationalIndex(1, 2)));
    TriPoly expected = TriPoly::monomial({2, 0, 0}) + TriPoly::monomial({1, 1, 0}, 2) +
                       TriPoly::monomial({0, 2, 0}) + TriPoly::monomial({1, 0, 1});
    CHECK(p == expected);
}

TEST_CASE("transfer recursion equals plain enumeration") {
    for (int b = 1; b <= 9; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1 || a + b > 10) continue;
            SnakeGraph g = build_snake(RationalIndex(a, b));
            CHECK(numerator_dp(g) == numerator_from_enumeration(g));
        }
    }
}

TEST_CASE("matching monomials have even exponents and fixed degree") {
    SnakeGraph g = build_snake(RationalIndex(2, 3));
    for (const Matching& m : enumerate_matchings(g)) {
        ExpTriple e = matching_monomial(g, m);
        CHECK(e.ex % 2 == 0);
        CHECK(e.ey % 2 == 0);
        CHECK(e.ez % 2 == 0);
        CHECK(e.ex + e.ey + e.ez == g.tile_count + 1);
    }
}

TEST_CASE("imperfect matchings are rejected") {
    SnakeGraph g = build_snake(RationalIndex(1, 1));
    CHECK_FALSE(is_perfect(g, {}));
    CHECK_THROWS_AS(matching_monomial(g, {}), NotPerfect);
    TileEdges t = g.tile_edges(1);
    CHECK_FALSE(is_perfect(g, {t.left, t.bottom}));  // shares a corner
    CHECK(is_perfect(g, {t.left, t.right}));
    Matching foreign{Edge::between({9, 9}, {9, 10})};
    CHECK_THROWS_AS(is_perfect(g, foreign), UnknownEdge);
}

TEST_CASE("enumeration stops at the cap") {
    SnakeGraph g = build_snake(RationalIndex(2, 5));  // 194 matchings
    try {
        enumerate_matchings(g, 3);
        FAIL("cap was not enforced");
    } catch (const CapExceeded& e) {
        CHECK(e.count == 3);
    }
    CHECK(enumerate_matchings(g, 194).size() == 194);
}

TEST_CASE("numerator is homogeneous with positive coefficients") {
    for (int b = 1; b <= 13; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1 || a + b > 14) continue;
            TriPoly p = numerator_dp(build_snake(RationalIndex(a, b)));
            for (const auto& [e, c] : p.terms()) {
                CHECK(e.ex + e.ey + e.ez == a + b - 1);
                CHECK(e.ex >= 0);
                CHECK(e.ey >= 0);
                CHECK(e.ez >= 0);
                CHECK(c > 0);
            }
        }
    }
}

TEST_CASE("known coefficient of the 4/7 numerator") {
    TriPoly p = numerator_dp(build_snake(RationalIndex(4, 7)));
    CHECK(p.coeff({4, 2, 4}) == 71);
    CHECK(poly_eval_ints(p, 1, 1, 1) == 6466);
}

TEST_CASE("numerator json carries rho, degree and ordered terms") {
    RationalIndex rho(4, 7);
    TriPoly p = numerator_dp(build_snake(rho));
    Json j = numerator_to_json(rho, p);
    CHECK(j["rho"] == "4/7");
    CHECK(j["deg"] == 10);
    CHECK(j["terms"].size() == p.term_count());
    std::string flat = j.dump();
    CHECK(flat.find("\"i\":4,\"j\":2,\"k\":4,\"c\":\"71\"") != std::string::npos);
}
