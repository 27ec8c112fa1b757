#include <doctest.h>

#include <numeric>
#include <set>

#include "msnake/newton.hpp"

using namespace msnake;

TEST_CASE("polygon vertices") {
    auto v = newton_vertices(RationalIndex(4, 7));
    CHECK(v[0] == LatticePoint{4, 0});
    CHECK(v[1] == LatticePoint{10, 0});
    CHECK(v[2] == LatticePoint{0, 10});
    CHECK(v[3] == LatticePoint{0, 7});
}

TEST_CASE("membership") {
    RationalIndex rho(4, 7);
    CHECK(contains(rho, {4, 0}));
    CHECK(contains(rho, {0, 7}));
    CHECK(contains(rho, {4, 2}));
    CHECK_FALSE(contains(rho, {0, 6}));
    CHECK_FALSE(contains(rho, {1, 4}));
    CHECK_FALSE(contains(rho, {-1, 8}));
    CHECK_FALSE(contains(rho, {11, 0}));
}

TEST_CASE("lattice points of tiny polygons") {
    CHECK(lattice_points(RationalIndex(1, 1)) ==
          std::vector<LatticePoint>{{0, 1}, {1, 0}});
    CHECK(lattice_points(RationalIndex(1, 2)) ==
          std::vector<LatticePoint>{{0, 2}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("every vertex is a lattice point and membership matches the scan") {
    for (int b = 1; b <= 20; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            RationalIndex rho(a, b);
            std::vector<LatticePoint> pts = lattice_points(rho);
            std::set<LatticePoint> set(pts.begin(), pts.end());
            CHECK(set.size() == pts.size());
            for (LatticePoint v : newton_vertices(rho)) CHECK(set.count(v) == 1);
            for (const LatticePoint& p : pts) {
                CHECK(p.i + p.j >= a);
                CHECK(p.i + p.j <= a + b - 1);
            }
        }
    }
}

TEST_CASE("diagonal classification") {
    RationalIndex rho(4, 7);
    CHECK_THROWS_AS(classify_diagonal(rho, 3), NoSuchDiagonal);
    CHECK_THROWS_AS(classify_diagonal(rho, 11), NoSuchDiagonal);
    CHECK(classify_diagonal(rho, 4).kind == DiagonalKind::Partial);
    CHECK(classify_diagonal(rho, 6).kind == DiagonalKind::Partial);
    CHECK(classify_diagonal(rho, 7).kind == DiagonalKind::Full);
    CHECK(classify_diagonal(rho, 10).kind == DiagonalKind::Full);
    CHECK(classify_diagonal(rho, 7).leftmost == LatticePoint{0, 7});
    CHECK(classify_diagonal(rho, 10).leftmost == LatticePoint{0, 10});
}

TEST_CASE("left-most points of partial diagonals") {
    CHECK(leftmost_by_formula(RationalIndex(3, 5), 4) == LatticePoint{2, 2});
    CHECK(leftmost_by_formula(RationalIndex(4, 7), 6) == LatticePoint{2, 4});
    CHECK(leftmost_by_formula(RationalIndex(4, 7), 5) == LatticePoint{3, 2});
    CHECK(leftmost_by_formula(RationalIndex(4, 7), 4) == LatticePoint{4, 0});
}

TEST_CASE("shift composition agrees with the scan everywhere") {
    for (int b = 1; b <= 30; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1 || a + b > 60) continue;
            RationalIndex rho(a, b);
            for (int c = a; c <= a + b - 1; ++c)
                CHECK(leftmost_by_formula(rho, c) == classify_diagonal(rho, c).leftmost);
        }
    }
}

TEST_CASE("critical triangle") {
    RationalIndex rho(4, 7);
    CHECK(critical_triangle(rho, {2, 4}));
    CHECK_FALSE(critical_triangle(rho, {4, 0}));   // i is not below a
    CHECK_FALSE(critical_triangle(rho, {0, 7}));   // j is not below b
    CHECK_FALSE(critical_triangle(rho, {2, 2}));   // on the wrong side of the segment
    int count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 7; ++j)
            if (critical_triangle(rho, {i, j})) ++count;
    CHECK(count > 0);

    RationalIndex unit(1, 1);
    for (int i = 0; i < 1; ++i)
        for (int j = 0; j < 1; ++j) CHECK_FALSE(critical_triangle(unit, {i, j}));
}

TEST_CASE("critical triangle points are polygon points off the boundary segment") {
    for (int b = 1; b <= 12; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            RationalIndex rho(a, b);
            for (int i = -1; i <= a; ++i)
                for (int j = -1; j <= b; ++j) {
                    bool in = critical_triangle(rho, {i, j});
                    bool expected = i >= 0 && j >= 0 && i < a && j < b &&
                                    static_cast<long>(b) * i + static_cast<long>(a) * j > a * b;
                    CHECK(in == expected);
                    if (in) CHECK(contains(rho, {i, j}));
                }
        }
    }
}

TEST_CASE("newton json") {
    Json j = newton_to_json(RationalIndex(4, 7));
    CHECK(j["rho"] == "4/7");
    CHECK(j["vertices"].size() == 4);
    CHECK(j["vertices"][0][0] == 4);
    CHECK(j["lattice_points"].size() == lattice_points(RationalIndex(4, 7)).size());
    bool saw_partial = false, saw_full = false;
    for (const auto& d : j["diagonals"]) {
        if (d["kind"] == "partial") saw_partial = true;
        if (d["kind"] == "full") saw_full = true;
    }
    CHECK(saw_partial);
    CHECK(saw_full);
}
