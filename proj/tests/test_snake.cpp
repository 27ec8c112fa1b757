#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "msnake/snake.hpp"

using namespace msnake;

TEST_CASE("single-tile snake of 1/1") {
    SnakeGraph g = build_snake(RationalIndex(1, 1));
    CHECK(g.tile_count == 1);
    CHECK(g.dirs.empty());
    CHECK(g.blocks.empty());
    REQUIRE(g.edges.size() == 4);
    TileEdges t = g.tile_edges(1);
    CHECK(g.weight(t.left) == EdgeWeight::X);
    CHECK(g.weight(t.right) == EdgeWeight::X);
    CHECK(g.weight(t.bottom) == EdgeWeight::Y);
    CHECK(g.weight(t.top) == EdgeWeight::Y);
}

TEST_CASE("3/5 snake shape") {
    SnakeGraph g = build_snake(RationalIndex(3, 5));
    CHECK(g.tile_count == 13);
    std::string dirs;
    for (Dir d : g.dirs) dirs += d == Dir::Right ? 'R' : 'U';
    CHECK(dirs == "RRUURRRRUURR");
}

TEST_CASE("4/7 snake tile origins") {
    SnakeGraph g = build_snake(RationalIndex(4, 7));
    REQUIRE(g.tile_count == 19);
    const std::vector<GridPoint> expected = {
        {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2},  {3, 2},  {4, 2},  {5, 2},  {6, 2}, {6, 3},
        {6, 4}, {7, 4}, {8, 4}, {9, 4}, {10, 4}, {10, 5}, {10, 6}, {11, 6}, {12, 6}};
    for (int t = 1; t <= 19; ++t) CHECK(g.tile_origin(t) == expected[t - 1]);
}

TEST_CASE("4/7 block decomposition") {
    SnakeGraph g = build_snake(RationalIndex(4, 7));
    using K = Block::Kind;
    const std::vector<std::pair<int, K>> expected = {
        {2, K::Flat},  {4, K::Column},  {6, K::Flat},  {8, K::Flat},   {10, K::Column},
        {12, K::Flat}, {14, K::Flat}, {16, K::Column}, {18, K::Flat}};
    REQUIRE(g.blocks.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(g.blocks[k].even_tile == expected[k].first);
        CHECK(g.blocks[k].kind == expected[k].second);
        CHECK(g.blocks[k].odd_tile() == expected[k].first + 1);
    }
}

TEST_CASE("labeled tiles carry x verticals and y horizontals") {
    for (auto [a, b] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 6}}) {
        SnakeGraph g = build_snake(RationalIndex(a, b));
        for (int t = 1; t <= g.tile_count; ++t) {
            TileEdges e = g.tile_edges(t);
            if (g.labeled(t)) {
                CHECK(g.weight(e.left) == EdgeWeight::X);
                CHECK(g.weight(e.right) == EdgeWeight::X);
                CHECK(g.weight(e.bottom) == EdgeWeight::Y);
                CHECK(g.weight(e.top) == EdgeWeight::Y);
            }
        }
    }
}

TEST_CASE("structural counts across small indices") {
    for (int b = 1; b <= 30; ++b) {
        for (int a = 1; a <= b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            SnakeGraph g = build_snake(RationalIndex(a, b));
            int T = 2 * (a + b) - 3;
            REQUIRE(g.tile_count == T);
            CHECK(g.dirs.size() == static_cast<std::size_t>(T - 1));
            CHECK(g.origins.size() == static_cast<std::size_t>(T));
            CHECK(g.edges.size() == static_cast<std::size_t>(3 * T + 1));
            CHECK(g.vertices().size() == static_cast<std::size_t>(2 * T + 2));
            CHECK(g.blocks.size() == static_cast<std::size_t>((T - 1) / 2));

            // distinct tiles, first and last direction horizontal
            std::set<GridPoint> seen(g.origins.begin(), g.origins.end());
            CHECK(seen.size() == g.origins.size());
            if (!g.dirs.empty()) {
                CHECK(g.dirs.front() == Dir::Right);
                CHECK(g.dirs.back() == Dir::Right);
            }

            // up-runs have length exactly two, one per beta
            int up_runs = 0;
            for (std::size_t k = 0; k < g.dirs.size();) {
                if (g.dirs[k] == Dir::Up) {
                    REQUIRE(k + 1 < g.dirs.size());
                    CHECK(g.dirs[k + 1] == Dir::Up);
                    if (k + 2 < g.dirs.size()) CHECK(g.dirs[k + 2] == Dir::Right);
                    ++up_runs;
                    k += 2;
                } else {
                    ++k;
                }
            }
            CHECK(up_runs == a - 1);

            // every vertex has degree 2, 3 or 4
            std::map<GridPoint, int> degree;
            for (const auto& [e, w] : g.edges) {
                ++degree[e.u];
                ++degree[e.v];
            }
            CHECK(degree.size() == g.vertices().size());
            for (const auto& [v, d] : degree) {
                CHECK(d >= 2);
                CHECK(d <= 4);
            }
        }
    }
}

TEST_CASE("weight counts split labeled and filler edges") {
    SnakeGraph g = build_snake(RationalIndex(4, 7));
    int nx = 0, ny = 0, nz = 0;
    for (const auto& [e, w] : g.edges) {
        if (w == EdgeWeight::X) ++nx;
        if (w == EdgeWeight::Y) ++ny;
        if (w == EdgeWeight::Z) ++nz;
    }
    CHECK(nx + ny + nz == 58);
    CHECK(ny == 2 * 10);  // both horizontals of each of the ten labeled tiles
}

TEST_CASE("errors for foreign tiles and edges") {
    SnakeGraph g = build_snake(RationalIndex(1, 2));
    CHECK_THROWS_AS(g.tile_origin(0), IndexOutOfRange);
    CHECK_THROWS_AS(g.tile_origin(4), IndexOutOfRange);
    CHECK_THROWS_AS(g.weight(Edge::between({50, 50}, {50, 51})), UnknownEdge);
}

TEST_CASE("snake json lists every edge with its weight letter") {
    SnakeGraph g = build_snake(RationalIndex(1, 2));
    Json j = snake_to_json(g);
    CHECK(j["T"] == 3);
    CHECK(j["dirs"] == "RR");
    REQUIRE(j["edges"].size() == 10);
    for (const auto& e : j["edges"]) {
        GridPoint u{e["from"][0], e["from"][1]};
        GridPoint v{e["to"][0], e["to"][1]};
        std::string w = e["w"];
        REQUIRE(w.size() == 1);
        CHECK(weight_char(g.weight(Edge::between(u, v))) == w[0]);
    }
}
