#include "msnake/snake.hpp"

#include <set>
#include <stdexcept>

namespace msnake {

char weight_char(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::X: return 'x';
        case EdgeWeight::Y: return 'y';
        case EdgeWeight::Z: return 'z';
    }
    throw std::logic_error("unreachable weight");
}

GridPoint SnakeGraph::tile_origin(int t) const {
    if (t < 1 || t > tile_count)
        throw IndexOutOfRange("tile " + std::to_string(t) + " outside 1.." +
                              std::to_string(tile_count));
    return origins[static_cast<std::size_t>(t) - 1];
}

TileEdges SnakeGraph::tile_edges(int t) const {
    GridPoint o = tile_origin(t);
    GridPoint br{o.x + 1, o.y}, tl{o.x, o.y + 1}, tr{o.x + 1, o.y + 1};
    return TileEdges{Edge::between(o, br), Edge::between(tl, tr), Edge::between(o, tl),
                     Edge::between(br, tr)};
}

EdgeWeight SnakeGraph::weight(const Edge& e) const {
    auto it = edges.find(e);
    if (it == edges.end())
        throw UnknownEdge("edge (" + std::to_string(e.u.x) + "," + std::to_string(e.u.y) +
                          ")-(" + std::to_string(e.v.x) + "," + std::to_string(e.v.y) +
                          ") is not in the snake");
    return it->second;
}

std::vector<GridPoint> SnakeGraph::vertices() const {
    std::set<GridPoint> vs;
    for (const auto& [e, w] : edges) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return {vs.begin(), vs.end()};
}

SnakeGraph build_snake(RationalIndex rho) {
    SnakeGraph g{.rho = rho};
    std::string word = christoffel_word(rho);
    std::string interior = word.substr(1, word.size() - 2);

    g.dirs.reserve(2 * interior.size());
    for (char c : interior) {
        Dir d = c == 'a' ? Dir::Right : Dir::Up;
        g.dirs.push_back(d);
        g.dirs.push_back(d);
    }
    g.tile_count = static_cast<int>(g.dirs.size()) + 1;

    g.origins.reserve(static_cast<std::size_t>(g.tile_count));
    GridPoint pos{0, 0};
    g.origins.push_back(pos);
    for (Dir d : g.dirs) {
        if (d == Dir::Right)
            ++pos.x;
        else
            ++pos.y;
        g.origins.push_back(pos);
    }

    // Weights: everything z first, then each labeled tile claims its four
    // edges.  No two odd tiles are adjacent, so no edge is claimed twice.
    for (int t = 1; t <= g.tile_count; ++t) {
        TileEdges te = g.tile_edges(t);
        for (const Edge& e : {te.bottom, te.top, te.left, te.right}) g.edges.emplace(e, EdgeWeight::Z);
    }
    for (int t = 1; t <= g.tile_count; t += 2) {
        TileEdges te = g.tile_edges(t);
        g.edges[te.bottom] = EdgeWeight::Y;
        g.edges[te.top] = EdgeWeight::Y;
        g.edges[te.left] = EdgeWeight::X;
        g.edges[te.right] = EdgeWeight::X;
    }

    for (int even = 2; even <= g.tile_count - 1; even += 2) {
        Dir into = g.dirs[static_cast<std::size_t>(even) - 2];
        Dir out = g.dirs[static_cast<std::size_t>(even) - 1];
        if (into != out) throw std::logic_error("letter doubling broken at tile " + std::to_string(even));
        g.blocks.push_back({into == Dir::Up ? Block::Kind::Column : Block::Kind::Flat, even});
    }

    return g;
}

Json snake_to_json(const SnakeGraph& g) {
    std::string dirs;
    dirs.reserve(g.dirs.size());
    for (Dir d : g.dirs) dirs.push_back(d == Dir::Right ? 'R' : 'U');
    Json edges = Json::array();
    for (const auto& [e, w] : g.edges)
        edges.push_back({{"from", {e.u.x, e.u.y}},
                         {"to", {e.v.x, e.v.y}},
                         {"w", std::string(1, weight_char(w))}});
    return Json{{"T", g.tile_count}, {"dirs", dirs}, {"edges", std::move(edges)}};
}

}  // namespace msnake
