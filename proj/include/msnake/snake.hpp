#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "msnake/errors.hpp"
#include "msnake/words.hpp"

namespace msnake {

using Json = nlohmann::ordered_json;

struct GridPoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class EdgeWeight { X, Y, Z };

char weight_char(EdgeWeight w);

// Unit grid edge with canonically ordered endpoints (u < v), so an edge set
// is a plain set of keys.
struct Edge {
    GridPoint u, v;

    static Edge between(GridPoint p, GridPoint q) { return p < q ? Edge{p, q} : Edge{q, p}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Dir { Right, Up };

// The four edges of one tile.
struct TileEdges {
    Edge bottom, top, left, right;
};

// Two consecutive tiles forming one letter of the interior word: a Flat
// block is the horizontal (even, odd) pair from an alpha, a Column block the
// vertical (mid, top) pair from a beta.  A column's base is the odd tile
// directly below its mid, i.e. the previous block's odd tile.
struct Block {
    enum class Kind { Flat, Column };
    Kind kind;
    int even_tile;

    int odd_tile() const { return even_tile + 1; }
};

// Weighted Markov snake graph: T = 2(a+b)-3 unit tiles embedded from the
// origin, directions doubled from the interior of the Christoffel word.
// Odd-indexed (1-based) tiles are labeled: their verticals weigh x and their
// horizontals y; every other edge weighs z.
struct SnakeGraph {
    RationalIndex rho;
    int tile_count = 0;
    std::vector<Dir> dirs;            // dirs[t-1]: direction from tile t to t+1
    std::vector<GridPoint> origins;   // origins[t-1]: bottom-left corner of tile t
    std::map<Edge, EdgeWeight> edges;
    std::vector<Block> blocks;        // tiles 2..T in pairs, (T-1)/2 blocks

    bool labeled(int t) const { return t % 2 == 1; }
    GridPoint tile_origin(int t) const;
    TileEdges tile_edges(int t) const;
    EdgeWeight weight(const Edge& e) const;  // throws UnknownEdge
    std::vector<GridPoint> vertices() const;
};

SnakeGraph build_snake(RationalIndex rho);

// {"T":int,"dirs":"RRUU..","edges":[{"from":[x,y],"to":[x,y],"w":"x|y|z"}]}
Json snake_to_json(const SnakeGraph& g);

}  // namespace msnake
