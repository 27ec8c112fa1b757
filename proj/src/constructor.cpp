#include "msnake/constructor.hpp"

#include <algorithm>

namespace msnake {

LatticePoint RewriteOp::shift() const {
    switch (kind) {
        case Kind::IPM: return {0, 0};
        case Kind::Swap: return {0, -1};
        case Kind::FirstBoxSwap:
        case Kind::Twist:
        case Kind::PullBack: return {1, -1};
        case Kind::Add: return {1, -2};
        case Kind::InitialStep: return {arg + 1, -(arg + 2)};
        case Kind::Extend: return {0, -1};
        case Kind::Step: return {arg, -(arg + 1)};
    }
    throw std::logic_error("unreachable op kind");
}

std::string RewriteOp::name() const {
    switch (kind) {
        case Kind::IPM: return "IPM";
        case Kind::Swap: return "Swap(" + std::to_string(arg) + ")";
        case Kind::FirstBoxSwap: return "FirstBoxSwap";
        case Kind::Twist: return "Twist";
        case Kind::PullBack: return "PullBack";
        case Kind::Add: return "Add";
        case Kind::InitialStep: return "InitialStep(" + std::to_string(arg) + ")";
        case Kind::Extend: return "Extend";
        case Kind::Step: return "Step(" + std::to_string(arg) + ")";
    }
    throw std::logic_error("unreachable op kind");
}

namespace {

void remove_edge(ConstructionState& s, const Edge& e) {
    if (s.matching.erase(e) != 1)
        throw std::logic_error("rewrite tried to remove an edge that is not in the matching");
}

void add_edge(ConstructionState& s, const Edge& e) {
    s.graph.weight(e);  // must belong to the snake
    if (!s.matching.insert(e).second)
        throw std::logic_error("rewrite tried to add an edge twice");
}

// Lattice point of the current matching, via the halved monomial.
LatticePoint lattice_point_of(const ConstructionState& s, ExpTriple mono) {
    if (mono.ex % 2 != 0 || mono.ey % 2 != 0 || mono.ez % 2 != 0)
        throw std::logic_error("matching monomial has an odd exponent");
    int i = mono.ex / 2, j = mono.ey / 2, k = mono.ez / 2;
    if (i + j + k != s.graph.rho.a + s.graph.rho.b - 1)
        throw std::logic_error("matching monomial has the wrong total degree");
    return {i, j};
}

// Validates perfectness and the declared shift, then commits the op.
void finish_op(ConstructionState& s, RewriteOp op) {
    ExpTriple mono = matching_monomial(s.graph, s.matching);  // throws if not perfect
    LatticePoint now = lattice_point_of(s, mono);
    LatticePoint declared{s.point.i + op.shift().i, s.point.j + op.shift().j};
    if (now != declared)
        throw std::logic_error("monomial moved to (" + std::to_string(now.i) + "," +
                               std::to_string(now.j) + ") but " + op.name() + " declares (" +
                               std::to_string(declared.i) + "," + std::to_string(declared.j) +
                               ")");
    s.point = now;
    s.ops.push_back(op);
}

// Indices into graph.blocks of the column blocks, left to right; region k of
// the swap operation is column_block_indices[k-1].
std::vector<std::size_t> column_block_indices(const SnakeGraph& g) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < g.blocks.size(); ++k)
        if (g.blocks[k].kind == Block::Kind::Column) cols.push_back(k);
    return cols;
}

std::size_t block_index_at(const ConstructionState& s, int even_tile) {
    std::size_t bi = static_cast<std::size_t>(even_tile - 2) / 2;
    if (bi >= s.graph.blocks.size() || s.graph.blocks[bi].even_tile != even_tile)
        throw std::logic_error("no block starts at tile " + std::to_string(even_tile));
    return bi;
}

}  // namespace

ConstructionState initial_matching(SnakeGraph g) {
    ConstructionState s{.graph = std::move(g)};
    for (int t = 1; t <= s.graph.tile_count; t += 2) {
        TileEdges te = s.graph.tile_edges(t);
        s.matching.insert(te.bottom);
        s.matching.insert(te.top);
    }
    s.modified = modify_word(christoffel_word(s.graph.rho));
    s.runs = run_profile(s.modified);
    s.region_swapped.assign(static_cast<std::size_t>(s.graph.rho.a) - 1, false);
    ExpTriple mono = matching_monomial(s.graph, s.matching);
    s.point = lattice_point_of(s, mono);
    if (s.point != LatticePoint{0, s.graph.rho.a + s.graph.rho.b - 1})
        throw std::logic_error("IPM monomial is not y^(2(a+b-1))");
    s.ops.push_back({RewriteOp::Kind::IPM});
    return s;
}

void apply_swap(ConstructionState& s, int region) {
    std::vector<std::size_t> cols = column_block_indices(s.graph);
    if (region < 1 || static_cast<std::size_t>(region) > cols.size())
        throw NoSuchRegion("no column region " + std::to_string(region) + " in " +
                           s.graph.rho.str() + " (" + std::to_string(cols.size()) +
                           " regions)");
    if (s.region_swapped[static_cast<std::size_t>(region) - 1])
        throw AlreadySwapped("column region " + std::to_string(region) + " already swapped");
    int mid = s.graph.blocks[cols[static_cast<std::size_t>(region) - 1]].even_tile;
    if (s.frontier > mid - 1)
        throw std::logic_error("swap of a column already consumed by the frontier");
    TileEdges me = s.graph.tile_edges(mid);
    remove_edge(s, me.bottom);  // top horizontal of the base tile
    remove_edge(s, me.top);     // bottom horizontal of the top tile
    add_edge(s, me.left);
    add_edge(s, me.right);
    s.region_swapped[static_cast<std::size_t>(region) - 1] = true;
    finish_op(s, {RewriteOp::Kind::Swap, region});
}

void apply_descent(ConstructionState& s) {
    const RationalIndex rho = s.graph.rho;
    int c = s.point.i + s.point.j;
    if (c <= rho.a || s.descents_done >= rho.b - rho.a)
        throw DescentExhausted("already at diagonal " + std::to_string(c) +
                               "; no descent below " + std::to_string(rho.a));
    if (c > rho.b) throw std::logic_error("descent attempted above diagonal b");
    if (!std::all_of(s.region_swapped.begin(), s.region_swapped.end(), [](bool x) { return x; }))
        throw std::logic_error("descent requires every column to be swapped");

    const bool first = s.frontier == 1;

    // Consume one flat block, then while a column follows climb it together
    // with the flat block behind it.  The staircase height i selects the op.
    std::vector<int> flat_evens;
    std::vector<int> mids;
    std::size_t bi = first ? 0 : block_index_at(s, s.frontier);
    if (s.graph.blocks[bi].kind != Block::Kind::Flat)
        throw std::logic_error("descent must start at a flat block");
    flat_evens.push_back(s.graph.blocks[bi].even_tile);
    while (bi + 1 < s.graph.blocks.size() &&
           s.graph.blocks[bi + 1].kind == Block::Kind::Column) {
        mids.push_back(s.graph.blocks[bi + 1].even_tile);
        if (bi + 2 >= s.graph.blocks.size() ||
            s.graph.blocks[bi + 2].kind != Block::Kind::Flat)
            throw std::logic_error("column block without a following flat block");
        flat_evens.push_back(s.graph.blocks[bi + 2].even_tile);
        bi += 2;
    }
    const int i = static_cast<int>(mids.size());

    // Removals: the left boundary (tile 1's y-pair on the first descent, the
    // boundary x-vertical later), each climbed column's remaining base
    // bottom / z-verticals / top-tile top, and the final flat odd's y-pair.
    if (first) {
        TileEdges t1 = s.graph.tile_edges(1);
        remove_edge(s, t1.bottom);
        remove_edge(s, t1.top);
    } else {
        remove_edge(s, s.graph.tile_edges(s.frontier).left);
    }
    for (int mid : mids) {
        remove_edge(s, s.graph.tile_edges(mid - 1).bottom);
        TileEdges me = s.graph.tile_edges(mid);
        remove_edge(s, me.left);
        remove_edge(s, me.right);
        remove_edge(s, s.graph.tile_edges(mid + 1).top);
    }
    TileEdges last_odd = s.graph.tile_edges(flat_evens.back() + 1);
    remove_edge(s, last_odd.bottom);
    remove_edge(s, last_odd.top);

    // Additions: tile 1's left x-vertical on the first descent; a
    // z-horizontal pair on every consumed flat even tile; an x-vertical on
    // the right of every consumed flat odd tile; an x-vertical on the left
    // of every climbed column's top tile.
    if (first) add_edge(s, s.graph.tile_edges(1).left);
    for (int even : flat_evens) {
        TileEdges ee = s.graph.tile_edges(even);
        add_edge(s, ee.bottom);
        add_edge(s, ee.top);
    }
    for (std::size_t k = 0; k + 1 < flat_evens.size(); ++k)
        add_edge(s, s.graph.tile_edges(flat_evens[k] + 1).right);
    for (int mid : mids) add_edge(s, s.graph.tile_edges(mid + 1).left);
    add_edge(s, last_odd.right);

    s.frontier = flat_evens.back() + 2;
    ++s.descents_done;

    // The word cross-check: this descent consumed one A and its B-run, and
    // the staircase height must equal the run-profile entry.
    if (s.word_pos >= s.modified.size() || s.modified[s.word_pos] != 'A')
        throw std::logic_error("descent does not line up with an A in the modified word");
    ++s.word_pos;
    while (s.word_pos < s.modified.size() && s.modified[s.word_pos] == 'B') ++s.word_pos;
    if (i != s.runs[static_cast<std::size_t>(s.descents_done) - 1])
        throw std::logic_error("staircase height disagrees with the run profile");

    RewriteOp op;
    if (first)
        op = i == 0 ? RewriteOp{RewriteOp::Kind::Add} : RewriteOp{RewriteOp::Kind::InitialStep, i};
    else
        op = i == 0 ? RewriteOp{RewriteOp::Kind::Extend} : RewriteOp{RewriteOp::Kind::Step, i};
    finish_op(s, op);
}

void apply_traversal(ConstructionState& s) {
    LatticePoint next{s.point.i + 1, s.point.j - 1};
    if (!contains(s.graph.rho, next))
        throw EndOfDiagonal("(" + std::to_string(next.i) + "," + std::to_string(next.j) +
                            ") is outside the polygon of " + s.graph.rho.str());

    if (s.frontier == 1) {
        TileEdges t1 = s.graph.tile_edges(1);
        remove_edge(s, t1.bottom);
        remove_edge(s, t1.top);
        add_edge(s, t1.left);
        add_edge(s, t1.right);
        s.frontier = 2;
        finish_op(s, {RewriteOp::Kind::FirstBoxSwap});
        return;
    }

    if (s.frontier > s.graph.tile_count)
        throw std::logic_error("traversal with no tiles left to process");

    std::size_t bi = block_index_at(s, s.frontier);
    const Block& block = s.graph.blocks[bi];

    if (block.kind == Block::Kind::Column) {
        // Unswapped column whose base was twisted already: twist its top.
        TileEdges top = s.graph.tile_edges(block.odd_tile());
        remove_edge(s, top.bottom);
        remove_edge(s, top.top);
        add_edge(s, top.left);
        add_edge(s, top.right);
        s.frontier += 2;
        finish_op(s, {RewriteOp::Kind::Twist});
        return;
    }

    TileEdges odd = s.graph.tile_edges(block.odd_tile());
    if (s.matching.count(odd.top) != 0) {
        // Intact y-pair ahead: twist it.
        remove_edge(s, odd.bottom);
        remove_edge(s, odd.top);
        add_edge(s, odd.left);
        add_edge(s, odd.right);
        s.frontier += 2;
        finish_op(s, {RewriteOp::Kind::Twist});
        return;
    }

    // The flat odd tile is the base of a swapped column: pull back across
    // the whole [flat, column] stretch.
    if (bi + 1 >= s.graph.blocks.size() || s.graph.blocks[bi + 1].kind != Block::Kind::Column)
        throw std::logic_error("half-swapped tile without a column ahead");
    int mid = s.graph.blocks[bi + 1].even_tile;
    TileEdges even = s.graph.tile_edges(block.even_tile);
    TileEdges me = s.graph.tile_edges(mid);
    TileEdges top = s.graph.tile_edges(mid + 1);
    remove_edge(s, even.left);  // boundary x-vertical
    remove_edge(s, odd.bottom);
    remove_edge(s, me.left);
    remove_edge(s, me.right);
    remove_edge(s, top.top);
    add_edge(s, even.bottom);
    add_edge(s, even.top);
    add_edge(s, odd.right);
    add_edge(s, top.left);
    add_edge(s, top.right);
    s.frontier = mid + 2;
    finish_op(s, {RewriteOp::Kind::PullBack});
}

ConstructionState match_for_point(RationalIndex rho, LatticePoint target) {
    if (!contains(rho, target))
        throw PointOutsidePolygon("(" + std::to_string(target.i) + "," +
                                  std::to_string(target.j) + ") is outside the polygon of " +
                                  rho.str());
    ConstructionState s = initial_matching(build_snake(rho));
    int c = target.i + target.j;
    int swaps = std::min(rho.a + rho.b - 1 - c, rho.a - 1);
    for (int k = 1; k <= swaps; ++k) apply_swap(s, k);
    if (c < rho.b)
        for (int d = 0; d < rho.b - c; ++d) apply_descent(s);
    LatticePoint leftmost = classify_diagonal(rho, c).leftmost;
    if (s.point != leftmost)
        throw std::logic_error("driver is not at the left-most point of diagonal " +
                               std::to_string(c));
    while (s.point.i < target.i) apply_traversal(s);
    return s;
}

Json match_to_json(const ConstructionState& s) {
    ExpTriple mono = matching_monomial(s.graph, s.matching);
    Json edges = Json::array();
    for (const Edge& e : s.matching)
        edges.push_back({{"from", {e.u.x, e.u.y}},
                         {"to", {e.v.x, e.v.y}},
                         {"w", std::string(1, weight_char(s.graph.weight(e)))}});
    Json ops = Json::array();
    for (const RewriteOp& op : s.ops) ops.push_back(op.name());
    return Json{{"point", {s.point.i, s.point.j}},
                {"monomial", {{"ex", mono.ex}, {"ey", mono.ey}, {"ez", mono.ez}}},
                {"edges", std::move(edges)},
                {"ops", std::move(ops)}};
}

}  // namespace msnake
