#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "msnake/matchings.hpp"
#include "msnake/newton.hpp"
#include "msnake/snake.hpp"

namespace msnake {

// One rewrite of the working matching.  Every op carries a declared lattice
// shift; appliers recompute the monomial from scratch afterwards and insist
// the two agree.
struct RewriteOp {
    enum class Kind { IPM, Swap, FirstBoxSwap, Twist, PullBack, Add, InitialStep, Extend, Step };

    Kind kind;
    int arg = 0;  // Swap: region index; InitialStep/Step: staircase height i

    LatticePoint shift() const;  // declared (di, dj)
    std::string name() const;    // "Swap(2)", "InitialStep(1)", "Twist", ...
};

// Working state of the constructive algorithm on one snake.  The frontier is
// the first unprocessed tile; everything before it has been rewritten and
// contains no y-weight edge once descents/traversals begin.
struct ConstructionState {
    SnakeGraph graph;
    Matching matching;
    int frontier = 1;          // tile_count + 1 once every tile is consumed
    LatticePoint point{0, 0};
    std::size_t word_pos = 0;  // consumed prefix of the modified word
    std::string modified;
    std::vector<int> runs;     // run profile, used as a cross-check only
    std::vector<RewriteOp> ops;
    std::vector<bool> region_swapped;  // one flag per column, left to right
    int descents_done = 0;
};

// The IPM: both horizontals of every labeled tile; point (0, a+b-1).
ConstructionState initial_matching(SnakeGraph g);

// Swaps column `region` (1-based, left to right): the two middle horizontals
// of the 1x3 column come out, the mid tile's verticals go in.  Shift (0,-1).
// Throws NoSuchRegion / AlreadySwapped.
void apply_swap(ConstructionState& s, int region);

// One descent step (Add / InitialStep(i) / Extend / Step(i)), selected by
// the shape at the frontier: consume a flat block, then while a column block
// follows climb it and consume the flat block after it.  Requires all
// columns swapped.  Throws DescentExhausted at diagonal a.
void apply_descent(ConstructionState& s);

// One traversal step along the current diagonal, shift (+1,-1):
// FirstBoxSwap when nothing is processed yet, otherwise Twist on the next
// labeled tile with an intact y-pair, or PullBack over a swapped column.
// Throws EndOfDiagonal when the shift would exit the polygon.
void apply_traversal(ConstructionState& s);

// Full driver: IPM, min(a+b-1-c, a-1) swaps left to right, b-c descents when
// c < b, then traversals until the target is reached (c = i+j).  Throws
// PointOutsidePolygon for targets outside the Newton polygon.
ConstructionState match_for_point(RationalIndex rho, LatticePoint target);

// {"point":[i,j],"monomial":{"ex":..,"ey":..,"ez":..},"edges":[..],"ops":[..]}
Json match_to_json(const ConstructionState& s);

}  // namespace msnake
