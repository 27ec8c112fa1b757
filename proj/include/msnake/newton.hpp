#pragma once

#include <array>
#include <compare>
#include <vector>

#include <json.hpp>

#include "msnake/errors.hpp"
#include "msnake/words.hpp"

namespace msnake {

using Json = nlohmann::ordered_json;

// Exponent lattice point (i,j) of the numerator polynomial.
struct LatticePoint {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class DiagonalKind { Full, Partial };

struct DiagonalInfo {
    int c;
    DiagonalKind kind;
    LatticePoint leftmost;
};

// The Newton polygon is {i,j >= 0, b*i + a*j >= a*b, i+j <= a+b-1};
// everything below is integer arithmetic on that description.

bool contains(RationalIndex rho, LatticePoint p);

// Corner points (a,0), (a+b-1,0), (0,a+b-1), (0,b).
std::array<LatticePoint, 4> newton_vertices(RationalIndex rho);

// All lattice points, scanned over 0 <= i,j <= a+b-1, in lexicographic order.
std::vector<LatticePoint> lattice_points(RationalIndex rho);

// Kind (Full iff b <= c) and the minimal-i point found by scanning.
// Throws NoSuchDiagonal outside a <= c <= a+b-1.
DiagonalInfo classify_diagonal(RationalIndex rho, int c);

// Left-most point of diagonal c derived from the run profile: start at (0,b)
// and compose the declared shifts of the b-c descent operations.  Full
// diagonals (c >= b) return (0,c).  Cross-checked against the scan.
LatticePoint leftmost_by_formula(RationalIndex rho, int c);

// Membership in the critical triangle {i < a, j < b, b*i + a*j > a*b}.
bool critical_triangle(RationalIndex rho, LatticePoint p);

// {"rho":..,"vertices":[..],"lattice_points":[..],"diagonals":[{"c","kind","leftmost"}]}
Json newton_to_json(RationalIndex rho);

}  // namespace msnake
