#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <json.hpp>

#include "msnake/poly.hpp"
#include "msnake/snake.hpp"

namespace msnake {

using Matching = std::set<Edge>;

constexpr std::uint64_t kDefaultMatchingCap = 1'000'000;

// True iff every vertex of g is covered exactly once.  Edges outside g raise
// UnknownEdge.
bool is_perfect(const SnakeGraph& g, const Matching& m);

// Product of the edge weights of a perfect matching as an exponent triple
// (coefficient is always 1).  All exponents are even.  Throws NotPerfect.
ExpTriple matching_monomial(const SnakeGraph& g, const Matching& m);

// All perfect matchings by backtracking over the vertices in canonical
// order; deterministic result order.  Throws CapExceeded past cap.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g,
                                          std::uint64_t cap = kDefaultMatchingCap);

// Numerator polynomial P(u,v,w): the sum over all perfect matchings of their
// monomials with exponents halved, computed by a two-state transfer over the
// tiles (no enumeration).  Homogeneous of degree a+b-1, all coefficients
// positive, value at (1,1,1) = number of perfect matchings.
TriPoly numerator_dp(const SnakeGraph& g);

// Same polynomial via enumerate_matchings; the independent cross-check path.
TriPoly numerator_from_enumeration(const SnakeGraph& g,
                                   std::uint64_t cap = kDefaultMatchingCap);

// {"rho":"a/b","deg":a+b-1,"terms":[{"i":..,"j":..,"k":..,"c":"<decimal>"}]}
Json numerator_to_json(RationalIndex rho, const TriPoly& numerator);

}  // namespace msnake
