#pragma once

#include <vector>

#include "msnake/poly.hpp"
#include "msnake/words.hpp"

namespace msnake {

// One Stern-Brocot frame on [0,1]: Farey neighbours lo = la/lb, hi = ha/hb
// with their polynomials and the divisor element (the polynomial that the
// next mediant's Vieta step divides by).  (p_lo, p_div, p_hi) is a solution
// triple of the generalised Markov equation.
struct FareyFrame {
    long la, lb, ha, hb;
    TriPoly p_lo, p_hi, p_div;
    int depth = 0;
};

// Markov polynomial M_rho as an exact Laurent polynomial, by descending the
// Stern-Brocot tree from the seed frame (0/1 -> x, 1/1 -> (x^2+y^2)/z,
// divisor y).  Every Vieta division must be exact; NotDivisible propagating
// out of here means the seed convention is broken.
TriPoly mutation_polynomial(RationalIndex rho);

// Exact check of xyz*(X^2+Y^2+Z^2) == (x^2+y^2+z^2)*X*Y*Z.
bool verify_markov_identity(const TriPoly& X, const TriPoly& Y, const TriPoly& Z);

// Markov number m_rho = numerator at (1,1,1), i.e. the matching count.
mpz_class markov_number(RationalIndex rho);

// The same number by the integer Vieta recurrence (no polynomials, no
// snakes); the independent arithmetic path.
mpz_class markov_number_vieta(RationalIndex rho);

// All frames of the Stern-Brocot tree with depth <= `depth` (the seed frame
// has depth 0), breadth-first.  Each contributes one Farey triple to check.
std::vector<FareyFrame> farey_tree(int depth);

// M_rho rebuilt from a numerator: substitute squared variables and divide by
// the denominator monomial x^(a-1) y^(b-1) z^(a+b-1).
TriPoly laurent_from_numerator(RationalIndex rho, const TriPoly& numerator);

}  // namespace msnake
