#pragma once

#include <compare>
#include <string>
#include <vector>

#include "msnake/errors.hpp"

namespace msnake {

// Coprime rational index rho = a/b with 1 <= a <= b, so rho lies in (0,1].
// 0/1 is rejected: no snake graph exists for it.
struct RationalIndex {
    int a;
    int b;

    RationalIndex(int a_, int b_);

    friend auto operator<=>(const RationalIndex&, const RationalIndex&) = default;

    std::string str() const { return std::to_string(a) + "/" + std::to_string(b); }
};

// Parses "a/b"; throws std::invalid_argument on malformed input.
RationalIndex parse_rational(const std::string& s);

// Lower Christoffel word of the segment (0,0)-(b,a) over letters 'a' (alpha,
// step right) and 'b' (beta, step up): starting at (p,q) = (0,0), emit beta
// exactly when (q+1)*b <= a*p, else alpha.
std::string christoffel_word(RationalIndex rho);

// Left-to-right scan replacing each adjacent "ab" by 'B' and each remaining
// 'a' by 'A'.  Throws MalformedWord when a 'b' is not preceded by an 'a' in
// the scan (never happens for Christoffel input).
std::string modify_word(const std::string& w);

// B-run lengths r_1..r_{#A}: r_k counts the B's immediately following the
// k-th A, with the run that terminates the word reduced by one.  The runs of
// a Christoffel-derived word sum to a-1.
std::vector<int> run_profile(const std::string& modified);

}  // namespace msnake
