#include "msnake/newton.hpp"

#include <string>

namespace msnake {

bool contains(RationalIndex rho, LatticePoint p) {
    long long i = p.i, j = p.j, a = rho.a, b = rho.b;
    return i >= 0 && j >= 0 && b * i + a * j >= a * b && i + j <= a + b - 1;
}

std::array<LatticePoint, 4> newton_vertices(RationalIndex rho) {
    return {LatticePoint{rho.a, 0}, LatticePoint{rho.a + rho.b - 1, 0},
            LatticePoint{0, rho.a + rho.b - 1}, LatticePoint{0, rho.b}};
}

std::vector<LatticePoint> lattice_points(RationalIndex rho) {
    std::vector<LatticePoint> pts;
    int deg = rho.a + rho.b - 1;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= deg; ++j)
            if (contains(rho, {i, j})) pts.push_back({i, j});
    return pts;
}

static void check_diagonal_range(RationalIndex rho, int c) {
    if (c < rho.a || c > rho.a + rho.b - 1)
        throw NoSuchDiagonal("diagonal " + std::to_string(c) + " outside [" +
                             std::to_string(rho.a) + ", " + std::to_string(rho.a + rho.b - 1) +
                             "] for " + rho.str());
}

DiagonalInfo classify_diagonal(RationalIndex rho, int c) {
    check_diagonal_range(rho, c);
    DiagonalInfo info{c, c >= rho.b ? DiagonalKind::Full : DiagonalKind::Partial, {0, 0}};
    for (int i = 0; i <= c; ++i) {
        if (contains(rho, {i, c - i})) {
            info.leftmost = {i, c - i};
            return info;
        }
    }
    throw std::logic_error("diagonal " + std::to_string(c) + " has no polygon point");
}

LatticePoint leftmost_by_formula(RationalIndex rho, int c) {
    check_diagonal_range(rho, c);
    if (c >= rho.b) return {0, c};
    std::vector<int> runs = run_profile(modify_word(christoffel_word(rho)));
    LatticePoint p{0, rho.b};
    int descents = rho.b - c;
    for (int k = 1; k <= descents; ++k) {
        int r = runs[static_cast<std::size_t>(k) - 1];
        if (k == 1)
            p = {p.i + r + 1, p.j - (r + 2)};  // Add / InitialStep(r)
        else
            p = {p.i + r, p.j - (r + 1)};  // Extend / Step(r)
    }
    return p;
}

bool critical_triangle(RationalIndex rho, LatticePoint p) {
    long long i = p.i, j = p.j, a = rho.a, b = rho.b;
    return i >= 0 && j >= 0 && i < a && j < b && b * i + a * j > a * b;
}

Json newton_to_json(RationalIndex rho) {
    Json vertices = Json::array();
    for (const auto& v : newton_vertices(rho)) vertices.push_back({v.i, v.j});
    Json pts = Json::array();
    for (const auto& p : lattice_points(rho)) pts.push_back({p.i, p.j});
    Json diagonals = Json::array();
    for (int c = rho.a; c <= rho.a + rho.b - 1; ++c) {
        DiagonalInfo d = classify_diagonal(rho, c);
        diagonals.push_back({{"c", d.c},
                             {"kind", d.kind == DiagonalKind::Full ? "full" : "partial"},
                             {"leftmost", {d.leftmost.i, d.leftmost.j}}});
    }
    return Json{{"rho", rho.str()},
                {"vertices", std::move(vertices)},
                {"lattice_points", std::move(pts)},
                {"diagonals", std::move(diagonals)}};
}

}  // namespace msnake
