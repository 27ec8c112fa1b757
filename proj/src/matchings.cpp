#include "msnake/matchings.hpp"

#include <algorithm>
#include <map>

namespace msnake {

namespace {

ExpTriple unit_exp(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::X: return {1, 0, 0};
        case EdgeWeight::Y: return {0, 1, 0};
        case EdgeWeight::Z: return {0, 0, 1};
    }
    throw std::logic_error("unreachable weight");
}

}  // namespace

bool is_perfect(const SnakeGraph& g, const Matching& m) {
    std::map<GridPoint, int> cover;
    for (const Edge& e : m) {
        g.weight(e);  // validates membership
        ++cover[e.u];
        ++cover[e.v];
    }
    for (const auto& [v, n] : cover)
        if (n != 1) return false;
    return cover.size() == g.vertices().size();
}

ExpTriple matching_monomial(const SnakeGraph& g, const Matching& m) {
    if (!is_perfect(g, m)) throw NotPerfect("matching is not perfect on snake " + g.rho.str());
    ExpTriple mono;
    for (const Edge& e : m) mono = mono + unit_exp(g.weight(e));
    return mono;
}

std::vector<Matching> enumerate_matchings(const SnakeGraph& g, std::uint64_t cap) {
    std::vector<GridPoint> vs = g.vertices();
    std::map<GridPoint, std::size_t> index;
    for (std::size_t k = 0; k < vs.size(); ++k) index.emplace(vs[k], k);
    std::vector<std::vector<Edge>> incident(vs.size());
    for (const auto& [e, w] : g.edges) {
        incident[index.at(e.u)].push_back(e);
        incident[index.at(e.v)].push_back(e);
    }

    std::vector<Matching> found;
    std::vector<bool> covered(vs.size(), false);
    Matching current;

    auto recurse = [&](auto&& self, std::size_t from) -> void {
        std::size_t k = from;
        while (k < covered.size() && covered[k]) ++k;
        if (k == covered.size()) {
            if (found.size() == cap) throw CapExceeded(found.size());
            found.push_back(current);
            return;
        }
        for (const Edge& e : incident[k]) {
            std::size_t other = index.at(e.u) == k ? index.at(e.v) : index.at(e.u);
            if (covered[other]) continue;
            covered[k] = covered[other] = true;
            current.insert(e);
            self(self, k + 1);
            current.erase(e);
            covered[k] = covered[other] = false;
        }
    };

    recurse(recurse, 0);
    return found;
}

// Transfer states along the shared edge e_t between tiles t and t+1:
//   C: both endpoints of e_t already covered (whether by e_t or not),
//   U: both endpoints uncovered.
// Mixed coverage never occurs: the two private edges of a tile either both
// fire or both stay out, which the case analysis below makes explicit.
TriPoly numerator_dp(const SnakeGraph& g) {
    auto w = [&g](const Edge& e) { return unit_exp(g.weight(e)); };
    auto mono = [](ExpTriple e) { return TriPoly::monomial(e); };
    auto scaled = [](const TriPoly& p, ExpTriple e) {
        TriPoly r = p;
        r.scale(e, 1);
        return r;
    };

    const int T = g.tile_count;
    TileEdges first = g.tile_edges(1);
    if (T == 1) {
        TriPoly total = mono(w(first.left) + w(first.right));
        total += mono(w(first.bottom) + w(first.top));
        return poly_halve_exponents(total);
    }

    // The interior word starts and ends with alpha, so the snake leaves tile
    // 1 rightward and enters tile T rightward.
    if (g.dirs.front() != Dir::Right || g.dirs.back() != Dir::Right)
        throw std::logic_error("snake does not start/end with a flat step");

    // Tile 1: either its left vertical covers the two open corners (shared
    // edge free) or its horizontals fire (shared edge blocked).
    TriPoly C = mono(w(first.left) + w(first.right));
    C += mono(w(first.bottom) + w(first.top));
    TriPoly U = mono(w(first.left));

    for (int t = 2; t <= T - 1; ++t) {
        TileEdges te = g.tile_edges(t);
        Dir into = g.dirs[static_cast<std::size_t>(t) - 2];
        Dir out = g.dirs[static_cast<std::size_t>(t) - 1];
        Edge shared_out = out == Dir::Right ? te.right : te.top;
        TriPoly nextC, nextU;
        if (into == out) {
            // Straight tile: private edges are the two sides parallel to the
            // travel direction; from U both must fire, from C the only
            // choice is whether the outgoing shared edge fires.
            Edge p1 = into == Dir::Right ? te.bottom : te.left;
            Edge p2 = into == Dir::Right ? te.top : te.right;
            nextC = scaled(C, w(shared_out)) + scaled(U, w(p1) + w(p2));
            nextU = C;
        } else {
            // Turn tile: the inner side touches the incoming shared edge,
            // the outer side does not.  From C the outer side is forced;
            // from U the inner side is forced and the outgoing shared edge
            // either fires now or stays for the next tile.
            Edge inner = into == Dir::Right ? te.bottom : te.left;
            Edge outer = into == Dir::Right ? te.right : te.top;
            nextC = scaled(C, w(outer)) + scaled(U, w(inner) + w(shared_out));
            nextU = scaled(U, w(inner));
        }
        C = std::move(nextC);
        U = std::move(nextU);
    }

    TileEdges last = g.tile_edges(T);
    TriPoly total = scaled(C, w(last.right)) + scaled(U, w(last.bottom) + w(last.top));
    return poly_halve_exponents(total);
}

TriPoly numerator_from_enumeration(const SnakeGraph& g, std::uint64_t cap) {
    TriPoly total;
    for (const Matching& m : enumerate_matchings(g, cap))
        total.add_term(matching_monomial(g, m), 1);
    return poly_halve_exponents(total);
}

Json numerator_to_json(RationalIndex rho, const TriPoly& numerator) {
    Json terms = Json::array();
    for (const auto& [e, c] : numerator.terms())
        terms.push_back({{"i", e.ex}, {"j", e.ey}, {"k", e.ez}, {"c", c.get_str()}});
    return Json{{"rho", rho.str()}, {"deg", rho.a + rho.b - 1}, {"terms", std::move(terms)}};
}

}  // namespace msnake
