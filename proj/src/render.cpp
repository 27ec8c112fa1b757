#include "msnake/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "msnake/errors.hpp"

namespace msnake {

namespace {

const char* color_of(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::X: return "red";
        case EdgeWeight::Y: return "blue";
        case EdgeWeight::Z: return "green";
    }
    return "black";
}

// Grid coordinate doubled, so midpoints stay exact: 5 -> "2.5", 4 -> "2".
std::string half_str(int twice) {
    std::string s = std::to_string(twice / 2);
    if (twice % 2 != 0) s += ".5";
    return s;
}

struct SvgCanvas {
    int scale;
    int max_y;
    std::ostringstream out;

    int px(int x) const { return (x + 1) * scale; }
    int py(int y) const { return (max_y - y + 1) * scale; }

    void open(int max_x) {
        int w = (max_x + 2) * scale;
        int h = (max_y + 2) * scale;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    }
    void line(GridPoint a, GridPoint b, const char* color, int width) {
        out << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
            << "\" y2=\"" << py(b.y) << "\" stroke=\"" << color << "\" stroke-width=\"" << width
            << "\"/>\n";
    }
    void dot(GridPoint p, const char* color, int radius) {
        out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"" << radius
            << "\" fill=\"" << color << "\"/>\n";
    }
    void text(int twice_x, int twice_y, const char* color, const std::string& s) {
        out << "<text x=\"" << (twice_x + 2) * scale / 2 << "\" y=\""
            << (2 * max_y - twice_y + 2) * scale / 2
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\""
            << scale * 2 / 5 << "\" fill=\"" << color << "\">" << s << "</text>\n";
    }
    std::string close() {
        out << "</svg>\n";
        return out.str();
    }
};

struct TikzCanvas {
    std::ostringstream out;

    void open() { out << "\\begin{tikzpicture}[x=0.6cm,y=0.6cm]\n"; }
    void line(GridPoint a, GridPoint b, const char* color, bool thick) {
        out << "\\draw[" << color << (thick ? ", very thick" : "") << "] (" << a.x << "," << a.y
            << ") -- (" << b.x << "," << b.y << ");\n";
    }
    void dot(GridPoint p, const char* color) {
        out << "\\fill[" << color << "] (" << p.x << "," << p.y << ") circle (2pt);\n";
    }
    void text(int twice_x, int twice_y, const char* color, const std::string& s) {
        out << "\\node[" << color << "] at (" << half_str(twice_x) << "," << half_str(twice_y)
            << ") {" << s << "};\n";
    }
    std::string close() {
        out << "\\end{tikzpicture}\n";
        return out.str();
    }
};

}  // namespace

std::string render_snake(const SnakeGraph& g, const RenderSpec& spec) {
    if (spec.highlight)
        for (const Edge& e : *spec.highlight) g.weight(e);  // throws UnknownEdge if foreign

    int max_x = 0, max_y = 0;
    for (const auto& [e, w] : g.edges) {
        max_x = std::max({max_x, e.u.x, e.v.x});
        max_y = std::max({max_y, e.u.y, e.v.y});
    }
    auto matched = [&](const Edge& e) { return spec.highlight && spec.highlight->count(e) > 0; };

    if (spec.format == RenderFormat::Svg) {
        SvgCanvas c{spec.scale, max_y, {}};
        c.open(max_x);
        for (const auto& [e, w] : g.edges)
            c.line(e.u, e.v, color_of(w), matched(e) ? 5 : 2);
        if (spec.show_weights)
            for (const auto& [e, w] : g.edges)
                c.text(e.u.x + e.v.x, e.u.y + e.v.y, color_of(w),
                       std::string(1, weight_char(w)));
        return c.close();
    }
    TikzCanvas c;
    c.open();
    for (const auto& [e, w] : g.edges) c.line(e.u, e.v, color_of(w), matched(e));
    if (spec.show_weights)
        for (const auto& [e, w] : g.edges)
            c.text(e.u.x + e.v.x, e.u.y + e.v.y, color_of(w),
                   std::string(1, weight_char(w)));
    return c.close();
}

std::string render_newton(RationalIndex rho, const RenderSpec& spec,
                          const std::vector<LatticePoint>& path) {
    for (const LatticePoint& p : path)
        if (!contains(rho, p))
            throw PointOutsidePolygon("path point (" + std::to_string(p.i) + "," +
                                      std::to_string(p.j) + ") lies outside the polygon of " +
                                      rho.str());

    std::array<LatticePoint, 4> verts = newton_vertices(rho);
    auto grid = [](LatticePoint p) { return GridPoint{static_cast<int>(p.i), static_cast<int>(p.j)}; };
    int deg = rho.a + rho.b - 1;
    auto label_of = [&](const LatticePoint& v) {
        return std::to_string(v.j == 0 ? v.i : v.j);
    };

    if (spec.format == RenderFormat::Svg) {
        SvgCanvas c{spec.scale, deg, {}};
        c.open(deg);
        for (std::size_t k = 0; k < verts.size(); ++k)
            c.line(grid(verts[k]), grid(verts[(k + 1) % verts.size()]), "black", 2);
        for (const LatticePoint& p : lattice_points(rho)) c.dot(grid(p), "black", 3);
        for (const LatticePoint& v : verts) {
            int dx = v.j == 0 ? 0 : -1, dy = v.j == 0 ? -1 : 0;
            c.text(2 * static_cast<int>(v.i) + dx, 2 * static_cast<int>(v.j) + dy, "black",
                   label_of(v));
        }
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            c.line(grid(path[k]), grid(path[k + 1]), "orange", 4);
        for (const LatticePoint& p : path) c.dot(grid(p), "orange", 5);
        return c.close();
    }
    TikzCanvas c;
    c.open();
    for (std::size_t k = 0; k < verts.size(); ++k)
        c.line(grid(verts[k]), grid(verts[(k + 1) % verts.size()]), "black", false);
    for (const LatticePoint& p : lattice_points(rho)) c.dot(grid(p), "black");
    for (const LatticePoint& v : verts) {
        int dx = v.j == 0 ? 0 : -1, dy = v.j == 0 ? -1 : 0;
        c.text(2 * static_cast<int>(v.i) + dx, 2 * static_cast<int>(v.j) + dy, "black",
               label_of(v));
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        c.line(grid(path[k]), grid(path[k + 1]), "orange", true);
    for (const LatticePoint& p : path) c.dot(grid(p), "orange");
    return c.close();
}

}  // namespace msnake
