#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msnake/matchings.hpp"
#include "msnake/newton.hpp"
#include "msnake/snake.hpp"

namespace msnake {

enum class RenderFormat { Svg, Tikz };

struct RenderSpec {
    RenderFormat format = RenderFormat::Svg;
    int scale = 40;
    const Matching* highlight = nullptr;  // drawn thick; must be edges of the graph
    bool show_weights = false;
};

// Edge colors: x = red, y = blue, z = green.
std::string render_snake(const SnakeGraph& g, const RenderSpec& spec);

// Polygon outline with lattice points; vertex labels carry the defining numbers.
// `path`, when given, is a monomial-to-point walk; every point must lie inside.
std::string render_newton(RationalIndex rho, const RenderSpec& spec,
                          const std::vector<LatticePoint>& path = {});

}  // namespace msnake
