#pragma once

#include "brokenstick/fractal.hpp"

#include <string>
#include <vector>

namespace brokenstick {

struct RenderStyle {
    int width_px = 512;
    int height_px = 512;
    // Fill colors cycled by piece level; piece k uses palette[(k-1) % size].
    std::vector<std::string> palette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                        "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    std::string residual_fill = "#d9d9d9";
    bool show_residual = true;
    bool show_labels = false;
};

// SVG 1.1 document: one filled polygon per kept piece (plus the residual when
// shown) and the simplex outline on top. Pure function of its inputs; the
// output bytes are deterministic. The metadata comment carries level, policy
// and the world-to-pixel transform (scale, offset) so consumers can undo the
// viewport mapping exactly. Throws std::invalid_argument when either
// dimension is below 64 px.
std::string render_svg(const FractalApprox& a, const RenderStyle& style = {});

}  // namespace brokenstick
