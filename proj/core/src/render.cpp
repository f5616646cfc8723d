#include "brokenstick/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace brokenstick {

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::string fmt(double v, const char* spec = "%.9f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct Viewport {
    double scale;
    double offset_x, offset_y;

    // World y grows upward, pixel y downward.
    CartPoint map(const CartPoint& w) const {
        return {offset_x + scale * w.x, offset_y + scale * (1.0 - w.y)};
    }
};

Viewport fit_viewport(int width, int height) {
    // World bounding box of the embedded simplex: [0, 2*sqrt(3)/3] x [0, 1].
    const double world_w = 2.0 * std::sqrt(3.0) / 3.0;
    const double world_h = 1.0;
    const double margin = 0.05 * std::min(width, height);
    const double scale =
        std::min((width - 2.0 * margin) / world_w, (height - 2.0 * margin) / world_h);
    const double off_x = (width - scale * world_w) / 2.0;
    const double off_y = (height - scale * world_h) / 2.0;
    return {scale, off_x, off_y};
}

std::string polygon_points(const Tri& t, const Viewport& vp) {
    std::string pts;
    for (const BaryPoint* v : {&t.a, &t.b, &t.c}) {
        const CartPoint p = vp.map(to_cartesian(*v));
        if (!pts.empty()) {
            pts += ' ';
        }
        pts += fmt(p.x) + "," + fmt(p.y);
    }
    return pts;
}

CartPoint triangle_center(const Tri& t, const Viewport& vp) {
    const CartPoint a = vp.map(to_cartesian(t.a));
    const CartPoint b = vp.map(to_cartesian(t.b));
    const CartPoint c = vp.map(to_cartesian(t.c));
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

}  // namespace

std::string render_svg(const FractalApprox& a, const RenderStyle& style) {
    if (style.width_px < 64 || style.height_px < 64) {
        throw std::invalid_argument("render_svg: viewport must be at least 64x64");
    }
    const Viewport vp = fit_viewport(style.width_px, style.height_px);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(style.width_px) + "\" height=\"" + std::to_string(style.height_px) +
           "\" viewBox=\"0 0 " + std::to_string(style.width_px) + " " +
           std::to_string(style.height_px) + "\">\n";
    svg += "<!-- brokenstick " + std::string(kToolVersion) + " level=" + std::to_string(a.level) +
           " policy=" + a.policy.str() + " scale=" + fmt(vp.scale, "%.17g") +
           " offset=" + fmt(vp.offset_x, "%.17g") + "," + fmt(vp.offset_y, "%.17g") + " -->\n";

    for (const Piece& piece : a.pieces) {
        const std::string& fill =
            style.palette[static_cast<std::size_t>(piece.level - 1) % style.palette.size()];
        svg += "<polygon class=\"piece\" fill=\"" + fill + "\" points=\"" +
               polygon_points(piece.triangle, vp) + "\"/>\n";
    }
    if (style.show_residual) {
        svg += "<polygon class=\"residual\" fill=\"" + style.residual_fill + "\" points=\"" +
               polygon_points(a.residual, vp) + "\"/>\n";
    }
    svg += "<polygon class=\"outline\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" "
           "points=\"" + polygon_points(simplex(), vp) + "\"/>\n";

    if (style.show_labels) {
        const double font = std::max(10.0, 0.03 * std::min(style.width_px, style.height_px));
        for (const Piece& piece : a.pieces) {
            const CartPoint c = triangle_center(piece.triangle, vp);
            svg += "<text x=\"" + fmt(c.x, "%.2f") + "\" y=\"" + fmt(c.y, "%.2f") +
                   "\" font-size=\"" + fmt(font, "%.2f") +
                   "\" text-anchor=\"middle\">T" + std::to_string(piece.level) + "</text>\n";
        }
        if (style.show_residual) {
            const CartPoint c = triangle_center(a.residual, vp);
            svg += "<text x=\"" + fmt(c.x, "%.2f") + "\" y=\"" + fmt(c.y, "%.2f") +
                   "\" font-size=\"" + fmt(font, "%.2f") +
                   "\" text-anchor=\"middle\">A" + std::to_string(a.level) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace brokenstick
