#include "brokenstick/render.hpp"

#include "testkit.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace brokenstick;

namespace {

int count_class(const testkit::SvgDoc& doc, const std::string& cls) {
    int n = 0;
    for (const auto& poly : doc.polygons) {
        n += poly.cls == cls ? 1 : 0;
    }
    return n;
}

double pixel_area(const testkit::SvgPolygon& poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        const auto& [x1, y1] = poly.points[i];
        const auto& [x2, y2] = poly.points[(i + 1) % poly.points.size()];
        twice += x1 * y2 - x2 * y1;
    }
    return std::abs(twice) / 2.0;
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("byte-identical output for identical inputs") {
    const FractalApprox a = build(5);
    CHECK(render_svg(a) == render_svg(a));
    RenderStyle style;
    style.show_labels = true;
    CHECK(render_svg(a, style) == render_svg(a, style));
}

TEST_CASE("polygon counts: pieces + residual + outline") {
    const testkit::SvgDoc level0 = testkit::parse_svg(render_svg(build(0)));
    CHECK(count_class(level0, "piece") == 0);
    CHECK(count_class(level0, "residual") == 1);  // the full simplex, filled
    CHECK(count_class(level0, "outline") == 1);
    CHECK(level0.polygons.size() == 2);

    const testkit::SvgDoc level3 = testkit::parse_svg(render_svg(build(3)));
    CHECK(count_class(level3, "piece") == 3);
    CHECK(count_class(level3, "residual") == 1);
    CHECK(count_class(level3, "outline") == 1);

    RenderStyle bare;
    bare.show_residual = false;
    const testkit::SvgDoc no_res = testkit::parse_svg(render_svg(build(3), bare));
    CHECK(count_class(no_res, "residual") == 0);
    CHECK(no_res.polygons.size() == 4);
}

TEST_CASE("documents are well formed and labels add text nodes") {
    for (int level : {0, 3, 8}) {
        CHECK(testkit::xml_well_formed(render_svg(build(level))));
    }
    RenderStyle style;
    style.show_labels = true;
    const std::string svg = render_svg(build(3), style);
    CHECK(testkit::xml_well_formed(svg));
    std::size_t texts = 0, at = 0;
    while ((at = svg.find("<text ", at)) != std::string::npos) {
        ++texts;
        at += 6;
    }
    CHECK(texts == 4);  // three pieces and the residual
    CHECK(svg.find(">T1<") != std::string::npos);
    CHECK(svg.find(">A3<") != std::string::npos);
}

TEST_CASE("viewport size is validated and respected") {
    CHECK_THROWS_AS(render_svg(build(1), RenderStyle{63, 512}), std::invalid_argument);
    CHECK_THROWS_AS(render_svg(build(1), RenderStyle{512, 63}), std::invalid_argument);
    RenderStyle style;
    style.width_px = 300;
    style.height_px = 200;
    const testkit::SvgDoc doc = testkit::parse_svg(render_svg(build(2), style));
    CHECK(doc.width == 300);
    CHECK(doc.height == 200);
}

TEST_CASE("pixel coordinates are the mapped to_cartesian images") {
    const FractalApprox a = build(3);
    const testkit::SvgDoc doc = testkit::parse_svg(render_svg(a));
    REQUIRE(count_class(doc, "piece") == 3);
    for (int k = 0; k < 3; ++k) {
        const testkit::SvgPolygon& poly = doc.polygons[static_cast<std::size_t>(k)];
        REQUIRE(poly.points.size() == 3);
        const Tri& t = a.pieces[static_cast<std::size_t>(k)].triangle;
        const BaryPoint* verts[3] = {&t.a, &t.b, &t.c};
        for (int v = 0; v < 3; ++v) {
            const CartPoint w = to_cartesian(*verts[v]);
            const double px = doc.offset_x + doc.scale * w.x;
            const double py = doc.offset_y + doc.scale * (1.0 - w.y);
            CHECK(std::abs(poly.points[static_cast<std::size_t>(v)].first - px) < 1e-6);
            CHECK(std::abs(poly.points[static_cast<std::size_t>(v)].second - py) < 1e-6);
        }
    }
}

TEST_CASE("outline inverts to an equilateral triangle of side 2*sqrt(3)/3") {
    const testkit::SvgDoc doc = testkit::parse_svg(render_svg(build(3)));
    const testkit::SvgPolygon* outline = nullptr;
    for (const auto& poly : doc.polygons) {
        if (poly.cls == "outline") {
            outline = &poly;
        }
    }
    REQUIRE(outline != nullptr);
    REQUIRE(outline->points.size() == 3);
    const double side = 2.0 * std::sqrt(3.0) / 3.0;
    for (int i = 0; i < 3; ++i) {
        const auto [x1, y1] = testkit::to_world(doc, outline->points[static_cast<std::size_t>(i)].first,
                                                outline->points[static_cast<std::size_t>(i)].second);
        const auto [x2, y2] =
            testkit::to_world(doc, outline->points[static_cast<std::size_t>((i + 1) % 3)].first,
                              outline->points[static_cast<std::size_t>((i + 1) % 3)].second);
        CHECK(std::abs(std::hypot(x2 - x1, y2 - y1) - side) < 1e-9);
    }
}

TEST_CASE("two policies: different images, identical per-level areas") {
    const std::string svg_a = render_svg(build(8, Policy::parse("3f")));
    const std::string svg_b = render_svg(build(8, Policy::parse("1s")));
    CHECK(svg_a != svg_b);
    const testkit::SvgDoc doc_a = testkit::parse_svg(svg_a);
    const testkit::SvgDoc doc_b = testkit::parse_svg(svg_b);
    REQUIRE(count_class(doc_a, "piece") == 8);
    REQUIRE(count_class(doc_b, "piece") == 8);
    for (int k = 0; k < 8; ++k) {
        const double area_a = pixel_area(doc_a.polygons[static_cast<std::size_t>(k)]);
        const double area_b = pixel_area(doc_b.polygons[static_cast<std::size_t>(k)]);
        CHECK(std::abs(area_a - area_b) <= 0.01 * std::max(area_a, area_b));
    }
}

TEST_SUITE_END();
