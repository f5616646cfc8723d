#include "brokenstick/fractal.hpp"

#include "brokenstick/probability.hpp"

#include <stdexcept>
#include <utility>

namespace brokenstick {

Policy::Policy(std::vector<PolicyStep> pattern) : pattern_(std::move(pattern)) {
    if (pattern_.empty()) {
        throw std::invalid_argument("Policy: empty pattern");
    }
    for (const PolicyStep& s : pattern_) {
        if (s.apex < 1 || s.apex > 3) {
            throw std::invalid_argument("Policy: apex must be in 1..3");
        }
    }
}

Policy Policy::parse(std::string_view text) {
    if (text == "default" || text.empty()) {
        return Policy();
    }
    std::vector<PolicyStep> pattern;
    for (std::size_t i = 0; i < text.size(); i += 2) {
        if (i + 1 >= text.size()) {
            throw std::invalid_argument("Policy: dangling apex digit in \"" + std::string(text) + "\"");
        }
        const char apex = text[i];
        const char half = text[i + 1];
        if (apex < '1' || apex > '3' || (half != 'f' && half != 's')) {
            throw std::invalid_argument("Policy: cannot parse \"" + std::string(text) +
                                        "\" (expected pairs like 3f or 1s)");
        }
        pattern.push_back({apex - '0', half == 'f' ? HalfSide::First : HalfSide::Second});
    }
    return Policy(std::move(pattern));
}

std::string Policy::str() const {
    std::string out;
    for (const PolicyStep& s : pattern_) {
        out += static_cast<char>('0' + s.apex);
        out += s.half == HalfSide::First ? 'f' : 's';
    }
    return out;
}

FractalApprox build(int n, const Policy& policy, int cap) {
    if (n < 0) {
        throw std::invalid_argument("build: negative level");
    }
    if (n > cap || cap > kMaxLevel) {
        throw std::invalid_argument("build: level exceeds cap");
    }
    FractalApprox a;
    a.policy = policy;
    a.pieces.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Tri parent = a.residual;
        const auto corners = corner_subtriangles(parent);
        const Tri kept = half_corner(corners[static_cast<std::size_t>(policy.apex_at(k) - 1)],
                                     policy.half_at(k));
        a.pieces.push_back(Piece{k, kept, parent});
        a.residual = medial_triangle(parent);
        a.level = k;
    }
    return a;
}

FractalApprox step(const FractalApprox& a, int cap) {
    if (a.level >= cap) {
        throw std::invalid_argument("step: level cap exceeded");
    }
    FractalApprox next = a;
    const int k = a.level + 1;
    const Tri parent = next.residual;
    const auto corners = corner_subtriangles(parent);
    const Tri kept = half_corner(corners[static_cast<std::size_t>(next.policy.apex_at(k) - 1)],
                                 next.policy.half_at(k));
    next.pieces.push_back(Piece{k, kept, parent});
    next.residual = medial_triangle(parent);
    next.level = k;
    return next;
}

PointLocation classify_point(const FractalApprox& a, const BaryPoint& p) {
    for (const Piece& piece : a.pieces) {
        if (contains(piece.triangle, p) != Containment::Outside) {
            return {PointLocation::Kind::Piece, piece.level};
        }
    }
    if (contains(a.residual, p) != Containment::Outside) {
        return {PointLocation::Kind::Residual, 0};
    }
    return {PointLocation::Kind::Outside, 0};
}

AuditReport audit(const FractalApprox& a) {
    if (a.level < 1) {
        throw std::invalid_argument("audit: needs at least one construction level");
    }
    AuditReport r;
    r.level = a.level;
    r.kept_area = Rat(0);
    r.deleted_area = Rat(0);
    for (const Piece& piece : a.pieces) {
        r.piece_areas.push_back(bary_area(piece.triangle));
        r.kept_area += r.piece_areas.back();

        // The discarded parts of this level: the two other corners and the
        // other half of the surviving corner.
        const auto corners = corner_subtriangles(piece.parent);
        const int apex = a.policy.apex_at(piece.level);
        for (int i = 1; i <= 3; ++i) {
            if (i != apex) {
                r.deleted_area += bary_area(corners[static_cast<std::size_t>(i - 1)]);
            }
        }
        const HalfSide kept_half = a.policy.half_at(piece.level);
        const HalfSide other = kept_half == HalfSide::First ? HalfSide::Second : HalfSide::First;
        r.deleted_area +=
            bary_area(half_corner(corners[static_cast<std::size_t>(apex - 1)], other));
    }
    for (std::size_t k = 1; k < r.piece_areas.size(); ++k) {
        r.successive_ratios.push_back(r.piece_areas[k] / r.piece_areas[k - 1]);
        if (r.successive_ratios.back() != r.successive_ratios.front()) {
            r.ratios_uniform = false;
        }
    }
    r.residual_area = bary_area(a.residual);
    r.conservation_ok = (r.kept_area + r.deleted_area + r.residual_area == Rat(1));

    // At level 1 there is no successive pair yet; the residual shrink factor
    // area(A_1)/area(A_0) is the same measured quantity.
    r.measured_ratio = r.successive_ratios.empty() ? r.residual_area : r.successive_ratios.front();
    r.measured_total = series_total(r.piece_areas.front(), r.measured_ratio);
    r.measured_triangle_area = r.measured_total - r.piece_areas.front();
    r.measured_probability = r.measured_triangle_area / r.measured_total;

    r.paper_ratio = Rat(1, 8);
    r.paper_total = series_total(Rat(1, 8), r.paper_ratio);
    r.paper_triangle_area = series_total(Rat(1, 64), r.paper_ratio);
    r.paper_probability = r.paper_triangle_area / r.paper_total;
    r.matches_paper = r.measured_total == r.paper_total &&
                      r.measured_triangle_area == r.paper_triangle_area &&
                      r.measured_probability == r.paper_probability;
    return r;
}

}  // namespace brokenstick
