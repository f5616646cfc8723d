#include "brokenstick/probability.hpp"

#include <stdexcept>

namespace brokenstick {

namespace {

const AuditReport& require_audit(Mode mode, const AuditReport* audit) {
    if (mode == Mode::Measured && audit == nullptr) {
        throw std::invalid_argument("measured mode requires an audit");
    }
    static const AuditReport none{};
    return audit ? *audit : none;
}

}  // namespace

Rat classical_probability() {
    return bary_area(medial_triangle(simplex())) / bary_area(simplex());
}

Rat series_total(const Rat& first, const Rat& ratio) {
    if (ratio.sign() < 0 || ratio >= Rat(1)) {
        throw std::domain_error("series_total: ratio must be in [0, 1)");
    }
    if (first.sign() < 0) {
        throw std::domain_error("series_total: negative first term");
    }
    return first / (Rat(1) - ratio);
}

Rat symmetric_probability(Mode mode, const AuditReport* audit) {
    if (mode == Mode::Paper) {
        return series_total(Rat(1, 64), Rat(1, 8)) / series_total(Rat(1, 8), Rat(1, 8));
    }
    const AuditReport& a = require_audit(mode, audit);
    const Rat total = series_total(a.piece_areas.front(), a.measured_ratio);
    return (total - a.piece_areas.front()) / total;
}

Rat delta_of_piece(const Piece& piece) {
    const Rat ga = max_pairwise_gap(piece.triangle.a);
    const Rat gb = max_pairwise_gap(piece.triangle.b);
    const Rat gc = max_pairwise_gap(piece.triangle.c);
    return max(ga, max(gb, gc));
}

Rat p_equilateral(int i, Mode mode, const AuditReport* audit) {
    if (i < 1) {
        throw std::invalid_argument("p_equilateral: index must be >= 1");
    }
    if (mode == Mode::Paper) {
        return pow(Rat(1, 8), i - 1);
    }
    const AuditReport& a = require_audit(mode, audit);
    return pow(a.measured_ratio, i - 1);
}

Rat p_band(int i, Mode mode, const AuditReport* audit) {
    if (i < 1) {
        throw std::invalid_argument("p_band: index must be >= 1");
    }
    if (mode == Mode::Paper) {
        return Rat(1) / (Rat(7) * pow(Rat(8), i));
    }
    const AuditReport& a = require_audit(mode, audit);
    return (Rat(1) - a.measured_ratio) * pow(a.measured_ratio, i - 1);
}

ProbabilityReport probability_report(Mode mode, int depth, const AuditReport* audit) {
    if (depth < 1) {
        throw std::invalid_argument("probability_report: depth must be >= 1");
    }
    require_audit(mode, audit);

    ProbabilityReport r;
    r.mode = mode;
    r.classical = classical_probability();
    if (mode == Mode::Paper) {
        r.total_area = series_total(Rat(1, 8), Rat(1, 8));
        r.triangle_area = series_total(Rat(1, 64), Rat(1, 8));
    } else {
        r.total_area = series_total(audit->piece_areas.front(), audit->measured_ratio);
        r.triangle_area = r.total_area - audit->piece_areas.front();
    }
    r.p_triangle = r.triangle_area / r.total_area;

    const FractalApprox approx = build(depth);
    for (int i = 1; i <= depth; ++i) {
        DeltaRow row;
        row.index = i;
        row.delta = delta_of_piece(approx.pieces[static_cast<std::size_t>(i - 1)]);
        row.p_equilateral = p_equilateral(i, mode, audit);
        row.p_band = p_band(i, mode, audit);
        row.tail_difference = row.p_equilateral - p_equilateral(i + 1, mode, audit);
        row.flagged = row.p_band != row.tail_difference;
        r.delta_table.push_back(row);
    }
    return r;
}

}  // namespace brokenstick
