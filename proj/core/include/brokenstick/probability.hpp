#pragma once

#include "brokenstick/fractal.hpp"

#include <vector>

namespace brokenstick {

// Paper mode evaluates the published closed forms verbatim: the first kept
// piece is 1/8 of the simplex and each later piece 1/8 of the previous one.
// Measured mode takes the first piece area and the successive ratio from an
// audit of the constructed geometry, where the ratio comes out 1/4. Both are
// first-class; nothing silently corrects either.
enum class Mode { Paper, Measured };

// P(triangle) for the ordered experiment, derived from the geometry:
// area of the medial triangle over the area of the simplex. Equals 1/4.
Rat classical_probability();

// Exact limit first/(1 - ratio) of the geometric series. Throws
// std::domain_error unless 0 <= ratio < 1 and first >= 0.
Rat series_total(const Rat& first, const Rat& ratio);

// P(triangle) for the unordered experiment. Paper mode gives 1/8; measured
// mode gives (total - first piece)/total from the audit, which comes out 1/4.
// The first piece is exactly the non-triangle part of the limit set (one of
// its lengths stays >= 1/2), so both are complements of the piece-1 share.
// Throws std::invalid_argument in measured mode without an audit.
Rat symmetric_probability(Mode mode, const AuditReport* audit = nullptr);

// Largest pairwise length gap attained on a piece. The gap is a max of
// linear functionals, so the sup over the closed triangle is attained at a
// vertex; the vertex maximum is exact. Under the default policy,
// delta of piece k is 2^(1-k).
Rat delta_of_piece(const Piece& piece);

// Probability that the gap is at most delta_i: the tail share from piece i.
// Paper mode: 1/8^(i-1) verbatim. Measured mode: ratio^(i-1).
Rat p_equilateral(int i, Mode mode, const AuditReport* audit = nullptr);

// Probability that the gap lies in [delta_{i+1}, delta_i]. Paper mode emits
// the published 1/(7*8^i) verbatim, which does not match the difference of
// the published tail probabilities; probability_report flags that. Measured
// mode is the piece-i share (1 - ratio)*ratio^(i-1), which equals
// p_equilateral(i) - p_equilateral(i+1) exactly.
Rat p_band(int i, Mode mode, const AuditReport* audit = nullptr);

struct DeltaRow {
    int index = 0;
    Rat delta;
    Rat p_equilateral;
    Rat p_band;
    Rat tail_difference;  // p_equilateral(i) - p_equilateral(i+1)
    bool flagged = false; // p_band != tail_difference
};

struct ProbabilityReport {
    Mode mode = Mode::Paper;
    Rat classical;
    Rat total_area;     // Area(E) / Area(full simplex)
    Rat triangle_area;  // Area(T) / Area(full simplex)
    Rat p_triangle;     // triangle_area / total_area
    std::vector<DeltaRow> delta_table;
};

// Aggregates everything for i = 1..depth. The delta column is computed from
// the default-policy construction (vertex maximum per piece); its values do
// not depend on the policy. Throws std::invalid_argument for depth < 1 or a
// missing audit in measured mode.
ProbabilityReport probability_report(Mode mode, int depth, const AuditReport* audit = nullptr);

}  // namespace brokenstick
