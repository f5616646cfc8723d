#pragma once

#include "brokenstick/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace brokenstick {

// Levels beyond this make the exact area denominators pointlessly large.
inline constexpr int kMaxLevel = 64;

struct PolicyStep {
    int apex;       // which corner survives, 1..3
    HalfSide half;  // which half of that corner is kept
};

// Deletion policy for the inductive construction: at every level three of the
// four medial parts are discarded and half of the surviving corner is kept.
// Which corner and which half may vary by level; different choices give
// different shapes with identical area sequences. Represented as a pattern
// cycled by level so policies serialize deterministically.
class Policy {
  public:
    // Default: keep the apex-3 corner and the First half at every level.
    Policy() : pattern_{{3, HalfSide::First}} {}

    // Throws std::invalid_argument on an empty pattern or an apex outside 1..3.
    explicit Policy(std::vector<PolicyStep> pattern);

    // "default", or a pattern like "3f" or "1s2f" (apex digit + f/s per step).
    static Policy parse(std::string_view text);

    int apex_at(int level) const { return pattern_[index(level)].apex; }
    HalfSide half_at(int level) const { return pattern_[index(level)].half; }
    const std::vector<PolicyStep>& pattern() const { return pattern_; }
    std::string str() const;

  private:
    std::size_t index(int level) const {
        return static_cast<std::size_t>(level - 1) % pattern_.size();
    }
    std::vector<PolicyStep> pattern_;
};

// One kept triangle, with the residual it was cut from. Always one eighth of
// its parent's area.
struct Piece {
    int level;
    Tri triangle;
    Tri parent;
};

// Level-n approximation of the symmetric sample space: the kept pieces
// T_1..T_n plus the residual medial triangle A_n around the centroid.
struct FractalApprox {
    int level = 0;
    std::vector<Piece> pieces;
    Tri residual = simplex();
    Policy policy;
};

// Runs the construction from the full simplex down to level n. Throws
// std::invalid_argument for n < 0 or n > cap.
FractalApprox build(int n, const Policy& policy = Policy(), int cap = kMaxLevel);

// One refinement step; existing pieces are reused unchanged.
FractalApprox step(const FractalApprox& a, int cap = kMaxLevel);

struct PointLocation {
    enum class Kind { Piece, Residual, Outside };
    Kind kind;
    int piece = 0;  // 1-based, set when kind == Kind::Piece

    friend bool operator==(const PointLocation&, const PointLocation&) = default;
};

// Exact membership. Boundary points count as contained; ties resolve to the
// lowest piece index, then the residual.
PointLocation classify_point(const FractalApprox& a, const BaryPoint& p);

// Exact area bookkeeping for one approximation, with the limit values the
// measured geometry forces next to the published closed forms (first piece
// 1/8, each next 1/8 of the previous). The two disagree; matches_paper
// records that.
struct AuditReport {
    int level = 0;
    std::vector<Rat> piece_areas;
    std::vector<Rat> successive_ratios;  // piece_areas[k] / piece_areas[k-1]
    bool ratios_uniform = true;
    Rat kept_area;
    Rat residual_area;
    Rat deleted_area;        // summed from the actual discarded triangles
    bool conservation_ok = false;  // kept + deleted + residual == 1

    Rat measured_ratio;      // successive piece ratio the construction yields
    Rat measured_total;      // limit of the kept-area series
    Rat measured_triangle_area;
    Rat measured_probability;

    Rat paper_ratio;         // 1/8
    Rat paper_total;         // 1/7
    Rat paper_triangle_area; // 1/56
    Rat paper_probability;   // 1/8
    bool matches_paper = false;
};

// Throws std::invalid_argument when a.level < 1.
AuditReport audit(const FractalApprox& a);

}  // namespace brokenstick
