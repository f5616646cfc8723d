#pragma once

#include "brokenstick/rational.hpp"

#include <array>

namespace brokenstick {

// One sample of the stick-breaking experiment: the three fragment lengths,
// read as exact barycentric coordinates on the 2-simplex. Invariants
// (l1 + l2 + l3 = 1, each in [0, 1]) are enforced on construction.
struct BaryPoint {
    Rat l1, l2, l3;

    BaryPoint(Rat a, Rat b, Rat c);

    // 0-based coordinate access for loops over the three lengths.
    const Rat& coord(int i) const;

    friend bool operator==(const BaryPoint& a, const BaryPoint& b) {
        return a.l1 == b.l1 && a.l2 == b.l2 && a.l3 == b.l3;
    }
    friend bool operator!=(const BaryPoint& a, const BaryPoint& b) { return !(a == b); }
};

// Lexicographic; used for deterministic orbit deduplication.
bool operator<(const BaryPoint& a, const BaryPoint& b);

BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q);

// Ordered vertex triple. Vertices may coincide; a Tri is degenerate exactly
// when its area is zero.
struct Tri {
    BaryPoint a, b, c;

    friend bool operator==(const Tri& s, const Tri& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
};

// Render-plane coordinates (unitless).
struct CartPoint {
    double x, y;
};

enum class Containment { Inside, Boundary, Outside };
enum class HalfSide { First, Second };

// The full sample space: all length triples summing to 1.
const Tri& simplex();
// (1/3, 1/3, 1/3), the equilateral sample.
const BaryPoint& centroid();

// Area of t relative to the full simplex (simplex() maps to 1). Computed as
// the absolute determinant of the three barycentric rows, so it is exact and
// involves no square roots.
Rat bary_area(const Tri& t);

// Triangle of the three edge midpoints; has exactly a quarter of t's area.
// Vertex order: mid(a,b), mid(a,c), mid(b,c).
Tri medial_triangle(const Tri& t);

// The three corner triangles cut off by the medial triangle, indexed by apex.
// Corner i is (v_i, mid(v_i, v_j), mid(v_i, v_k)) with j < k; each has a
// quarter of t's area and the four parts tile t exactly.
std::array<Tri, 3> corner_subtriangles(const Tri& t);

// One half of an isoceles corner triangle, split along its apex-to-base-midpoint
// axis: (apex, chosen base vertex, midpoint of the base). First keeps base
// vertex corner.b, Second keeps corner.c.
Tri half_corner(const Tri& corner, HalfSide side);

// The three lengths close into a triangle iff max(l_i) <= 1/2 (non-strict:
// degenerate flat triangles count).
bool triangle_condition(const BaryPoint& p);

// max over the three pairwise |l_i - l_j|; equals max(l) - min(l).
Rat max_pairwise_gap(const BaryPoint& p);

bool is_delta_equilateral(const BaryPoint& p, const Rat& delta);

// delta <= gap <= delta_prime, non-strict at both ends. Throws
// std::invalid_argument when delta > delta_prime.
bool is_band_equilateral(const BaryPoint& p, const Rat& delta, const Rat& delta_prime);

// Exact point classification via the signs of the three edge determinants.
// Throws std::domain_error for a degenerate triangle.
Containment contains(const Tri& t, const BaryPoint& p);

// Affine embedding onto the equilateral triangle with vertices (0,0),
// (2*sqrt(3)/3, 0), (sqrt(3)/3, 1). That triangle has height 1, so a point's
// distance to each side equals the corresponding barycentric coordinate.
CartPoint to_cartesian(const BaryPoint& p);

}  // namespace brokenstick
