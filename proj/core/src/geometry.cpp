#include "brokenstick/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace brokenstick {

BaryPoint::BaryPoint(Rat a, Rat b, Rat c)
    : l1(std::move(a)), l2(std::move(b)), l3(std::move(c)) {
    if (l1.sign() < 0 || l2.sign() < 0 || l3.sign() < 0) {
        throw std::invalid_argument("BaryPoint: negative coordinate");
    }
    if (l1 + l2 + l3 != Rat(1)) {
        throw std::invalid_argument("BaryPoint: coordinates must sum to 1");
    }
}

const Rat& BaryPoint::coord(int i) const {
    switch (i) {
        case 0: return l1;
        case 1: return l2;
        case 2: return l3;
        default: throw std::out_of_range("BaryPoint: coordinate index");
    }
}

bool operator<(const BaryPoint& a, const BaryPoint& b) {
    if (a.l1 != b.l1) return a.l1 < b.l1;
    if (a.l2 != b.l2) return a.l2 < b.l2;
    return a.l3 < b.l3;
}

BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q) {
    const Rat half(1, 2);
    return BaryPoint((p.l1 + q.l1) * half, (p.l2 + q.l2) * half, (p.l3 + q.l3) * half);
}

const Tri& simplex() {
    static const Tri t{BaryPoint(Rat(1), Rat(0), Rat(0)),
                       BaryPoint(Rat(0), Rat(1), Rat(0)),
                       BaryPoint(Rat(0), Rat(0), Rat(1))};
    return t;
}

const BaryPoint& centroid() {
    static const BaryPoint g(Rat(1, 3), Rat(1, 3), Rat(1, 3));
    return g;
}

namespace {

// Determinant of the three barycentric rows. With rows summing to 1 each,
// this is the signed area of (a, b, c) relative to the full simplex.
Rat row_det(const BaryPoint& a, const BaryPoint& b, const BaryPoint& c) {
    return a.l1 * (b.l2 * c.l3 - b.l3 * c.l2)
         - a.l2 * (b.l1 * c.l3 - b.l3 * c.l1)
         + a.l3 * (b.l1 * c.l2 - b.l2 * c.l1);
}

}  // namespace

Rat bary_area(const Tri& t) {
    return row_det(t.a, t.b, t.c).abs();
}

Tri medial_triangle(const Tri& t) {
    return Tri{midpoint(t.a, t.b), midpoint(t.a, t.c), midpoint(t.b, t.c)};
}

std::array<Tri, 3> corner_subtriangles(const Tri& t) {
    return {Tri{t.a, midpoint(t.a, t.b), midpoint(t.a, t.c)},
            Tri{t.b, midpoint(t.b, t.a), midpoint(t.b, t.c)},
            Tri{t.c, midpoint(t.c, t.a), midpoint(t.c, t.b)}};
}

Tri half_corner(const Tri& corner, HalfSide side) {
    const BaryPoint base_mid = midpoint(corner.b, corner.c);
    if (side == HalfSide::First) {
        return Tri{corner.a, corner.b, base_mid};
    }
    return Tri{corner.a, corner.c, base_mid};
}

bool triangle_condition(const BaryPoint& p) {
    const Rat half(1, 2);
    return p.l1 <= half && p.l2 <= half && p.l3 <= half;
}

Rat max_pairwise_gap(const BaryPoint& p) {
    const Rat hi = max(p.l1, max(p.l2, p.l3));
    const Rat lo = min(p.l1, min(p.l2, p.l3));
    return hi - lo;
}

bool is_delta_equilateral(const BaryPoint& p, const Rat& delta) {
    return max_pairwise_gap(p) <= delta;
}

bool is_band_equilateral(const BaryPoint& p, const Rat& delta, const Rat& delta_prime) {
    if (delta > delta_prime) {
        throw std::invalid_argument("is_band_equilateral: delta > delta_prime");
    }
    const Rat gap = max_pairwise_gap(p);
    return delta <= gap && gap <= delta_prime;
}

Containment contains(const Tri& t, const BaryPoint& p) {
    const Rat orientation = row_det(t.a, t.b, t.c);
    const int orient = orientation.sign();
    if (orient == 0) {
        throw std::domain_error("contains: degenerate triangle");
    }
    const int s1 = row_det(t.a, t.b, p).sign();
    const int s2 = row_det(t.b, t.c, p).sign();
    const int s3 = row_det(t.c, t.a, p).sign();
    if (s1 == -orient || s2 == -orient || s3 == -orient) {
        return Containment::Outside;
    }
    if (s1 == 0 || s2 == 0 || s3 == 0) {
        return Containment::Boundary;
    }
    return Containment::Inside;
}

CartPoint to_cartesian(const BaryPoint& p) {
    // Vertex images: V1 = (0, 0), V2 = (2s, 0), V3 = (s, 1) with s = sqrt(3)/3.
    static const double s = std::sqrt(3.0) / 3.0;
    const double w2 = p.l2.to_double();
    const double w3 = p.l3.to_double();
    return CartPoint{w2 * 2.0 * s + w3 * s, w3};
}

}  // namespace brokenstick
