#include "brokenstick/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace brokenstick {

Perm::Perm(const std::array<int, 3>& images) {
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        const int v = images[i];
        if (v < 1 || v > 3 || seen[v - 1]) {
            throw std::invalid_argument("Perm: images must be a bijection of {1,2,3}");
        }
        seen[v - 1] = true;
        img_[i] = v - 1;
    }
}

Perm Perm::transposition(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
        throw std::invalid_argument("Perm: transposition needs two distinct indices in 1..3");
    }
    std::array<int, 3> images{1, 2, 3};
    std::swap(images[i - 1], images[j - 1]);
    return Perm(images);
}

const std::array<Perm, 6>& Perm::all() {
    static const std::array<Perm, 6> perms = [] {
        std::array<int, 3> images{1, 2, 3};
        std::array<Perm, 6> out{};
        int k = 0;
        do {
            out[k++] = Perm(images);
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return perms;
}

std::string Perm::str() const {
    return {static_cast<char>('1' + img_[0]), static_cast<char>('1' + img_[1]),
            static_cast<char>('1' + img_[2])};
}

Perm compose(const Perm& s, const Perm& t) {
    // Coordinate i of act(s, act(t, p)) is l_{t(s(i))}.
    Perm r;
    for (int i = 0; i < 3; ++i) {
        r.img_[i] = t.img_[s.img_[i]];
    }
    return r;
}

BaryPoint act(const Perm& sigma, const BaryPoint& p) {
    return BaryPoint(p.coord(sigma.img_[0]), p.coord(sigma.img_[1]), p.coord(sigma.img_[2]));
}

std::vector<BaryPoint> orbit(const BaryPoint& p) {
    std::vector<BaryPoint> points;
    points.reserve(6);
    for (const Perm& sigma : Perm::all()) {
        points.push_back(act(sigma, p));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

BaryPoint canonicalize(const BaryPoint& p) {
    std::array<Rat, 3> l{p.l1, p.l2, p.l3};
    std::sort(l.begin(), l.end(), [](const Rat& a, const Rat& b) { return b < a; });
    return BaryPoint(l[0], l[1], l[2]);
}

}  // namespace brokenstick
