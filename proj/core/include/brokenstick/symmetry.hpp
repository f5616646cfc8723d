#pragma once

#include "brokenstick/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace brokenstick {

// A permutation of the three stick indices {1, 2, 3}.
class Perm {
  public:
    Perm() : img_{0, 1, 2} {}

    // images[i] = sigma(i+1), 1-based. Throws std::invalid_argument unless
    // the triple is a bijection of {1, 2, 3}.
    explicit Perm(const std::array<int, 3>& images);

    static Perm identity() { return Perm(); }
    static Perm transposition(int i, int j);
    static const std::array<Perm, 6>& all();

    int image(int i) const { return img_[i - 1] + 1; }

    // "231"-style image string, as used in debug output.
    std::string str() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

  private:
    std::array<int, 3> img_;  // 0-based images
    friend Perm compose(const Perm& s, const Perm& t);
    friend BaryPoint act(const Perm& sigma, const BaryPoint& p);
};

// Composition such that act(compose(s, t), p) == act(s, act(t, p)).
Perm compose(const Perm& s, const Perm& t);

// sigma.(l1, l2, l3) = (l_sigma(1), l_sigma(2), l_sigma(3)).
BaryPoint act(const Perm& sigma, const BaryPoint& p);

// All distinct images of p under the six permutations; size is 1, 3 or 6.
std::vector<BaryPoint> orbit(const BaryPoint& p);

// The orbit representative with coordinates sorted descending
// (l1 >= l2 >= l3). Idempotent and constant on orbits.
BaryPoint canonicalize(const BaryPoint& p);

}  // namespace brokenstick
