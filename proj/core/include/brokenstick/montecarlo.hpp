#pragma once

#include "brokenstick/fractal.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brokenstick {

// xoshiro256++ (Blackman/Vigna) seeded through splitmix64: the four state
// words are four successive splitmix64 outputs of the seed. jump() advances
// the stream by 2^128 steps; substream(seed, k) applies k jumps to the
// freshly seeded state, so parallel chunks draw from non-overlapping
// subsequences and merged results stay deterministic.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    // 53-bit uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    void jump();

    static constexpr const char* kAlgorithm = "xoshiro256++";

  private:
    std::array<std::uint64_t, 4> state_;
};

// A sample in double precision; exact arithmetic never flows through here.
struct BarySample {
    double l1, l2, l3;

    double gap() const;          // max pairwise |l_i - l_j|
    bool forms_triangle() const; // all l_i <= 1/2
};

// Two break points u, v on the unit stick give fragments
// (min, middle, rest). u == v is kept; like every boundary case it follows
// the closed triangle condition (all fragments <= 1/2), a measure-zero
// convention shared with the exact predicate.
BarySample physical_from_breaks(double u, double v);
BarySample sample_physical(Rng& rng);

// Uniform map of the unit square onto t:
// p = (1 - sqrt(r1)) a + sqrt(r1) (1 - r2) b + sqrt(r1) r2 c.
BarySample lerp_in_triangle(const Tri& t, double r1, double r2);
// Throws std::domain_error for a degenerate triangle.
BarySample sample_in_triangle(const Tri& t, Rng& rng);

// Uniform sampling over the kept pieces of one approximation, piece k chosen
// with probability area(T_k) / total kept area. The residual is excluded;
// truncation_share() reports the resulting bias against the limit set.
class FractalSampler {
  public:
    // Throws std::invalid_argument when a.level < 1.
    explicit FractalSampler(const FractalApprox& a);

    struct Draw {
        BarySample point;
        int piece;  // 1-based
    };
    Draw sample(Rng& rng) const;

    int level() const { return level_; }
    const std::vector<Rat>& piece_areas() const { return audit_.piece_areas; }
    const Rat& kept_area() const { return audit_.kept_area; }
    // Vertex-maximum gap per piece, cached for target lookups.
    const std::vector<Rat>& piece_deltas() const { return deltas_; }
    const AuditReport& audit_report() const { return audit_; }
    // (limit total - kept area) / limit total, exact value cast to double.
    double truncation_share() const { return truncation_; }

  private:
    struct TriD {
        std::array<double, 3> a, b, c;
    };
    std::vector<TriD> vertices_;
    std::vector<double> cumulative_;  // piece selection thresholds
    std::vector<Rat> deltas_;
    AuditReport audit_;
    double truncation_ = 0.0;
    int level_ = 0;
};

// The events the estimator can count.
class Predicate {
  public:
    enum class Kind { Triangle, Delta, Band };

    static Predicate triangle();
    static Predicate delta(Rat d);
    // Throws std::invalid_argument when d > d_prime.
    static Predicate band(Rat d, Rat d_prime);
    // "triangle", "delta=p/q" or "band=p/q,p/q".
    static Predicate parse(std::string_view text);

    Kind kind() const { return kind_; }
    const Rat& delta_value() const { return delta_; }
    const Rat& delta_prime_value() const { return delta_prime_; }
    bool eval(const BarySample& s) const;
    std::string str() const;

  private:
    Kind kind_ = Kind::Triangle;
    Rat delta_;
    Rat delta_prime_;
};

struct Estimate {
    double p_hat = 0.0;
    double standard_error = 0.0;  // sqrt(p_hat (1 - p_hat) / n)
    long long n = 0;
    std::uint64_t seed = 0;
};

struct EstimateOptions {
    int threads = 1;
    // Samples per substream. Fixed independently of the thread count, so the
    // merged estimate depends only on (seed, chunk_width).
    long long chunk_width = 1 << 16;
};

// Either the physical stick-breaking process or a fractal sampler.
class Sampler {
  public:
    static Sampler physical();
    static Sampler fractal(const FractalApprox& a);

    BarySample draw(Rng& rng) const;
    std::string name() const { return fractal_ ? "fractal" : "physical"; }
    const FractalSampler* fractal_sampler() const {
        return fractal_ ? &*fractal_ : nullptr;
    }

  private:
    Sampler() = default;
    std::optional<FractalSampler> fractal_;
};

// i.i.d. frequency estimate; bit-identical for identical
// (sampler, predicate, n, seed, chunk_width) regardless of thread count.
Estimate estimate_probability(const Sampler& sampler, const Predicate& predicate, long long n,
                              std::uint64_t seed, const EstimateOptions& options = {});

// An Estimate together with everything needed to reproduce and judge it.
// Targets are exact values computed at run time: the published ladder value
// and the measured-geometry value for the predicate, when the predicate
// corresponds to one (null otherwise).
struct EstimateRecord {
    Estimate estimate;
    std::string sampler;
    std::string predicate;
    std::optional<Rat> target_paper;
    std::optional<Rat> target_measured;
    std::optional<double> truncation_share;  // fractal sampler only
    std::optional<int> level;                // fractal sampler only
    std::string rng = Rng::kAlgorithm;
};

EstimateRecord make_record(const Sampler& sampler, const Predicate& predicate,
                           const Estimate& estimate);

}  // namespace brokenstick
