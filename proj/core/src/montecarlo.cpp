#include "brokenstick/montecarlo.hpp"

#include "brokenstick/probability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace brokenstick {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
        word = splitmix64(x);
    }
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < index; ++i) {
        rng.jump();
    }
    return rng;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

void Rng::jump() {
    // Reference jump polynomial for xoshiro256++ (advances 2^128 steps).
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (std::uint64_t word : kJump) {
        for (int b = 0; b < 64; ++b) {
            if (word & (1ULL << b)) {
                for (int i = 0; i < 4; ++i) {
                    acc[static_cast<std::size_t>(i)] ^= state_[static_cast<std::size_t>(i)];
                }
            }
            next_u64();
        }
    }
    state_ = acc;
}

double BarySample::gap() const {
    return std::max({l1, l2, l3}) - std::min({l1, l2, l3});
}

bool BarySample::forms_triangle() const {
    return l1 <= 0.5 && l2 <= 0.5 && l3 <= 0.5;
}

BarySample physical_from_breaks(double u, double v) {
    const double lo = std::min(u, v);
    const double hi = std::max(u, v);
    return {lo, hi - lo, 1.0 - hi};
}

BarySample sample_physical(Rng& rng) {
    const double u = rng.next_unit();
    const double v = rng.next_unit();
    return physical_from_breaks(u, v);
}

namespace {

std::array<double, 3> to_doubles(const BaryPoint& p) {
    return {p.l1.to_double(), p.l2.to_double(), p.l3.to_double()};
}

BarySample lerp(const std::array<double, 3>& a, const std::array<double, 3>& b,
                const std::array<double, 3>& c, double r1, double r2) {
    const double s = std::sqrt(r1);
    const double wa = 1.0 - s;
    const double wb = s * (1.0 - r2);
    const double wc = s * r2;
    return {wa * a[0] + wb * b[0] + wc * c[0],
            wa * a[1] + wb * b[1] + wc * c[1],
            wa * a[2] + wb * b[2] + wc * c[2]};
}

}  // namespace

BarySample lerp_in_triangle(const Tri& t, double r1, double r2) {
    return lerp(to_doubles(t.a), to_doubles(t.b), to_doubles(t.c), r1, r2);
}

BarySample sample_in_triangle(const Tri& t, Rng& rng) {
    if (bary_area(t).is_zero()) {
        throw std::domain_error("sample_in_triangle: degenerate triangle");
    }
    const double r1 = rng.next_unit();
    const double r2 = rng.next_unit();
    return lerp_in_triangle(t, r1, r2);
}

FractalSampler::FractalSampler(const FractalApprox& a) {
    if (a.level < 1) {
        throw std::invalid_argument("FractalSampler: needs at least one piece");
    }
    audit_ = brokenstick::audit(a);
    level_ = a.level;
    const double kept = audit_.kept_area.to_double();
    double running = 0.0;
    for (const Piece& piece : a.pieces) {
        vertices_.push_back(
            TriD{to_doubles(piece.triangle.a), to_doubles(piece.triangle.b), to_doubles(piece.triangle.c)});
        deltas_.push_back(delta_of_piece(piece));
        running += bary_area(piece.triangle).to_double() / kept;
        cumulative_.push_back(running);
    }
    cumulative_.back() = 1.0;
    truncation_ =
        ((audit_.measured_total - audit_.kept_area) / audit_.measured_total).to_double();
}

FractalSampler::Draw FractalSampler::sample(Rng& rng) const {
    const double u = rng.next_unit();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t k = std::min(static_cast<std::size_t>(it - cumulative_.begin()),
                                   cumulative_.size() - 1);
    const double r1 = rng.next_unit();
    const double r2 = rng.next_unit();
    const TriD& t = vertices_[k];
    return {lerp(t.a, t.b, t.c, r1, r2), static_cast<int>(k) + 1};
}

Predicate Predicate::triangle() {
    return Predicate{};
}

Predicate Predicate::delta(Rat d) {
    Predicate p;
    p.kind_ = Kind::Delta;
    p.delta_ = std::move(d);
    return p;
}

Predicate Predicate::band(Rat d, Rat d_prime) {
    if (d > d_prime) {
        throw std::invalid_argument("Predicate: band needs delta <= delta_prime");
    }
    Predicate p;
    p.kind_ = Kind::Band;
    p.delta_ = std::move(d);
    p.delta_prime_ = std::move(d_prime);
    return p;
}

Predicate Predicate::parse(std::string_view text) {
    if (text == "triangle") {
        return triangle();
    }
    if (text.starts_with("delta=")) {
        return delta(Rat::parse(text.substr(6)));
    }
    if (text.starts_with("band=")) {
        const auto rest = text.substr(5);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("Predicate: band needs two comma-separated bounds");
        }
        return band(Rat::parse(rest.substr(0, comma)), Rat::parse(rest.substr(comma + 1)));
    }
    throw std::invalid_argument("Predicate: cannot parse \"" + std::string(text) + "\"");
}

bool Predicate::eval(const BarySample& s) const {
    switch (kind_) {
        case Kind::Triangle:
            return s.forms_triangle();
        case Kind::Delta:
            return s.gap() <= delta_.to_double();
        case Kind::Band: {
            const double g = s.gap();
            return delta_.to_double() <= g && g <= delta_prime_.to_double();
        }
    }
    return false;
}

std::string Predicate::str() const {
    switch (kind_) {
        case Kind::Triangle:
            return "triangle";
        case Kind::Delta:
            return "delta=" + delta_.str();
        case Kind::Band:
            return "band=" + delta_.str() + "," + delta_prime_.str();
    }
    return "";
}

Sampler Sampler::physical() {
    return Sampler{};
}

Sampler Sampler::fractal(const FractalApprox& a) {
    Sampler s;
    s.fractal_.emplace(a);
    return s;
}

BarySample Sampler::draw(Rng& rng) const {
    if (fractal_) {
        return fractal_->sample(rng).point;
    }
    return sample_physical(rng);
}

Estimate estimate_probability(const Sampler& sampler, const Predicate& predicate, long long n,
                              std::uint64_t seed, const EstimateOptions& options) {
    if (n < 1) {
        throw std::invalid_argument("estimate_probability: need at least one sample");
    }
    const long long width = std::max<long long>(1, options.chunk_width);
    const long long chunks = (n + width - 1) / width;
    std::vector<long long> counts(static_cast<std::size_t>(chunks), 0);

    const auto run_chunk = [&](long long j) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(j));
        const long long begin = j * width;
        const long long end = std::min(n, begin + width);
        long long hits = 0;
        for (long long i = begin; i < end; ++i) {
            if (predicate.eval(sampler.draw(rng))) {
                ++hits;
            }
        }
        counts[static_cast<std::size_t>(j)] = hits;
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || chunks == 1) {
        for (long long j = 0; j < chunks; ++j) {
            run_chunk(j);
        }
    } else {
        std::atomic<long long> next_chunk{0};
        std::vector<std::thread> pool;
        const int workers = static_cast<int>(std::min<long long>(threads, chunks));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (long long j = next_chunk.fetch_add(1); j < chunks;
                     j = next_chunk.fetch_add(1)) {
                    run_chunk(j);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    long long total = 0;
    for (long long c : counts) {
        total += c;
    }
    Estimate e;
    e.n = n;
    e.seed = seed;
    e.p_hat = static_cast<double>(total) / static_cast<double>(n);
    e.standard_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n));
    return e;
}

EstimateRecord make_record(const Sampler& sampler, const Predicate& predicate,
                           const Estimate& estimate) {
    EstimateRecord rec;
    rec.estimate = estimate;
    rec.sampler = sampler.name();
    rec.predicate = predicate.str();

    const FractalSampler* fs = sampler.fractal_sampler();
    if (fs == nullptr) {
        if (predicate.kind() == Predicate::Kind::Triangle) {
            rec.target_paper = classical_probability();
            rec.target_measured = classical_probability();
        }
        return rec;
    }

    rec.truncation_share = fs->truncation_share();
    rec.level = fs->level();
    const AuditReport& audit = fs->audit_report();
    switch (predicate.kind()) {
        case Predicate::Kind::Triangle:
            rec.target_paper = symmetric_probability(Mode::Paper);
            // The sampler's own triangle probability: everything kept except
            // the first piece, relative to the kept area.
            rec.target_measured =
                (fs->kept_area() - audit.piece_areas.front()) / fs->kept_area();
            break;
        case Predicate::Kind::Delta:
            // Ladder targets apply when delta is one of the piece deltas.
            for (std::size_t k = 0; k < fs->piece_deltas().size(); ++k) {
                if (fs->piece_deltas()[k] == predicate.delta_value()) {
                    const int i = static_cast<int>(k) + 1;
                    rec.target_paper = p_equilateral(i, Mode::Paper);
                    rec.target_measured = p_equilateral(i, Mode::Measured, &audit);
                    break;
                }
            }
            break;
        case Predicate::Kind::Band:
            for (std::size_t k = 0; k + 1 < fs->piece_deltas().size(); ++k) {
                if (fs->piece_deltas()[k] == predicate.delta_prime_value() &&
                    fs->piece_deltas()[k + 1] == predicate.delta_value()) {
                    const int i = static_cast<int>(k) + 1;
                    rec.target_paper = p_band(i, Mode::Paper);
                    rec.target_measured = p_band(i, Mode::Measured, &audit);
                    break;
                }
            }
            break;
    }
    return rec;
}

}  // namespace brokenstick
