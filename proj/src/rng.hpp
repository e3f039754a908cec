#pragma once

#include <cstdint>

namespace divkit {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, counter, stream), so disjoint index ranges can be generated in any
/// order or concurrently and still concatenate bit-identically.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t word(std::uint64_t counter, std::uint64_t stream) const {
        std::uint64_t x = mix(seed_ + 0x9e3779b97f4a7c15ull * (counter + 1));
        x = mix(x + 0x9e3779b97f4a7c15ull * (stream + 1));
        return mix(x);
    }

    /// Uniform in (0,1]; the open lower end keeps the interpolating-copula
    /// randomizers strictly positive.
    double uniform_open_closed(std::uint64_t counter, std::uint64_t stream) const {
        return static_cast<double>((word(counter, stream) >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [0,1).
    double uniform(std::uint64_t counter, std::uint64_t stream) const {
        return static_cast<double>(word(counter, stream) >> 11) * 0x1.0p-53;
    }

    /// Derive an independent seed for a sub-experiment (e.g. per trial).
    CounterRng derive(std::uint64_t key) const { return CounterRng(mix(seed_ ^ mix(key))); }

private:
    std::uint64_t seed_;
};

/// Sequential convenience wrapper over CounterRng for corpus generation.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return rng_.uniform(ctr_++, 0); }           // [0,1)
    double uniform_oc() { return rng_.uniform_open_closed(ctr_++, 0); }  // (0,1]

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer(std::uint64_t n) {  // in [0, n)
        return rng_.word(ctr_++, 0) % n;
    }

    bool flip(double p) { return uniform() < p; }

private:
    CounterRng rng_;
    std::uint64_t ctr_ = 0;
};

} // namespace divkit
