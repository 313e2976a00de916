#pragma once

#include <cstdint>

#include "lssdm/array.hpp"

namespace lssdm {

// Counter-based random stream. Each draw hashes (seed, counter) with the
// SplitMix64 finalizer, so identical seeds give identical sequences on any
// platform and streams can be split by disjoint counters without shared
// state. Gaussian draws use the Box-Muller cosine branch over two counter
// steps; nothing is cached, which keeps splitting and replay exact.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : seed_(seed), counter_(0) {}

    uint64_t next_u64();
    double uniform();                      // [0, 1)
    double uniform_open();                 // (0, 1]
    double gaussian();                     // standard normal
    int64_t uniform_int(int64_t lo, int64_t hi); // inclusive bounds

    // Independent stream derived from this stream's seed and an index.
    // Does not consume state of the parent.
    RngStream split(uint64_t index) const;

    Array gaussian_array(Shape shape);
    Array uniform_array(Shape shape, double lo, double hi);

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t counter_;
};

// Spec operation: i.i.d. standard normal entries, deterministic per stream.
Array gauss_sample(RngStream& rng, const Shape& shape);

} // namespace lssdm
