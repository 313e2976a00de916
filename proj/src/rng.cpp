#include "lssdm/rng.hpp"

#include <cmath>

namespace lssdm {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

uint64_t splitmix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}
} // namespace

uint64_t RngStream::next_u64() {
    uint64_t z = seed_ + (++counter_) * kGolden;
    return splitmix64(z);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::gaussian() {
    double u1 = uniform_open();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

int64_t RngStream::uniform_int(int64_t lo, int64_t hi) {
    if (hi < lo) throw NumericError("uniform_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
}

RngStream RngStream::split(uint64_t index) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(index + 0x5851F42D4C957F2DULL)));
}

Array RngStream::gaussian_array(Shape shape) {
    Array a(std::move(shape));
    for (int64_t i = 0; i < a.size(); ++i) a[i] = gaussian();
    return a;
}

Array RngStream::uniform_array(Shape shape, double lo, double hi) {
    Array a(std::move(shape));
    for (int64_t i = 0; i < a.size(); ++i) a[i] = lo + (hi - lo) * uniform();
    return a;
}

Array gauss_sample(RngStream& rng, const Shape& shape) {
    return rng.gaussian_array(shape); // Array ctor rejects degenerate extents
}

} // namespace lssdm
