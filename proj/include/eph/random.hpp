#pragma once

#include <cstdint>
#include <random>

namespace eph {

// mt19937_64 is fully specified; the double mapping is done by hand so
// streams stay identical across standard libraries
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    double uniform() { return double(g_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // (lo, hi]
    double uniform_open_closed(double lo, double hi) { return hi - (hi - lo) * uniform(); }
    std::uint64_t next() { return g_(); }
    int integer(int lo, int hi) { return lo + int(g_() % std::uint64_t(hi - lo + 1)); }

private:
    std::mt19937_64 g_;
};

}  // namespace eph
