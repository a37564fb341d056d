#pragma once

#include <cstdint>
#include <random>

namespace atlas {

// Seeded generator with hand-rolled draws so outputs are bit-exact across
// platforms (std::shuffle and distributions are not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform-ish integer in [0, k); modulo bias is irrelevant here.
    int below(int k) { return int(next() % uint64_t(k)); }

    bool coin(double p) { return double(next() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<size_t>(i)], v[size_t(below(i + 1))]);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace atlas
