#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fedhgn {

// SplitMix64. Fixed algorithm so that identical seeds produce identical
// streams on every platform; all randomness in the project flows through
// this type.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in [0, n). Rejection sampling keeps the distribution exact.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Fisher-Yates, descending index order.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Derives an independent stream seed from a base seed and a tag sequence.
inline uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> parts) {
    Rng mix(base ^ 0x5851f42d4c957f2dULL);
    uint64_t acc = mix.next_u64();
    for (uint64_t p : parts) {
        Rng step(acc ^ (p + 0x9e3779b97f4a7c15ULL));
        acc = step.next_u64();
    }
    return acc;
}

// Stable tags for the independent random streams of a run.
namespace seed_tag {
constexpr uint64_t shared_init = 1;
constexpr uint64_t beta_init = 2;
constexpr uint64_t embed_init = 3;
constexpr uint64_t client_sampling = 4;
constexpr uint64_t peer_shuffle = 5;
constexpr uint64_t split = 6;
constexpr uint64_t masks = 7;
}  // namespace seed_tag

}  // namespace fedhgn
