#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "scm/common/tensor.hpp"

namespace scm {

// Seeded random stream with hand-rolled draw functions. std::* distributions
// carry hidden state and are implementation-defined, which breaks checkpoint
// replay; everything here is a pure function of the engine state.
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : engine_(seed) {}

    uint64_t bits() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive on both ends, rejection-sampled for an unbiased draw.
    int64_t uniform_int(int64_t lo, int64_t hi);

    // Box-Muller without the cached second value.
    double normal();

    bool bernoulli(double p) { return uniform() < p; }

    Tensor normal_tensor(std::vector<int64_t> shape);
    Tensor normal_tensor(std::vector<int64_t> shape, double stddev);

    // Derive an independent child stream; used to parallelize scene
    // generation while keeping every scene a pure function of (seed, index).
    RandomStream fork(uint64_t salt) const;

    std::string serialize() const;
    void deserialize(const std::string& state);

private:
    std::mt19937_64 engine_;
};

}  // namespace scm
