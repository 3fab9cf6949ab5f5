#include "scm/common/random.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace scm {

int64_t RandomStream::uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw ConstraintError("uniform_int: empty range");
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(engine_());  // full 64-bit range
    const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % range);
}

double RandomStream::normal() {
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Tensor RandomStream::normal_tensor(std::vector<int64_t> shape) {
    Tensor t(std::move(shape));
    for (int64_t i = 0; i < t.size(); ++i) t[i] = normal();
    return t;
}

Tensor RandomStream::normal_tensor(std::vector<int64_t> shape, double stddev) {
    Tensor t = normal_tensor(std::move(shape));
    t *= stddev;
    return t;
}

RandomStream RandomStream::fork(uint64_t salt) const {
    RandomStream copy = *this;
    // splitmix64 over (next engine output, salt)
    uint64_t z = copy.engine_() + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return RandomStream(z);
}

std::string RandomStream::serialize() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
}

void RandomStream::deserialize(const std::string& state) {
    std::istringstream is(state);
    is >> engine_;
    if (is.fail()) throw IoError("RandomStream: bad serialized state");
}

}  // namespace scm
