#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace scm {

// FNV-1a. Used for prompt hashing and tensor checksums; not cryptographic.
inline uint64_t fnv1a64(const void* bytes, size_t n, uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    uint64_t h = seed;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

}  // namespace scm
