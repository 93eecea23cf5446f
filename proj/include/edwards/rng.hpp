#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace edwards {

// mt19937_64 output is pinned by the standard, so draws are reproducible
// across platforms; the modulo step keeps that property (the tiny bias is
// irrelevant here, draws only need to cover small ranges).
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
    return rng() % n;
}

// deterministic string hash for mixing names into seeds (FNV-1a)
inline uint64_t name_hash(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}
