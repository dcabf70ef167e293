#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace kummer {

// Deterministic sampling: the mt19937_64 stream is fixed by the language
// standard, and the bounded draw below avoids distribution classes whose
// output is implementation defined.  Identical seeds give identical
// sequences everywhere.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t raw() { return eng(); }

    // Uniform on [lo, hi], both ends included.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw std::invalid_argument("empty sampling range");
        }
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo);
        if (range == ~std::uint64_t{0}) {
            return static_cast<std::int64_t>(raw());
        }
        ++range;
        std::uint64_t mask = ~std::uint64_t{0};
        if (range < (std::uint64_t{1} << 63)) {
            mask = 1;
            while (mask < range) {
                mask <<= 1;
            }
            --mask;
        }
        for (;;) {
            std::uint64_t v = raw() & mask;
            if (v < range) {
                return lo + static_cast<std::int64_t>(v);
            }
        }
    }

    bool coin() { return (raw() & 1u) != 0; }
};

}  // namespace kummer
