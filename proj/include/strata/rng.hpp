#pragma once

#include <cstdint>

#include "strata/field.hpp"

namespace strata {

// splitmix64: the fixed generator behind every seeded sampler, so reports
// are reproducible across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via modular mapping (range is tiny, bias negligible
    // and in any case identical everywhere).
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    // Small field scalar in [-5, 5], the sampling window used throughout.
    FieldElem small(const Field& f) { return FieldElem::in_field(uniform(-5, 5), f); }

    FieldElem small_nonzero(const Field& f) {
        for (;;) {
            FieldElem v = small(f);
            if (!v.is_zero()) return v;
        }
    }

    // Derives an independent stream; used to shard suites deterministically.
    Rng fork(std::uint64_t salt) {
        return Rng(next() ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace strata
