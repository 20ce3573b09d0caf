#pragma once

#include <cstdint>
#include <random>

namespace rghw {

/// Deterministic RNG. mt19937_64 output is specified bit-exactly by the
/// standard, and the bounded draw below avoids the distribution classes
/// (whose streams are implementation-defined), so equal seeds reproduce
/// equal results everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Unbiased draw from [0, n) by rejection.
    std::uint32_t below(std::uint32_t n) {
        const std::uint64_t limit = (UINT64_MAX / n) * n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return std::uint32_t(v % n);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace rghw
