#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace fd2p {

inline constexpr const char* kToolName = "fd2p";
inline constexpr const char* kToolVersion = "0.1.0";

/// Thrown when two values from different field/algebra contexts are combined.
struct ContextMismatchError : std::invalid_argument {
    explicit ContextMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown by unit inversion when the element has no inverse.
struct NotAUnitError : std::domain_error {
    explicit NotAUnitError(const std::string& what) : std::domain_error(what) {}
};

/// Deterministic seeded RNG. mt19937_64 is fully specified by the standard,
/// and we avoid std distributions (their output is implementation-defined),
/// so streams are reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform-ish draw in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) { return eng_() % bound; }

private:
    std::mt19937_64 eng_;
};

/// min(base^exp, cap) computed without overflow; used for enumeration-bound
/// decisions where the true power may not fit in 64 bits.
inline uint64_t saturating_pow(uint64_t base, uint64_t exp, uint64_t cap) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
        if (r >= cap) return cap;
    }
    return r;
}

} // namespace fd2p
