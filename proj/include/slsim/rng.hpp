#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "slsim/error.hpp"

namespace slsim {

// Deterministic 64-bit generator with labelled splitting.
//
// The state update is the splitmix-style additive sequence with a 64-bit
// finalizer; all constants live here and are pinned by a golden-sequence
// test. Identical seeds produce identical sequences on every platform.
// Splitting derives a child stream from the *construction* seed and a text
// label, so child streams do not depend on how many values the parent has
// already emitted.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : root_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        ++draws_;
        return finalize(state_);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        if (!(lo < hi)) throw ArgumentError("uniform: lo must be < hi");
        double v = lo + next_double() * (hi - lo);
        if (v >= hi) v = hi - (hi - lo) * 0x1.0p-53; // rounding guard at the open end
        return v;
    }

    // Standard normal via Box-Muller; consumes exactly two draws.
    double normal() {
        double u1 = 1.0 - next_double(); // (0, 1]
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Integer in [0, bound). Modulo mapping; bias is irrelevant at the
    // bounds used here (shuffles over at most a few thousand indices).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw ArgumentError("next_below: bound must be positive");
        return next_u64() % bound;
    }

    // Child stream derived from the construction seed and a label only.
    SeededRng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ root_; // FNV-1a basis mixed with the root seed
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return SeededRng(finalize(h));
    }

    std::uint64_t seed() const { return root_; }
    std::uint64_t draws() const { return draws_; }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t root_;
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

} // namespace slsim
