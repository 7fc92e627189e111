#pragma once

// Shared systems and small random generators for the test programs.

#include "arrcensus/normal_system.hpp"
#include "arrcensus/rational.hpp"

#include <random>

namespace fixtures {

using arrcensus::matrix_from_rows;
using arrcensus::NormalSystem;
using arrcensus::Rational;
using arrcensus::RationalMatrix;
using arrcensus::RationalVector;

// Six planar lines with L1 _|_ L4, L2 _|_ L5, L3 _|_ L6.
inline NormalSystem perpendicular_pairs() {
    return NormalSystem::validate(matrix_from_rows({{1, 0}, {2, 3}, {3, 2}, {0, 1}, {3, -2}, {2, -3}}), 2);
}

inline RationalVector perpendicular_pairs_b() { return arrcensus::vector_from({0, -2, 3, 0, 5, 5}); }

// Lines a.x = b of slopes 0, -1, -2, vertical, 1, 1/2.
inline NormalSystem alternate_slopes() {
    return NormalSystem::validate(matrix_from_rows({{0, 1}, {1, 1}, {2, 1}, {1, 0}, {1, -1}, {1, -2}}), 2);
}

// Six planes in 3-space.
inline NormalSystem six_planes() {
    return NormalSystem::validate(
        matrix_from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 2, 1}, {2, 3, 2}, {1, 2, 2}}), 3);
}

// Planar systems whose lines are already numbered by increasing angle.
inline NormalSystem four_lines() {
    return NormalSystem::validate(matrix_from_rows({{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}), 2);
}

inline NormalSystem five_lines() {
    return NormalSystem::validate(matrix_from_rows({{0, 1}, {-2, 3}, {-3, 1}, {-3, -1}, {-2, -3}}), 2);
}

class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::size_t index(std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational rational(long bound) {
        const long den = uniform(1, 4);
        return Rational(uniform(-bound, bound)) / Rational(den);
    }

    RationalMatrix matrix(long rows, long cols, long bound) {
        RationalMatrix a(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) a(i, j) = Rational(uniform(-bound, bound));
        return a;
    }

    RationalVector vector(long size, long bound) {
        RationalVector v(size);
        for (long i = 0; i < size; ++i) v(i) = Rational(uniform(-bound, bound));
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace fixtures
