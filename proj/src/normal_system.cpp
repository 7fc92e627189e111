#include "arrcensus/normal_system.hpp"

#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"

#include <random>

namespace arrcensus {

namespace {

// Unbiased draw from [-bound, bound]; avoids the implementation-defined
// std::uniform_int_distribution so seeds reproduce across standard libraries.
long draw(std::mt19937_64& rng, int bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span);
    std::uint64_t u;
    do {
        u = rng();
    } while (u >= limit);
    return static_cast<long>(u % span) - bound;
}

}  // namespace

NormalSystem NormalSystem::validate(RationalMatrix coeffs, int m) {
    const auto n = static_cast<int>(coeffs.rows());
    if (m <= 1) throw ShapeError("ambient dimension m must exceed 1, got " + std::to_string(m));
    if (coeffs.cols() != m) {
        throw ShapeError("expected " + std::to_string(m) + " columns, got " + std::to_string(coeffs.cols()));
    }
    if (n <= m) throw ShapeError("need n > m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (n > 32) throw ShapeError("at most 32 hyperplanes are supported");

    NormalSystem candidate(std::move(coeffs));
    for (int k = 1; k <= m; ++k) {
        for (LineSet s : combinations(n, k)) {
            if (rank(candidate.rows(s)) < k) {
                throw DependentRowsError(s.elements(), "rows {" + s.label() + "} are linearly dependent");
            }
        }
    }
    return candidate;
}

RationalMatrix NormalSystem::rows(LineSet rows) const {
    const auto e = rows.elements();
    RationalMatrix out(static_cast<Index>(e.size()), coeffs_.cols());
    for (std::size_t i = 0; i < e.size(); ++i) out.row(static_cast<Index>(i)) = coeffs_.row(e[i] - 1);
    return out;
}

GeneratedSystem random_normal_system(int n, int m, std::uint64_t seed, int bound, RandomSystemOptions options) {
    if (m <= 1 || n <= m) {
        throw ShapeError("need n > m > 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    if (bound < 1) throw ShapeError("bound must be at least 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.attempt_limit; ++attempt) {
        RationalMatrix coeffs(n, m);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < m; ++j) coeffs(i, j) = Rational(draw(rng, bound));
        try {
            return {NormalSystem::validate(std::move(coeffs), m), attempt};
        } catch (const DependentRowsError&) {
        }
    }
    throw GivesUpError("no normal system after " + std::to_string(options.attempt_limit) + " attempts");
}

Arrangement arrangement_from_b(const NormalSystem& ns, RationalVector b) {
    if (b.size() != ns.n()) {
        throw LengthMismatchError("constant vector has length " + std::to_string(b.size()) + ", expected " +
                                  std::to_string(ns.n()));
    }
    return {ns, std::move(b)};
}

}  // namespace arrcensus
