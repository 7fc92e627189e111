#pragma once

#include "arrcensus/rational.hpp"
#include "arrcensus/subsets.hpp"

#include <cstdint>

namespace arrcensus {

/// n normal vectors in m-space (rows of an n x m matrix) such that every set
/// of at most m rows is linearly independent. Rows are kept exactly as given:
/// the discriminantal arrangement, and so every chamber label downstream,
/// depends on this fixed matrix.
class NormalSystem {
public:
    /// Throws ShapeError (n <= m, m <= 1, wrong column count) or
    /// DependentRowsError naming the first dependent subset, smallest size
    /// first, lexicographic within a size.
    static NormalSystem validate(RationalMatrix coeffs, int m);

    int n() const { return static_cast<int>(coeffs_.rows()); }
    int m() const { return static_cast<int>(coeffs_.cols()); }
    const RationalMatrix& coeffs() const { return coeffs_; }

    /// Rows indexed by `rows` (1-based), in increasing order.
    RationalMatrix rows(LineSet rows) const;

    friend bool operator==(const NormalSystem& a, const NormalSystem& b) { return a.coeffs_ == b.coeffs_; }

private:
    explicit NormalSystem(RationalMatrix coeffs) : coeffs_(std::move(coeffs)) {}
    RationalMatrix coeffs_;
};

struct GeneratedSystem {
    NormalSystem system;
    int rejections = 0;
};

struct RandomSystemOptions {
    int attempt_limit = 10000;
};

/// Integer entries drawn uniformly from [-bound, bound] with a seeded
/// mt19937_64, resampling whole matrices until validate() accepts.
GeneratedSystem random_normal_system(int n, int m, std::uint64_t seed, int bound,
                                     RandomSystemOptions options = {});

/// Hyperplanes {x : coeffs.row(i) . x = b(i)} in m-space.
struct Arrangement {
    NormalSystem system;
    RationalVector b;

    int n() const { return system.n(); }
    int m() const { return system.m(); }
};

Arrangement arrangement_from_b(const NormalSystem& ns, RationalVector b);

}  // namespace arrcensus
