#include "arrcensus/discriminantal.hpp"

#include "arrcensus/concurrency.hpp"
#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"

namespace arrcensus {

DiscriminantalArrangement::DiscriminantalArrangement(int n, int m, RationalMatrix normals)
    : n_(n), m_(m), universe_(subset_universe(n, m + 1)), normals_(std::move(normals)) {
    if (normals_.rows() != static_cast<Index>(universe_->size()) || normals_.cols() != n) {
        throw ShapeError("discriminantal normals must be C(n, m+1) x n");
    }
}

RationalVector DiscriminantalArrangement::normal(LineSet s) const {
    const int h = universe_->index_of(s);
    if (h < 0) throw BadSubsetSizeError("{" + s.label() + "} is not an (m+1)-subset of {1..n}");
    return normals_.row(h).transpose();
}

RationalMatrix DiscriminantalArrangement::normals_of(const IndexSet& hyperplanes) const {
    const auto idx = hyperplanes.indices();
    RationalMatrix out(static_cast<Index>(idx.size()), n_);
    for (std::size_t r = 0; r < idx.size(); ++r) out.row(static_cast<Index>(r)) = normals_.row(static_cast<Index>(idx[r]));
    return out;
}

DiscriminantalArrangement build_discriminantal(const NormalSystem& ns) {
    const int n = ns.n();
    const int m = ns.m();
    const auto universe = subset_universe(n, m + 1);
    RationalMatrix normals = RationalMatrix::Zero(static_cast<Index>(universe->size()), n);
    for (std::size_t h = 0; h < universe->size(); ++h) {
        const auto members = (*universe)[h].elements();
        for (int k = 1; k <= m + 1; ++k) {
            const int line = members[static_cast<std::size_t>(k - 1)];
            const Rational minor = determinant(ns.rows((*universe)[h].without(line)));
            normals(static_cast<Index>(h), line - 1) = ((m + 1 + k) % 2 == 0) ? minor : Rational(-minor);
        }
    }
    return DiscriminantalArrangement(n, m, std::move(normals));
}

Index common_intersection_dim(const DiscriminantalArrangement& da) {
    return da.n() - rank(da.normals());
}

Index subset_rank(const DiscriminantalArrangement& da, const SubsetCollection& d) {
    if (d.n() != da.n() || d.m() != da.m()) {
        throw BadSubsetSizeError("collection over (n=" + std::to_string(d.n()) + ", m=" + std::to_string(d.m()) +
                                 ") used with an arrangement over (n=" + std::to_string(da.n()) +
                                 ", m=" + std::to_string(da.m()) + ")");
    }
    if (d.empty()) return 0;
    return rank(da.normals_of(d.members()));
}

}  // namespace arrcensus
