#pragma once

#include "arrcensus/normal_system.hpp"
#include "arrcensus/rational.hpp"
#include "arrcensus/subsets.hpp"

#include <memory>

namespace arrcensus {

class SubsetCollection;

/// Central arrangement in n-space with one hyperplane M_S per (m+1)-subset S
/// of {1..n}: b lies on M_S exactly when the hyperplanes indexed by S,
/// translated to constants b, pass through a common point.
///
/// Hyperplane h (0-based) corresponds to universe()[h], lexicographic order.
/// Normals are the raw cofactor expansions and are not rescaled, so they
/// carry the orientation used for every sign vector downstream.
class DiscriminantalArrangement {
public:
    DiscriminantalArrangement(int n, int m, RationalMatrix normals);

    int n() const { return n_; }
    int m() const { return m_; }
    Index size() const { return normals_.rows(); }

    const SubsetUniverse& universe() const { return *universe_; }
    std::shared_ptr<const SubsetUniverse> universe_ptr() const { return universe_; }
    LineSet subset(Index h) const { return (*universe_)[static_cast<std::size_t>(h)]; }

    /// size() x n, row h is the normal of hyperplane h.
    const RationalMatrix& normals() const { return normals_; }
    RationalVector normal(LineSet s) const;

    /// Rows of normals() selected by an index set.
    RationalMatrix normals_of(const IndexSet& hyperplanes) const;

private:
    int n_;
    int m_;
    std::shared_ptr<const SubsetUniverse> universe_;
    RationalMatrix normals_;
};

/// Coefficient of y_{i_k} is (-1)^(m+1+k) det(rows of S without i_k).
DiscriminantalArrangement build_discriminantal(const NormalSystem& ns);

/// n - rank of all normals; at least m for any normal system.
Index common_intersection_dim(const DiscriminantalArrangement& da);

/// Rank of the normals of the members of `d`; throws BadSubsetSizeError when
/// the collection was built for a different (n, m).
Index subset_rank(const DiscriminantalArrangement& da, const SubsetCollection& d);

}  // namespace arrcensus
