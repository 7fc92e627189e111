#pragma once

// Geometry of an actual arrangement {x : a_i . x = b_i} in m-space: vertex
// orders along lines, the subscript-preserving isomorphism test, region
// census, triangle signatures, special points and the wall-crossing swap.

#include "arrcensus/chambers.hpp"
#include "arrcensus/lp.hpp"
#include "arrcensus/normal_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arrcensus {

/// Throws NotGenericError naming the first (lexicographic) m+1 hyperplanes
/// through a common point.
void require_generic(const Arrangement& arr);
bool is_generic(const Arrangement& arr);

/// The line cut out by the hyperplanes in `line`, an (m-1)-subset, and the
/// vertices (m-subsets line u {j}) met along it.
struct LineOrder {
    LineSet line;
    RationalVector direction;       // first nonzero entry equal to 1
    std::vector<LineSet> vertices;  // increasing along `direction`
};

/// One entry per (m-1)-subset in lexicographic order.
using VertexOrderTable = std::vector<LineOrder>;

VertexOrderTable vertex_orders(const Arrangement& arr);

/// Isomorphism fixing subscripts: every line carries the same vertex
/// sequence, read forwards or backwards (chosen line by line).
bool are_isomorphic_trivial(const Arrangement& a1, const Arrangement& a2);

struct AffineRegion {
    std::vector<Sign> signs;     // sign of a_i . x - b_i
    RationalVector witness;      // interior point in m-space
    bool bounded = false;
    std::vector<int> facets;     // 1-based hyperplanes bounding the region
};

struct RegionLimits {
    std::size_t max_regions = 100000;
};

/// All regions of a generic arrangement, sorted by sign vector.
std::vector<AffineRegion> affine_regions(const Arrangement& arr, RegionLimits limits = {});

struct RegionCensus {
    std::uint64_t total = 0;
    std::uint64_t bounded = 0;
    std::uint64_t unbounded = 0;
    friend bool operator==(const RegionCensus&, const RegionCensus&) = default;
};

RegionCensus region_census(const Arrangement& arr, RegionLimits limits = {});

/// Counts every generic arrangement of n hyperplanes in m-space has:
/// sum_{i<=m} C(n,i) regions, C(n-1,m) of them bounded.
RegionCensus generic_region_formulas(int n, int m);

/// Hyperplane triples bounding triangular regions (bounded, three facets),
/// sorted. Planar arrangements only (UnsupportedDimensionError otherwise).
std::vector<LineSet> simplex_signature(const Arrangement& arr);

/// Rank 1..n of each line's direction angle in [0, pi); planar systems only.
std::vector<int> angle_ranks(const NormalSystem& ns);

/// Relabels every element of `s` through `ranks` (ranks[i-1] is the new label of i).
LineSet relabel(LineSet s, const std::vector<int>& ranks);

struct SpecialPoint {
    LineSet lines;      // original subscripts
    LineSet by_angle;   // subscripts after numbering lines by angle
};

/// The pair of lines in a generic four-line planar arrangement whose
/// intersection is the middle vertex on both. WrongShapeError unless n=4, m=2.
SpecialPoint special_point(const Arrangement& arr);

struct SwapReport {
    bool holds = true;
    LineSet wall;                     // the (m+1)-subset crossed
    std::vector<LineSet> changed;     // lines whose vertex order changed
    std::string detail;               // first violation, if any
};

/// Compares vertex orders at the witnesses of two chambers whose sign
/// vectors differ in one place: lines inside the wall must swap the two
/// vertices the wall concerns, all other lines must keep their order.
/// Throws NotAdjacentError otherwise.
SwapReport swap_check(const NormalSystem& ns, const DiscriminantalArrangement& da, const ChamberCatalog& catalog,
                      std::size_t from, std::size_t to);

}  // namespace arrcensus
