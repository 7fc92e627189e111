#pragma once

// Flat-lattice crawl shared by the combinatorial (concurrency) and the
// linear (matrix) closure operators, and the Moebius sum over the result.

#include "arrcensus/errors.hpp"
#include "arrcensus/subsets.hpp"

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

namespace arrcensus {

/// Flats of a closure operator on {0..ground-1}, grouped by rank. Index 0 is
/// the bottom (empty) flat. `basis[f]` is an independent set spanning flat f.
struct FlatLattice {
    std::size_t ground = 0;
    std::vector<IndexSet> flats;
    std::vector<int> ranks;
    std::vector<std::vector<std::size_t>> basis;
};

/// Closure of an independent set given by its element list.
using ClosureFromBasis = std::function<IndexSet(const std::vector<std::size_t>&)>;

/// Breadth-first crawl from the bottom flat: every flat of rank r+1 is the
/// closure of a rank-r flat plus one element. Joins already covered from the
/// same parent are skipped. Throws TooLargeError beyond `max_flats`.
FlatLattice crawl_flats(std::size_t ground, const ClosureFromBasis& closure, std::size_t max_flats);

/// mu(bottom, F) for every flat, by the defining recursion over subflats.
std::vector<std::int64_t> moebius_from_bottom(const FlatLattice& lattice);

}  // namespace arrcensus
