#include "arrcensus/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace arrcensus {

FlatLattice crawl_flats(std::size_t ground, const ClosureFromBasis& closure, std::size_t max_flats) {
    FlatLattice lattice;
    lattice.ground = ground;
    lattice.flats.push_back(closure({}));
    lattice.ranks.push_back(0);
    lattice.basis.emplace_back();

    std::size_t level_begin = 0;
    std::size_t level_end = 1;
    int r = 0;
    while (level_begin < level_end) {
        std::unordered_map<IndexSet, std::size_t, IndexSetHash> seen;
        std::vector<std::size_t> next;
        for (std::size_t f = level_begin; f < level_end; ++f) {
            IndexSet covered = lattice.flats[f];
            for (std::size_t h = 0; h < ground; ++h) {
                if (covered.test(h)) continue;
                std::vector<std::size_t> b = lattice.basis[f];
                b.push_back(h);
                IndexSet joined = closure(b);
                covered |= joined;
                if (seen.contains(joined)) continue;
                if (lattice.flats.size() >= max_flats) {
                    throw TooLargeError("flat lattice exceeds " + std::to_string(max_flats) + " flats");
                }
                seen.emplace(joined, lattice.flats.size());
                next.push_back(lattice.flats.size());
                lattice.flats.push_back(std::move(joined));
                lattice.ranks.push_back(r + 1);
                std::sort(b.begin(), b.end());
                lattice.basis.push_back(std::move(b));
            }
        }
        // Canonical order within a rank: lexicographic on member indices.
        std::vector<std::size_t> order(next.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return lattice.flats[next[a]] < lattice.flats[next[b]];
        });
        std::vector<IndexSet> flats;
        std::vector<std::vector<std::size_t>> bases;
        for (std::size_t i : order) {
            flats.push_back(std::move(lattice.flats[next[i]]));
            bases.push_back(std::move(lattice.basis[next[i]]));
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            lattice.flats[level_end + i] = std::move(flats[i]);
            lattice.basis[level_end + i] = std::move(bases[i]);
        }
        level_begin = level_end;
        level_end = lattice.flats.size();
        ++r;
    }
    return lattice;
}

std::vector<std::int64_t> moebius_from_bottom(const FlatLattice& lattice) {
    const std::size_t count = lattice.flats.size();
    std::vector<std::int64_t> mu(count, 0);
    if (count == 0) return mu;
    mu[0] = 1;
    // Flats are stored rank by rank, so every proper subflat precedes F.
    for (std::size_t f = 1; f < count; ++f) {
        std::int64_t sum = 0;
        for (std::size_t g = 0; g < f && lattice.ranks[g] < lattice.ranks[f]; ++g) {
            if (lattice.flats[g].is_subset_of(lattice.flats[f])) sum += mu[g];
        }
        mu[f] = -sum;
    }
    return mu;
}

}  // namespace arrcensus
