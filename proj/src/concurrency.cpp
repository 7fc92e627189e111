#include "arrcensus/concurrency.hpp"

#include "arrcensus/discriminantal.hpp"
#include "arrcensus/errors.hpp"
#include "arrcensus/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

namespace arrcensus {

namespace {

// Unions of every subfamily of `family`, indexed by bitmask over positions.
std::vector<std::uint32_t> subfamily_unions(std::span<const LineSet> family) {
    const std::size_t k = family.size();
    std::vector<std::uint32_t> unions(std::size_t{1} << k, 0);
    for (std::size_t mask = 1; mask < unions.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        unions[mask] = unions[mask & (mask - 1)] | family[low].bits();
    }
    return unions;
}

// Whether `basis` (independent) plus `s` is still independent, given the
// precomputed subfamily unions of `basis`.
bool extends_independent(const std::vector<std::uint32_t>& unions, LineSet s, int m) {
    for (std::size_t mask = 0; mask < unions.size(); ++mask) {
        const int covered = std::popcount(unions[mask] | s.bits());
        if (covered < m + std::popcount(mask) + 1) return false;
    }
    return true;
}

IndexSet closure_of_basis(const SubsetUniverse& universe, int m, std::span<const LineSet> basis) {
    const auto unions = subfamily_unions(basis);
    IndexSet out(universe.size());
    for (std::size_t h = 0; h < universe.size(); ++h) {
        if (!extends_independent(unions, universe[h], m)) out.set(h);
    }
    return out;
}

std::vector<LineSet> sets_of(const SubsetUniverse& universe, const std::vector<std::size_t>& indices) {
    std::vector<LineSet> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(universe[i]);
    return out;
}

// One application of the closure criterion with respect to `d`.
SubsetCollection closure_pass(const SubsetCollection& d) {
    const auto basis = greedy_basis(d);
    IndexSet members = d.members();
    members |= closure_of_basis(d.universe(), d.m(), basis);
    return SubsetCollection(d.n(), d.m(), std::move(members));
}

}  // namespace

SubsetCollection::SubsetCollection(int n, int m)
    : n_(n), m_(m), universe_(subset_universe(n, m + 1)), members_(universe_->size()) {}

SubsetCollection::SubsetCollection(int n, int m, IndexSet members)
    : n_(n), m_(m), universe_(subset_universe(n, m + 1)), members_(std::move(members)) {
    if (members_.universe_size() != universe_->size()) throw ShapeError("member bitset has the wrong width");
}

SubsetCollection SubsetCollection::of(int n, int m, const std::vector<LineSet>& members) {
    SubsetCollection d(n, m);
    for (LineSet s : members) d.insert(s);
    return d;
}

SubsetCollection SubsetCollection::full(int n, int m) {
    SubsetCollection d(n, m);
    for (std::size_t h = 0; h < d.universe().size(); ++h) d.members_.set(h);
    return d;
}

bool SubsetCollection::contains(LineSet s) const {
    const int h = universe_->index_of(s);
    return h >= 0 && members_.test(static_cast<std::size_t>(h));
}

void SubsetCollection::insert(LineSet s) {
    const int h = universe_->index_of(s);
    if (h < 0) {
        throw BadSubsetSizeError("{" + s.label() + "} is not a " + std::to_string(m_ + 1) + "-subset of {1.." +
                                 std::to_string(n_) + "}");
    }
    members_.set(static_cast<std::size_t>(h));
}

std::vector<LineSet> SubsetCollection::member_sets() const { return sets_of(*universe_, members_.indices()); }

bool is_independent_family(std::span<const LineSet> family, int m) {
    std::uint32_t all = 0;
    for (LineSet s : family) all |= s.bits();
    if (std::popcount(all) < m + static_cast<int>(family.size())) return false;
    const auto unions = subfamily_unions(family);
    for (std::size_t mask = 1; mask < unions.size(); ++mask) {
        if (std::popcount(unions[mask]) < m + std::popcount(mask)) return false;
    }
    return true;
}

std::vector<LineSet> greedy_basis(const SubsetCollection& d) {
    std::vector<LineSet> basis;
    std::vector<std::uint32_t> unions{0};
    d.members().for_each([&](std::size_t h) {
        const LineSet s = d.universe()[h];
        if (extends_independent(unions, s, d.m())) {
            basis.push_back(s);
            unions = subfamily_unions(basis);
        }
    });
    return basis;
}

ClosureTrace concurrency_closure_traced(const SubsetCollection& d) {
    ClosureTrace trace{d, 0, 0};
    while (true) {
        SubsetCollection next = closure_pass(trace.closure);
        ++trace.passes;
        if (next == trace.closure) break;
        ++trace.adding_passes;
        trace.closure = std::move(next);
    }
    return trace;
}

SubsetCollection concurrency_closure(const SubsetCollection& d) { return concurrency_closure_traced(d).closure; }

bool is_concurrency_closed(const SubsetCollection& d) { return closure_pass(d) == d; }

std::vector<ConcurrencySet> concurrency_orders(const SubsetCollection& d) {
    if (!is_concurrency_closed(d)) throw NotClosedError("collection is not concurrency closed");
    const int n = d.n();

    // Complete sets grow level by level: a (k+1)-set is complete iff each of
    // its k-subsets is (every (m+1)-subset lies in one of them).
    std::vector<std::unordered_set<std::uint32_t>> levels;
    {
        std::unordered_set<std::uint32_t> base;
        for (LineSet s : d.member_sets()) base.insert(s.bits());
        levels.push_back(std::move(base));
    }
    while (!levels.back().empty()) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t c : levels.back()) {
            for (int x = 1; x <= n; ++x) {
                const LineSet grown = LineSet(c).with(x);
                if (grown.bits() == c || next.contains(grown.bits())) continue;
                bool complete = true;
                for (int y : grown.elements()) {
                    if (!levels.back().contains(grown.without(y).bits())) {
                        complete = false;
                        break;
                    }
                }
                if (complete) next.insert(grown.bits());
            }
        }
        levels.push_back(std::move(next));
    }

    std::vector<ConcurrencySet> out;
    for (std::size_t level = 0; level + 1 < levels.size(); ++level) {
        for (std::uint32_t c : levels[level]) {
            bool maximal = true;
            for (int x = 1; x <= n && maximal; ++x) {
                const LineSet grown = LineSet(c).with(x);
                if (grown.bits() != c && levels[level + 1].contains(grown.bits())) maximal = false;
            }
            if (maximal) out.push_back({LineSet(c), LineSet(c).size()});
        }
    }
    std::sort(out.begin(), out.end(), [](const ConcurrencySet& a, const ConcurrencySet& b) {
        return a.indices < b.indices;
    });
    return out;
}

SubsetCollection base_collection(const SubsetCollection& d) {
    const int m = d.m();
    SubsetCollection out(d.n(), m);
    for (const auto& c : concurrency_orders(d)) {
        const auto e = c.indices.elements();
        LineSet head;
        for (int i = 0; i < m; ++i) head = head.with(e[static_cast<std::size_t>(i)]);
        for (std::size_t l = static_cast<std::size_t>(m); l < e.size(); ++l) out.insert(head.with(e[l]));
    }
    return out;
}

int combinatorial_rank(const SubsetCollection& d) {
    if (d.empty()) return 0;
    int total = 0;
    for (const auto& c : concurrency_orders(concurrency_closure(d))) total += c.order - d.m();
    return total;
}

FlatLattice concurrency_lattice(int n, int m, EnumerationLimits limits) {
    const auto universe = subset_universe(n, m + 1);
    return crawl_flats(
        universe->size(),
        [&](const std::vector<std::size_t>& basis) {
            if (basis.empty()) return IndexSet(universe->size());
            const auto sets = sets_of(*universe, basis);
            return closure_of_basis(*universe, m, sets);
        },
        limits.max_flats);
}

std::vector<SubsetCollection> enumerate_closed_collections(int n, int m, EnumerationLimits limits) {
    if (m < 1 || n <= m) throw ShapeError("need n > m >= 1");
    FlatLattice lattice = concurrency_lattice(n, m, limits);
    std::vector<SubsetCollection> out;
    out.reserve(lattice.flats.size() - 1);
    for (std::size_t f = 1; f < lattice.flats.size(); ++f) out.emplace_back(n, m, std::move(lattice.flats[f]));
    return out;
}

std::vector<SubsetCollection> enumerate_closed_collections_exhaustive(int n, int m) {
    const auto universe = subset_universe(n, m + 1);
    const std::size_t count = universe->size();
    if (count > 22) throw TooLargeError("exhaustive enumeration needs C(n, m+1) <= 22");
    std::set<SubsetCollection> closed;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
        IndexSet members(count);
        for (std::size_t h = 0; h < count; ++h)
            if ((mask >> h) & 1u) members.set(h);
        closed.insert(concurrency_closure(SubsetCollection(n, m, std::move(members))));
    }
    return {closed.begin(), closed.end()};
}

ConcurrencyVerdict is_concurrency_free(const NormalSystem& ns, FreenessLimits limits) {
    const auto da = build_discriminantal(ns);
    const auto& universe = da.universe();
    const int m = ns.m();
    ConcurrencyVerdict verdict;

    std::vector<std::vector<std::size_t>> level;
    for (std::size_t h = 0; h < universe.size(); ++h) level.push_back({h});
    while (!level.empty()) {
        for (const auto& family : level) {
            if (++verdict.families_checked > limits.max_families) {
                throw TooLargeError("more than " + std::to_string(limits.max_families) + " independent families");
            }
            IndexSet members(universe.size());
            for (auto h : family) members.set(h);
            const Index r = rank(da.normals_of(members));
            if (r < static_cast<Index>(family.size())) {
                SubsetCollection witness(ns.n(), m, std::move(members));
                verdict.free = false;
                verdict.witness_closure = concurrency_closure(witness);
                verdict.witness = std::move(witness);
                verdict.combinatorial_rank = static_cast<int>(family.size());
                verdict.matrix_rank = r;
                return verdict;
            }
        }
        std::vector<std::vector<std::size_t>> next;
        for (const auto& family : level) {
            const auto sets = sets_of(universe, family);
            const auto unions = subfamily_unions(sets);
            for (std::size_t h = family.back() + 1; h < universe.size(); ++h) {
                if (!extends_independent(unions, universe[h], m)) continue;
                auto grown = family;
                grown.push_back(h);
                next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return verdict;
}

}  // namespace arrcensus
