#pragma once

// Concurrency combinatorics on families of (m+1)-subsets of {1..n}.
//
// A family is *independent* when every nonempty subfamily J covers at least
// m + |J| indices. The concurrency closure adds S whenever some independent
// {S_1..S_r} in the family satisfies |S_1 u .. u S_r u S| < m + r + 1; this
// is exactly "S joins a circuit with members of the family", so closure,
// base collections and rank below are those of the resulting matroid.

#include "arrcensus/lattice.hpp"
#include "arrcensus/normal_system.hpp"
#include "arrcensus/subsets.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace arrcensus {

class SubsetCollection {
public:
    SubsetCollection(int n, int m);
    SubsetCollection(int n, int m, IndexSet members);

    /// Throws BadSubsetSizeError if any member is not an (m+1)-subset of {1..n}.
    static SubsetCollection of(int n, int m, const std::vector<LineSet>& members);
    static SubsetCollection full(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    const SubsetUniverse& universe() const { return *universe_; }

    bool empty() const { return members_.none(); }
    std::size_t size() const { return members_.count(); }
    bool contains(LineSet s) const;
    void insert(LineSet s);

    /// Bitset over universe() indices.
    const IndexSet& members() const { return members_; }
    /// Members in lexicographic order.
    std::vector<LineSet> member_sets() const;

    friend bool operator==(const SubsetCollection& a, const SubsetCollection& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.members_ == b.members_;
    }
    friend bool operator<(const SubsetCollection& a, const SubsetCollection& b) { return a.members_ < b.members_; }

private:
    int n_;
    int m_;
    std::shared_ptr<const SubsetUniverse> universe_;
    IndexSet members_;
};

/// True when every nonempty subfamily J satisfies |union J| >= m + |J|.
bool is_independent_family(std::span<const LineSet> family, int m);

/// Greedy maximal independent subfamily, scanning members in lexicographic order.
std::vector<LineSet> greedy_basis(const SubsetCollection& d);

struct ClosureTrace {
    SubsetCollection closure;
    int passes = 0;          // criterion passes run, including the final no-op pass
    int adding_passes = 0;   // passes that added at least one member
};

SubsetCollection concurrency_closure(const SubsetCollection& d);
ClosureTrace concurrency_closure_traced(const SubsetCollection& d);
bool is_concurrency_closed(const SubsetCollection& d);

struct ConcurrencySet {
    LineSet indices;
    int order = 0;
    friend bool operator==(const ConcurrencySet&, const ConcurrencySet&) = default;
};

/// Maximal sets C, |C| >= m+1, all of whose (m+1)-subsets are members; in
/// lexicographic order. Throws NotClosedError for a family that is not closed.
std::vector<ConcurrencySet> concurrency_orders(const SubsetCollection& d);

/// {j_1..j_m, j_l : l = m+1..k} for each concurrency set j_1 < .. < j_k.
SubsetCollection base_collection(const SubsetCollection& d);

/// Sum over concurrency sets of closure(d) of (order - m).
int combinatorial_rank(const SubsetCollection& d);

struct EnumerationLimits {
    std::size_t max_flats = 1u << 22;
};

/// Every distinct nonempty closed collection, by rank then lexicographically.
std::vector<SubsetCollection> enumerate_closed_collections(int n, int m, EnumerationLimits limits = {});

/// The same lattice including the empty bottom, for Moebius sums.
FlatLattice concurrency_lattice(int n, int m, EnumerationLimits limits = {});

/// Closes every one of the 2^C(n,m+1) families; only for C(n,m+1) <= 22.
std::vector<SubsetCollection> enumerate_closed_collections_exhaustive(int n, int m);

struct ConcurrencyVerdict {
    bool free = true;
    /// Smallest independent family (then lexicographically first) whose
    /// discriminantal normals are linearly dependent.
    std::optional<SubsetCollection> witness;
    std::optional<SubsetCollection> witness_closure;
    int combinatorial_rank = 0;  // of the witness = its size
    Index matrix_rank = 0;       // of the witness normals
    std::size_t families_checked = 0;
};

struct FreenessLimits {
    std::size_t max_families = 1u << 22;
};

/// Free when combinatorial and matrix rank agree on every base collection
/// of every closed collection, i.e. every independent family has linearly
/// independent normals.
ConcurrencyVerdict is_concurrency_free(const NormalSystem& ns, FreenessLimits limits = {});

}  // namespace arrcensus
