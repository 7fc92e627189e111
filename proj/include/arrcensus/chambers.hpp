#pragma once

// Chambers (open cones) of a discriminantal arrangement, labelled by sign
// vectors over the hyperplanes in lexicographic subset order, each with an
// exact interior witness b.

#include "arrcensus/discriminantal.hpp"
#include "arrcensus/lp.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arrcensus {

/// One character per hyperplane: '+', '-' or (off chambers) '0'.
using SignString = std::string;

SignString negate(const SignString& signs);

/// Signs of every discriminantal functional at b; throws LengthMismatchError.
SignString sign_vector_at(const DiscriminantalArrangement& da, const RationalVector& b);

struct Chamber {
    SignString signs;
    RationalVector witness;  // b in n-space
    int class_id = 0;
};

/// Chambers sorted by sign string ('+' before '-'). Class ids number the
/// antipodal pairs 0, 1, .. in the order of their representatives, the
/// member of the pair whose first sign is '+'.
class ChamberCatalog {
public:
    ChamberCatalog(int n, int m, std::vector<Chamber> chambers);

    int n() const { return n_; }
    int m() const { return m_; }
    std::size_t size() const { return chambers_.size(); }
    const Chamber& operator[](std::size_t i) const { return chambers_[i]; }
    const std::vector<Chamber>& chambers() const { return chambers_; }
    int class_count() const { return class_count_; }

    std::optional<std::size_t> find(const SignString& signs) const;
    /// Index of the chamber with negated signs.
    std::size_t antipode(std::size_t i) const { return antipode_[i]; }

private:
    int n_;
    int m_;
    std::vector<Chamber> chambers_;
    std::vector<std::size_t> antipode_;
    int class_count_ = 0;
};

struct ChamberOptions {
    std::size_t max_chambers = 10000;
    unsigned threads = 1;
};

/// Incremental insertion in the quotient by the common intersection of all
/// hyperplanes. Throws TooLargeError past max_chambers and
/// UnpairedChamberError if central symmetry fails.
ChamberCatalog enumerate_chambers(const DiscriminantalArrangement& da, ChamberOptions options = {});

struct AntipodalClass {
    int id = 0;
    std::size_t representative = 0;  // first sign '+'
    std::size_t antipode = 0;
};

std::vector<AntipodalClass> antipodal_classes(const ChamberCatalog& catalog);

struct Classified {
    int class_id = 0;
    std::size_t chamber = 0;
    SignString signs;
};

struct OnWall {
    SignString signs;                 // contains at least one '0'
    std::vector<LineSet> vanishing;   // subsets whose functional is zero at b
};

using Classification = std::variant<Classified, OnWall>;

/// Throws LengthMismatchError, or NotInCatalogError when an interior b has
/// a sign vector the catalog lacks.
Classification classify_b(const DiscriminantalArrangement& da, const ChamberCatalog& catalog, const RationalVector& b);

struct AdjacencyEdge {
    std::size_t a = 0;
    std::size_t b = 0;   // a < b
    Index hyperplane = 0;
    friend bool operator==(const AdjacencyEdge&, const AdjacencyEdge&) = default;
};

/// Pairs of chambers whose sign vectors differ in exactly one place and
/// whose common facet is realised (the pattern with that entry zero is
/// feasible).
std::vector<AdjacencyEdge> adjacency(const DiscriminantalArrangement& da, const ChamberCatalog& catalog);

}  // namespace arrcensus
